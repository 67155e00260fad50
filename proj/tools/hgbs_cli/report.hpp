#ifndef HGBS_CLI_REPORT_HPP
#define HGBS_CLI_REPORT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hgbs/rational.hpp"

namespace hgbs::cli {

enum class OutFormat { Csv, Json, Plain };

OutFormat parse_format(const std::string& name);

/// A homogeneous report: named columns, preformatted cells, plus the
/// reproducibility header (format/tool version and the full parameter echo).
struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells);
};

/// CSV: '#' meta lines, a header row, comma separator, '.' decimal point,
/// LF endings. JSON mirrors the columns as object keys. Plain aligns columns
/// for reading.
void emit_report(const Table& table, OutFormat format, std::ostream& out);

/// Shortest round-trip decimal rendering, locale-independent.
std::string format_double(double v);

/// Exact rendering: "num/den", or the plain integer when den == 1.
std::string format_rational(const Rational& r);

} // namespace hgbs::cli

#endif // HGBS_CLI_REPORT_HPP
