#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

#include <json.hpp>

#include "hgbs/errors.hpp"

namespace hgbs::cli {

namespace {

template <typename T>
bool parses_as(const std::string& s, T& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

nlohmann::json cell_to_json(const std::string& cell) {
    if (cell.empty()) return nullptr;
    if (std::uint64_t u; parses_as(cell, u)) return u;
    if (std::int64_t i; parses_as(cell, i)) return i;
    if (double d; parses_as(cell, d)) return d;
    return cell;
}

} // namespace

OutFormat parse_format(const std::string& name) {
    if (name == "csv") return OutFormat::Csv;
    if (name == "json") return OutFormat::Json;
    if (name == "plain") return OutFormat::Plain;
    throw ParamDomain("unknown output format '" + name + "'; accepted: csv, json, plain");
}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        throw ParamDomain("report row width differs from the header");
    rows.push_back(std::move(cells));
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

void emit_csv(const Table& t, std::ostream& out) {
    for (const auto& [key, value] : t.meta)
        out << "# " << key << "=" << value << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "," : "") << t.columns[c];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << row[c];
        out << "\n";
    }
}

void emit_json(const Table& t, std::ostream& out) {
    nlohmann::json doc;
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [key, value] : t.meta) meta[key] = value;
    doc["meta"] = std::move(meta);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size(); ++c)
            obj[t.columns[c]] = cell_to_json(row[c]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

void emit_plain(const Table& t, std::ostream& out) {
    for (const auto& [key, value] : t.meta)
        out << "# " << key << "=" << value << "\n";
    std::vector<std::size_t> widths(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        widths[c] = t.columns[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << cells[c] << std::string(widths[c] - cells[c].size(), ' ');
            out << (c + 1 < cells.size() ? "  " : "");
        }
        out << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
}

} // namespace

void emit_report(const Table& table, OutFormat format, std::ostream& out) {
    switch (format) {
    case OutFormat::Csv: emit_csv(table, out); break;
    case OutFormat::Json: emit_json(table, out); break;
    case OutFormat::Plain: emit_plain(table, out); break;
    }
    if (!out) throw IoError("report write failed");
}

} // namespace hgbs::cli
