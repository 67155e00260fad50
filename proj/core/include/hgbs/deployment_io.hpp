#ifndef HGBS_DEPLOYMENT_IO_HPP
#define HGBS_DEPLOYMENT_IO_HPP

#include <iosfwd>
#include <string>

#include "hgbs/keying.hpp"

namespace hgbs {

inline constexpr int kDeploymentFormatVersion = 1;

/// Writes the deployment document (JSON, UTF-8, LF). Field elements, the
/// modulus and the master seed are serialized as decimal integers; the
/// document round-trips losslessly. `include_authority` controls whether the
/// trusted-authority polynomial section is written.
void save_deployment(const Deployment& dep, std::ostream& out,
                     bool include_authority = true);
void save_deployment_file(const Deployment& dep, const std::string& path,
                          bool include_authority = true);

/// Parses and validates a deployment document. Throws FormatError on
/// malformed or inconsistent content, IoError when the file cannot be read.
Deployment load_deployment(std::istream& in);
Deployment load_deployment_file(const std::string& path);

} // namespace hgbs

#endif // HGBS_DEPLOYMENT_IO_HPP
