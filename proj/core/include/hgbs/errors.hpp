#ifndef HGBS_ERRORS_HPP
#define HGBS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hgbs {

/// Base class for all domain errors. `name()` is the stable machine-readable
/// identifier printed by the CLI on the diagnostic stream; `what()` carries
/// the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define HGBS_DEFINE_ERROR(Type)                                   \
    class Type : public Error {                                   \
    public:                                                       \
        explicit Type(const std::string& message)                 \
            : Error(#Type, message) {}                            \
    }

// field
HGBS_DEFINE_ERROR(ModulusMismatch);
HGBS_DEFINE_ERROR(DivisionByZero);
HGBS_DEFINE_ERROR(DuplicateAbscissa);

// polynomial
HGBS_DEFINE_ERROR(InsufficientShares);
HGBS_DEFINE_ERROR(DuplicateOwner);
HGBS_DEFINE_ERROR(AsymmetricResult);

// topology
HGBS_DEFINE_ERROR(IdWidthExceedsField);
HGBS_DEFINE_ERROR(OutOfRange);
HGBS_DEFINE_ERROR(OrderOutOfRange);
HGBS_DEFINE_ERROR(GridMismatch);

// keying
HGBS_DEFINE_ERROR(SameNode);
HGBS_DEFINE_ERROR(OrderTruncated);
HGBS_DEFINE_ERROR(NoRelayExists);

// analysis / simulate
HGBS_DEFINE_ERROR(ParamDomain);
HGBS_DEFINE_ERROR(ZoneOutOfRange);

// persistence
HGBS_DEFINE_ERROR(IoError);
HGBS_DEFINE_ERROR(FormatError);

#undef HGBS_DEFINE_ERROR

} // namespace hgbs

#endif // HGBS_ERRORS_HPP
