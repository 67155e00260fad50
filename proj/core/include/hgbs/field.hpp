#ifndef HGBS_FIELD_HPP
#define HGBS_FIELD_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hgbs/errors.hpp"

namespace hgbs {

/// A prime modulus q defining GF(q). Primality is verified at construction
/// with a deterministic-base Miller-Rabin test; q is restricted to 63 bits
/// so products fit in unsigned 128-bit intermediates.
class FieldModulus {
public:
    /// Throws ParamDomain unless 2 <= q < 2^63 and q is prime.
    explicit FieldModulus(std::uint64_t q);

    /// Default field: the Mersenne prime 2^61 - 1.
    static FieldModulus default_modulus() noexcept;

    std::uint64_t value() const noexcept { return q_; }

    friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

private:
    struct unchecked_tag {};
    FieldModulus(std::uint64_t q, unchecked_tag) noexcept : q_(q) {}

    std::uint64_t q_;
};

/// Deterministic Miller-Rabin for 64-bit integers (exact, no false positives
/// below 3.3e24 with the fixed base set used here).
bool is_prime_u64(std::uint64_t n);

/// An element of GF(q). Value semantics; carries its modulus so mixed-field
/// arithmetic is rejected with ModulusMismatch. A default-constructed element
/// belongs to no field and throws on use.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(std::uint64_t value, const FieldModulus& m) noexcept
        : v_(value % m.value()), q_(m.value()) {}

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return q_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    /// a / b = a * b^{-1}; throws DivisionByZero when b == 0.
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    void require_same_field(const FieldElement& o) const;

    std::uint64_t v_ = 0;
    std::uint64_t q_ = 0; // 0 marks "no field"
};

/// Univariate polynomial over GF(q), coefficient index = power of y.
/// Trailing zero coefficients are allowed; degree() is nominal
/// (coefficient count minus one).
class UniPoly {
public:
    /// Coefficients are reduced mod q; at least one coefficient required.
    UniPoly(const FieldModulus& m, std::vector<std::uint64_t> coeffs);

    static UniPoly zero(const FieldModulus& m, std::size_t degree);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const FieldModulus& modulus() const noexcept { return mod_; }
    FieldElement coeff(std::size_t i) const;
    const std::vector<std::uint64_t>& coeff_values() const noexcept { return coeffs_; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    FieldModulus mod_;
    std::vector<std::uint64_t> coeffs_;
};

/// Multiplication/addition tallies for the compute-cost cross-checks.
struct EvalStats {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;
};

/// Evaluate p at y by Horner's rule: deg(p) multiplications, deg(p) additions.
FieldElement horner_eval(const UniPoly& p, const FieldElement& y);

/// Same evaluation, tallying field operations into `stats`.
FieldElement horner_eval(const UniPoly& p, const FieldElement& y, EvalStats& stats);

/// Unique polynomial of degree <= points.size()-1 through all (x, v) pairs.
/// Throws DuplicateAbscissa when two x values coincide.
UniPoly lagrange_interpolate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points);

} // namespace hgbs

#endif // HGBS_FIELD_HPP
