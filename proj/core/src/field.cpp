#include "hgbs/field.hpp"

#include <array>

namespace hgbs {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % q);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
    std::uint64_t acc = 1 % q;
    base %= q;
    while (exp != 0) {
        if (exp & 1) acc = mulmod(acc, base, q);
        base = mulmod(base, base, q);
        exp >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Miller-Rabin with this base set is deterministic for all 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldModulus::FieldModulus(std::uint64_t q) : q_(q) {
    if (q < 2 || q >= (1ull << 63))
        throw ParamDomain("field modulus must satisfy 2 <= q < 2^63");
    if (!is_prime_u64(q))
        throw ParamDomain("field modulus " + std::to_string(q) + " is not prime");
}

FieldModulus FieldModulus::default_modulus() noexcept {
    return FieldModulus((1ull << 61) - 1, unchecked_tag{});
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (q_ == 0 || o.q_ == 0)
        throw ModulusMismatch("operation on a field element with no modulus");
    if (q_ != o.q_)
        throw ModulusMismatch("operands belong to different fields (" +
                              std::to_string(q_) + " vs " + std::to_string(o.q_) + ")");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    FieldElement r = *this;
    r.v_ += o.v_; // no overflow: both < 2^63
    if (r.v_ >= q_) r.v_ -= q_;
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(o);
    FieldElement r = *this;
    r.v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + q_ - o.v_;
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    FieldElement r = *this;
    r.v_ = mulmod(v_, o.v_, q_);
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
    if (q_ == 0) throw ModulusMismatch("negation of a field element with no modulus");
    FieldElement r = *this;
    r.v_ = v_ == 0 ? 0 : q_ - v_;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (q_ == 0) throw ModulusMismatch("inverse of a field element with no modulus");
    if (v_ == 0)
        throw DivisionByZero("zero has no multiplicative inverse; "
                             "degenerate interpolation node set");
    FieldElement r = *this;
    r.v_ = powmod(v_, q_ - 2, q_); // Fermat: q prime
    return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    if (q_ == 0) throw ModulusMismatch("pow of a field element with no modulus");
    FieldElement r = *this;
    r.v_ = powmod(v_, e, q_);
    return r;
}

UniPoly::UniPoly(const FieldModulus& m, std::vector<std::uint64_t> coeffs)
    : mod_(m), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw ParamDomain("polynomial needs at least one coefficient");
    for (auto& c : coeffs_) c %= mod_.value();
}

UniPoly UniPoly::zero(const FieldModulus& m, std::size_t degree) {
    return UniPoly(m, std::vector<std::uint64_t>(degree + 1, 0));
}

FieldElement UniPoly::coeff(std::size_t i) const {
    if (i >= coeffs_.size())
        throw OutOfRange("coefficient index " + std::to_string(i) +
                         " past degree " + std::to_string(degree()));
    return FieldElement(coeffs_[i], mod_);
}

namespace {

FieldElement horner_impl(const UniPoly& p, const FieldElement& y, EvalStats* stats) {
    if (y.modulus() != p.modulus().value())
        throw ModulusMismatch("evaluation point not in the polynomial's field");
    const auto& c = p.coeff_values();
    FieldElement acc(c.back(), p.modulus());
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = acc * y + FieldElement(c[i], p.modulus());
        if (stats) {
            ++stats->mults;
            ++stats->adds;
        }
    }
    return acc;
}

} // namespace

FieldElement horner_eval(const UniPoly& p, const FieldElement& y) {
    return horner_impl(p, y, nullptr);
}

FieldElement horner_eval(const UniPoly& p, const FieldElement& y, EvalStats& stats) {
    return horner_impl(p, y, &stats);
}

UniPoly lagrange_interpolate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    if (points.empty())
        throw ParamDomain("interpolation needs at least one point");
    const std::uint64_t q = points.front().first.modulus();
    const FieldModulus mod(q);
    const std::size_t k = points.size();

    for (std::size_t i = 0; i < k; ++i) {
        if (points[i].first.modulus() != q || points[i].second.modulus() != q)
            throw ModulusMismatch("interpolation points span different fields");
        for (std::size_t j = i + 1; j < k; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateAbscissa("abscissa " +
                                        std::to_string(points[i].first.value()) +
                                        " appears twice");
    }

    // Full product P(y) = prod (y - x_j), degree k.
    std::vector<FieldElement> master(k + 1, FieldElement(0, mod));
    master[0] = FieldElement(1, mod);
    std::size_t deg = 0;
    for (const auto& [x, v] : points) {
        master[deg + 1] = master[deg];
        for (std::size_t t = deg; t-- > 0;)
            master[t + 1] = master[t] - master[t + 1] * x;
        master[0] = -(master[0] * x);
        ++deg;
    }

    std::vector<FieldElement> result(k, FieldElement(0, mod));
    std::vector<FieldElement> basis(k, FieldElement(0, mod));
    for (const auto& [x, v] : points) {
        // Synthetic division of P by (y - x) gives the basis numerator.
        basis[k - 1] = master[k];
        for (std::size_t t = k - 1; t-- > 0;)
            basis[t] = master[t + 1] + basis[t + 1] * x;
        FieldElement denom = basis[k - 1];
        for (std::size_t t = k - 1; t-- > 0;)
            denom = denom * x + basis[t];
        FieldElement scale = v / denom;
        for (std::size_t t = 0; t < k; ++t)
            result[t] = result[t] + basis[t] * scale;
    }

    std::vector<std::uint64_t> raw(k);
    for (std::size_t t = 0; t < k; ++t) raw[t] = result[t].value();
    return UniPoly(mod, std::move(raw));
}

} // namespace hgbs
