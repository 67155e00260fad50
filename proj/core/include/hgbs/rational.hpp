#ifndef HGBS_RATIONAL_HPP
#define HGBS_RATIONAL_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgbs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient.
inline BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

/// 2^e for any sign of e.
inline Rational pow2_rational(int e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, p) : Rational(p);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Smallest integer >= r.
inline BigInt ceil_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return q;
}

} // namespace hgbs

#endif // HGBS_RATIONAL_HPP
