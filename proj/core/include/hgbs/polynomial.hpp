#ifndef HGBS_POLYNOMIAL_HPP
#define HGBS_POLYNOMIAL_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hgbs/field.hpp"

namespace hgbs {

/// Symmetric bivariate polynomial f(x,y) = sum a_ij x^i y^j with a_ij = a_ji,
/// coefficients in GF(q). Only the upper triangle is stored; the accessor
/// presents the full symmetric matrix.
class SymBivarPoly {
public:
    /// Build from the packed upper triangle (row-major, rows i, columns j >= i;
    /// length (t+1)(t+2)/2).
    static SymBivarPoly from_upper_triangle(const FieldModulus& m, std::size_t degree,
                                            std::vector<std::uint64_t> upper);

    /// Build from a full (t+1)x(t+1) row-major matrix; throws AsymmetricResult
    /// if the matrix is not symmetric.
    static SymBivarPoly from_full_matrix(const FieldModulus& m, std::size_t degree,
                                         const std::vector<std::uint64_t>& matrix);

    std::size_t degree() const noexcept { return degree_; }
    const FieldModulus& modulus() const noexcept { return mod_; }

    /// Logical matrix entry a_ij (== a_ji).
    FieldElement coeff(std::size_t i, std::size_t j) const;

    /// Full matrix, row-major, for serialization.
    std::vector<std::uint64_t> full_matrix() const;

    friend bool operator==(const SymBivarPoly&, const SymBivarPoly&) = default;

private:
    SymBivarPoly(const FieldModulus& m, std::size_t degree,
                 std::vector<std::uint64_t> upper);

    std::size_t upper_index(std::size_t i, std::size_t j) const noexcept;

    FieldModulus mod_;
    std::size_t degree_;
    std::vector<std::uint64_t> upper_; // packed upper triangle incl. diagonal
};

/// The univariate share g^i(y) = f(ID_i, y) held by node i. Nodes store only
/// this, never the bivariate polynomial itself.
struct PolyShare {
    FieldElement owner_id; // the evaluated x
    UniPoly share;

    friend bool operator==(const PolyShare&, const PolyShare&) = default;
};

/// Uniformly random symmetric bivariate polynomial of the given degree.
/// Upper-triangle coefficients are drawn independently from [0, q) using
/// the caller's generator; a generator seeded identically reproduces the
/// polynomial exactly.
SymBivarPoly gen_sym_bivar(std::size_t degree, const FieldModulus& m,
                           std::mt19937_64& rng);

/// Exact value of the double sum f(x, y).
FieldElement eval_bivar(const SymBivarPoly& f, const FieldElement& x,
                        const FieldElement& y);

/// Share derivation: coefficient j of the share is sum_i a_ij * id^i.
PolyShare derive_share(const SymBivarPoly& f, const FieldElement& id);

/// Pairwise key: k = g^i(j). eval_share(derive_share(f,a), b) equals
/// eval_share(derive_share(f,b), a) for every a, b.
FieldElement eval_share(const PolyShare& s, const FieldElement& other_id);

/// Recover f from at least degree+1 shares with distinct owners by columnwise
/// interpolation. The result must come out symmetric; an asymmetric matrix
/// means shares of different polynomials were mixed and raises
/// AsymmetricResult.
SymBivarPoly recover_from_shares(std::span<const PolyShare> shares,
                                 std::size_t degree);

} // namespace hgbs

#endif // HGBS_POLYNOMIAL_HPP
