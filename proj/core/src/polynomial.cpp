#include "hgbs/polynomial.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hgbs/rng.hpp"

namespace hgbs {

SymBivarPoly::SymBivarPoly(const FieldModulus& m, std::size_t degree,
                           std::vector<std::uint64_t> upper)
    : mod_(m), degree_(degree), upper_(std::move(upper)) {}

std::size_t SymBivarPoly::upper_index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    // Row i starts after i rows of lengths (t+1), t, ..., (t+2-i).
    return i * (degree_ + 1) - i * (i - 1) / 2 + (j - i);
}

SymBivarPoly SymBivarPoly::from_upper_triangle(const FieldModulus& m,
                                               std::size_t degree,
                                               std::vector<std::uint64_t> upper) {
    const std::size_t want = (degree + 1) * (degree + 2) / 2;
    if (upper.size() != want)
        throw ParamDomain("upper triangle for degree " + std::to_string(degree) +
                          " needs " + std::to_string(want) + " entries, got " +
                          std::to_string(upper.size()));
    for (auto& c : upper) c %= m.value();
    return SymBivarPoly(m, degree, std::move(upper));
}

SymBivarPoly SymBivarPoly::from_full_matrix(const FieldModulus& m, std::size_t degree,
                                            const std::vector<std::uint64_t>& matrix) {
    const std::size_t side = degree + 1;
    if (matrix.size() != side * side)
        throw ParamDomain("matrix for degree " + std::to_string(degree) + " needs " +
                          std::to_string(side * side) + " entries");
    std::vector<std::uint64_t> upper;
    upper.reserve(side * (side + 1) / 2);
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = i; j < side; ++j) {
            if (matrix[i * side + j] % m.value() != matrix[j * side + i] % m.value())
                throw AsymmetricResult("matrix entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") breaks a_ij = a_ji");
            upper.push_back(matrix[i * side + j] % m.value());
        }
    }
    return SymBivarPoly(m, degree, std::move(upper));
}

FieldElement SymBivarPoly::coeff(std::size_t i, std::size_t j) const {
    if (i > degree_ || j > degree_)
        throw OutOfRange("coefficient index past degree " + std::to_string(degree_));
    return FieldElement(upper_[upper_index(i, j)], mod_);
}

std::vector<std::uint64_t> SymBivarPoly::full_matrix() const {
    const std::size_t side = degree_ + 1;
    std::vector<std::uint64_t> m(side * side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j)
            m[i * side + j] = upper_[upper_index(i, j)];
    return m;
}

SymBivarPoly gen_sym_bivar(std::size_t degree, const FieldModulus& m,
                           std::mt19937_64& rng) {
    const std::size_t count = (degree + 1) * (degree + 2) / 2;
    std::vector<std::uint64_t> upper(count);
    for (auto& c : upper) c = uniform_below(rng, m.value());
    return SymBivarPoly::from_upper_triangle(m, degree, std::move(upper));
}

FieldElement eval_bivar(const SymBivarPoly& f, const FieldElement& x,
                        const FieldElement& y) {
    if (x.modulus() != f.modulus().value() || y.modulus() != f.modulus().value())
        throw ModulusMismatch("evaluation point not in the polynomial's field");
    // Horner in x over row polynomials r_i(y) = sum_j a_ij y^j.
    const std::size_t side = f.degree() + 1;
    FieldElement acc(0, f.modulus());
    for (std::size_t i = side; i-- > 0;) {
        FieldElement row(0, f.modulus());
        for (std::size_t j = side; j-- > 0;)
            row = row * y + f.coeff(i, j);
        acc = acc * x + row;
    }
    return acc;
}

PolyShare derive_share(const SymBivarPoly& f, const FieldElement& id) {
    if (id.modulus() != f.modulus().value())
        throw ModulusMismatch("share owner id not in the polynomial's field");
    const std::size_t side = f.degree() + 1;
    std::vector<FieldElement> xpow(side, FieldElement(1, f.modulus()));
    for (std::size_t i = 1; i < side; ++i) xpow[i] = xpow[i - 1] * id;

    std::vector<std::uint64_t> coeffs(side);
    for (std::size_t j = 0; j < side; ++j) {
        FieldElement c(0, f.modulus());
        for (std::size_t i = 0; i < side; ++i)
            c = c + f.coeff(i, j) * xpow[i];
        coeffs[j] = c.value();
    }
    return PolyShare{id, UniPoly(f.modulus(), std::move(coeffs))};
}

FieldElement eval_share(const PolyShare& s, const FieldElement& other_id) {
    return horner_eval(s.share, other_id);
}

SymBivarPoly recover_from_shares(std::span<const PolyShare> shares,
                                 std::size_t degree) {
    const std::size_t need = degree + 1;
    if (shares.size() < need)
        throw InsufficientShares("have " + std::to_string(shares.size()) +
                                 " shares, need " + std::to_string(need) +
                                 " for degree " + std::to_string(degree));
    std::unordered_set<std::uint64_t> owners;
    for (const auto& s : shares) {
        if (s.share.degree() != degree)
            throw ParamDomain("share degree " + std::to_string(s.share.degree()) +
                              " does not match target degree " +
                              std::to_string(degree));
        if (!owners.insert(s.owner_id.value()).second)
            throw DuplicateOwner("two shares claim owner id " +
                                 std::to_string(s.owner_id.value()));
    }

    // Column j of the coefficient matrix is a degree-<=t polynomial in x
    // sampled at each owner id; interpolate each column from the first t+1
    // shares.
    const FieldModulus& mod = shares.front().share.modulus();
    const std::size_t side = degree + 1;
    std::vector<std::uint64_t> matrix(side * side);
    std::vector<std::pair<FieldElement, FieldElement>> points(need);
    for (std::size_t j = 0; j < side; ++j) {
        for (std::size_t s = 0; s < need; ++s)
            points[s] = {shares[s].owner_id, shares[s].share.coeff(j)};
        UniPoly column = lagrange_interpolate(points);
        for (std::size_t i = 0; i < side; ++i)
            matrix[i * side + j] = column.coeff(i).value();
    }

    SymBivarPoly f = SymBivarPoly::from_full_matrix(mod, degree, matrix);

    // Any shares beyond the t+1 used must be consistent with the recovery.
    for (std::size_t s = need; s < shares.size(); ++s)
        if (derive_share(f, shares[s].owner_id).share != shares[s].share)
            throw AsymmetricResult("share of owner " +
                                   std::to_string(shares[s].owner_id.value()) +
                                   " is inconsistent with the recovered polynomial");
    return f;
}

} // namespace hgbs
