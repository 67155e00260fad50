#include <doctest.h>

#include <random>

#include "hgbs/polynomial.hpp"
#include "hgbs/rng.hpp"

using namespace hgbs;

namespace {

FieldElement fe(std::uint64_t v, const FieldModulus& m) { return FieldElement(v, m); }

// f = 3 + 2y + 2x + 5xy over GF(7), the hand-worked example.
SymBivarPoly hand_poly(const FieldModulus& m) {
    return SymBivarPoly::from_full_matrix(m, 1, {3, 2, 2, 5});
}

// Coefficients of prod_i (z - roots[i]) over GF(q).
std::vector<FieldElement> linear_product(const FieldModulus& m,
                                         const std::vector<FieldElement>& roots) {
    std::vector<FieldElement> c{fe(1, m)};
    for (const FieldElement& r : roots) {
        c.push_back(c.back());
        for (std::size_t i = c.size() - 2; i-- > 0;) c[i + 1] = c[i] - c[i + 1] * r;
        c[0] = -(c[0] * r);
    }
    return c;
}

} // namespace

TEST_CASE("generation: shape, symmetry and seed determinism") {
    const FieldModulus m = FieldModulus::default_modulus();
    SUBCASE("degree 0 is a 1x1 constant") {
        std::mt19937_64 gen(1);
        const SymBivarPoly f = gen_sym_bivar(0, m, gen);
        CHECK(f.degree() == 0);
        CHECK(f.full_matrix().size() == 1);
    }
    SUBCASE("a fixed seed reproduces the matrix") {
        std::mt19937_64 g1(99), g2(99);
        CHECK(gen_sym_bivar(1, m, g1) == gen_sym_bivar(1, m, g2));
    }
    SUBCASE("symmetry holds by construction") {
        std::mt19937_64 gen(5);
        const SymBivarPoly f = gen_sym_bivar(2, m, gen);
        CHECK(f.coeff(0, 2) == f.coeff(2, 0));
        CHECK(f.coeff(1, 2) == f.coeff(2, 1));
    }
}

TEST_CASE("asymmetric matrices are rejected at construction") {
    const FieldModulus m(7);
    CHECK_THROWS_AS(SymBivarPoly::from_full_matrix(m, 1, {3, 2, 4, 5}),
                    AsymmetricResult);
}

TEST_CASE("bivariate evaluation matches hand values in GF(7)") {
    const FieldModulus m(7);
    const SymBivarPoly f = hand_poly(m);
    CHECK(eval_bivar(f, fe(1, m), fe(2, m)) == fe(5, m)); // 3+2+4+10 = 19
    CHECK(eval_bivar(f, fe(2, m), fe(1, m)) == fe(5, m)); // symmetry
    CHECK(eval_bivar(f, fe(0, m), fe(0, m)) == f.coeff(0, 0));
    CHECK_THROWS_AS(eval_bivar(f, fe(1, FieldModulus(11)), fe(2, m)),
                    ModulusMismatch);
}

TEST_CASE("share derivation matches hand values in GF(7)") {
    const FieldModulus m(7);
    const SymBivarPoly f = hand_poly(m);
    SUBCASE("id 1 gives the degenerate share 5 + 0y") {
        const PolyShare s = derive_share(f, fe(1, m));
        CHECK(s.share.coeff_values() == std::vector<std::uint64_t>{5, 0});
        CHECK(s.share.degree() == f.degree());
    }
    SUBCASE("id 0 gives row zero of the matrix") {
        CHECK(derive_share(f, fe(0, m)).share.coeff_values() ==
              std::vector<std::uint64_t>{3, 2});
    }
    SUBCASE("degree 0 shares the constant regardless of id") {
        const SymBivarPoly c = SymBivarPoly::from_full_matrix(m, 0, {4});
        CHECK(derive_share(c, fe(5, m)).share.coeff_values() ==
              std::vector<std::uint64_t>{4});
    }
}

TEST_CASE("pairwise keys agree from both directions") {
    const FieldModulus m(7);
    const SymBivarPoly f = hand_poly(m);
    SUBCASE("hand example: both directions give 5") {
        CHECK(eval_share(derive_share(f, fe(1, m)), fe(2, m)) == fe(5, m));
        CHECK(eval_share(derive_share(f, fe(2, m)), fe(1, m)) == fe(5, m));
    }
    SUBCASE("self key is the diagonal value") {
        CHECK(eval_share(derive_share(f, fe(3, m)), fe(3, m)) ==
              eval_bivar(f, fe(3, m), fe(3, m)));
    }
    SUBCASE("degree 0 keys everyone with the constant") {
        const SymBivarPoly c = SymBivarPoly::from_full_matrix(m, 0, {4});
        CHECK(eval_share(derive_share(c, fe(1, m)), fe(6, m)) == fe(4, m));
    }
}

TEST_CASE("key symmetry holds for random polynomials and ids") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(77);
    for (std::size_t t : {1u, 2u, 5u}) {
        const SymBivarPoly f = gen_sym_bivar(t, m, gen);
        for (int i = 0; i < 20; ++i) {
            const FieldElement a = fe(uniform_below(gen, m.value()), m);
            const FieldElement b = fe(uniform_below(gen, m.value()), m);
            const FieldElement kab = eval_share(derive_share(f, a), b);
            CHECK(kab == eval_share(derive_share(f, b), a));
            CHECK(kab == eval_bivar(f, a, b));
            // share evaluation equals the bivariate along the whole line
            CHECK(horner_eval(derive_share(f, a).share, b) == eval_bivar(f, a, b));
        }
    }
}

TEST_CASE("recovery from t+1 genuine shares reproduces the polynomial") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(11);
    for (std::size_t t : {1u, 2u, 5u, 9u}) {
        const SymBivarPoly f = gen_sym_bivar(t, m, gen);
        std::vector<PolyShare> shares;
        for (std::size_t i = 0; i <= t; ++i)
            shares.push_back(derive_share(f, fe(100 + 13 * i, m)));
        CHECK(recover_from_shares(shares, t) == f);
    }
}

TEST_CASE("recovery needs more shares than the degree") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(12);
    const std::size_t t = 3;
    const SymBivarPoly f = gen_sym_bivar(t, m, gen);
    std::vector<PolyShare> shares;
    for (std::size_t i = 0; i < t; ++i)
        shares.push_back(derive_share(f, fe(10 + i, m)));
    CHECK_THROWS_AS(recover_from_shares(shares, t), InsufficientShares);

    shares.push_back(shares.front());
    CHECK_THROWS_AS(recover_from_shares(shares, t), DuplicateOwner);
}

TEST_CASE("mixed share sets come out asymmetric") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(13);
    const std::size_t t = 3;
    const SymBivarPoly f1 = gen_sym_bivar(t, m, gen);
    const SymBivarPoly f2 = gen_sym_bivar(t, m, gen);
    std::vector<PolyShare> shares;
    for (std::size_t i = 0; i < t; ++i)
        shares.push_back(derive_share(f1, fe(10 + i, m)));
    shares.push_back(derive_share(f2, fe(10 + t, m)));
    CHECK_THROWS_AS(recover_from_shares(shares, t), AsymmetricResult);
}

TEST_CASE("recovery is indifferent to which extra share is dropped") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(14);
    const std::size_t t = 4;
    const SymBivarPoly f = gen_sym_bivar(t, m, gen);
    std::vector<PolyShare> shares;
    for (std::size_t i = 0; i < t + 2; ++i)
        shares.push_back(derive_share(f, fe(50 + 7 * i, m)));
    for (std::size_t drop = 0; drop < shares.size(); ++drop) {
        std::vector<PolyShare> subset;
        for (std::size_t i = 0; i < shares.size(); ++i)
            if (i != drop) subset.push_back(shares[i]);
        CHECK(recover_from_shares(subset, t) == f);
    }
}

TEST_CASE("t shares leave non-compromised pair keys undetermined") {
    // Small field so the witness is easy to inspect: with only t shares of f
    // revealed there are at least two symmetric degree-t polynomials
    // consistent with all of them, and they disagree on a fresh pair's key.
    const FieldModulus m(101);
    std::mt19937_64 gen(15);
    const std::size_t t = 3;
    const SymBivarPoly f = gen_sym_bivar(t, m, gen);

    std::vector<FieldElement> owners;
    for (std::size_t i = 0; i < t; ++i) owners.push_back(fe(5 + 9 * i, m));
    std::vector<PolyShare> revealed;
    for (const FieldElement& o : owners) revealed.push_back(derive_share(f, o));

    const std::vector<FieldElement> prod = linear_product(m, owners);
    const FieldElement a = fe(90, m), b = fe(95, m); // not among the owners
    for (std::uint64_t lambda : {1ull, 2ull}) {
        // f' = f + lambda * P(x) P(y), P = prod of (z - owner_i): same degree,
        // symmetric, identical shares at every revealed owner.
        const std::size_t side = t + 1;
        std::vector<std::uint64_t> matrix(side * side);
        const FieldElement lam = fe(lambda, m);
        for (std::size_t i = 0; i < side; ++i)
            for (std::size_t j = 0; j < side; ++j) {
                FieldElement v = f.coeff(i, j);
                if (i < prod.size() && j < prod.size())
                    v = v + lam * prod[i] * prod[j];
                matrix[i * side + j] = v.value();
            }
        const SymBivarPoly alt = SymBivarPoly::from_full_matrix(m, t, matrix);
        CHECK_FALSE(alt == f);
        for (const FieldElement& o : owners)
            CHECK(derive_share(alt, o).share == derive_share(f, o).share);
        CHECK_FALSE(eval_bivar(alt, a, b) == eval_bivar(f, a, b));
    }
}
