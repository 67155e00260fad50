#include <doctest.h>

#include <random>

#include "hgbs/field.hpp"
#include "hgbs/rng.hpp"

using namespace hgbs;

namespace {

FieldElement fe(std::uint64_t v, const FieldModulus& m) { return FieldElement(v, m); }

UniPoly random_poly(const FieldModulus& m, std::size_t degree, std::mt19937_64& gen) {
    std::vector<std::uint64_t> c(degree + 1);
    for (auto& x : c) x = uniform_below(gen, m.value());
    return UniPoly(m, std::move(c));
}

} // namespace

TEST_CASE("modulus construction accepts primes and rejects composites") {
    CHECK(FieldModulus(7).value() == 7);
    CHECK(FieldModulus(2).value() == 2);
    CHECK(FieldModulus((1ull << 61) - 1).value() == 2305843009213693951ull);
    CHECK(FieldModulus::default_modulus().value() == (1ull << 61) - 1);
    CHECK_THROWS_AS(FieldModulus(6), ParamDomain);
    CHECK_THROWS_AS(FieldModulus(1), ParamDomain);
    CHECK_THROWS_AS(FieldModulus(0), ParamDomain);
    CHECK_THROWS_AS(FieldModulus((1ull << 61) + 1), ParamDomain); // 3 * ...
}

TEST_CASE("deterministic primality testing on known values") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));        // Carmichael
    CHECK(is_prime_u64(4294967311ull));    // smallest prime > 2^32
    CHECK_FALSE(is_prime_u64(4294967297ull)); // 641 * 6700417
    CHECK(is_prime_u64((1ull << 61) - 1));
    CHECK_FALSE(is_prime_u64((1ull << 62) - 1));
}

TEST_CASE("basic arithmetic in GF(7)") {
    const FieldModulus m(7);
    CHECK(fe(3, m) * fe(5, m) == fe(1, m)); // 15 mod 7
    CHECK(fe(1, m) / fe(3, m) == fe(5, m)); // 3 * 5 = 15 = 1 mod 7
    for (std::uint64_t x = 0; x < 7; ++x)
        CHECK(fe(0, m) + fe(x, m) == fe(x, m));
    CHECK(fe(2, m) - fe(5, m) == fe(4, m));
    CHECK(-fe(3, m) == fe(4, m));
    CHECK(fe(10, m).value() == 3); // constructor reduces
}

TEST_CASE("mixed moduli and zero division are rejected") {
    const FieldModulus m7(7), m11(11);
    CHECK_THROWS_AS(fe(1, m7) + fe(1, m11), ModulusMismatch);
    CHECK_THROWS_AS(fe(1, m7) * fe(1, m11), ModulusMismatch);
    CHECK_THROWS_AS(fe(3, m7) / fe(0, m7), DivisionByZero);
    CHECK_THROWS_AS(fe(0, m7).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldElement() + fe(1, m7), ModulusMismatch);
}

TEST_CASE("multiplication is commutative, associative and distributive") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(42);
    for (int i = 0; i < 200; ++i) {
        const FieldElement a = fe(uniform_below(gen, m.value()), m);
        const FieldElement b = fe(uniform_below(gen, m.value()), m);
        const FieldElement c = fe(uniform_below(gen, m.value()), m);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("inverse round trip over a large field") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(7);
    for (int i = 0; i < 100; ++i) {
        const FieldElement a = fe(1 + uniform_below(gen, m.value() - 1), m);
        CHECK(a * a.inverse() == fe(1, m));
        CHECK(fe(1, m) / a == a.inverse());
    }
}

TEST_CASE("horner evaluation matches hand values in GF(7)") {
    const FieldModulus m(7);
    const UniPoly p(m, {1, 3, 2}); // 1 + 3y + 2y^2
    CHECK(horner_eval(p, fe(3, m)) == fe(0, m)); // 2*9 + 9 + 1 = 28
    CHECK(horner_eval(p, fe(0, m)) == p.coeff(0));
    const UniPoly constant(m, {5});
    CHECK(horner_eval(constant, fe(6, m)) == fe(5, m));
    CHECK_THROWS_AS(horner_eval(p, fe(3, FieldModulus(11))), ModulusMismatch);
}

TEST_CASE("horner multiplication count equals the nominal degree") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(3);
    for (std::size_t degree : {0u, 1u, 2u, 9u, 40u}) {
        const UniPoly p = random_poly(m, degree, gen);
        EvalStats stats;
        horner_eval(p, fe(123, m), stats);
        CHECK(stats.mults == degree);
        CHECK(stats.adds == degree);
    }
}

TEST_CASE("lagrange interpolation reproduces hand-solved systems") {
    const FieldModulus m(7);
    SUBCASE("two points give 3 + 2y") {
        const UniPoly p = lagrange_interpolate({{fe(1, m), fe(5, m)},
                                                {fe(2, m), fe(0, m)}});
        CHECK(p.coeff_values() == std::vector<std::uint64_t>{3, 2});
    }
    SUBCASE("a single point gives the constant") {
        const UniPoly p = lagrange_interpolate({{fe(4, m), fe(6, m)}});
        CHECK(p.coeff_values() == std::vector<std::uint64_t>{6});
    }
    SUBCASE("three samples of 1 + 3y + 2y^2 recover the coefficients") {
        const UniPoly src(m, {1, 3, 2});
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        for (std::uint64_t x : {2ull, 4ull, 6ull})
            pts.emplace_back(fe(x, m), horner_eval(src, fe(x, m)));
        CHECK(lagrange_interpolate(pts).coeff_values() ==
              std::vector<std::uint64_t>{1, 3, 2});
    }
    SUBCASE("duplicate abscissas are rejected") {
        CHECK_THROWS_AS(lagrange_interpolate({{fe(1, m), fe(5, m)},
                                              {fe(1, m), fe(0, m)}}),
                        DuplicateAbscissa);
    }
}

TEST_CASE("interpolation round trip on random polynomials") {
    const FieldModulus m = FieldModulus::default_modulus();
    std::mt19937_64 gen(2024);
    for (std::size_t degree : {1u, 2u, 5u, 9u, 16u}) {
        const UniPoly p = random_poly(m, degree, gen);
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        for (std::size_t i = 0; i <= degree; ++i) {
            const FieldElement x = fe(1000 + 37 * i, m); // distinct abscissas
            pts.emplace_back(x, horner_eval(p, x));
        }
        const UniPoly back = lagrange_interpolate(pts);
        CHECK(back.coeff_values() == p.coeff_values());
        for (const auto& [x, v] : pts) CHECK(horner_eval(back, x) == v);
    }
}

TEST_CASE("t points leave a degree-t polynomial under-determined") {
    const FieldModulus m(101);
    std::mt19937_64 gen(5);
    const std::size_t t = 4;
    const UniPoly p = random_poly(m, t, gen);

    std::vector<std::pair<FieldElement, FieldElement>> pts;
    for (std::size_t i = 0; i < t; ++i) { // only t points
        const FieldElement x = fe(3 + 11 * i, m);
        pts.emplace_back(x, horner_eval(p, x));
    }

    // Constructive witnesses: p + lambda * prod (y - x_i) agrees on every
    // sample but is a different degree-t polynomial.
    for (std::uint64_t lambda : {1ull, 2ull}) {
        std::vector<FieldElement> prod{fe(lambda, m)};
        for (const auto& [x, v] : pts) {
            prod.push_back(prod.back());
            for (std::size_t i = prod.size() - 2; i-- > 0;)
                prod[i + 1] = prod[i] - prod[i + 1] * x;
            prod[0] = -(prod[0] * x);
        }
        std::vector<std::uint64_t> alt(t + 1);
        for (std::size_t i = 0; i <= t; ++i)
            alt[i] = (p.coeff(i) + prod[i]).value();
        const UniPoly candidate(m, alt);
        CHECK(candidate.coeff_values() != p.coeff_values());
        for (const auto& [x, v] : pts) CHECK(horner_eval(candidate, x) == v);
    }
}
