#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "hgbs/analysis.hpp"

using namespace hgbs;
using namespace hgbs::analysis;

namespace {

// Exact-rational binomial tail, the reference for the log-space evaluator.
Rational binom_tail_exact(std::uint64_t n_c, std::uint64_t thr, std::uint64_t m,
                          std::uint64_t N) {
    if (thr == 0) return 1;
    const Rational p(m, N), q(N - m, N);
    Rational below = 0;
    for (std::uint64_t i = 0; i < thr && i <= n_c; ++i) {
        Rational term = big_binomial(n_c, i);
        for (std::uint64_t t = 0; t < i; ++t) term *= p;
        for (std::uint64_t t = 0; t < n_c - i; ++t) term *= q;
        below += term;
    }
    return 1 - below;
}

// Exact-rational hypergeometric tail for distinct-node compromise.
Rational hyper_tail_exact(std::uint64_t n_c, std::uint64_t thr, std::uint64_t m,
                          std::uint64_t N) {
    if (thr == 0) return 1;
    Rational tail = 0;
    const BigInt total = big_binomial(N, n_c);
    for (std::uint64_t i = thr; i <= std::min(m, n_c); ++i) {
        if (n_c - i > N - m) continue;
        tail += Rational(big_binomial(m, i) * big_binomial(N - m, n_c - i), total);
    }
    return tail;
}

double rel_err(double got, double want) {
    return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("geometric traffic weights solve the normalization exactly") {
    SUBCASE("n=3: c = 4/7") {
        const TrafficModel t = ctf_weights(3);
        REQUIRE(t.weights.size() == 3);
        CHECK(t.weight(1) == Rational(4, 7));
        CHECK(t.weight(2) == Rational(2, 7));
        CHECK(t.weight(3) == Rational(1, 7));
    }
    SUBCASE("n=1 is the single unit weight") {
        CHECK(ctf_weights(1).weight(1) == Rational(1));
    }
    SUBCASE("n=2: c = 2/3") {
        const TrafficModel t = ctf_weights(2);
        CHECK(t.weight(1) == Rational(2, 3));
        CHECK(t.weight(2) == Rational(1, 3));
    }
    SUBCASE("weights sum to exactly one up to n = 20") {
        for (unsigned n = 1; n <= 20; ++n) {
            const TrafficModel t = ctf_weights(n);
            Rational sum = 0;
            for (unsigned i = 1; i <= n; ++i) sum += t.weight(i);
            CHECK(sum == Rational(1));
        }
    }
    SUBCASE("beta domain") {
        CHECK_THROWS_AS(ctf_weights(3, 0.5), ParamDomain);
        CHECK_THROWS_AS(ctf_weights(3, 2.5), ParamDomain);
    }
}

TEST_CASE("zone connectivity: exact ratio with its closed bound") {
    SUBCASE("z = n is certainty") {
        const ZoneConnectivity r = connectivity_pz(3, 3, 16);
        CHECK(r.p_z == Rational(1));
        CHECK(r.bound == Rational(1));
    }
    SUBCASE("z=1, n=2, m=4 gives 3/14 under the 1/4 bound") {
        const ZoneConnectivity r = connectivity_pz(1, 2, 4);
        CHECK(r.p_z == Rational(3, 14)); // (4*3)/(8*7)
        CHECK(r.bound == Rational(1, 4));
    }
    SUBCASE("a single zone is certainty") {
        CHECK(connectivity_pz(1, 1, 4).p_z == Rational(1));
    }
    SUBCASE("the bound holds across the sweep") {
        for (unsigned n = 1; n <= 8; ++n)
            for (unsigned z = 1; z <= n; ++z)
                for (std::uint64_t m : {4ull, 16ull, 36ull}) {
                    const ZoneConnectivity r = connectivity_pz(z, n, m);
                    CHECK(r.p_z <= r.bound);
                }
    }
}

TEST_CASE("per-order connectivity with the traffic exponent") {
    CHECK(connectivity_order(4, 4, 1.0) == 1.0);
    CHECK(connectivity_order(4, 4, 2.0) == 1.0);
    CHECK(connectivity_order(1, 4, 1.0) == doctest::Approx(0.125));
    CHECK(connectivity_order(1, 4, 2.0) == doctest::Approx(0.015625));
    CHECK_THROWS_AS(connectivity_order(5, 4, 1.0), ParamDomain);
    CHECK_THROWS_AS(connectivity_order(1, 4, 0.9), ParamDomain);
}

TEST_CASE("memory model M1 hand value at N=64, n=3, alpha=0.6, lg q=61") {
    const MemoryCost m1 = memory_cost(64, 3, 0.6, 61, MemoryModel::M1);
    CHECK(m1.bits_exact == 1837); // 3 + 4 + 3*(9+1)*61
    CHECK(m1.bits == doctest::Approx(1946.8)); // 7 + 3*10.6*61
}

TEST_CASE("memory model orderings hold across the sweep") {
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k : {1u, 2u, 3u})
            for (double alpha : {0.2, 0.4, 0.6, 0.8, 1.0}) {
                const std::uint64_t m = 4ull * k * k;
                const std::uint64_t N = m << (n - 1);
                const auto m1 = memory_cost(N, n, alpha, 61, MemoryModel::M1);
                const auto m2 = memory_cost(N, n, alpha, 61, MemoryModel::M2);
                const auto m3 = memory_cost(N, n, alpha, 61, MemoryModel::M3);
                const auto m3e = memory_cost(N, n, alpha, 61, MemoryModel::M3Exact);
                CHECK(m2.bits >= m1.bits);
                CHECK(m2.bits_exact >= m1.bits_exact);
                CHECK(m3e.bits <= m3.bits);
                CHECK(m3e.bits_exact <= m3.bits_exact);
            }
}

TEST_CASE("memory grows with N and alpha") {
    for (MemoryModel model : {MemoryModel::M1, MemoryModel::M2, MemoryModel::M3,
                              MemoryModel::M3Exact}) {
        for (unsigned n : {2u, 4u, 8u}) {
            double prev = -1;
            for (unsigned k : {1u, 2u, 3u, 4u}) {
                const std::uint64_t N = (4ull * k * k) << (n - 1);
                const double bits = memory_cost(N, n, 0.6, 61, model).bits;
                CHECK(bits >= prev);
                prev = bits;
            }
            prev = -1;
            for (double alpha : {0.2, 0.4, 0.6, 0.8, 1.0}) {
                const double bits = memory_cost(1024, n, alpha, 61, model).bits;
                CHECK(bits >= prev);
                prev = bits;
            }
        }
    }
}

TEST_CASE("average establishment cost: the n=2 worked value") {
    const DegreePolicy policy{DegreeKind::Doubling, 0.6, 9};
    const TrafficModel traffic = ctf_weights(2);
    SUBCASE("25 field multiplications with c = 1") {
        const ComputeCost c =
            compute_cost(policy, traffic, CostModel{1, WordMultModel::Karatsuba64});
        CHECK(c.field_mults == Rational(25)); // (2/3)*18 + (1/3)*36 + 1
        CHECK(c.word_mults == Rational(675)); // 25 * 27
    }
    SUBCASE("single-order flat network, no comparison cost") {
        const DegreePolicy flat{DegreeKind::Flat, 0.6, 9};
        const ComputeCost c = compute_cost(flat, ctf_weights(1),
                                           CostModel{0, WordMultModel::Karatsuba64});
        CHECK(c.field_mults == Rational(18));
    }
    SUBCASE("word multiplication constants") {
        CHECK(word_mults_per_field_mult(WordMultModel::Schoolbook64) == 64);
        CHECK(word_mults_per_field_mult(WordMultModel::Karatsuba64) == 27);
        CHECK(word_mults_per_field_mult(WordMultModel::Mixed16x64) == 16);
    }
}

TEST_CASE("resiliency tail: edge values and the worked 1/4") {
    CHECK(resiliency_pr(0, 2, 16, 64) == 0.0);
    CHECK(resiliency_pr(8, 9, 16, 64) == 0.0); // N_c < threshold
    CHECK(resiliency_pr(2, 2, 8, 16) == doctest::Approx(0.25)); // Bin(2,1/2) >= 2
    CHECK(resiliency_pr(10, 0, 16, 64) == 1.0);
    CHECK_THROWS_AS(resiliency_pr(65, 9, 16, 64), ParamDomain);
}

TEST_CASE("resiliency tail is monotone in the compromise size") {
    double prev = 0.0;
    for (std::uint64_t n_c = 0; n_c <= 64; ++n_c) {
        const double p = resiliency_pr(n_c, 10, 16, 64);
        CHECK(p >= prev - 1e-12);
        prev = p;
    }
}

TEST_CASE("log-space tails agree with exact rational summation") {
    for (std::uint64_t n_c = 0; n_c <= 30; ++n_c) {
        for (std::uint64_t thr : {1ull, 9ull, 10ull}) {
            const double log_b = resiliency_pr(n_c, thr, 16, 64);
            const double exact_b = to_double(binom_tail_exact(n_c, thr, 16, 64));
            CHECK(rel_err(log_b, exact_b) < 1e-12);

            const double log_h = resiliency_pr_exact(n_c, thr, 16, 64);
            const double exact_h = to_double(hyper_tail_exact(n_c, thr, 16, 64));
            CHECK(rel_err(log_h, exact_h) < 1e-12);
        }
    }
}

TEST_CASE("blocked traffic is the same constant for every order") {
    SUBCASE("n=4 normalized weights: always 1/15") {
        const TrafficModel t = ctf_weights(4);
        for (unsigned i = 1; i <= 4; ++i)
            CHECK(blocked_fraction(i, t) == Rational(1, 15));
    }
    SUBCASE("n=4 unnormalized weights: always 1/8") {
        for (unsigned i = 1; i <= 4; ++i)
            CHECK(blocked_fraction_unnormalized(i, 4) == Rational(1, 8));
    }
    SUBCASE("a single polynomial carries all traffic") {
        CHECK(blocked_fraction(1, ctf_weights(1)) == Rational(1));
    }
    SUBCASE("constancy across orders for n up to 8") {
        for (unsigned n = 2; n <= 8; ++n) {
            const TrafficModel t = ctf_weights(n);
            const Rational first = blocked_fraction(1, t);
            CHECK(first == Rational(1, (BigInt(1) << n) - 1));
            for (unsigned i = 2; i <= n; ++i)
                CHECK(blocked_fraction(i, t) == first);
        }
    }
    SUBCASE("highest-order figures") {
        const TrafficModel t = ctf_weights(4);
        const HighestOrderBlocked h = blocked_highest_order(t);
        CHECK(h.half_p_n == t.weight(4) / 2);
        CHECK(h.unnormalized_p_n == Rational(1, 8));
    }
}

TEST_CASE("cross-scheme connectivity closed forms") {
    SchemeParams p;
    CHECK(scheme_connectivity(Scheme::HGBS, p) == 1.0);

    p.N = 9;
    CHECK(scheme_connectivity(Scheme::GBS, p) == doctest::Approx(1.0));
    p.N = 64;
    CHECK(scheme_connectivity(Scheme::GBS3D, p) == doctest::Approx(3.0 / 21.0));
    p.N = 27;
    CHECK(scheme_connectivity(Scheme::Plat, p) == doctest::Approx(1.0));

    SchemeParams eg;
    eg.P = 2;
    eg.k = 1;
    CHECK(scheme_connectivity(Scheme::EG, eg) == doctest::Approx(0.5));
    eg.P = 1;
    CHECK_THROWS_AS(scheme_connectivity(Scheme::EG, eg), ParamDomain);

    SchemeParams cps;
    cps.m = 16;
    cps.N = 64;
    CHECK(scheme_connectivity(Scheme::CPS, cps) == doctest::Approx(0.25));

    SchemeParams ddhv;
    ddhv.omega = 2;
    ddhv.tau = 1;
    CHECK(scheme_connectivity(Scheme::DDHV, ddhv) == doctest::Approx(0.5));
    ddhv.omega = 1;
    CHECK_THROWS_AS(scheme_connectivity(Scheme::DDHV, ddhv), ParamDomain);
}

TEST_CASE("EG closed form matches exhaustive ring enumeration") {
    // All ordered pairs of k-subsets of a P pool; share probability is the
    // fraction with a non-empty intersection.
    for (std::uint64_t P = 2; P <= 6; ++P)
        for (std::uint64_t k = 1; k <= 2 && 2 * k <= P; ++k) {
            std::vector<unsigned> rings;
            for (unsigned mask = 0; mask < (1u << P); ++mask)
                if (static_cast<std::uint64_t>(__builtin_popcount(mask)) == k)
                    rings.push_back(mask);
            std::uint64_t sharing = 0;
            for (unsigned a : rings)
                for (unsigned b : rings)
                    if ((a & b) != 0) ++sharing;
            const double expect = static_cast<double>(sharing) /
                                  (static_cast<double>(rings.size()) * rings.size());
            SchemeParams p;
            p.P = P;
            p.k = k;
            CHECK(rel_err(scheme_connectivity(Scheme::EG, p), expect) < 1e-12);
        }
}

TEST_CASE("DDHV closed form matches exact factorial evaluation") {
    for (std::uint64_t w = 2; w <= 20; ++w)
        for (std::uint64_t tau = 1; 2 * tau <= w; ++tau) {
            // 1 - ((w-tau)!)^2 / ((w-2tau)! w!) with exact big integers
            BigInt num = 1, den = 1;
            for (std::uint64_t i = 2; i <= w - tau; ++i) num *= i;
            num *= num;
            for (std::uint64_t i = 2; i <= w - 2 * tau; ++i) den *= i;
            for (std::uint64_t i = 2; i <= w; ++i) den *= i;
            const double expect = to_double(1 - Rational(num, den));
            SchemeParams p;
            p.omega = w;
            p.tau = tau;
            CHECK(rel_err(scheme_connectivity(Scheme::DDHV, p), expect) < 1e-12);
        }
}
