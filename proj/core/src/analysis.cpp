#include "hgbs/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace hgbs::analysis {

namespace {

double log_choose(double n, double k) {
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

unsigned ceil_lg_rational(const Rational& v) {
    unsigned b = 0;
    while (pow2_rational(static_cast<int>(b)) < v) ++b;
    return b;
}

} // namespace

const Rational& TrafficModel::weight(unsigned i) const {
    if (i < 1 || i > order)
        throw OrderOutOfRange("traffic order " + std::to_string(i) +
                              " outside [1, " + std::to_string(order) + "]");
    return weights[i - 1];
}

TrafficModel ctf_weights(unsigned n, double beta) {
    if (n < 1) throw ParamDomain("traffic model needs n >= 1");
    if (beta < 1.0 || beta > 2.0)
        throw ParamDomain("communication pattern parameter beta must be in [1, 2]");
    TrafficModel t;
    t.order = n;
    t.beta = beta;
    // c sum_{i=1..n} 2^(1-i) = 1  =>  c = 2^(n-1) / (2^n - 1)
    const Rational c(BigInt(1) << (n - 1), (BigInt(1) << n) - 1);
    t.weights.reserve(n);
    for (unsigned i = 1; i <= n; ++i)
        t.weights.push_back(c / pow2_rational(static_cast<int>(i) - 1));
    return t;
}

ZoneConnectivity connectivity_pz(unsigned z, unsigned n, std::uint64_t m) {
    if (n < 1 || z < 1 || z > n)
        throw ParamDomain("need 1 <= z <= n");
    if (m < 2) throw ParamDomain("zone population m must be >= 2");
    const BigInt in_grid = (BigInt(1) << (z - 1)) * m;
    const BigInt total = (BigInt(1) << (n - 1)) * m;
    ZoneConnectivity r;
    r.p_z = Rational(in_grid * (in_grid - 1), total * (total - 1));
    const Rational half = pow2_rational(static_cast<int>(z) - static_cast<int>(n));
    r.bound = half * half;
    if (r.p_z > r.bound)
        throw ParamDomain("zone connectivity exceeded its closed bound; "
                          "parameters are inconsistent");
    return r;
}

double connectivity_order(unsigned i, unsigned n, double beta) {
    if (n < 1 || i < 1 || i > n)
        throw ParamDomain("need 1 <= i <= n");
    if (beta < 1.0 || beta > 2.0)
        throw ParamDomain("communication pattern parameter beta must be in [1, 2]");
    return std::exp2((static_cast<double>(i) - static_cast<double>(n)) * beta);
}

MemoryCost memory_cost(std::uint64_t N, unsigned n, double alpha, unsigned lg_q,
                       MemoryModel model) {
    if (n < 1 || n > 62) throw ParamDomain("memory model needs 1 <= n <= 62");
    if (N < 1) throw ParamDomain("memory model needs N >= 1");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw ParamDomain("security parameter alpha must be in (0, 1]");

    const Rational m_exact(BigInt(N), BigInt(1) << (n - 1));
    const double m = to_double(m_exact);
    const unsigned id_bits = n + ceil_lg_rational(m_exact);
    const auto t0 = static_cast<std::int64_t>(std::floor(alpha * m));
    const BigInt two_n_minus_1 = (BigInt(1) << n) - 1;

    MemoryCost out{};
    switch (model) {
    case MemoryModel::M1:
        out.bits = id_bits + static_cast<double>(n) * (alpha * m + 1) * lg_q;
        out.bits_exact =
            id_bits + static_cast<std::int64_t>(n) * (t0 + 1) * lg_q;
        break;
    case MemoryModel::M2:
        out.bits = id_bits + to_double(Rational(two_n_minus_1)) * (alpha * m + 1) * lg_q;
        out.bits_exact = static_cast<std::int64_t>(
            ceil_rational(Rational(id_bits) +
                          Rational(two_n_minus_1) * (t0 + 1) * lg_q));
        break;
    case MemoryModel::M3: {
        // Printed closed form: sums n+1 series terms, top polynomial alpha*N.
        const Rational series = 2 - pow2_rational(-static_cast<int>(n));
        out.bits = alpha * static_cast<double>(N) * lg_q * to_double(series);
        out.bits_exact = static_cast<std::int64_t>(ceil_rational(
            Rational(BigInt(t0) * (BigInt(1) << (n - 1)) * lg_q) * series));
        break;
    }
    case MemoryModel::M3Exact: {
        const Rational series = 2 - pow2_rational(1 - static_cast<int>(n));
        out.bits = alpha * static_cast<double>(N) * lg_q * to_double(series);
        out.bits_exact = static_cast<std::int64_t>(ceil_rational(
            Rational(BigInt(t0) * (BigInt(1) << (n - 1)) * lg_q) * series));
        break;
    }
    }
    return out;
}

unsigned word_mults_per_field_mult(WordMultModel model) {
    switch (model) {
    case WordMultModel::Schoolbook64: return 64;
    case WordMultModel::Karatsuba64: return 27;
    case WordMultModel::Mixed16x64: return 16;
    }
    throw ParamDomain("unknown word multiplication model");
}

ComputeCost compute_cost(const DegreePolicy& policy, const TrafficModel& traffic,
                         const CostModel& cost) {
    Rational field = cost.comparison_cost;
    for (unsigned i = 1; i <= traffic.order; ++i)
        field += traffic.weight(i) * Rational(2 * policy.degree_at(i));
    return ComputeCost{field, field * word_mults_per_field_mult(cost.word_model)};
}

double resiliency_pr(std::uint64_t n_c, std::uint64_t threshold, std::uint64_t m,
                     std::uint64_t N) {
    if (N < 1 || m > N) throw ParamDomain("need 1 <= m <= N");
    if (n_c > N) throw ParamDomain("cannot compromise more than N nodes");
    if (threshold == 0) return 1.0;
    if (threshold > n_c) return 0.0;
    if (m == N) return 1.0; // every node reveals a zone share
    if (m == 0) return 0.0;

    // Summing the upper tail directly keeps small probabilities accurate;
    // 1 - sum(lower) would cancel catastrophically.
    const double log_p = std::log(static_cast<double>(m)) -
                         std::log(static_cast<double>(N));
    const double log_1p = std::log1p(-static_cast<double>(m) /
                                     static_cast<double>(N));
    const auto nc = static_cast<double>(n_c);
    double tail = 0.0;
    for (std::uint64_t i = n_c + 1; i-- > threshold;) {
        const auto id = static_cast<double>(i);
        tail += std::exp(log_choose(nc, id) + id * log_p + (nc - id) * log_1p);
    }
    return std::clamp(tail, 0.0, 1.0);
}

double resiliency_pr_exact(std::uint64_t n_c, std::uint64_t threshold,
                           std::uint64_t m, std::uint64_t N) {
    if (N < 1 || m > N) throw ParamDomain("need 1 <= m <= N");
    if (n_c > N) throw ParamDomain("cannot compromise more than N nodes");
    if (threshold == 0) return 1.0;
    if (threshold > n_c || threshold > m) return 0.0;

    const double log_total = log_choose(static_cast<double>(N),
                                        static_cast<double>(n_c));
    std::uint64_t lo = threshold;
    if (n_c > N - m) lo = std::max(lo, n_c - (N - m));
    double tail = 0.0;
    for (std::uint64_t i = lo; i <= std::min(m, n_c); ++i) {
        tail += std::exp(log_choose(static_cast<double>(m), static_cast<double>(i)) +
                         log_choose(static_cast<double>(N - m),
                                    static_cast<double>(n_c - i)) -
                         log_total);
    }
    return std::clamp(tail, 0.0, 1.0);
}

Rational blocked_fraction(unsigned i, const TrafficModel& traffic) {
    return traffic.weight(i) /
           pow2_rational(static_cast<int>(traffic.order) - static_cast<int>(i));
}

Rational blocked_fraction_unnormalized(unsigned i, unsigned n) {
    if (i < 1 || i > n) throw OrderOutOfRange("need 1 <= i <= n");
    return Rational(1, BigInt(1) << (n - 1));
}

HighestOrderBlocked blocked_highest_order(const TrafficModel& traffic) {
    return HighestOrderBlocked{traffic.weight(traffic.order) / 2,
                               Rational(1, BigInt(1) << (traffic.order - 1))};
}

double scheme_connectivity(Scheme scheme, const SchemeParams& p) {
    switch (scheme) {
    case Scheme::HGBS:
        return 1.0;
    case Scheme::GBS: {
        if (p.N < 2) throw ParamDomain("GBS needs N >= 2");
        return 2.0 / (std::sqrt(static_cast<double>(p.N)) - 1.0);
    }
    case Scheme::GBS3D: {
        if (p.N < 1) throw ParamDomain("3D-GBS needs N >= 1");
        const double c = std::cbrt(static_cast<double>(p.N));
        return 3.0 / (c * c + c + 1.0);
    }
    case Scheme::Plat: {
        if (p.N < 1) throw ParamDomain("plat-based scheme needs N >= 1");
        return 3.0 / std::cbrt(static_cast<double>(p.N));
    }
    case Scheme::EG: {
        if (p.P < 1 || p.P < 2 * p.k)
            throw ParamDomain("EG needs a pool P >= 2k");
        const auto P = static_cast<double>(p.P);
        const auto k = static_cast<double>(p.k);
        const double log_miss = 2 * std::lgamma(P - k + 1) -
                                std::lgamma(P - 2 * k + 1) - std::lgamma(P + 1);
        return 1.0 - std::exp(log_miss);
    }
    case Scheme::CPS: {
        if (p.N < 1 || p.m > p.N) throw ParamDomain("CPS needs m <= N, N >= 1");
        return static_cast<double>(p.m) / static_cast<double>(p.N);
    }
    case Scheme::DDHV: {
        if (p.omega < 1 || p.omega < 2 * p.tau)
            throw ParamDomain("DDHV needs omega >= 2 tau");
        const auto w = static_cast<double>(p.omega);
        const auto t = static_cast<double>(p.tau);
        const double log_miss = 2 * std::lgamma(w - t + 1) -
                                std::lgamma(w - 2 * t + 1) - std::lgamma(w + 1);
        return 1.0 - std::exp(log_miss);
    }
    }
    throw ParamDomain("unknown scheme");
}

} // namespace hgbs::analysis
