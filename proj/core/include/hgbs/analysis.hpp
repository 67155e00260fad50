#ifndef HGBS_ANALYSIS_HPP
#define HGBS_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "hgbs/errors.hpp"
#include "hgbs/keying.hpp"
#include "hgbs/rational.hpp"

namespace hgbs::analysis {

// ---------------------------------------------------------------------------
// Communication traffic function
// ---------------------------------------------------------------------------

enum class TrafficKind { Geometric };

/// Traffic weights p_1..p_n: the fraction of traffic whose pair meets at
/// order i. Geometric: p_i = c / 2^(i-1) with c chosen so the weights sum to
/// exactly 1. beta widens the per-order connectivity exponent.
struct TrafficModel {
    unsigned order = 1; // n
    TrafficKind kind = TrafficKind::Geometric;
    std::vector<Rational> weights;
    double beta = 1.0;

    const Rational& weight(unsigned i) const; // 1-based
};

TrafficModel ctf_weights(unsigned n, double beta = 1.0);

// ---------------------------------------------------------------------------
// Connectivity
// ---------------------------------------------------------------------------

/// Probability that two randomly picked distinct nodes land inside one
/// specific order-z grid, with its closed upper bound (2^(z-n))^2.
struct ZoneConnectivity {
    Rational p_z;
    Rational bound;
};

ZoneConnectivity connectivity_pz(unsigned z, unsigned n, std::uint64_t m);

/// Per-order connectivity (2^(i-n))^beta; beta = 1 is the plain ratio and
/// i = n gives 1 for every beta.
double connectivity_order(unsigned i, unsigned n, double beta = 1.0);

// ---------------------------------------------------------------------------
// Memory
// ---------------------------------------------------------------------------

/// M1: flat degrees. M2: order-doubled degrees, term-by-term sum.
/// M3: the printed geometric-series closed form of M2's polynomial storage
/// (which sums one extra series term); M3Exact: the true n-term series.
enum class MemoryModel { M1, M2, M3, M3Exact };

struct MemoryCost {
    double bits;            // continuous-alpha evaluation
    std::int64_t bits_exact; // integer coefficient counts (t0 = floor(alpha m))
};

MemoryCost memory_cost(std::uint64_t N, unsigned n, double alpha, unsigned lg_q,
                       MemoryModel model);

// ---------------------------------------------------------------------------
// Computation
// ---------------------------------------------------------------------------

/// Word-multiplication weights for one GF(q) multiplication on an 8-bit
/// platform with lg q = 64: schoolbook long multiplication, Karatsuba-Ofman,
/// and the mixed 16x64-bit accumulation step.
enum class WordMultModel { Schoolbook64, Karatsuba64, Mixed16x64 };

unsigned word_mults_per_field_mult(WordMultModel model); // {64, 27, 16}

struct CostModel {
    unsigned comparison_cost = 1; // c: path-identifier comparison
    WordMultModel word_model = WordMultModel::Karatsuba64;
};

/// Average key-establishment cost: sum_i p_i * (2 t_i) + c, in field
/// multiplications (a degree-t evaluation costs 2t - 1 multiplications plus
/// one for its additions), and the same figure in 8-bit word multiplications.
struct ComputeCost {
    Rational field_mults;
    Rational word_mults;
};

ComputeCost compute_cost(const DegreePolicy& policy, const TrafficModel& traffic,
                         const CostModel& cost);

// ---------------------------------------------------------------------------
// Resiliency
// ---------------------------------------------------------------------------

/// Probability that at least `threshold` of N_c independently placed
/// compromised nodes fall in one specific zone of m of the N nodes
/// (binomial tail, evaluated in log space). The paper's literal form uses
/// threshold = t0; the recovery-correct threshold is t0 + 1.
double resiliency_pr(std::uint64_t n_c, std::uint64_t threshold, std::uint64_t m,
                     std::uint64_t N);

/// Same event for an attacker compromising N_c *distinct* nodes
/// (hypergeometric tail) - the exact model of the Monte Carlo attack.
double resiliency_pr_exact(std::uint64_t n_c, std::uint64_t threshold,
                           std::uint64_t m, std::uint64_t N);

// ---------------------------------------------------------------------------
// Blocked traffic
// ---------------------------------------------------------------------------

/// Fraction of total traffic flowing through one broken order-i polynomial:
/// (1 / 2^(n-i)) * p_i. Constant in i for geometric weights.
Rational blocked_fraction(unsigned i, const TrafficModel& traffic);

/// The same figure under the unnormalized weights p_i = 1/2^(i-1): 2^(1-n).
Rational blocked_fraction_unnormalized(unsigned i, unsigned n);

/// Highest-order figures quoted alongside the recovery discussion.
struct HighestOrderBlocked {
    Rational half_p_n;          // p_n / 2
    Rational unnormalized_p_n;  // 1 / 2^(n-1)
};
HighestOrderBlocked blocked_highest_order(const TrafficModel& traffic);

// ---------------------------------------------------------------------------
// Cross-scheme connectivity
// ---------------------------------------------------------------------------

enum class Scheme { HGBS, GBS, GBS3D, Plat, EG, CPS, DDHV };

/// Union of the per-scheme parameters; only the fields a scheme needs are
/// read. EG: pool P, ring k. DDHV: spaces omega, picks tau. CPS: m, N.
struct SchemeParams {
    std::uint64_t N = 0;
    std::uint64_t P = 0;
    std::uint64_t k = 0;
    std::uint64_t m = 0;
    std::uint64_t omega = 0;
    std::uint64_t tau = 0;
};

double scheme_connectivity(Scheme scheme, const SchemeParams& params);

} // namespace hgbs::analysis

#endif // HGBS_ANALYSIS_HPP
