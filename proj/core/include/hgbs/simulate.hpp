#ifndef HGBS_SIMULATE_HPP
#define HGBS_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgbs/analysis.hpp"
#include "hgbs/keying.hpp"

namespace hgbs::sim {

/// One Monte Carlo figure with its closed-form counterpart when one exists.
/// Every simulation is a pure function of (deployment, parameters, seed):
/// trial t draws from a generator seeded with sub_seed(seed, domain, t),
/// and estimates are exact integer counters divided once at the end.
struct SimReport {
    std::string kind;
    std::string param;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double estimate = 0.0;
    std::optional<double> closed_form;
    std::optional<double> abs_error;
    double wall_seconds = 0.0; // informational; never part of emitted rows
};

/// Which polynomials an attacker holding a set of compromised nodes can
/// reconstruct. A compromised node reveals its entire ring; polynomial
/// (o, g) is broken once it has revealed shares from more than its degree's
/// worth of distinct owners.
class CompromiseState {
public:
    explicit CompromiseState(const Deployment& dep);

    void compromise(const NodeId& id);
    bool is_compromised(const NodeId& id) const;
    std::uint64_t compromised_count() const noexcept { return count_; }

    std::uint64_t revealed(unsigned order, std::uint64_t gindex) const;
    bool is_broken(unsigned order, std::uint64_t gindex) const;
    std::vector<std::pair<unsigned, std::uint64_t>> broken_polynomials() const;

    void reset();

private:
    const Deployment* dep_;
    std::vector<bool> compromised_;
    std::uint64_t count_ = 0;
    std::vector<std::vector<std::uint32_t>> revealed_; // [order-1][gindex]
};

/// Estimates the probability that two random distinct nodes fall inside
/// grid 0 of order z; closed form is connectivity_pz(z, n, m).
SimReport mc_same_zone(const GridParams& grid, unsigned z, std::uint64_t trials,
                       std::uint64_t seed);

/// Random-compromise attack: N_c distinct nodes per trial.
struct CompromiseRandomReport {
    /// Probability that the designated basic-zone polynomial (zone 0) is
    /// broken. closed_form is the exact distinct-node (hypergeometric) tail
    /// at the recovery threshold t0 + 1.
    SimReport zone_break;
    /// Fraction of links between non-compromised nodes whose establishing
    /// polynomial is broken (no closed form; the resiliency curve).
    SimReport affected_links;

    double closed_paper_literal = 0.0;      // binomial tail, threshold t0
    double closed_binomial_corrected = 0.0; // binomial tail, threshold t0 + 1
    double closed_exact_corrected = 0.0;    // hypergeometric, threshold t0 + 1
};
CompromiseRandomReport mc_compromise_random(const Deployment& dep, std::uint64_t n_c,
                                            std::uint64_t trials, std::uint64_t seed);

/// Zone-focused attack: `budget` distinct nodes inside one target zone.
struct SelectiveReport {
    SimReport zone_break;
    SimReport affected_links;
    /// Minimum budget that breaks the target zone's polynomial with
    /// certainty: its degree + 1 (t0 + 1 under either policy).
    std::uint64_t deterministic_break_budget = 0;
};
SelectiveReport mc_compromise_selective(const Deployment& dep,
                                        std::uint64_t target_zone,
                                        std::uint64_t budget, std::uint64_t trials,
                                        std::uint64_t seed);

/// Marks grid 0 of the given order broken and enumerates every pair secured
/// by it, weighting pairs by the traffic model. The measured fraction equals
/// blocked_fraction(i, traffic) exactly; affected pairs re-establish through
/// the order-(i+1) polynomial when i < n.
struct BlockedTrafficReport {
    unsigned broken_order = 1;
    Rational measured;
    Rational closed_form;
    std::uint64_t affected_pairs = 0;
    std::uint64_t reestablished_pairs = 0;
    bool recovery_agreement = true;
};
BlockedTrafficReport mc_blocked_traffic(const Deployment& dep, unsigned broken_order,
                                        const analysis::TrafficModel& traffic);

/// Exhaustive pairwise establishment over all C(N,2) pairs, both directions,
/// checked against the authority polynomials when the deployment carries
/// them. pairs_per_order[o-1] counts pairs whose minimum shared order is o.
struct AgreementReport {
    std::uint64_t pairs = 0;
    std::uint64_t agreements = 0;
    std::uint64_t oracle_matches = 0;
    bool oracle_checked = false;
    std::vector<std::uint64_t> pairs_per_order;

    bool perfect() const {
        return agreements == pairs && (!oracle_checked || oracle_matches == pairs);
    }
};
AgreementReport agreement_sweep(const Deployment& dep);

} // namespace hgbs::sim

#endif // HGBS_SIMULATE_HPP
