#include "hgbs/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "hgbs/rng.hpp"

namespace hgbs::sim {

namespace {

// Seed-stream domains, one per simulation kind.
constexpr std::uint64_t kSameZoneDomain = 101;
constexpr std::uint64_t kRandomCompromiseDomain = 102;

class StopWatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

std::uint64_t pairs2(std::uint64_t s) { return s * (s - 1) / 2; }

/// Per-zone compromise tallies rolled up the zone tree; shares the layout
/// with CompromiseState but works on plain counters for the hot loops.
struct ZoneTallies {
    explicit ZoneTallies(const Deployment& dep)
        : dep_(&dep), levels_(dep.grid.order) {
        for (unsigned o = 1; o <= dep.grid.order; ++o)
            levels_[o - 1].assign(1ull << (dep.grid.order - o), 0);
    }

    void rebuild(const std::vector<std::uint32_t>& per_zone) {
        levels_[0] = per_zone;
        for (unsigned o = 2; o <= dep_->grid.order; ++o) {
            auto& up = levels_[o - 1];
            const auto& lo = levels_[o - 2];
            for (std::size_t g = 0; g < up.size(); ++g)
                up[g] = lo[2 * g] + lo[2 * g + 1];
        }
    }

    std::uint32_t at(unsigned order, std::uint64_t g) const {
        return levels_[order - 1][g];
    }

    const Deployment* dep_;
    std::vector<std::vector<std::uint32_t>> levels_;
};

/// Count links between non-compromised nodes whose establishing polynomial
/// is broken. Order-1 links are pairs within a zone; an order-o link crosses
/// the two child grids. Exact integer result.
template <typename BrokenFn>
std::uint64_t affected_link_count(const Deployment& dep, ZoneTallies& healthy,
                                  BrokenFn broken) {
    std::uint64_t affected = 0;
    const unsigned n = dep.grid.order;
    for (std::uint64_t g = 0; g < dep.grid.zone_count; ++g)
        if (broken(1, g)) affected += pairs2(healthy.at(1, g));
    for (unsigned o = 2; o <= n; ++o)
        for (std::uint64_t g = 0; g < (1ull << (n - o)); ++g)
            if (broken(o, g))
                affected += std::uint64_t(healthy.at(o - 1, 2 * g)) *
                            healthy.at(o - 1, 2 * g + 1);
    return affected;
}

} // namespace

CompromiseState::CompromiseState(const Deployment& dep)
    : dep_(&dep), compromised_(dep.grid.node_count, false),
      revealed_(dep.grid.order) {
    for (unsigned o = 1; o <= dep.grid.order; ++o)
        revealed_[o - 1].assign(1ull << (dep.grid.order - o), 0);
}

void CompromiseState::compromise(const NodeId& id) {
    if (id.grid() != dep_->grid)
        throw GridMismatch("node id belongs to a different grid");
    const std::uint64_t idx = node_index(id);
    if (compromised_[idx]) return;
    compromised_[idx] = true;
    ++count_;
    // The whole ring is disclosed: one share per retained order.
    for (unsigned o = 1; o <= dep_->ring_of(id).truncation; ++o)
        ++revealed_[o - 1][grid_index(id, o)];
}

bool CompromiseState::is_compromised(const NodeId& id) const {
    if (id.grid() != dep_->grid)
        throw GridMismatch("node id belongs to a different grid");
    return compromised_[node_index(id)];
}

std::uint64_t CompromiseState::revealed(unsigned order, std::uint64_t gindex) const {
    if (order < 1 || order > dep_->grid.order)
        throw OrderOutOfRange("order " + std::to_string(order) + " outside [1, " +
                              std::to_string(dep_->grid.order) + "]");
    if (gindex >= revealed_[order - 1].size())
        throw OutOfRange("grid index " + std::to_string(gindex) +
                         " past the grids of order " + std::to_string(order));
    return revealed_[order - 1][gindex];
}

bool CompromiseState::is_broken(unsigned order, std::uint64_t gindex) const {
    return revealed(order, gindex) > dep_->policy.degree_at(order);
}

std::vector<std::pair<unsigned, std::uint64_t>>
CompromiseState::broken_polynomials() const {
    std::vector<std::pair<unsigned, std::uint64_t>> out;
    for (unsigned o = 1; o <= dep_->grid.order; ++o)
        for (std::uint64_t g = 0; g < revealed_[o - 1].size(); ++g)
            if (is_broken(o, g)) out.emplace_back(o, g);
    return out;
}

void CompromiseState::reset() {
    std::fill(compromised_.begin(), compromised_.end(), false);
    count_ = 0;
    for (auto& level : revealed_) std::fill(level.begin(), level.end(), 0);
}

SimReport mc_same_zone(const GridParams& grid, unsigned z, std::uint64_t trials,
                       std::uint64_t seed) {
    if (trials < 1) throw ParamDomain("need at least one trial");
    if (z < 1 || z > grid.order)
        throw OrderOutOfRange("z outside [1, " + std::to_string(grid.order) + "]");

    StopWatch watch;
    const std::uint64_t in_grid = grid.zone_size << (z - 1);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 gen(sub_seed(seed, kSameZoneDomain, t));
        const std::uint64_t a = uniform_below(gen, grid.node_count);
        std::uint64_t b = uniform_below(gen, grid.node_count - 1);
        if (b >= a) ++b; // ordered pair of distinct nodes
        if (a < in_grid && b < in_grid) ++hits;
    }

    SimReport r;
    r.kind = "same-zone";
    r.param = "z=" + std::to_string(z);
    r.trials = trials;
    r.seed = seed;
    r.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    r.closed_form =
        to_double(analysis::connectivity_pz(z, grid.order, grid.zone_size).p_z);
    r.abs_error = std::abs(r.estimate - *r.closed_form);
    r.wall_seconds = watch.seconds();
    return r;
}

CompromiseRandomReport mc_compromise_random(const Deployment& dep, std::uint64_t n_c,
                                            std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ParamDomain("need at least one trial");
    const GridParams& grid = dep.grid;
    if (n_c > grid.node_count)
        throw ParamDomain("cannot compromise more than N nodes");

    StopWatch watch;
    const std::size_t t0 = dep.policy.base_degree;

    std::vector<std::uint32_t> pool(grid.node_count);
    std::vector<std::uint32_t> comp_per_zone(grid.zone_count);
    std::vector<std::uint32_t> healthy_per_zone(grid.zone_count);
    ZoneTallies revealed(dep), healthy(dep);

    std::uint64_t break_hits = 0;
    std::uint64_t affected_total = 0;
    std::uint64_t link_total = 0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 gen(sub_seed(seed, kRandomCompromiseDomain, t));
        std::iota(pool.begin(), pool.end(), 0u);
        std::fill(comp_per_zone.begin(), comp_per_zone.end(), 0u);
        for (std::uint64_t i = 0; i < n_c; ++i) {
            const std::uint64_t j = i + uniform_below(gen, grid.node_count - i);
            std::swap(pool[i], pool[j]);
            comp_per_zone[pool[i] / grid.zone_size]++;
        }
        revealed.rebuild(comp_per_zone);
        for (std::uint64_t g = 0; g < grid.zone_count; ++g)
            healthy_per_zone[g] =
                static_cast<std::uint32_t>(grid.zone_size) - comp_per_zone[g];
        healthy.rebuild(healthy_per_zone);

        const auto broken = [&](unsigned o, std::uint64_t g) {
            return revealed.at(o, g) > dep.policy.degree_at(o);
        };
        if (broken(1, 0)) ++break_hits;
        affected_total += affected_link_count(dep, healthy, broken);
        link_total += pairs2(grid.node_count - n_c);
    }

    CompromiseRandomReport out;
    out.closed_paper_literal =
        analysis::resiliency_pr(n_c, t0, grid.zone_size, grid.node_count);
    out.closed_binomial_corrected =
        analysis::resiliency_pr(n_c, t0 + 1, grid.zone_size, grid.node_count);
    out.closed_exact_corrected =
        analysis::resiliency_pr_exact(n_c, t0 + 1, grid.zone_size, grid.node_count);

    out.zone_break.kind = "compromise-random";
    out.zone_break.param = "Nc=" + std::to_string(n_c);
    out.zone_break.trials = trials;
    out.zone_break.seed = seed;
    out.zone_break.estimate =
        static_cast<double>(break_hits) / static_cast<double>(trials);
    out.zone_break.closed_form = out.closed_exact_corrected;
    out.zone_break.abs_error =
        std::abs(out.zone_break.estimate - out.closed_exact_corrected);
    out.zone_break.wall_seconds = watch.seconds();

    out.affected_links.kind = "compromise-random-affected";
    out.affected_links.param = out.zone_break.param;
    out.affected_links.trials = trials;
    out.affected_links.seed = seed;
    out.affected_links.estimate =
        link_total == 0 ? 0.0
                        : static_cast<double>(affected_total) /
                              static_cast<double>(link_total);
    out.affected_links.wall_seconds = watch.seconds();
    return out;
}

SelectiveReport mc_compromise_selective(const Deployment& dep,
                                        std::uint64_t target_zone,
                                        std::uint64_t budget, std::uint64_t trials,
                                        std::uint64_t seed) {
    if (trials < 1) throw ParamDomain("need at least one trial");
    const GridParams& grid = dep.grid;
    if (target_zone >= grid.zone_count)
        throw ZoneOutOfRange("zone " + std::to_string(target_zone) +
                             " not below " + std::to_string(grid.zone_count));
    if (budget > grid.zone_size)
        throw ParamDomain("budget exceeds the zone population m");

    StopWatch watch;
    std::vector<std::uint32_t> comp_per_zone(grid.zone_count);
    std::vector<std::uint32_t> healthy_per_zone(grid.zone_count);
    ZoneTallies revealed(dep), healthy(dep);

    std::uint64_t break_hits = 0;
    std::uint64_t affected_total = 0;
    std::uint64_t link_total = 0;

    // Which zone members fall does not change any zone-level tally, so the
    // trial draw reduces to the fixed per-zone budget.
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::fill(comp_per_zone.begin(), comp_per_zone.end(), 0u);
        comp_per_zone[target_zone] = static_cast<std::uint32_t>(budget);
        revealed.rebuild(comp_per_zone);
        for (std::uint64_t g = 0; g < grid.zone_count; ++g)
            healthy_per_zone[g] =
                static_cast<std::uint32_t>(grid.zone_size) - comp_per_zone[g];
        healthy.rebuild(healthy_per_zone);

        const auto broken = [&](unsigned o, std::uint64_t g) {
            return revealed.at(o, g) > dep.policy.degree_at(o);
        };
        if (broken(1, target_zone)) ++break_hits;
        affected_total += affected_link_count(dep, healthy, broken);
        link_total += pairs2(grid.node_count - budget);
    }

    SelectiveReport out;
    out.deterministic_break_budget = dep.policy.degree_at(1) + 1;

    out.zone_break.kind = "compromise-selective";
    out.zone_break.param = "budget=" + std::to_string(budget);
    out.zone_break.trials = trials;
    out.zone_break.seed = seed;
    out.zone_break.estimate =
        static_cast<double>(break_hits) / static_cast<double>(trials);
    out.zone_break.closed_form =
        budget >= out.deterministic_break_budget ? 1.0 : 0.0;
    out.zone_break.abs_error =
        std::abs(out.zone_break.estimate - *out.zone_break.closed_form);
    out.zone_break.wall_seconds = watch.seconds();

    out.affected_links.kind = "compromise-selective-affected";
    out.affected_links.param = out.zone_break.param;
    out.affected_links.trials = trials;
    out.affected_links.seed = seed;
    out.affected_links.estimate =
        link_total == 0 ? 0.0
                        : static_cast<double>(affected_total) /
                              static_cast<double>(link_total);
    out.affected_links.wall_seconds = watch.seconds();
    return out;
}

BlockedTrafficReport mc_blocked_traffic(const Deployment& dep, unsigned broken_order,
                                        const analysis::TrafficModel& traffic) {
    const GridParams& grid = dep.grid;
    if (broken_order < 1 || broken_order > grid.order)
        throw OrderOutOfRange("broken order outside [1, n]");
    if (traffic.order != grid.order)
        throw ParamDomain("traffic model order differs from the grid order");
    if (dep.truncation != grid.order)
        throw ParamDomain("blocked-traffic enumeration needs untruncated rings");

    BlockedTrafficReport out;
    out.broken_order = broken_order;
    out.closed_form = analysis::blocked_fraction(broken_order, traffic);

    std::vector<std::uint64_t> per_order(grid.order, 0);
    std::uint64_t affected = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> affected_list;

    for (std::uint64_t a = 0; a < grid.node_count; ++a) {
        const NodeId ia = node_at(grid, a);
        for (std::uint64_t b = a + 1; b < grid.node_count; ++b) {
            const NodeId ib = node_at(grid, b);
            const unsigned o = common_order(ia, ib);
            ++per_order[o - 1];
            if (o == broken_order && grid_index(ia, o) == 0) {
                ++affected;
                affected_list.emplace_back(a, b);
            }
        }
    }

    out.affected_pairs = affected;
    out.measured = traffic.weight(broken_order) *
                   Rational(affected, per_order[broken_order - 1]);

    // Interim recovery: the affected pairs fall back to the next-order
    // polynomial until the grid is re-keyed.
    if (broken_order < grid.order) {
        for (const auto& [a, b] : affected_list) {
            const NodeId ia = node_at(grid, a), ib = node_at(grid, b);
            const FieldElement kab = eval_share(
                dep.ring_of(ia).share_at(broken_order + 1), dep.id_element(ib));
            const FieldElement kba = eval_share(
                dep.ring_of(ib).share_at(broken_order + 1), dep.id_element(ia));
            if (kab == kba)
                ++out.reestablished_pairs;
            else
                out.recovery_agreement = false;
        }
    }
    return out;
}

AgreementReport agreement_sweep(const Deployment& dep) {
    const GridParams& grid = dep.grid;
    if (dep.truncation != grid.order)
        throw ParamDomain("agreement sweep needs untruncated rings");

    AgreementReport out;
    out.pairs_per_order.assign(grid.order, 0);
    out.oracle_checked = dep.has_authority();

    for (std::uint64_t a = 0; a < grid.node_count; ++a) {
        const NodeId ia = node_at(grid, a);
        for (std::uint64_t b = a + 1; b < grid.node_count; ++b) {
            const NodeId ib = node_at(grid, b);
            ++out.pairs;
            const unsigned o = common_order(ia, ib);
            ++out.pairs_per_order[o - 1];
            const FieldElement kab = establish_key(dep, ia, ib);
            const FieldElement kba = establish_key(dep, ib, ia);
            if (kab == kba) ++out.agreements;
            if (out.oracle_checked) {
                const FieldElement expect =
                    eval_bivar(dep.authority_poly(o, grid_index(ia, o)),
                               dep.id_element(ia), dep.id_element(ib));
                if (kab == expect) ++out.oracle_matches;
            }
        }
    }
    return out;
}

} // namespace hgbs::sim
