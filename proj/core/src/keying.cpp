#include "hgbs/keying.hpp"

#include <algorithm>
#include <cmath>

#include "hgbs/rng.hpp"

namespace hgbs {

DegreePolicy make_policy(DegreeKind kind, double alpha, const GridParams& grid) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw ParamDomain("security parameter alpha must be in (0, 1]");
    DegreePolicy p;
    p.kind = kind;
    p.alpha = alpha;
    const auto t0 = static_cast<std::size_t>(
        std::floor(alpha * static_cast<double>(grid.zone_size)));
    p.base_degree = std::max<std::size_t>(1, t0);
    return p;
}

const PolyShare& KeyRing::share_at(unsigned order) const {
    if (order < 1 || order > truncation)
        throw OrderTruncated("order " + std::to_string(order) +
                             " not retained; ring truncated at " +
                             std::to_string(truncation));
    return shares[order - 1];
}

const SymBivarPoly& Deployment::authority_poly(unsigned order,
                                               std::uint64_t gindex) const {
    if (!has_authority())
        throw ParamDomain("deployment document carries no authority polynomials");
    if (order < 1 || order > grid.order)
        throw OrderOutOfRange("order " + std::to_string(order) + " outside [1, " +
                              std::to_string(grid.order) + "]");
    const auto& level = authority[order - 1];
    if (gindex >= level.size())
        throw OutOfRange("grid index " + std::to_string(gindex) +
                         " past the " + std::to_string(level.size()) +
                         " grids of order " + std::to_string(order));
    return level[gindex];
}

const KeyRing& Deployment::ring_of(const NodeId& id) const {
    if (id.grid() != grid)
        throw GridMismatch("node id belongs to a different grid");
    return rings[node_index(id)];
}

FieldElement Deployment::id_element(const NodeId& id) const {
    return FieldElement(encode_id(id), modulus);
}

Deployment assign_keying_material(const GridParams& grid, const DegreePolicy& policy,
                                  const FieldModulus& modulus,
                                  std::uint64_t master_seed) {
    if (modulus.value() >> grid.id_bits == 0)
        throw IdWidthExceedsField("modulus " + std::to_string(modulus.value()) +
                                  " cannot embed " + std::to_string(grid.id_bits) +
                                  "-bit node ids injectively");

    Deployment dep{grid, policy, modulus, master_seed, grid.order, {}, {}};

    dep.authority.resize(grid.order);
    for (unsigned o = 1; o <= grid.order; ++o) {
        const std::uint64_t count = 1ull << (grid.order - o);
        dep.authority[o - 1].reserve(count);
        for (std::uint64_t g = 0; g < count; ++g) {
            std::mt19937_64 rng(sub_seed(master_seed, o, g));
            dep.authority[o - 1].push_back(
                gen_sym_bivar(policy.degree_at(o), modulus, rng));
        }
    }

    dep.rings.reserve(grid.node_count);
    for (std::uint64_t idx = 0; idx < grid.node_count; ++idx) {
        NodeId id = node_at(grid, idx);
        const FieldElement x = dep.id_element(id);
        KeyRing ring{id, {}, grid.order};
        ring.shares.reserve(grid.order);
        for (unsigned o = 1; o <= grid.order; ++o)
            ring.shares.push_back(
                derive_share(dep.authority[o - 1][grid_index(id, o)], x));
        dep.rings.push_back(std::move(ring));
    }
    return dep;
}

FieldElement establish_key(const Deployment& dep, const NodeId& i, const NodeId& j) {
    if (i.grid() != dep.grid || j.grid() != dep.grid)
        throw GridMismatch("node id belongs to a different grid");
    if (i == j)
        throw SameNode("a node cannot establish a pairwise key with itself");
    const unsigned o = common_order(i, j);
    const KeyRing& ring = dep.ring_of(i);
    if (o > ring.truncation || o > dep.ring_of(j).truncation)
        throw OrderTruncated("pair needs order " + std::to_string(o) +
                             " but rings are truncated at " +
                             std::to_string(dep.truncation) +
                             "; use a path key via a relay");
    return eval_share(ring.shares[o - 1], dep.id_element(j));
}

Deployment truncate_rings(const Deployment& dep, unsigned d) {
    if (d < 1 || d > dep.truncation)
        throw OrderOutOfRange("truncation order " + std::to_string(d) +
                              " outside [1, " + std::to_string(dep.truncation) + "]");
    Deployment out = dep;
    out.truncation = d;
    for (auto& ring : out.rings) {
        ring.shares.erase(ring.shares.begin() + d, ring.shares.end());
        ring.truncation = d;
    }
    return out;
}

PathKeyResult establish_path_key(const Deployment& dep, const NodeId& i,
                                 const NodeId& j, std::mt19937_64& rng,
                                 const std::vector<NodeId>& excluded) {
    if (i.grid() != dep.grid || j.grid() != dep.grid)
        throw GridMismatch("node id belongs to a different grid");
    if (i == j)
        throw SameNode("a node cannot establish a path key with itself");
    const unsigned d = dep.truncation;
    if (common_order(i, j) <= d)
        throw ParamDomain("pair shares a retained polynomial at order " +
                          std::to_string(common_order(i, j)) +
                          "; establish the key directly");

    std::vector<NodeId> candidates;
    for (std::uint64_t idx = 0; idx < dep.grid.node_count; ++idx) {
        NodeId w = node_at(dep.grid, idx);
        if (w == i || w == j) continue;
        if (std::find(excluded.begin(), excluded.end(), w) != excluded.end())
            continue;
        if (common_order(i, w) <= d && common_order(w, j) <= d)
            candidates.push_back(w);
    }
    if (candidates.empty())
        throw NoRelayExists("no node shares a retained polynomial with both "
                            "endpoints at truncation " + std::to_string(d));

    NodeId relay = candidates[uniform_below(rng, candidates.size())];
    FieldElement fresh(uniform_below(rng, dep.modulus.value()), dep.modulus);
    return PathKeyResult{fresh, relay, establish_key(dep, i, relay),
                         establish_key(dep, relay, j)};
}

} // namespace hgbs
