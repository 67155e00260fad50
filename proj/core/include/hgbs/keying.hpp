#ifndef HGBS_KEYING_HPP
#define HGBS_KEYING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hgbs/field.hpp"
#include "hgbs/polynomial.hpp"
#include "hgbs/topology.hpp"

namespace hgbs {

/// Rule mapping a grid order to the degree of its polynomials.
/// Flat keeps the base degree t0 everywhere; Doubling doubles per order,
/// so higher-order polynomials protect proportionally more nodes.
enum class DegreeKind { Flat, Doubling };

struct DegreePolicy {
    DegreeKind kind = DegreeKind::Flat;
    double alpha = 0.6;          // security parameter in (0, 1]
    std::size_t base_degree = 1; // t0 = max(1, floor(alpha * m))

    std::size_t degree_at(unsigned order) const {
        return kind == DegreeKind::Flat ? base_degree
                                        : base_degree << (order - 1);
    }

    friend bool operator==(const DegreePolicy&, const DegreePolicy&) = default;
};

/// Derives t0 from alpha and the zone population of `grid`.
DegreePolicy make_policy(DegreeKind kind, double alpha, const GridParams& grid);

/// A node's keying material: one share per order along its root-to-leaf
/// path, kept for orders 1..truncation.
struct KeyRing {
    NodeId owner;
    std::vector<PolyShare> shares; // shares[o-1] is the order-(o) share
    unsigned truncation;           // highest retained order d

    const PolyShare& share_at(unsigned order) const;

    friend bool operator==(const KeyRing&, const KeyRing&) = default;
};

/// The authority's view of a deployed network: every polynomial plus every
/// node's ring. Immutable once built; persisted as the deployment document.
struct Deployment {
    GridParams grid;
    DegreePolicy policy;
    FieldModulus modulus;
    std::uint64_t master_seed = 0;
    unsigned truncation = 1; // == grid.order unless rings were truncated

    /// authority[o-1][g] is the order-o polynomial of grid g. Empty when a
    /// loaded document omitted the trusted-authority section.
    std::vector<std::vector<SymBivarPoly>> authority;
    std::vector<KeyRing> rings; // canonical node order (node_at index)

    bool has_authority() const noexcept { return !authority.empty(); }
    const SymBivarPoly& authority_poly(unsigned order, std::uint64_t gindex) const;
    const KeyRing& ring_of(const NodeId& id) const;

    /// A node's encoded ID embedded into the field.
    FieldElement id_element(const NodeId& id) const;

    friend bool operator==(const Deployment&, const Deployment&) = default;
};

/// Generates every polynomial and every ring. Polynomial (o, g) is drawn
/// from a generator seeded with sub_seed(master_seed, o, g), so the whole
/// deployment is a pure function of its parameters; identical inputs yield
/// byte-identical documents.
Deployment assign_keying_material(const GridParams& grid, const DegreePolicy& policy,
                                  const FieldModulus& modulus,
                                  std::uint64_t master_seed);

/// Pairwise key from the minimum shared order: k = g_i^{o*}(ID_j) with
/// o* = common_order(i, j). Symmetric in i and j.
FieldElement establish_key(const Deployment& dep, const NodeId& i, const NodeId& j);

/// Copy of the deployment with every ring reduced to orders 1..d.
Deployment truncate_rings(const Deployment& dep, unsigned d);

/// Outcome of a relay-mediated establishment: the fresh key the relay drew
/// plus the two direct keys that notionally protect its transport.
struct PathKeyResult {
    FieldElement key;
    NodeId relay;
    FieldElement key_with_i; // k(i, relay)
    FieldElement key_with_j; // k(relay, j)
};

/// Relay-mediated key for a pair whose common order was truncated away:
/// picks a relay w with common_order(i,w) <= d and common_order(w,j) <= d
/// uniformly among candidates, who draws a fresh key for the pair.
/// Nodes listed in `excluded` (e.g. compromised ones) are never candidates.
/// Throws NoRelayExists when no candidate satisfies both constraints.
PathKeyResult establish_path_key(const Deployment& dep, const NodeId& i,
                                 const NodeId& j, std::mt19937_64& rng,
                                 const std::vector<NodeId>& excluded = {});

} // namespace hgbs

#endif // HGBS_KEYING_HPP
