#ifndef HGBS_TOPOLOGY_HPP
#define HGBS_TOPOLOGY_HPP

#include <cstdint>
#include <string>

#include "hgbs/errors.hpp"

namespace hgbs {

/// Hierarchical grid parameters. A network of order n is a binary tree of
/// zones: 2^(n-1) basic zones of m = (2k)^2 nodes each, grouped pairwise
/// into grids of growing order up to the whole network at order n.
struct GridParams {
    unsigned order = 1;            // n
    unsigned unit = 1;             // k
    std::uint64_t zone_size = 4;   // m = (2k)^2
    std::uint64_t zone_count = 1;  // G_n = 2^(n-1)
    std::uint64_t node_count = 4;  // N = G_n * m
    unsigned local_bits = 2;       // ceil(lg m)
    unsigned id_bits = 3;          // n + local_bits

    friend bool operator==(const GridParams&, const GridParams&) = default;
};

/// Validates (n, k) and computes the derived sizes. The encoded ID width
/// n + ceil(lg m) must stay within 60 bits so IDs embed injectively into the
/// default field; IdWidthExceedsField otherwise.
GridParams make_grid(unsigned n, unsigned k);

/// A node's structured identity: the root-to-leaf path of its basic zone
/// plus a 1-based local index within the zone.
class NodeId {
public:
    NodeId(const GridParams& grid, std::uint64_t path, std::uint64_t local);

    std::uint64_t path() const noexcept { return path_; }
    std::uint64_t local() const noexcept { return local_; }
    const GridParams& grid() const noexcept { return grid_; }

    friend bool operator==(const NodeId&, const NodeId&) = default;

private:
    GridParams grid_;
    std::uint64_t path_;
    std::uint64_t local_;
};

/// Bit layout, most significant first: one zero pad bit, n-1 path bits
/// (root branch first), ceil(lg m) bits holding local-1. Total width
/// n + ceil(lg m).
std::uint64_t encode_id(const NodeId& id);

/// Inverse of encode_id; rejects values with out-of-range width or a local
/// code past the zone population.
NodeId decode_id(std::uint64_t value, const GridParams& grid);

/// Which grid of the given order contains the node: floor(path / 2^(order-1)).
std::uint64_t grid_index(const NodeId& id, unsigned order);

/// Smallest order o with grid_index(a, o) == grid_index(b, o); 1 means the
/// same basic zone, n is shared by every pair.
unsigned common_order(const NodeId& a, const NodeId& b);

/// Canonical node enumeration: index = path * m + (local - 1).
NodeId node_at(const GridParams& grid, std::uint64_t index);
std::uint64_t node_index(const NodeId& id);

/// Wire rendering of an encoded ID: zero-padded binary of width id_bits.
std::string id_binary(const NodeId& id);

} // namespace hgbs

#endif // HGBS_TOPOLOGY_HPP
