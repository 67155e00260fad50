#include "hgbs/topology.hpp"

#include <bit>

namespace hgbs {

namespace {

unsigned ceil_lg(std::uint64_t v) {
    // smallest b with 2^b >= v
    unsigned b = 0;
    while ((1ull << b) < v) ++b;
    return b;
}

} // namespace

GridParams make_grid(unsigned n, unsigned k) {
    if (n < 1 || n > 60) throw ParamDomain("network order n must be in [1, 60]");
    if (k < 1 || k > (1u << 29))
        throw ParamDomain("distribution unit k must be in [1, 2^29]");

    GridParams g;
    g.order = n;
    g.unit = k;
    g.zone_size = 4ull * k * k;
    g.local_bits = ceil_lg(g.zone_size);
    g.id_bits = n + g.local_bits;
    if (g.id_bits > 60)
        throw IdWidthExceedsField("ID width " + std::to_string(g.id_bits) +
                                  " bits exceeds the 60-bit injectivity bound "
                                  "of the default modulus");
    g.zone_count = 1ull << (n - 1);
    g.node_count = g.zone_count * g.zone_size;
    return g;
}

NodeId::NodeId(const GridParams& grid, std::uint64_t path, std::uint64_t local)
    : grid_(grid), path_(path), local_(local) {
    if (path >= grid.zone_count)
        throw OutOfRange("path " + std::to_string(path) + " not below " +
                         std::to_string(grid.zone_count));
    if (local < 1 || local > grid.zone_size)
        throw OutOfRange("local index " + std::to_string(local) +
                         " outside [1, " + std::to_string(grid.zone_size) + "]");
}

std::uint64_t encode_id(const NodeId& id) {
    return (id.path() << id.grid().local_bits) | (id.local() - 1);
}

NodeId decode_id(std::uint64_t value, const GridParams& grid) {
    if (value >> grid.id_bits != 0)
        throw OutOfRange("encoded value " + std::to_string(value) +
                         " wider than " + std::to_string(grid.id_bits) + " bits");
    const std::uint64_t local_code = value & ((1ull << grid.local_bits) - 1);
    const std::uint64_t path = value >> grid.local_bits;
    if (local_code >= grid.zone_size)
        throw OutOfRange("local code " + std::to_string(local_code) +
                         " is not an assigned index of a zone of " +
                         std::to_string(grid.zone_size) + " nodes");
    return NodeId(grid, path, local_code + 1); // range-checks path too
}

std::uint64_t grid_index(const NodeId& id, unsigned order) {
    if (order < 1 || order > id.grid().order)
        throw OrderOutOfRange("order " + std::to_string(order) +
                              " outside [1, " + std::to_string(id.grid().order) + "]");
    return id.path() >> (order - 1);
}

unsigned common_order(const NodeId& a, const NodeId& b) {
    if (a.grid() != b.grid())
        throw GridMismatch("node ids belong to different grids");
    // Differing path suffix length + 1; equals n - (shared root-side prefix).
    return static_cast<unsigned>(std::bit_width(a.path() ^ b.path())) + 1;
}

NodeId node_at(const GridParams& grid, std::uint64_t index) {
    if (index >= grid.node_count)
        throw OutOfRange("node index " + std::to_string(index) + " not below " +
                         std::to_string(grid.node_count));
    return NodeId(grid, index / grid.zone_size, index % grid.zone_size + 1);
}

std::uint64_t node_index(const NodeId& id) {
    return id.path() * id.grid().zone_size + (id.local() - 1);
}

std::string id_binary(const NodeId& id) {
    const std::uint64_t v = encode_id(id);
    std::string s(id.grid().id_bits, '0');
    for (unsigned b = 0; b < id.grid().id_bits; ++b)
        if (v >> b & 1) s[id.grid().id_bits - 1 - b] = '1';
    return s;
}

} // namespace hgbs
