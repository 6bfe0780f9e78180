#include "beikit/primdec.hpp"

#include <algorithm>
#include <cstdint>

#include "beikit/detail/bitgraph.hpp"

namespace beikit {

namespace {

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

} // namespace

std::size_t PrimeComponent::binomial_generator_count() const {
    std::size_t pairs = 0;
    for (const auto& block : blocks)
        pairs += choose2(block.size());
    return pairs * choose2(static_cast<std::size_t>(d0));
}

std::vector<std::vector<int>> admissible_subsets(const OrderedGraph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (max_vertices > 30)
        max_vertices = 30;
    if (n > max_vertices)
        throw size_cap_error("subset enumeration capped at " + std::to_string(max_vertices) +
                             " vertices, graph has " + std::to_string(n));
    auto adj = detail::adjacency_masks(g);
    std::vector<std::vector<int>> subsets;
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t y = 0; y < total; ++y)
        if (detail::subset_admissible(adj, static_cast<std::uint32_t>(y), n))
            subsets.push_back(detail::mask_to_vertices(static_cast<std::uint32_t>(y)));
    detail::sort_subsets(subsets);
    return subsets;
}

PrimeComponent component_info(const OrderedGraph& g, std::span<const int> y, int d0) {
    if (d0 < 1)
        throw input_error("d0 must be >= 1, got " + std::to_string(d0));
    PrimeComponent comp;
    comp.blocks = connected_components(g, y);
    comp.y.assign(y.begin(), y.end());
    std::sort(comp.y.begin(), comp.y.end());
    comp.y.erase(std::unique(comp.y.begin(), comp.y.end()), comp.y.end());
    comp.d0 = d0;
    comp.n = g.vertex_count();
    return comp;
}

bool component_contains(const OrderedGraph& g, std::span<const int> y, std::span<const int> z) {
    std::vector<char> in_z(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : z) {
        if (v < 1 || v > g.vertex_count())
            throw input_error("vertex out of range in subset: " + std::to_string(v));
        in_z[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : y) {
        if (v < 1 || v > g.vertex_count())
            throw input_error("vertex out of range in subset: " + std::to_string(v));
        if (!in_z[static_cast<std::size_t>(v)])
            return false; // y must be a subset of z
    }
    auto block_index = [](const std::vector<std::vector<int>>& blocks, int v) {
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (std::binary_search(blocks[b].begin(), blocks[b].end(), v))
                return static_cast<int>(b);
        return -1;
    };
    auto blocks_y = connected_components(g, y);
    auto blocks_z = connected_components(g, z);
    for (std::size_t s = 0; s < y.size(); ++s) {
        for (std::size_t t = s + 1; t < y.size(); ++t) {
            int a = y[s], b = y[t];
            if (a == b)
                continue;
            bool conn_z = block_index(blocks_z, a) == block_index(blocks_z, b);
            bool conn_y = block_index(blocks_y, a) == block_index(blocks_y, b);
            if (conn_z && !conn_y)
                return false;
        }
    }
    return true;
}

std::vector<PrimeComponent> minimal_primes(const OrderedGraph& g, int d0, int max_vertices) {
    if (d0 < 1)
        throw input_error("d0 must be >= 1, got " + std::to_string(d0));
    std::vector<PrimeComponent> out;
    for (const auto& y : admissible_subsets(g, max_vertices))
        out.push_back(component_info(g, y, d0));
    return out;
}

} // namespace beikit
