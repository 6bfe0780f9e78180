#ifndef BEIKIT_DETAIL_BITGRAPH_HPP
#define BEIKIT_DETAIL_BITGRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "beikit/graph.hpp"

// Bitmask machinery behind the subset criterion. Vertex v is bit v-1;
// graphs entering here have at most 30 vertices.

namespace beikit::detail {

inline std::vector<std::uint32_t> adjacency_masks(const OrderedGraph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [x, y] : g.edges()) {
        adj[static_cast<std::size_t>(x - 1)] |= 1u << (y - 1);
        adj[static_cast<std::size_t>(y - 1)] |= 1u << (x - 1);
    }
    return adj;
}

/// Component masks of the subgraph induced by the bit set `y`.
inline std::vector<std::uint32_t> component_masks(std::span<const std::uint32_t> adj,
                                                  std::uint32_t y) {
    std::vector<std::uint32_t> comps;
    std::uint32_t rest = y;
    while (rest) {
        std::uint32_t seed = rest & (~rest + 1);
        std::uint32_t comp = seed;
        for (;;) {
            std::uint32_t frontier = 0;
            std::uint32_t scan = comp;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                frontier |= adj[static_cast<std::size_t>(v)];
            }
            std::uint32_t grown = (comp | frontier) & y;
            if (grown == comp)
                break;
            comp = grown;
        }
        comps.push_back(comp);
        rest &= ~comp;
    }
    return comps;
}

/// Y qualifies iff every outside vertex sees at least two components of G_Y.
inline bool subset_admissible(std::span<const std::uint32_t> adj, std::uint32_t y, int n) {
    auto comps = component_masks(adj, y);
    std::uint32_t all = n >= 32 ? ~0u : (1u << n) - 1;
    std::uint32_t outside = all & ~y;
    while (outside) {
        int x = std::countr_zero(outside);
        outside &= outside - 1;
        std::uint32_t nbrs = adj[static_cast<std::size_t>(x)];
        int touched = 0;
        for (std::uint32_t comp : comps) {
            if (nbrs & comp) {
                if (++touched == 2)
                    break;
            }
        }
        if (touched < 2)
            return false;
    }
    return true;
}

inline std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

/// (|Y| descending, then lexicographic) — the normalized component order.
inline void sort_subsets(std::vector<std::vector<int>>& subsets) {
    std::sort(subsets.begin(), subsets.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size())
                      return a.size() > b.size();
                  return a < b;
              });
}

} // namespace beikit::detail

#endif
