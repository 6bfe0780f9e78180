#include "beikit/parallel.hpp"

#include "beikit/detail/bitgraph.hpp"

namespace beikit::par {

std::vector<std::vector<int>> admissible_subsets(const OrderedGraph& g, int max_vertices,
                                                 int threads) {
    const int n = g.vertex_count();
    if (max_vertices > 30)
        max_vertices = 30;
    if (n > max_vertices)
        throw size_cap_error("subset enumeration capped at " + std::to_string(max_vertices) +
                             " vertices, graph has " + std::to_string(n));
    const auto adj = detail::adjacency_masks(g);
    const std::uint64_t total = 1ull << n;

    const int nthreads = resolve_threads(threads);
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 4u * nthreads);
    std::vector<std::vector<std::vector<int>>> found(chunks);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(c) / chunks;
        const std::uint64_t hi = total * (static_cast<std::uint64_t>(c) + 1) / chunks;
        auto& local = found[static_cast<std::size_t>(c)];
        for (std::uint64_t y = lo; y < hi; ++y)
            if (detail::subset_admissible(adj, static_cast<std::uint32_t>(y), n))
                local.push_back(detail::mask_to_vertices(static_cast<std::uint32_t>(y)));
    }

    std::vector<std::vector<int>> subsets;
    for (auto& local : found)
        for (auto& y : local)
            subsets.push_back(std::move(y));
    detail::sort_subsets(subsets);
    return subsets;
}

std::vector<PrimeComponent> minimal_primes(const OrderedGraph& g, int d0, int max_vertices,
                                           int threads) {
    if (d0 < 1)
        throw input_error("d0 must be >= 1, got " + std::to_string(d0));
    std::vector<PrimeComponent> out;
    for (const auto& y : admissible_subsets(g, max_vertices, threads))
        out.push_back(component_info(g, y, d0));
    return out;
}

} // namespace beikit::par
