#ifndef BEIKIT_PARALLEL_HPP
#define BEIKIT_PARALLEL_HPP

#include <atomic>
#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "beikit/gbasis.hpp"
#include "beikit/oracle.hpp"
#include "beikit/primdec.hpp"

// OpenMP variants of the hot kernels. Each one produces output identical to
// its serial counterpart (fill-by-index or merge-then-sort), so the serial
// functions double as the reference implementations in tests and in the
// benchmark target.

namespace beikit::par {

#ifdef _OPENMP
inline int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }
#else
inline int resolve_threads(int) { return 1; }
#endif

/// Parallel structured-basis construction over (path, labeling) pairs.
template <class K>
std::vector<BasisElement<K>> groebner_basis(const OrderedGraph& g, int d0, const K& one,
                                            int threads = 0) {
    if (d0 < 1)
        throw input_error("d0 must be >= 1, got " + std::to_string(d0));
    const auto paths = enumerate_admissible_paths(g);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (const auto& path : paths)
        for (auto& kappa : enumerate_strict_antitone(path, d0))
            pairs.emplace_back(path, std::move(kappa));

    std::vector<BasisElement<K>> basis(pairs.size(),
                                       BasisElement<K>{{}, {}, Polynomial<K>(), Monomial()});
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
#endif
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto& [path, kappa] = pairs[static_cast<std::size_t>(k)];
        basis[static_cast<std::size_t>(k)] = detail_build_generator<K>(path, kappa, one);
    }
    (void)threads;
    return basis;
}

/// Parallel S-pair verification. The pair count is checked against the
/// budget up front, so budget behavior does not depend on scheduling.
template <class K>
bool is_groebner(std::span<const Polynomial<K>> basis,
                 const oracle::OracleOrder& order = oracle::OracleOrder::lex(),
                 const oracle::Budget& budget = {}, int threads = 0) {
    oracle::detail::check_order(basis, order);
    const std::size_t m = basis.size();
    const std::size_t total = m < 2 ? 0 : m * (m - 1) / 2;
    if (total > budget.max_spairs)
        throw budget_error("budget exceeded: " + std::to_string(total) +
                           " S-pairs over the cap of " + std::to_string(budget.max_spairs));
    const auto start = std::chrono::steady_clock::now();
    std::atomic<bool> failed{false};
    std::atomic<bool> timed_out{false};
    std::atomic<bool> errored{false};
    std::string error_msg;

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(resolve_threads(threads))
#endif
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        if (failed.load(std::memory_order_relaxed) || timed_out.load(std::memory_order_relaxed) ||
            errored.load(std::memory_order_relaxed))
            continue;
        try {
            // unrank k to the pair (i, j), i < j
            std::size_t i = 0;
            std::size_t rem = static_cast<std::size_t>(k);
            while (rem >= m - 1 - i) {
                rem -= m - 1 - i;
                ++i;
            }
            std::size_t j = i + 1 + rem;
            if (basis[i].is_zero() || basis[j].is_zero())
                continue;
            Polynomial<K> s = oracle::s_polynomial(basis[i], basis[j], order);
            if (!reduce_modulo(s, basis).is_zero())
                failed.store(true, std::memory_order_relaxed);
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            if (dt.count() > budget.max_seconds)
                timed_out.store(true, std::memory_order_relaxed);
        } catch (const std::exception& e) {
            if (!errored.exchange(true))
                error_msg = e.what();
        }
    }
    (void)threads;
    if (errored.load())
        throw input_error(error_msg);
    if (timed_out.load())
        throw budget_error("budget exceeded: S-pair verification ran longer than " +
                           std::to_string(budget.max_seconds) + "s");
    return !failed.load();
}

/// Parallel scan of all 2^n subsets, split by leading mask bits; the merged
/// result is sorted exactly like the serial enumeration.
std::vector<std::vector<int>> admissible_subsets(const OrderedGraph& g,
                                                 int max_vertices = kDefaultMaxVertices,
                                                 int threads = 0);

std::vector<PrimeComponent> minimal_primes(const OrderedGraph& g, int d0,
                                           int max_vertices = kDefaultMaxVertices,
                                           int threads = 0);

} // namespace beikit::par

#endif
