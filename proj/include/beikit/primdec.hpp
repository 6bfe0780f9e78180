#ifndef BEIKIT_PRIMDEC_HPP
#define BEIKIT_PRIMDEC_HPP

#include <span>
#include <vector>

#include "beikit/graph.hpp"
#include "beikit/polynomial.hpp"

namespace beikit {

/// One minimal prime of the decomposition: the vertex subset Y, the
/// partition of Y into connected components of the induced subgraph, and the
/// row count d0. Its ideal is generated by the unknowns p[i,x] for x outside
/// Y together with all 2x2 minors inside each block.
struct PrimeComponent {
    std::vector<int> y;                  // ascending
    std::vector<std::vector<int>> blocks; // connected components of G_Y
    int d0 = 0;
    int n = 0; // ambient vertex count

    std::size_t monomial_generator_count() const {
        return static_cast<std::size_t>(d0) * (static_cast<std::size_t>(n) - y.size());
    }
    std::size_t binomial_generator_count() const;
};

inline constexpr int kDefaultMaxVertices = 20;

/// All Y such that every vertex outside Y has neighbors in two distinct
/// components of G_Y (equivalently: adding the vertex strictly lowers the
/// component count). Sorted by (|Y| descending, then lexicographic); Y = V
/// always qualifies and comes first. Enumerates 2^n subsets, so n is capped.
std::vector<std::vector<int>> admissible_subsets(const OrderedGraph& g,
                                                 int max_vertices = kDefaultMaxVertices);

PrimeComponent component_info(const OrderedGraph& g, std::span<const int> y, int d0);

/// Containment of component varieties: true iff y is a subset of z and every
/// pair of y-vertices connected in G_z is connected in G_y.
bool component_contains(const OrderedGraph& g, std::span<const int> y, std::span<const int> z);

/// One PrimeComponent per admissible subset, in the admissible_subsets order.
std::vector<PrimeComponent> minimal_primes(const OrderedGraph& g, int d0,
                                           int max_vertices = kDefaultMaxVertices);

/// Generators of the component ideal: monomials p[i,x] for x outside Y
/// (x ascending, then i ascending), then per block all minors f^{ij}_{xy}
/// with i < j and x < y (pairs ascending).
template <class K>
std::vector<Polynomial<K>> component_generators(const OrderedGraph& g,
                                                const PrimeComponent& comp, const K& one) {
    std::vector<char> in_y(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : comp.y)
        in_y[static_cast<std::size_t>(v)] = 1;
    std::vector<Polynomial<K>> gens;
    for (int x = 1; x <= g.vertex_count(); ++x) {
        if (in_y[static_cast<std::size_t>(x)])
            continue;
        for (int i = 1; i <= comp.d0; ++i)
            gens.push_back(Polynomial<K>::term(one, Monomial::variable(Variable{i, x})));
    }
    for (const auto& block : comp.blocks)
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                for (int i = 1; i <= comp.d0; ++i)
                    for (int j = i + 1; j <= comp.d0; ++j)
                        gens.push_back(make_f<K>(i, j, block[a], block[b], one));
    return gens;
}

/// Generators of I_G itself: all minors for all edges and all row pairs.
template <class K>
std::vector<Polynomial<K>> edge_ideal_generators(const OrderedGraph& g, int d0, const K& one) {
    if (d0 < 1)
        throw input_error("d0 must be >= 1, got " + std::to_string(d0));
    std::vector<Polynomial<K>> gens;
    for (const auto& [x, y] : g.edges())
        for (int i = 1; i <= d0; ++i)
            for (int j = i + 1; j <= d0; ++j)
                gens.push_back(make_f<K>(i, j, x, y, one));
    return gens;
}

} // namespace beikit

#endif
