#ifndef BEIKIT_GRAPH_HPP
#define BEIKIT_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "beikit/errors.hpp"

namespace beikit {

/// Simple undirected graph on vertices 1..n. The integer order of the
/// vertex labels is the total order every path and labeling notion below
/// refers to. Immutable after construction.
class OrderedGraph {
  public:
    OrderedGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    bool has_edge(int x, int y) const;
    std::span<const int> neighbors(int v) const;

    /// Edges normalized to x < y, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists, 1-based
};

/// Connected components of the subgraph induced by y, sorted by minimum
/// vertex; vertices inside each component ascend.
std::vector<std::vector<int>> connected_components(const OrderedGraph& g,
                                                   std::span<const int> y);

/// A path x0,...,xr (r >= 1) of distinct vertices with consecutive edges is
/// admissible when
///   (i)   x0 < xr,
///   (ii)  every interior vertex is < x0 or > xr,
///   (iii) no proper subset of the interior vertices, in any order, forms a
///         path from x0 to xr in g.
/// `path` must at least be a walk in g; anything else is an input error.
bool is_admissible(const OrderedGraph& g, std::span<const int> path);

/// All admissible paths of g, ordered by (x0, xr, length, vertex sequence).
std::vector<std::vector<int>> enumerate_admissible_paths(const OrderedGraph& g);

/// kappa is antitone for the path when x_s < x_t implies kappa[s] >= kappa[t].
bool is_pi_antitone(std::span<const int> path, std::span<const int> kappa);

/// Antitone and additionally kappa[0] > kappa[r].
bool is_strictly_pi_antitone(std::span<const int> path, std::span<const int> kappa);

/// All strictly antitone labelings of the admissible path into {1..d0},
/// ordered lexicographically by value sequence. Empty for d0 == 1 (no strict
/// labeling into one label exists); d0 < 1 is an input error.
std::vector<std::vector<int>> enumerate_strict_antitone(std::span<const int> path, int d0);

} // namespace beikit

#endif
