#include "beikit/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace beikit {

namespace {

std::string edge_str(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

OrderedGraph::OrderedGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0)
        throw input_error("vertex count must be >= 0, got " + std::to_string(n));
    for (auto& [x, y] : edges) {
        if (x < 1 || x > n || y < 1 || y > n)
            throw input_error("edge endpoint out of range 1.." + std::to_string(n) + ": " +
                              edge_str(x, y));
        if (x == y)
            throw input_error("self-loop rejected: " + edge_str(x, y));
        if (x > y)
            std::swap(x, y);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw input_error("duplicate edge: " + edge_str(edges[i].first, edges[i].second));
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& [x, y] : edges_) {
        adj_[static_cast<std::size_t>(x)].push_back(y);
        adj_[static_cast<std::size_t>(y)].push_back(x);
    }
    for (auto& nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
}

bool OrderedGraph::has_edge(int x, int y) const {
    if (x < 1 || x > n_ || y < 1 || y > n_)
        return false;
    const auto& nbrs = adj_[static_cast<std::size_t>(x)];
    return std::binary_search(nbrs.begin(), nbrs.end(), y);
}

std::span<const int> OrderedGraph::neighbors(int v) const {
    if (v < 1 || v > n_)
        throw input_error("vertex out of range: " + std::to_string(v));
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::vector<int>> connected_components(const OrderedGraph& g,
                                                   std::span<const int> y) {
    std::vector<char> in_y(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : y) {
        if (v < 1 || v > g.vertex_count())
            throw input_error("vertex out of range in subset: " + std::to_string(v));
        in_y[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> seen(in_y.size(), 0);
    std::vector<std::vector<int>> comps;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!in_y[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)])
            continue;
        std::vector<int> comp;
        std::vector<int> stack{v};
        seen[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (in_y[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // scanning v ascending already yields components sorted by minimum vertex
    return comps;
}

namespace {

// Condition (iii): is some proper subset of the interior vertices, in some
// order, a path from x0 to xr? Exact brute force over subsets and orderings.
bool has_shortcut(const OrderedGraph& g, std::span<const int> path) {
    int x0 = path.front();
    int xr = path.back();
    std::vector<int> interior(path.begin() + 1, path.end() - 1);
    int k = static_cast<int>(interior.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (mask == (1u << k) - 1)
            continue; // proper subsets only
        std::vector<int> sel;
        for (int b = 0; b < k; ++b)
            if (mask & (1u << b))
                sel.push_back(interior[static_cast<std::size_t>(b)]);
        std::sort(sel.begin(), sel.end());
        do {
            int prev = x0;
            bool ok = true;
            for (int v : sel) {
                if (!g.has_edge(prev, v)) {
                    ok = false;
                    break;
                }
                prev = v;
            }
            if (ok && g.has_edge(prev, xr))
                return true;
        } while (std::next_permutation(sel.begin(), sel.end()));
    }
    return false;
}

} // namespace

bool is_admissible(const OrderedGraph& g, std::span<const int> path) {
    if (path.empty())
        throw input_error("empty path");
    for (int v : path)
        if (v < 1 || v > g.vertex_count())
            throw input_error("vertex out of range in path: " + std::to_string(v));
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw input_error("not a walk: missing edge " + edge_str(path[i], path[i + 1]));
    if (path.size() < 2)
        return false;
    // (i) injectivity and x0 < xr
    std::vector<int> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    int x0 = path.front();
    int xr = path.back();
    if (x0 >= xr)
        return false;
    // (ii) interior vertices lie below x0 or above xr
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (path[i] > x0 && path[i] < xr)
            return false;
    // (iii) no shortcut through a proper subset of the interior
    return !has_shortcut(g, path);
}

namespace {

struct PathSearch {
    const OrderedGraph& g;
    int x0;
    std::vector<char> visited;
    std::vector<int> walk;
    std::vector<std::vector<int>>& out;

    // min_up: minimum interior vertex above x0 seen so far (INT_MAX if none).
    // Any eventual endpoint must lie strictly between x0 and min_up.
    void dfs(int min_up) {
        int last = walk.back();
        if (walk.size() >= 2 && last > x0 && last < min_up && !has_shortcut(g, walk))
            out.push_back(walk);
        int next_min_up = min_up;
        if (walk.size() >= 2 && last > x0)
            next_min_up = std::min(next_min_up, last);
        if (next_min_up <= x0 + 1)
            return; // no admissible endpoint can follow
        for (int v : g.neighbors(last)) {
            if (visited[static_cast<std::size_t>(v)])
                continue;
            visited[static_cast<std::size_t>(v)] = 1;
            walk.push_back(v);
            dfs(next_min_up);
            walk.pop_back();
            visited[static_cast<std::size_t>(v)] = 0;
        }
    }
};

} // namespace

std::vector<std::vector<int>> enumerate_admissible_paths(const OrderedGraph& g) {
    std::vector<std::vector<int>> out;
    for (int x0 = 1; x0 <= g.vertex_count(); ++x0) {
        PathSearch search{g, x0,
                          std::vector<char>(static_cast<std::size_t>(g.vertex_count()) + 1, 0),
                          {}, out};
        search.visited[static_cast<std::size_t>(x0)] = 1;
        search.walk.push_back(x0);
        search.dfs(std::numeric_limits<int>::max());
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.front() != b.front())
            return a.front() < b.front();
        if (a.back() != b.back())
            return a.back() < b.back();
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_pi_antitone(std::span<const int> path, std::span<const int> kappa) {
    if (path.size() != kappa.size())
        throw input_error("labeling length does not match path length");
    for (std::size_t s = 0; s < path.size(); ++s)
        for (std::size_t t = 0; t < path.size(); ++t)
            if (path[s] < path[t] && kappa[s] < kappa[t])
                return false;
    return true;
}

bool is_strictly_pi_antitone(std::span<const int> path, std::span<const int> kappa) {
    if (kappa.empty())
        throw input_error("empty labeling");
    return is_pi_antitone(path, kappa) && kappa.front() > kappa.back();
}

namespace {

// Assign labels along positions sorted by ascending vertex; antitone maps are
// exactly the weakly decreasing assignments.
void assign_labels(std::span<const int> path, const std::vector<int>& by_vertex,
                   std::size_t idx, int max_label, std::vector<int>& kappa,
                   std::vector<std::vector<int>>& out) {
    if (idx == by_vertex.size()) {
        if (kappa.front() > kappa.back())
            out.push_back(kappa);
        return;
    }
    std::size_t pos = static_cast<std::size_t>(by_vertex[idx]);
    for (int label = max_label; label >= 1; --label) {
        kappa[pos] = label;
        assign_labels(path, by_vertex, idx + 1, label, kappa, out);
    }
    kappa[pos] = 0;
}

} // namespace

std::vector<std::vector<int>> enumerate_strict_antitone(std::span<const int> path, int d0) {
    if (d0 < 1)
        throw input_error("label bound d0 must be >= 1, got " + std::to_string(d0));
    if (path.size() < 2)
        throw input_error("path must have at least two vertices");
    std::vector<int> by_vertex(path.size());
    for (std::size_t i = 0; i < path.size(); ++i)
        by_vertex[i] = static_cast<int>(i);
    std::sort(by_vertex.begin(), by_vertex.end(),
              [&](int a, int b) { return path[static_cast<std::size_t>(a)] <
                                         path[static_cast<std::size_t>(b)]; });
    for (std::size_t i = 1; i < by_vertex.size(); ++i)
        if (path[static_cast<std::size_t>(by_vertex[i - 1])] ==
            path[static_cast<std::size_t>(by_vertex[i])])
            throw input_error("path vertices must be distinct");
    std::vector<std::vector<int>> out;
    std::vector<int> kappa(path.size(), 0);
    assign_labels(path, by_vertex, 0, d0, kappa, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace beikit
