#ifndef LKCONVEX_GRAPH_HPP
#define LKCONVEX_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace lkconvex {

using Edge = std::pair<vertex_t, vertex_t>;

/// Simple undirected graph on the vertex ids 0..n-1.
///
/// Immutable once built. Adjacency is held twice: as bitset rows for O(1)
/// membership and set algebra, and as sorted neighbor lists for ordered scans.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from unordered pairs; duplicates collapse, loops and
    /// out-of-range ids throw InvalidGraph naming the pair.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs) {
        if (n == 0) throw InvalidGraph("graph must have at least one vertex");
        Graph g;
        g.rows_.assign(n, VertexSet(n));
        for (auto [u, v] : pairs) {
            if (u >= n || v >= n)
                throw InvalidGraph("edge (" + std::to_string(u) + ", " + std::to_string(v)
                                   + ") references a vertex outside 0.." + std::to_string(n - 1));
            if (u == v) throw InvalidGraph("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is a self-loop");
            g.rows_[u].insert(v);
            g.rows_[v].insert(u);
        }
        g.lists_.resize(n);
        for (vertex_t v = 0; v < n; ++v) {
            g.lists_[v] = g.rows_[v].to_vector();
            g.m_ += g.lists_[v].size();
        }
        g.m_ /= 2;
        return g;
    }

    static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> pairs) {
        return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
    }

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t size() const noexcept { return m_; }

    bool adjacent(vertex_t u, vertex_t v) const noexcept { return rows_[u].contains(v); }

    const VertexSet& neighbors(vertex_t v) const { return rows_[v]; }
    std::span<const vertex_t> neighbor_list(vertex_t v) const { return lists_[v]; }
    std::size_t degree(vertex_t v) const { return lists_[v].size(); }

    VertexSet closed_neighborhood(vertex_t v) const {
        VertexSet s = rows_[v];
        s.insert(v);
        return s;
    }

    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    /// Edges (u, v) with u < v in ascending order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (vertex_t u = 0; u < order(); ++u)
            for (vertex_t v : lists_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(vertex_t v) const {
        if (v >= order())
            throw InvalidVertex("vertex " + std::to_string(v) + " is not in a graph on " + std::to_string(order())
                                + " vertices");
    }

    void check_set(const VertexSet& s) const {
        if (s.universe() != order())
            throw InvalidArgument("vertex set universe " + std::to_string(s.universe()) + " does not match graph order "
                                  + std::to_string(order()));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    std::vector<VertexSet> rows_;
    std::vector<std::vector<vertex_t>> lists_;
    std::size_t m_ = 0;
};

inline Graph from_edge_list(std::size_t n, std::span<const Edge> pairs) { return Graph::from_edge_list(n, pairs); }

/// BFS distances from `source`; unreachable vertices hold nullopt.
inline std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, vertex_t source) {
    g.check_vertex(source);
    std::vector<std::optional<std::size_t>> dist(g.order());
    std::deque<vertex_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        vertex_t x = queue.front();
        queue.pop_front();
        for (vertex_t y : g.neighbor_list(x)) {
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

inline void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraph();
}

/// Edge count of a shortest u-v path, or nullopt when v is unreachable.
inline std::optional<std::size_t> distance(const Graph& g, vertex_t u, vertex_t v) {
    g.check_vertex(v);
    return bfs_distances(g, u)[v];
}

struct FarPair {
    vertex_t u = 0;
    vertex_t v = 0;
    std::size_t distance = 0;
    friend bool operator==(const FarPair&, const FarPair&) = default;
};

/// A pair realizing the diameter, the first such (u < v) in lexicographic order.
inline FarPair diametral_pair(const Graph& g) {
    FarPair best;
    for (vertex_t u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (vertex_t v = u + 1; v < g.order(); ++v) {
            if (!dist[v]) throw DisconnectedGraph();
            if (*dist[v] > best.distance) best = {u, v, *dist[v]};
        }
    }
    return best;
}

inline std::size_t diameter(const Graph& g) { return diametral_pair(g).distance; }

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (vertex_t v : s) {
        VertexSet rest = s;
        rest.erase(v);
        if (!rest.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

/// Vertices whose closed neighborhood is a clique.
inline VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (vertex_t v = 0; v < g.order(); ++v)
        if (is_clique(g, g.neighbors(v))) out.insert(v);
    return out;
}

/// Simplicial vertices of G[s], reported in host ids.
inline VertexSet simplicial_vertices_within(const Graph& g, const VertexSet& s) {
    VertexSet out(g.order());
    for (vertex_t v : s)
        if (is_clique(g, g.neighbors(v) & s)) out.insert(v);
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<vertex_t> to_host;                  // subgraph id -> host id
    std::vector<std::optional<vertex_t>> from_host; // host id -> subgraph id
};

/// G[s] with vertices relabeled 0..|s|-1 in ascending host order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    g.check_set(s);
    if (s.empty()) throw InvalidArgument("induced subgraph of an empty vertex set");
    InducedSubgraph out;
    out.to_host = s.to_vector();
    out.from_host.assign(g.order(), std::nullopt);
    for (vertex_t i = 0; i < out.to_host.size(); ++i) out.from_host[out.to_host[i]] = i;
    std::vector<Edge> pairs;
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v)) pairs.emplace_back(*out.from_host[u], *out.from_host[v]);
    out.graph = Graph::from_edge_list(out.to_host.size(), pairs);
    return out;
}

/// The graph with vertex `x` deleted (a convenience over induced_subgraph).
inline InducedSubgraph delete_vertex(const Graph& g, vertex_t x) {
    g.check_vertex(x);
    VertexSet keep = g.vertices();
    keep.erase(x);
    return induced_subgraph(g, keep);
}

} // namespace lkconvex

#endif // LKCONVEX_GRAPH_HPP
