#ifndef LKCONVEX_PATHS_HPP
#define LKCONVEX_PATHS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace lkconvex {

/// Vertex sequence v_0..v_p; an induced path when consecutive vertices are
/// adjacent and no other pair is.
struct InducedPath {
    std::vector<vertex_t> vertices;

    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    vertex_t front() const { return vertices.front(); }
    vertex_t back() const { return vertices.back(); }

    bool contains(vertex_t v) const {
        for (vertex_t x : vertices)
            if (x == v) return true;
        return false;
    }

    friend auto operator<=>(const InducedPath&, const InducedPath&) = default;
};

inline bool is_induced_path(const Graph& g, const std::vector<vertex_t>& seq) {
    if (seq.empty()) return false;
    VertexSet seen(g.order());
    for (vertex_t v : seq) {
        if (v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
    return true;
}

inline bool is_induced_path(const Graph& g, const InducedPath& p) { return is_induced_path(g, p.vertices); }

/// Return false from the visitor to stop the enumeration early.
using PathVisitor = std::function<bool(const InducedPath&)>;

namespace detail {

// Depth-first growth of induced paths from a fixed start. `blocked` holds the
// closed neighborhoods of every path vertex except the last, so a neighbor w
// of the last vertex extends the path exactly when w is not blocked.
class InducedPathSearch {
public:
    InducedPathSearch(const Graph& g, std::size_t max_len) : g_(g), max_len_(max_len) {}

    // Visits all induced paths from `start` to `target`, lexicographically.
    bool between(vertex_t start, vertex_t target, const PathVisitor& visit) {
        target_ = target;
        dist_to_target_ = bfs_distances(g_, target);
        path_.vertices.assign(1, start);
        return grow_to_target(VertexSet(g_.order()), visit);
    }

    // Visits every induced path from `start` with exactly `edges` edges.
    bool of_length(vertex_t start, std::size_t edges, const PathVisitor& visit) {
        path_.vertices.assign(1, start);
        return grow_to_length(edges, VertexSet(g_.order()), visit);
    }

private:
    bool grow_to_target(const VertexSet& blocked, const PathVisitor& visit) {
        vertex_t last = path_.vertices.back();
        std::size_t used = path_.length();
        if (used >= max_len_) return true;
        // target must not be adjacent to any vertex but the last
        if (blocked.contains(target_)) return true;
        VertexSet next_blocked = blocked | g_.closed_neighborhood(last);
        for (vertex_t w : g_.neighbor_list(last)) {
            if (blocked.contains(w)) continue;
            if (w == target_) {
                path_.vertices.push_back(w);
                bool go_on = visit(path_);
                path_.vertices.pop_back();
                if (!go_on) return false;
                continue;
            }
            auto d = dist_to_target_[w];
            if (!d || used + 1 + *d > max_len_) continue;
            if (next_blocked.contains(target_)) continue;
            path_.vertices.push_back(w);
            bool go_on = grow_to_target(next_blocked, visit);
            path_.vertices.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    bool grow_to_length(std::size_t edges, const VertexSet& blocked, const PathVisitor& visit) {
        if (path_.length() == edges) return visit(path_);
        vertex_t last = path_.vertices.back();
        VertexSet next_blocked = blocked | g_.closed_neighborhood(last);
        for (vertex_t w : g_.neighbor_list(last)) {
            if (blocked.contains(w)) continue;
            path_.vertices.push_back(w);
            bool go_on = grow_to_length(edges, next_blocked, visit);
            path_.vertices.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    const Graph& g_;
    std::size_t max_len_;
    vertex_t target_ = 0;
    std::vector<std::optional<std::size_t>> dist_to_target_;
    InducedPath path_;
};

} // namespace detail

/// Streams every induced u-v path with at most `max_len` edges, each once, in
/// lexicographic order of vertex sequences. Returns false if the visitor stopped it.
inline bool for_each_induced_path_between(const Graph& g, vertex_t u, vertex_t v, std::size_t max_len,
                                          const PathVisitor& visit) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InvalidArgument("induced paths need distinct endpoints");
    if (max_len < 1) throw InvalidArgument("max_len must be at least 1");
    detail::InducedPathSearch search(g, max_len);
    return search.between(u, v, visit);
}

inline std::vector<InducedPath> induced_paths_between(const Graph& g, vertex_t u, vertex_t v, std::size_t max_len) {
    std::vector<InducedPath> out;
    for_each_induced_path_between(g, u, v, max_len, [&](const InducedPath& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

/// Streams every induced path with exactly `edges` edges, starting from each
/// vertex in ascending order (so each path appears once per orientation).
inline bool for_each_induced_path_of_length(const Graph& g, std::size_t edges, const PathVisitor& visit) {
    detail::InducedPathSearch search(g, edges);
    for (vertex_t s = 0; s < g.order(); ++s)
        if (!search.of_length(s, edges, visit)) return false;
    return true;
}

/// Some induced path on `m` vertices, or nullopt if the graph is P_m-free.
inline std::optional<InducedPath> contains_induced_path(const Graph& g, std::size_t m) {
    if (m < 2) throw InvalidArgument("induced path search needs m >= 2");
    std::optional<InducedPath> found;
    for_each_induced_path_of_length(g, m - 1, [&](const InducedPath& p) {
        found = p;
        return false;
    });
    return found;
}

} // namespace lkconvex

#endif // LKCONVEX_PATHS_HPP
