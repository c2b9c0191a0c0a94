#ifndef LKCONVEX_CHORDAL_HPP
#define LKCONVEX_CHORDAL_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace lkconvex {

/// Induced cycle on at least four vertices, listed in cyclic order.
struct HoleWitness {
    std::vector<vertex_t> cycle;
    friend bool operator==(const HoleWitness&, const HoleWitness&) = default;
};

struct ChordalityResult {
    bool chordal = false;
    std::vector<vertex_t> elimination_order; // perfect elimination ordering when chordal
    std::optional<HoleWitness> hole;         // set when not chordal
};

inline bool is_hole(const Graph& g, const std::vector<vertex_t>& cycle) {
    const std::size_t len = cycle.size();
    if (len < 4) return false;
    VertexSet seen(g.order());
    for (vertex_t v : cycle) {
        if (v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

/// Lexicographic breadth-first search visit order.
///
/// Among unvisited vertices the one with the lexicographically largest label
/// goes next; ties go to the smallest vertex id.
inline std::vector<vertex_t> lex_bfs(const Graph& g) {
    const std::size_t n = g.order();
    // Labels are sequences of decreasing visit stamps, so comparing them as
    // vectors is the lexicographic label order.
    std::vector<std::vector<std::size_t>> label(n);
    std::vector<bool> visited(n, false);
    std::vector<vertex_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::optional<vertex_t> pick;
        for (vertex_t v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (!pick || label[v] > label[*pick]) pick = v;
        }
        visited[*pick] = true;
        order.push_back(*pick);
        for (vertex_t w : g.neighbor_list(*pick))
            if (!visited[w]) label[w].push_back(n - step);
    }
    return order;
}

/// Every vertex's neighbors later in `order` form a clique.
inline bool is_perfect_elimination_ordering(const Graph& g, const std::vector<vertex_t>& order) {
    if (order.size() != g.order()) return false;
    VertexSet later = g.vertices();
    VertexSet seen(g.order());
    for (vertex_t v : order) {
        if (v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (vertex_t v : order) {
        later.erase(v);
        if (!is_clique(g, g.neighbors(v) & later)) return false;
    }
    return true;
}

namespace detail {

// Shortest a-b path through vertices outside N[center] (a and b excepted).
// Closing it through `center` gives an induced cycle of length >= 4 when
// a and b are non-adjacent neighbors of `center`.
inline std::optional<HoleWitness> hole_through(const Graph& g, vertex_t center, vertex_t a, vertex_t b) {
    VertexSet banned = g.closed_neighborhood(center);
    banned.erase(a);
    banned.erase(b);
    std::vector<std::optional<vertex_t>> parent(g.order());
    VertexSet reached(g.order());
    reached.insert(a);
    std::deque<vertex_t> queue{a};
    while (!queue.empty() && !reached.contains(b)) {
        vertex_t x = queue.front();
        queue.pop_front();
        for (vertex_t y : g.neighbor_list(x)) {
            if (reached.contains(y) || banned.contains(y)) continue;
            // a and b may only appear as path endpoints
            if (y == a) continue;
            reached.insert(y);
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if (!reached.contains(b)) return std::nullopt;
    HoleWitness hole;
    hole.cycle.push_back(center);
    std::vector<vertex_t> back;
    for (vertex_t x = b;; x = *parent[x]) {
        back.push_back(x);
        if (x == a) break;
    }
    hole.cycle.insert(hole.cycle.end(), back.rbegin(), back.rend());
    return hole;
}

} // namespace detail

/// Finds an induced cycle of length >= 4, scanning centers in ascending order.
inline std::optional<HoleWitness> find_hole(const Graph& g) {
    for (vertex_t c = 0; c < g.order(); ++c) {
        auto nb = g.neighbor_list(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                if (auto hole = detail::hole_through(g, c, nb[i], nb[j])) return hole;
            }
    }
    return std::nullopt;
}

/// Chordality test by LexBFS; the reverse visit order is verified as a
/// perfect elimination ordering, and a hole is extracted on failure.
inline ChordalityResult is_chordal(const Graph& g) {
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());

    // Position-based check: for each v, later neighbors minus the earliest one
    // must be adjacent to that earliest one.
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (vertex_t v : order) {
        std::optional<vertex_t> parent;
        for (vertex_t w : g.neighbor_list(v))
            if (pos[w] > pos[v] && (!parent || pos[w] < pos[*parent])) parent = w;
        if (!parent) continue;
        for (vertex_t w : g.neighbor_list(v)) {
            if (w == *parent || pos[w] < pos[v] || g.adjacent(w, *parent)) continue;
            ChordalityResult r;
            r.hole = detail::hole_through(g, v, *parent, w);
            if (!r.hole) r.hole = find_hole(g);
            return r;
        }
    }
    return {true, std::move(order), std::nullopt};
}

} // namespace lkconvex

#endif // LKCONVEX_CHORDAL_HPP
