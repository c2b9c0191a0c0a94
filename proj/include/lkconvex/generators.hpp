#ifndef LKCONVEX_GENERATORS_HPP
#define LKCONVEX_GENERATORS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "graph.hpp"

namespace lkconvex {

/// Seed for the random generators; equal seeds and parameters give equal graphs.
struct Seed {
    std::uint64_t value = 0;
};

/// Deterministic random source shared by every generator.
///
/// Draws come from std::mt19937_64, whose output sequence is fixed by the
/// standard; bounded integers and shuffles are done here rather than with
/// std:: distributions, whose algorithms vary between standard libraries.
class Rng {
public:
    explicit Rng(Seed seed) : engine_(mix(seed.value)) {}

    /// Independent child stream `index` of `seed`.
    static Rng split(Seed seed, std::uint64_t index) { return Rng(Seed{mix(seed.value) ^ mix(index + 0x632be59bd9b4e019ULL)}); }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0; rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

// ---------------- named graphs ----------------

/// Seven-vertex chordal graph of diameter 3 with extreme points {1, 7} that
/// needs two interval steps to capture all vertices from {1, 7}. Vertices are
/// 0..6 here, i.e. label - 1.
inline Graph two_step_graph() {
    static constexpr int labeled[][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                                         {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
    std::vector<Edge> pairs;
    for (auto [a, b] : labeled) pairs.emplace_back(a - 1, b - 1);
    return Graph::from_edge_list(7, pairs);
}

/// n-gem: induced path x_0..x_n on ids 0..n plus apex n+1 adjacent to all of it.
inline Graph gem(std::size_t n) {
    if (n < 3) throw InvalidArgument("gem needs n >= 3");
    std::vector<Edge> pairs;
    const auto apex = static_cast<vertex_t>(n + 1);
    for (vertex_t i = 0; i < n; ++i) pairs.emplace_back(i, i + 1);
    for (vertex_t i = 0; i <= n; ++i) pairs.emplace_back(i, apex);
    return Graph::from_edge_list(n + 2, pairs);
}

/// Path on n vertices.
inline Graph path(std::size_t n) {
    if (n < 1) throw InvalidArgument("path needs n >= 1");
    std::vector<Edge> pairs;
    for (vertex_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, pairs);
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    std::vector<Edge> pairs;
    for (vertex_t i = 0; i < n; ++i) pairs.emplace_back(i, static_cast<vertex_t>((i + 1) % n));
    return Graph::from_edge_list(n, pairs);
}

inline Graph complete(std::size_t n) {
    if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
    std::vector<Edge> pairs;
    for (vertex_t i = 0; i < n; ++i)
        for (vertex_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

/// K_{1,n-1} with center 0.
inline Graph star(std::size_t n) {
    if (n < 1) throw InvalidArgument("star needs n >= 1");
    std::vector<Edge> pairs;
    for (vertex_t i = 1; i < n; ++i) pairs.emplace_back(0, i);
    return Graph::from_edge_list(n, pairs);
}

// ---------------- random ensembles ----------------

namespace detail {

// Connected trivially perfect graph on ids[first, first+count): a universal
// root over a disjoint union of smaller connected trivially perfect graphs.
inline void build_trivially_perfect(Rng& rng, const std::vector<vertex_t>& ids, std::size_t first, std::size_t count,
                                    std::vector<Edge>& pairs) {
    if (count <= 1) return;
    const vertex_t root = ids[first];
    for (std::size_t i = first + 1; i < first + count; ++i) pairs.emplace_back(root, ids[i]);
    std::size_t at = first + 1;
    std::size_t left = count - 1;
    while (left > 0) {
        std::size_t part = 1 + static_cast<std::size_t>(rng.below(left));
        build_trivially_perfect(rng, ids, at, part, pairs);
        at += part;
        left -= part;
    }
}

inline std::vector<vertex_t> shuffled_ids(Rng& rng, std::size_t n) {
    std::vector<vertex_t> ids(n);
    std::iota(ids.begin(), ids.end(), vertex_t{0});
    rng.shuffle(ids);
    return ids;
}

} // namespace detail

/// Random connected chordal P_4-free graph on n vertices.
inline Graph random_trivially_perfect(std::size_t n, Seed seed) {
    if (n < 1) throw InvalidArgument("random_trivially_perfect needs n >= 1");
    Rng rng(seed);
    auto ids = detail::shuffled_ids(rng, n);
    std::vector<Edge> pairs;
    detail::build_trivially_perfect(rng, ids, 0, n, pairs);
    return Graph::from_edge_list(n, pairs);
}

struct ChordalSample {
    Graph graph;
    std::vector<vertex_t> elimination_order; // the construction's own perfect elimination ordering
};

/// Random connected chordal graph grown one simplicial vertex at a time.
///
/// Each new vertex attaches to a random existing vertex v and to a clique
/// inside N(v): every neighbor of v that is adjacent to all vertices picked so
/// far joins with probability `density`. density = 0 yields a random tree.
/// Reversing the insertion order gives a perfect elimination ordering.
inline ChordalSample random_connected_chordal_with_order(std::size_t n, double density, Seed seed) {
    if (n < 1) throw InvalidArgument("random_connected_chordal needs n >= 1");
    if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
    Rng rng(seed);
    std::vector<std::vector<vertex_t>> adj(n);
    std::vector<Edge> pairs;
    for (vertex_t fresh = 1; fresh < n; ++fresh) {
        auto anchor = static_cast<vertex_t>(rng.below(fresh));
        std::vector<vertex_t> clique{anchor};
        auto candidates = adj[anchor];
        rng.shuffle(candidates);
        for (vertex_t w : candidates) {
            bool fits = true;
            for (vertex_t c : clique)
                if (std::find(adj[w].begin(), adj[w].end(), c) == adj[w].end()) fits = false;
            if (fits && rng.chance(density)) clique.push_back(w);
        }
        for (vertex_t c : clique) {
            pairs.emplace_back(c, fresh);
            adj[c].push_back(fresh);
            adj[fresh].push_back(c);
        }
    }
    auto ids = detail::shuffled_ids(rng, n);
    for (auto& [a, b] : pairs) {
        a = ids[a];
        b = ids[b];
    }
    ChordalSample out{Graph::from_edge_list(n, pairs), {}};
    for (std::size_t i = n; i-- > 0;) out.elimination_order.push_back(ids[i]);
    return out;
}

inline Graph random_connected_chordal(std::size_t n, double density, Seed seed) {
    return random_connected_chordal_with_order(n, density, seed).graph;
}

/// Random connected graph: a random tree plus each other pair with probability p.
inline Graph random_connected_graph(std::size_t n, double p, Seed seed) {
    if (n < 1) throw InvalidArgument("random_connected_graph needs n >= 1");
    Rng rng(seed);
    std::vector<Edge> pairs;
    for (vertex_t v = 1; v < n; ++v) pairs.emplace_back(static_cast<vertex_t>(rng.below(v)), v);
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v)
            if (rng.chance(p)) pairs.emplace_back(u, v);
    auto ids = detail::shuffled_ids(rng, n);
    for (auto& [a, b] : pairs) {
        a = ids[a];
        b = ids[b];
    }
    return Graph::from_edge_list(n, pairs);
}

// ---------------- exhaustive enumeration ----------------

inline constexpr std::size_t max_exhaustive_order = 7;

/// Every connected labeled graph on n vertices: edge subsets over the pairs
/// (0,1), (0,2), ..., (n-2,n-1) taken as bitmasks in increasing order, keeping
/// the connected ones. Return false from the visitor to stop.
inline bool for_each_connected_graph(std::size_t n, const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > max_exhaustive_order)
        throw InvalidArgument("exhaustive enumeration supports 1 <= n <= " + std::to_string(max_exhaustive_order));
    std::vector<Edge> slots;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<Edge> pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // need at least n-1 edges to be connected
        if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
        pairs.clear();
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1u) pairs.push_back(slots[i]);
        Graph g = Graph::from_edge_list(n, pairs);
        if (is_connected(g) && !visit(g)) return false;
    }
    return true;
}

inline std::vector<Graph> all_connected_graphs(std::size_t n) {
    std::vector<Graph> out;
    for_each_connected_graph(n, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

} // namespace lkconvex

#endif // LKCONVEX_GENERATORS_HPP
