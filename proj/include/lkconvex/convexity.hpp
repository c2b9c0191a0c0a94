#ifndef LKCONVEX_CONVEXITY_HPP
#define LKCONVEX_CONVEXITY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "paths.hpp"

// When defined to 1, extreme_points() cross-checks the simplicial
// characterization against the definitional test (S \ {x} convex) and throws
// std::logic_error on disagreement. On by default in builds without NDEBUG.
#ifndef LKCONVEX_CHECK_EXTREMES
#ifdef NDEBUG
#define LKCONVEX_CHECK_EXTREMES 0
#else
#define LKCONVEX_CHECK_EXTREMES 1
#endif
#endif

namespace lkconvex {

inline constexpr std::size_t default_enumeration_cap = 16;

/// Bound on induced-path length (in edges) defining the l^k convexity.
struct ConvexityParams {
    std::size_t k = 3;

    explicit ConvexityParams(std::size_t k_) : k(k_) {
        if (k < 2) throw InvalidArgument("k must be at least 2 (got " + std::to_string(k) + ")");
    }

    /// No induced path has more than n-1 edges, so larger k changes nothing.
    std::size_t effective_k(std::size_t n) const { return std::min(k, std::max<std::size_t>(n, 2) - 1); }
    bool clamped(std::size_t n) const { return k > effective_k(n); }

    /// k = n-1 admits every induced path: the monophonic convexity.
    static ConvexityParams monophonic(std::size_t n) { return ConvexityParams(std::max<std::size_t>(n, 3) - 1); }
};

/// The interval iterates W = I^0, I^1, ..., I^j of a hull computation, where
/// I^j is the first fixed point (I^j = I^{j+1}).
struct HullTrace {
    std::vector<VertexSet> iterates;

    const VertexSet& fixed_point() const { return iterates.back(); }
    std::size_t steps() const { return iterates.size() - 1; }
};

/// Witness that a set S is not convex: u, v in S and `escaped` in I[u,v] \ S.
struct ConvexityViolation {
    vertex_t u = 0;
    vertex_t v = 0;
    vertex_t escaped = 0;
    friend bool operator==(const ConvexityViolation&, const ConvexityViolation&) = default;
};

class NotConvex : public Error {
public:
    explicit NotConvex(ConvexityViolation w)
        : Error("set is not convex: vertex " + std::to_string(w.escaped) + " lies on a short induced path between "
                + std::to_string(w.u) + " and " + std::to_string(w.v)),
          witness_(w) {}

    const ConvexityViolation& witness() const noexcept { return witness_; }

private:
    ConvexityViolation witness_;
};

/// The l^k convexity of one graph.
///
/// Pair intervals are computed on first use and cached for the lifetime of
/// the object, so a hull computation or an enumeration that re-queries the
/// same pairs pays for each pair once. The cache makes instances unsafe to
/// share across threads; create one per thread.
class LkConvexity {
public:
    LkConvexity(const Graph& g, ConvexityParams p)
        : g_(g), params_(p), k_(p.effective_k(g.order())), cache_(g.order() * g.order()) {}

    const Graph& graph() const noexcept { return g_; }
    const ConvexityParams& params() const noexcept { return params_; }
    std::size_t k() const noexcept { return k_; }

    /// I[u,v]: u, v and every vertex on an induced u-v path with at most k edges.
    const VertexSet& interval(vertex_t u, vertex_t v) const {
        g_.check_vertex(u);
        g_.check_vertex(v);
        if (u > v) std::swap(u, v);
        auto& slot = cache_[u * g_.order() + v];
        if (!slot) {
            VertexSet s(g_.order());
            s.insert(u);
            s.insert(v);
            if (u != v)
                for_each_induced_path_between(g_, u, v, k_, [&](const InducedPath& p) {
                    for (vertex_t x : p.vertices) s.insert(x);
                    return true;
                });
            slot = std::move(s);
        }
        return *slot;
    }

    /// I[W]: union of I[u,v] over pairs of W.
    VertexSet interval_of_set(const VertexSet& w) const {
        g_.check_set(w);
        if (w.empty()) throw InvalidArgument("interval of an empty set");
        return expand(w);
    }

    HullTrace hull(const VertexSet& s) const {
        g_.check_set(s);
        if (s.empty()) throw InvalidArgument("hull of an empty set");
        HullTrace trace;
        trace.iterates.push_back(s);
        while (true) {
            VertexSet next = expand(trace.iterates.back());
            if (next == trace.iterates.back()) break;
            trace.iterates.push_back(std::move(next));
        }
        return trace;
    }

    /// First pair (u < v, lexicographic) whose interval leaves `s`, if any.
    std::optional<ConvexityViolation> find_violation(const VertexSet& s) const {
        g_.check_set(s);
        for (auto iu = s.begin(); iu != s.end(); ++iu) {
            auto iv = iu;
            for (++iv; iv != s.end(); ++iv) {
                const VertexSet& in = interval(*iu, *iv);
                if (!in.is_subset_of(s)) return ConvexityViolation{*iu, *iv, (in - s).front()};
            }
        }
        return std::nullopt;
    }

    bool is_convex(const VertexSet& s) const { return !find_violation(s); }

    /// Ext(S) of a convex S, computed as the simplicial vertices of G[S].
    VertexSet extreme_points(const VertexSet& s) const {
        if (auto bad = find_violation(s)) throw NotConvex(*bad);
        VertexSet ext = simplicial_vertices_within(g_, s);
#if LKCONVEX_CHECK_EXTREMES
        if (ext != extreme_points_by_definition(s))
            throw std::logic_error("simplicial and definitional extreme points disagree on {" + format_set(s) + "}");
#endif
        return ext;
    }

    /// Ext(S) straight from the definition: x with S \ {x} convex.
    VertexSet extreme_points_by_definition(const VertexSet& s) const {
        if (auto bad = find_violation(s)) throw NotConvex(*bad);
        VertexSet ext(g_.order());
        for (vertex_t x : s) {
            VertexSet rest = s;
            rest.erase(x);
            if (is_convex(rest)) ext.insert(x);
        }
        return ext;
    }

    /// Visits every convex set by increasing size, lexicographically within a
    /// size. Return false from the visitor to stop.
    bool for_each_convex_set(const std::function<bool(const VertexSet&)>& visit,
                             std::size_t max_n = default_enumeration_cap) const {
        const std::size_t n = g_.order();
        if (n > max_n) throw CapExceeded(n, max_n);
        std::vector<vertex_t> pick;
        for (std::size_t size = 0; size <= n; ++size) {
            pick.resize(size);
            for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<vertex_t>(i);
            while (true) {
                VertexSet s(n, std::span<const vertex_t>(pick));
                if (is_convex(s) && !visit(s)) return false;
                // next combination in lexicographic order
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return true;
    }

    std::vector<VertexSet> enumerate_convex_sets(std::size_t max_n = default_enumeration_cap) const {
        std::vector<VertexSet> out;
        for_each_convex_set(
            [&](const VertexSet& s) {
                out.push_back(s);
                return true;
            },
            max_n);
        return out;
    }

private:
    VertexSet expand(const VertexSet& w) const {
        VertexSet out = w;
        for (auto iu = w.begin(); iu != w.end(); ++iu) {
            auto iv = iu;
            for (++iv; iv != w.end(); ++iv) out |= interval(*iu, *iv);
        }
        return out;
    }

    const Graph& g_;
    ConvexityParams params_;
    std::size_t k_;
    mutable std::vector<std::optional<VertexSet>> cache_;
};

inline VertexSet interval(const Graph& g, ConvexityParams p, vertex_t u, vertex_t v) {
    return LkConvexity(g, p).interval(u, v);
}

inline VertexSet interval_of_set(const Graph& g, ConvexityParams p, const VertexSet& w) {
    return LkConvexity(g, p).interval_of_set(w);
}

inline HullTrace hull(const Graph& g, ConvexityParams p, const VertexSet& s) { return LkConvexity(g, p).hull(s); }

inline bool is_convex(const Graph& g, ConvexityParams p, const VertexSet& s) { return LkConvexity(g, p).is_convex(s); }

inline VertexSet extreme_points(const Graph& g, ConvexityParams p, const VertexSet& s) {
    return LkConvexity(g, p).extreme_points(s);
}

inline std::vector<VertexSet> enumerate_convex_sets(const Graph& g, ConvexityParams p,
                                                    std::size_t max_n = default_enumeration_cap) {
    return LkConvexity(g, p).enumerate_convex_sets(max_n);
}

} // namespace lkconvex

#endif // LKCONVEX_CONVEXITY_HPP
