#ifndef LKCONVEX_RECOGNIZERS_HPP
#define LKCONVEX_RECOGNIZERS_HPP

#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "chordal.hpp"
#include "convexity.hpp"
#include "graph.hpp"
#include "paths.hpp"

namespace lkconvex {

/// An induced n-gem: the induced path base = x_0..x_n (n >= 3 edges) and an
/// apex u_n adjacent to every base vertex.
struct GemWitness {
    InducedPath base;
    vertex_t apex = 0;

    std::size_t n() const noexcept { return base.length(); }
    vertex_t first() const { return base.front(); }
    vertex_t last() const { return base.back(); }

    friend bool operator==(const GemWitness&, const GemWitness&) = default;
};

inline bool is_valid_gem(const Graph& g, const GemWitness& w) {
    if (w.n() < 3 || w.apex >= g.order() || w.base.contains(w.apex)) return false;
    if (!is_induced_path(g, w.base)) return false;
    for (vertex_t x : w.base.vertices)
        if (!g.adjacent(x, w.apex)) return false;
    return true;
}

/// An induced P_4 certificate (kept distinct from other path payloads).
struct P4Witness {
    InducedPath path;
    friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

using Certificate = std::variant<std::monostate, HoleWitness, P4Witness, FarPair, GemWitness>;

inline std::string_view certificate_kind(const Certificate& c) {
    switch (c.index()) {
    case 1: return "hole";
    case 2: return "p4";
    case 3: return "far_pair";
    case 4: return "unsolved_gem";
    default: return "none";
    }
}

struct SolvedGem {
    GemWitness gem;
    InducedPath solving_path;
};

struct RecognitionVerdict {
    bool accepted = false;
    Certificate certificate;
    std::vector<SolvedGem> solved_gems; // l^3 acceptance only, when recorded

    std::string_view kind() const { return certificate_kind(certificate); }
};

namespace detail {

class GemSearch {
public:
    GemSearch(const Graph& g, std::size_t min_n, const std::function<bool(const GemWitness&)>& visit)
        : g_(g), min_n_(min_n), visit_(visit) {}

    bool run() {
        for (vertex_t s = 0; s < g_.order(); ++s) {
            path_.vertices.assign(1, s);
            if (!grow(VertexSet(g_.order()), g_.neighbors(s))) return false;
        }
        return true;
    }

private:
    // `common` is the intersection of the neighborhoods of all path vertices:
    // the candidate apexes. Once it is empty no extension can become a gem.
    bool grow(const VertexSet& blocked, const VertexSet& common) {
        if (path_.length() >= min_n_ && path_.front() < path_.back()) {
            GemWitness w{path_, 0};
            for (vertex_t apex : common) {
                w.apex = apex;
                if (!visit_(w)) return false;
            }
        }
        vertex_t last = path_.vertices.back();
        VertexSet next_blocked = blocked | g_.closed_neighborhood(last);
        for (vertex_t x : g_.neighbor_list(last)) {
            if (blocked.contains(x)) continue;
            VertexSet next_common = common & g_.neighbors(x);
            if (next_common.empty()) continue;
            path_.vertices.push_back(x);
            bool go_on = grow(next_blocked, next_common);
            path_.vertices.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    const Graph& g_;
    std::size_t min_n_;
    const std::function<bool(const GemWitness&)>& visit_;
    InducedPath path_;
};

} // namespace detail

/// Streams every induced n-gem with n >= min_n. Each gem is reported once,
/// with its base oriented so that x_0 < x_n; order is by x_0, then DFS order
/// of the base (ascending ids), then apex. Return false from the visitor to stop.
inline bool for_each_gem(const Graph& g, std::size_t min_n, const std::function<bool(const GemWitness&)>& visit) {
    if (min_n < 3) throw InvalidArgument("gems have at least 3 base edges (min_n >= 3)");
    return detail::GemSearch(g, min_n, visit).run();
}

inline std::vector<GemWitness> enumerate_gems(const Graph& g, std::size_t min_n) {
    std::vector<GemWitness> out;
    for_each_gem(g, min_n, [&](const GemWitness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

/// A gem is solved when the whole graph has an induced path of exactly three
/// edges from x_0 to x_n that avoids the apex. Returns the first such path.
inline std::optional<InducedPath> solving_path(const Graph& g, const GemWitness& w) {
    if (!is_valid_gem(g, w)) throw InvalidArgument("not an induced gem of this graph");
    std::optional<InducedPath> found;
    for_each_induced_path_between(g, w.first(), w.last(), 3, [&](const InducedPath& p) {
        if (p.length() == 3 && !p.contains(w.apex)) {
            found = p;
            return false;
        }
        return true;
    });
    return found;
}

inline bool is_gem_solved(const Graph& g, const GemWitness& w) { return solving_path(g, w).has_value(); }

inline bool is_valid_solving_path(const Graph& g, const GemWitness& w, const InducedPath& p) {
    return p.length() == 3 && p.front() == w.first() && p.back() == w.last() && !p.contains(w.apex)
           && is_induced_path(g, p);
}

/// Chordal and of diameter at most k. Every l^k convex geometry passes; the
/// converse fails in general (it is only a filter).
inline RecognitionVerdict necessary_conditions(const Graph& g, ConvexityParams p) {
    require_connected(g);
    RecognitionVerdict v;
    auto chordal = is_chordal(g);
    if (!chordal.chordal) {
        v.certificate = *chordal.hole;
        return v;
    }
    FarPair far = diametral_pair(g);
    if (far.distance > p.k) {
        v.certificate = far;
        return v;
    }
    v.accepted = true;
    return v;
}

/// l^2 convex geometries are exactly the chordal P_4-free graphs.
inline RecognitionVerdict recognize_l2(const Graph& g) {
    require_connected(g);
    RecognitionVerdict v;
    auto chordal = is_chordal(g);
    if (!chordal.chordal) {
        v.certificate = *chordal.hole;
        return v;
    }
    if (auto p4 = contains_induced_path(g, 4)) {
        v.certificate = P4Witness{*p4};
        return v;
    }
    v.accepted = true;
    return v;
}

struct L3Options {
    bool record_solved_gems = true;
};

/// l^3 convex geometries: chordal, diameter at most 3, and every induced
/// n-gem with n >= 4 solved. Conditions are checked in that order with early
/// exit; gems stream lazily and the first unsolved one is the certificate.
/// Worst case exponential: the number of induced gems is not polynomially bounded.
inline RecognitionVerdict recognize_l3(const Graph& g, L3Options opt = {}) {
    RecognitionVerdict v = necessary_conditions(g, ConvexityParams(3));
    if (!v.accepted) return v;
    for_each_gem(g, 4, [&](const GemWitness& w) {
        auto path = solving_path(g, w);
        if (!path) {
            v.accepted = false;
            v.certificate = w;
            v.solved_gems.clear();
            return false;
        }
        if (opt.record_solved_gems) v.solved_gems.push_back({w, *path});
        return true;
    });
    return v;
}

/// Re-verifies a verdict's certificate against the graph. `k` is the distance
/// bound the verdict was produced for (used by far_pair certificates).
inline bool validate_certificate(const Graph& g, const RecognitionVerdict& v, std::size_t k) {
    for (const auto& s : v.solved_gems)
        if (!is_valid_gem(g, s.gem) || s.gem.n() < 4 || !is_valid_solving_path(g, s.gem, s.solving_path)) return false;
    if (v.accepted) return std::holds_alternative<std::monostate>(v.certificate);
    return std::visit(
        [&](const auto& c) -> bool {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return false;
            } else if constexpr (std::is_same_v<T, HoleWitness>) {
                return is_hole(g, c.cycle);
            } else if constexpr (std::is_same_v<T, P4Witness>) {
                return c.path.vertices.size() == 4 && is_induced_path(g, c.path);
            } else if constexpr (std::is_same_v<T, FarPair>) {
                auto d = distance(g, c.u, c.v);
                return d && *d == c.distance && c.distance > k;
            } else {
                return is_valid_gem(g, c) && c.n() >= 4 && !is_gem_solved(g, c);
            }
        },
        v.certificate);
}

} // namespace lkconvex

#endif // LKCONVEX_RECOGNIZERS_HPP
