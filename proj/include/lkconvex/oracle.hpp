#ifndef LKCONVEX_ORACLE_HPP
#define LKCONVEX_ORACLE_HPP

#include <optional>
#include <vector>

#include "convexity.hpp"

namespace lkconvex {

/// A convex set that is not the hull of its extreme points.
struct MkmViolation {
    VertexSet set;
    VertexSet ext;
    VertexSet hull;
};

struct GeometryVerdict {
    bool is_geometry = true;
    std::optional<MkmViolation> certificate;  // first violation in enumeration order
    std::vector<MkmViolation> all_violations; // filled only when requested
};

/// Result of probing one convex set: Ext(S), hull(Ext(S)) and whether it gives back S.
struct MkmProbe {
    bool holds = false;
    VertexSet ext;
    std::optional<HullTrace> hull; // absent when Ext(S) is empty
    VertexSet hull_set;
};

inline MkmProbe mkm_check_set(const LkConvexity& cx, const VertexSet& s) {
    MkmProbe probe;
    probe.ext = cx.extreme_points(s);
    if (probe.ext.empty()) {
        // hull(empty) = empty
        probe.hull_set = VertexSet(s.universe());
    } else {
        probe.hull = cx.hull(probe.ext);
        probe.hull_set = probe.hull->fixed_point();
    }
    probe.holds = probe.hull_set == s;
    return probe;
}

inline MkmProbe mkm_check_set(const Graph& g, ConvexityParams p, const VertexSet& s) {
    return mkm_check_set(LkConvexity(g, p), s);
}

struct OracleOptions {
    std::size_t max_n = default_enumeration_cap;
    bool collect_all = false;
};

/// Exhaustive convex-geometry test: every convex set must equal the hull of
/// its extreme points. Exponential in the order of the graph, hence capped.
inline GeometryVerdict verify_geometry(const Graph& g, ConvexityParams p, OracleOptions opt = {}) {
    if (g.order() > opt.max_n) throw CapExceeded(g.order(), opt.max_n);
    require_connected(g);
    LkConvexity cx(g, p);
    GeometryVerdict verdict;
    cx.for_each_convex_set(
        [&](const VertexSet& s) {
            if (s.empty()) return true;
            MkmProbe probe = mkm_check_set(cx, s);
            if (probe.holds) return true;
            MkmViolation v{s, probe.ext, probe.hull_set};
            if (!verdict.certificate) verdict.certificate = v;
            verdict.is_geometry = false;
            if (!opt.collect_all) return false;
            verdict.all_violations.push_back(std::move(v));
            return true;
        },
        opt.max_n);
    return verdict;
}

/// Re-checks a violation certificate from scratch with a fresh engine.
inline bool validate_violation(const Graph& g, ConvexityParams p, const MkmViolation& v) {
    LkConvexity cx(g, p);
    if (!cx.is_convex(v.set)) return false;
    VertexSet ext = cx.extreme_points_by_definition(v.set);
    if (ext != v.ext) return false;
    VertexSet h = ext.empty() ? VertexSet(g.order()) : cx.hull(ext).fixed_point();
    return h == v.hull && h != v.set;
}

} // namespace lkconvex

#endif // LKCONVEX_ORACLE_HPP
