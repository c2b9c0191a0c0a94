// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <lkconvex/lkconvex.hpp>

using namespace lkconvex;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects failed checks; the first few are kept for the report line.
class Checker {
public:
    void expect(bool cond, const std::string& what) {
        ++checks_;
        if (cond) return;
        ++failures_;
        if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    Outcome done(const std::string& summary) const {
        std::ostringstream out;
        out << summary << ", " << checks_ << " checks";
        if (failures_) out << ", " << failures_ << " failed: " << notes_;
        return {failures_ == 0, out.str()};
    }

private:
    std::size_t checks_ = 0, failures_ = 0;
    std::string notes_;
};

VertexSet labels(std::initializer_list<int> ls) {
    VertexSet s(7);
    for (int l : ls) s.insert(static_cast<vertex_t>(l - 1));
    return s;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string describe(const CrosscheckReport& r) {
    std::ostringstream out;
    out << r.instances << " graphs (" << r.exhaustive_instances << " exhaustive, " << r.random_instances
        << " random), " << r.accepted << " accepted, " << r.mismatches.size() << " mismatches, "
        << r.invalid_certificates << " bad certificates; rejections:";
    for (const auto& [kind, count] : r.rejections_by_kind) out << " " << kind << "=" << count;
    return out.str();
}

// ---------------------------------------------------------------------------

Outcome ac1_example_values() {
    Checker c;
    const Graph g = two_step_graph();
    const ConvexityParams k3(3);
    LkConvexity cx(g, k3);
    c.expect(cx.extreme_points(g.vertices()) == labels({1, 7}), "Ext(V) != {1,7}");
    c.expect(cx.interval_of_set(labels({1, 7})) == labels({1, 2, 5, 7}), "I[{1,7}] != {1,2,5,7}");
    auto t = cx.hull(labels({1, 7}));
    c.expect(t.fixed_point() == g.vertices(), "hull({1,7}) != V");
    c.expect(t.steps() == 2, "hull({1,7}) steps != 2");

    std::set<VertexSet> expected{VertexSet(7), g.vertices()};
    for (std::uint32_t m = 1; m < 128; ++m) {
        auto s = VertexSet::from_mask(7, m);
        if (is_clique(g, s)) expected.insert(s);
    }
    const int mirror[8] = {0, 7, 5, 6, 4, 2, 3, 1}; // 1<->7, 2<->5, 3<->6
    for (auto listed : {labels({1, 2, 3, 4}), labels({1, 2, 3, 4, 5}), labels({1, 2, 3, 4, 5, 6}),
                        labels({2, 3, 4, 5}), labels({2, 3, 4, 5, 6})}) {
        expected.insert(listed);
        VertexSet image(7);
        for (vertex_t v : listed) image.insert(static_cast<vertex_t>(mirror[v + 1] - 1));
        expected.insert(image);
    }
    auto sets = cx.enumerate_convex_sets();
    std::set<VertexSet> got(sets.begin(), sets.end());
    c.expect(got.size() == sets.size(), "duplicate convex sets");
    c.expect(got == expected, "convex-set family differs from the listed one");
    return c.done(std::to_string(sets.size()) + " convex sets");
}

Outcome ac2_non_hereditary() {
    Checker c;
    const Graph g = two_step_graph();
    const ConvexityParams k3(3);
    c.expect(recognize_l3(g).accepted, "recognizer rejects the example");
    c.expect(verify_geometry(g, k3).is_geometry, "oracle rejects the example");
    for (int label : {2, 5}) {
        auto sub = delete_vertex(g, static_cast<vertex_t>(label - 1));
        const std::string tag = "minus " + std::to_string(label) + ": ";
        auto v = recognize_l3(sub.graph);
        c.expect(!v.accepted, tag + "recognizer accepts");
        c.expect(v.kind() == "far_pair" && validate_certificate(sub.graph, v, 3), tag + "no valid far_pair");
        c.expect(!verify_geometry(sub.graph, k3).is_geometry, tag + "oracle accepts");
        VertexSet ends(sub.graph.order(), {*sub.from_host[0], *sub.from_host[6]});
        auto t = hull(sub.graph, k3, ends);
        c.expect(t.fixed_point() == ends && t.steps() == 0, tag + "hull({1,7}) != {1,7}");
        c.expect(extreme_points(sub.graph, k3, sub.graph.vertices()) == ends, tag + "Ext(V) != {1,7}");
    }
    auto minus3 = delete_vertex(g, 2).graph;
    c.expect(recognize_l3(minus3).accepted && verify_geometry(minus3, k3).is_geometry, "minus 3 not accepted");
    return c.done("accept G, reject G-2 and G-5, accept G-3");
}

Outcome crosscheck(Characterization target, std::size_t random_count) {
    CrosscheckOptions opt;
    opt.target = target;
    opt.exhaustive_n = 6;
    opt.random_count = random_count;
    opt.random_max_size = 12;
    opt.seed = Seed{42};
    opt.jobs = worker_count();
    auto r = run_crosscheck(opt);
    Checker c;
    c.expect(r.exhaustive_instances == 1 + 1 + 4 + 38 + 728 + 26704, "wrong exhaustive count");
    c.expect(r.random_instances == random_count, "wrong random count");
    c.expect(r.mismatches.empty(), "recognizer and oracle disagree");
    c.expect(r.invalid_certificates == 0, "certificate failed re-validation");
    return c.done(describe(r));
}

Outcome ac6_operator_laws() {
    Checker c;
    Rng rng(Seed{6});
    std::size_t cases = 0;
    auto random_subset = [&](std::size_t n, double p) {
        VertexSet s(n);
        for (vertex_t v = 0; v < n; ++v)
            if (rng.chance(p)) s.insert(v);
        if (s.empty()) s.insert(static_cast<vertex_t>(rng.below(n)));
        return s;
    };
    for (int trial = 0; trial < 1200; ++trial) {
        const std::size_t n = 1 + rng.below(12);
        Graph g = trial % 2 ? random_connected_chordal(n, rng.unit(), Seed{rng.next()})
                            : random_connected_graph(n, rng.unit() * 0.5, Seed{rng.next()});
        LkConvexity cx(g, ConvexityParams(2 + rng.below(4)));
        auto s = random_subset(n, 0.3);
        auto t = s | random_subset(n, 0.2);
        auto hs = cx.hull(s).fixed_point();
        c.expect(s.is_subset_of(hs), "not extensive");
        c.expect(cx.hull(hs).steps() == 0, "not idempotent");
        c.expect(hs.is_subset_of(cx.hull(t).fixed_point()), "not monotone");

        // two convex sets (hulls) intersect in a convex set
        auto a = cx.hull(random_subset(n, 0.3)).fixed_point();
        auto b = cx.hull(random_subset(n, 0.3)).fixed_point();
        c.expect(cx.is_convex(a & b), "intersection of convex sets not convex");

        VertexSet q(n);
        for (vertex_t v : s)
            if (q.empty() || (g.neighbors(v) & q) == q) q.insert(v);
        c.expect(cx.is_convex(q), "clique not convex");

        c.expect(simplicial_vertices_within(g, hs) == cx.extreme_points_by_definition(hs),
                 "extreme points differ from simplicial vertices");
        ++cases;
    }
    return c.done(std::to_string(cases) + " random (graph, k, set) cases");
}

Outcome ac7_connected_convex_sets() {
    Checker c;
    Rng rng(Seed{7});
    std::size_t instances = 0, sets = 0;
    while (instances < 100) {
        auto g = random_connected_chordal(4 + rng.below(7), rng.unit(), Seed{rng.next()});
        if (!necessary_conditions(g, ConvexityParams(3)).accepted) continue;
        ++instances;
        for (const auto& s : enumerate_convex_sets(g, ConvexityParams(3))) {
            if (s.empty()) continue;
            auto sub = induced_subgraph(g, s);
            if (!is_connected(sub.graph)) continue;
            ++sets;
            c.expect(diameter(sub.graph) <= 3, "connected convex set of diameter > 3");
        }
    }
    return c.done(std::to_string(instances) + " instances, " + std::to_string(sets) + " connected convex sets");
}

Outcome ac8_gems() {
    Checker c;
    auto g4 = gem(4);
    auto v4 = recognize_l3(g4);
    c.expect(!v4.accepted && v4.kind() == "unsolved_gem" && validate_certificate(g4, v4, 3),
             "gem(4) not rejected with an unsolved gem");
    c.expect(recognize_l3(gem(3)).accepted, "gem(3) rejected");
    c.expect(recognize_l3(path(4)).accepted, "P4 rejected");
    auto gems = enumerate_gems(gem(5), 4);
    c.expect(gems.size() == 3, "gem(5) has " + std::to_string(gems.size()) + " gems, not 3");
    for (const auto& w : gems) c.expect(is_valid_gem(gem(5), w) && !is_gem_solved(gem(5), w), "bad gem witness");
    return c.done("gem(5) yields " + std::to_string(gems.size()) + " gems");
}

struct Criterion {
    const char* id;
    const char* title;
    double budget_ms;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "example graph values and convex-set family", 1000, ac1_example_values},
        {"AC2", "l3 geometries are not hereditary", 1000, ac2_non_hereditary},
        {"AC3", "l2 recognizer == oracle, all connected graphs n<=6", 5 * 60e3,
         [] { return crosscheck(Characterization::l2, 0); }},
        {"AC4", "l3 recognizer == oracle, n<=6 plus 500 random chordal n<=12", 15 * 60e3,
         [] { return crosscheck(Characterization::l3, 500); }},
        {"AC5", "chordal == monophonic (k=n-1) geometry, n<=6", 15 * 60e3,
         [] { return crosscheck(Characterization::monophonic, 0); }},
        {"AC6", "hull laws, intersection closure, cliques, extremes", 60e3, ac6_operator_laws},
        {"AC7", "connected convex sets have diameter <= 3", 60e3, ac7_connected_convex_sets},
        {"AC8", "gem machinery", 1000, ac8_gems},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (ms > cr.budget_ms) {
            o.ok = false;
            o.detail += ", over time budget";
        }
        if (!o.ok) ++failed;
        std::printf("%s %s: %s [%s] (%.0f ms)\n", o.ok ? "PASS" : "FAIL", cr.id, cr.title, o.detail.c_str(), ms);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
