#ifndef LKCONVEX_CROSSCHECK_HPP
#define LKCONVEX_CROSSCHECK_HPP

#include <atomic>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"
#include "recognizers.hpp"

namespace lkconvex {

/// Which characterization is compared against the exhaustive oracle.
enum class Characterization {
    l2,         // recognize_l2 vs oracle at k = 2
    l3,         // recognize_l3 vs oracle at k = 3
    monophonic, // is_chordal vs oracle at k = n - 1
};

struct CrosscheckOptions {
    Characterization target = Characterization::l3;
    std::size_t exhaustive_n = 0;  // all connected graphs on 1..exhaustive_n vertices
    std::size_t random_count = 0;  // seeded random connected chordal graphs
    std::size_t random_min_size = 4;
    std::size_t random_max_size = 12;
    Seed seed{42};
    unsigned jobs = 1;
};

struct CrosscheckInstance {
    std::string source; // "exhaustive" or "random"
    std::size_t index = 0;
    Graph graph;
};

struct Mismatch {
    CrosscheckInstance instance;
    bool recognizer_accepts = false;
    bool oracle_accepts = false;
};

struct CrosscheckReport {
    std::size_t instances = 0;
    std::size_t exhaustive_instances = 0;
    std::size_t random_instances = 0;
    std::size_t accepted = 0;
    std::map<std::string, std::size_t> rejections_by_kind;
    std::size_t invalid_certificates = 0;
    std::vector<Mismatch> mismatches; // in instance order

    bool clean() const { return mismatches.empty() && invalid_certificates == 0; }
};

/// Instance `index` of the random ensemble for (seed, size range).
inline Graph random_ensemble_member(const CrosscheckOptions& opt, std::size_t index) {
    Rng rng = Rng::split(opt.seed, index);
    std::size_t lo = std::max<std::size_t>(opt.random_min_size, 1);
    std::size_t hi = std::max(lo, opt.random_max_size);
    std::size_t n = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
    double density = rng.unit();
    return random_connected_chordal(n, density, Seed{rng.next()});
}

namespace detail {

struct InstanceOutcome {
    bool recognizer = false;
    bool oracle = false;
    bool certificate_ok = true;
    std::string kind;
};

inline InstanceOutcome evaluate(const Graph& g, Characterization target) {
    InstanceOutcome out;
    switch (target) {
    case Characterization::l2: {
        auto v = recognize_l2(g);
        out.recognizer = v.accepted;
        out.kind = std::string(v.kind());
        out.certificate_ok = validate_certificate(g, v, 2);
        out.oracle = verify_geometry(g, ConvexityParams(2)).is_geometry;
        break;
    }
    case Characterization::l3: {
        auto v = recognize_l3(g, {.record_solved_gems = true});
        out.recognizer = v.accepted;
        out.kind = std::string(v.kind());
        out.certificate_ok = validate_certificate(g, v, 3);
        out.oracle = verify_geometry(g, ConvexityParams(3)).is_geometry;
        break;
    }
    case Characterization::monophonic: {
        auto c = is_chordal(g);
        out.recognizer = c.chordal;
        out.kind = c.chordal ? "none" : "hole";
        out.certificate_ok = c.chordal ? is_perfect_elimination_ordering(g, c.elimination_order)
                                       : is_hole(g, c.hole->cycle);
        out.oracle = verify_geometry(g, ConvexityParams::monophonic(g.order())).is_geometry;
        break;
    }
    }
    return out;
}

} // namespace detail

/// Runs the recognizer and the oracle on every instance and tallies
/// disagreements. Work may be spread over `jobs` threads; the report is
/// assembled in instance order, so it does not depend on scheduling.
inline CrosscheckReport run_crosscheck(const CrosscheckOptions& opt) {
    std::vector<CrosscheckInstance> instances;
    for (std::size_t n = 1; n <= opt.exhaustive_n; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            instances.push_back({"exhaustive", instances.size(), g});
            return true;
        });
    const std::size_t exhaustive = instances.size();
    for (std::size_t i = 0; i < opt.random_count; ++i)
        instances.push_back({"random", i, random_ensemble_member(opt, i)});

    std::vector<detail::InstanceOutcome> outcomes(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
            try {
                outcomes[i] = detail::evaluate(instances[i].graph, opt.target);
            } catch (const std::exception& e) {
                outcomes[i].kind = std::string("error: ") + e.what();
                outcomes[i].certificate_ok = false;
            }
        }
    };
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    CrosscheckReport report;
    report.instances = instances.size();
    report.exhaustive_instances = exhaustive;
    report.random_instances = instances.size() - exhaustive;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& o = outcomes[i];
        if (o.recognizer) ++report.accepted;
        else ++report.rejections_by_kind[o.kind];
        if (!o.certificate_ok) ++report.invalid_certificates;
        if (o.recognizer != o.oracle) report.mismatches.push_back({instances[i], o.recognizer, o.oracle});
    }
    return report;
}

} // namespace lkconvex

#endif // LKCONVEX_CROSSCHECK_HPP
