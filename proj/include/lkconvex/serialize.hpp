#ifndef LKCONVEX_SERIALIZE_HPP
#define LKCONVEX_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "convexity.hpp"
#include "oracle.hpp"
#include "recognizers.hpp"

// JSON encodings of the library's results. Every function takes the label
// base of the input so ids come out the way the input file wrote them.

namespace lkconvex {

using json = nlohmann::json;

inline json to_json(const VertexSet& s, vertex_t base = 0) {
    json out = json::array();
    for (vertex_t v : s) out.push_back(v + base);
    return out;
}

inline json to_json(const std::vector<vertex_t>& seq, vertex_t base = 0) {
    json out = json::array();
    for (vertex_t v : seq) out.push_back(v + base);
    return out;
}

inline json to_json(const InducedPath& p, vertex_t base = 0) { return to_json(p.vertices, base); }

/// {"iterates":[[...],...],"steps":j}
inline json to_json(const HullTrace& t, vertex_t base = 0) {
    json its = json::array();
    for (const auto& s : t.iterates) its.push_back(to_json(s, base));
    return {{"iterates", its}, {"steps", t.steps()}};
}

inline json to_json(const MkmViolation& v, vertex_t base = 0) {
    return {{"set", to_json(v.set, base)}, {"ext", to_json(v.ext, base)}, {"hull", to_json(v.hull, base)}};
}

/// {"geometry":bool,"certificate":{"set":[...],"ext":[...],"hull":[...]}|null}
inline json to_json(const GeometryVerdict& v, vertex_t base = 0) {
    json out = {{"geometry", v.is_geometry}, {"certificate", nullptr}};
    if (v.certificate) out["certificate"] = to_json(*v.certificate, base);
    if (!v.all_violations.empty()) {
        json all = json::array();
        for (const auto& x : v.all_violations) all.push_back(to_json(x, base));
        out["violations"] = all;
    }
    return out;
}

inline json to_json(const GemWitness& w, vertex_t base = 0) {
    return {{"base", to_json(w.base, base)}, {"apex", w.apex + base}, {"n", w.n()}};
}

/// Certificates are discriminated by "kind": hole, p4, far_pair, unsolved_gem.
inline json certificate_json(const Certificate& c, vertex_t base = 0) {
    return std::visit(
        [&](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, HoleWitness>) {
                return {{"kind", "hole"}, {"cycle", to_json(x.cycle, base)}};
            } else if constexpr (std::is_same_v<T, P4Witness>) {
                return {{"kind", "p4"}, {"path", to_json(x.path, base)}};
            } else if constexpr (std::is_same_v<T, FarPair>) {
                return {{"kind", "far_pair"}, {"u", x.u + base}, {"v", x.v + base}, {"distance", x.distance}};
            } else {
                json out = to_json(x, base);
                out["kind"] = "unsolved_gem";
                return out;
            }
        },
        c);
}

inline json to_json(const RecognitionVerdict& v, vertex_t base = 0) {
    json out = {{"accepted", v.accepted}, {"certificate", certificate_json(v.certificate, base)}};
    if (!v.solved_gems.empty()) {
        json gems = json::array();
        for (const auto& s : v.solved_gems) {
            json g = to_json(s.gem, base);
            g["solving_path"] = to_json(s.solving_path, base);
            gems.push_back(g);
        }
        out["solved_gems"] = gems;
    }
    return out;
}

} // namespace lkconvex

#endif // LKCONVEX_SERIALIZE_HPP
