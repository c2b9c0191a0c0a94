// lkconvex: command-line front end for the l^k convexity library.
//
// Exit status: 0 affirmative result, 1 negative result (with certificate),
// 2 usage or input error.

#include <chrono>
#include <charconv>
#include <cstring>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include <lkconvex/lkconvex.hpp>

using namespace lkconvex;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

struct Globals {
    bool json = false;
    bool verbose = false;
};

struct Report {
    std::string command;
    std::optional<std::pair<std::size_t, std::size_t>> input; // vertices, edges
    json result;
    std::string text;
    int status = exit_yes;
};

class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void notice(const Globals& g, const std::string& msg) {
    if (g.verbose) std::cerr << "note: " << msg << '\n';
}

vertex_t parse_label(std::string_view token, std::size_t n, vertex_t base) {
    auto set = parse_set(token, n, base);
    if (set.size() != 1) throw InvalidArgument("expected a single vertex, got '" + std::string(token) + "'");
    return set.front();
}

std::pair<vertex_t, vertex_t> parse_pair(const std::string& text, std::size_t n, vertex_t base) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw InvalidArgument("--pair expects two vertices 'u,v', got '" + text + "'");
    return {parse_label(std::string_view(text).substr(0, comma), n, base),
            parse_label(std::string_view(text).substr(comma + 1), n, base)};
}

std::string braces(const VertexSet& s, vertex_t base) { return "{" + format_set(s, base) + "}"; }

std::string dashes(const std::vector<vertex_t>& seq, vertex_t base) {
    std::string out;
    for (vertex_t v : seq) out += (out.empty() ? "" : "-") + std::to_string(v + base);
    return out;
}

std::size_t oracle_cap(std::optional<std::size_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CONVEXITY_MAX_N")) {
        std::size_t v = 0;
        auto [end, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec != std::errc{} || *end != '\0') throw InvalidArgument("CONVEXITY_MAX_N must be a non-negative integer");
        return v;
    }
    return default_enumeration_cap;
}

ConvexityParams params_for(const Globals& gl, std::size_t k, const Graph& g) {
    ConvexityParams p(k);
    if (p.clamped(g.order()))
        notice(gl, "k=" + std::to_string(k) + " exceeds n-1; intervals are those of k=" +
                       std::to_string(p.effective_k(g.order())));
    return p;
}

std::string describe_certificate(const Certificate& c, vertex_t base) {
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, HoleWitness>) {
                return "induced cycle " + dashes(x.cycle, base) + "-" + std::to_string(x.cycle.front() + base);
            } else if constexpr (std::is_same_v<T, P4Witness>) {
                return "induced P4 " + dashes(x.path.vertices, base);
            } else if constexpr (std::is_same_v<T, FarPair>) {
                return "d(" + std::to_string(x.u + base) + "," + std::to_string(x.v + base) +
                       ") = " + std::to_string(x.distance);
            } else {
                return std::to_string(x.n()) + "-gem " + dashes(x.base.vertices, base) + " with apex " +
                       std::to_string(x.apex + base) + " has no induced 3-edge path avoiding the apex";
            }
        },
        c);
}

// Maps every vertex id in a certificate through `to_host`.
Certificate relabel(const Certificate& c, const std::vector<vertex_t>& to_host) {
    auto seq = [&](std::vector<vertex_t> v) {
        for (auto& x : v) x = to_host[x];
        return v;
    };
    return std::visit(
        [&](const auto& x) -> Certificate {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) return x;
            else if constexpr (std::is_same_v<T, HoleWitness>) return HoleWitness{seq(x.cycle)};
            else if constexpr (std::is_same_v<T, P4Witness>) return P4Witness{InducedPath{seq(x.path.vertices)}};
            else if constexpr (std::is_same_v<T, FarPair>) return FarPair{to_host[x.u], to_host[x.v], x.distance};
            else return GemWitness{InducedPath{seq(x.base.vertices)}, to_host[x.apex]};
        },
        c);
}

VertexSet relabel(const VertexSet& s, const std::vector<vertex_t>& to_host, std::size_t host_order) {
    VertexSet out(host_order);
    for (vertex_t v : s) out.insert(to_host[v]);
    return out;
}

// ---------------- subcommands ----------------

Report cmd_recognize(const Globals& gl, const LabeledGraph& in, std::size_t k) {
    const Graph& g = in.graph;
    const vertex_t base = in.label_base;
    RecognitionVerdict v;
    std::string what;
    if (k == 2) {
        v = recognize_l2(g);
        what = "l2 convex geometry";
    } else if (k == 3) {
        v = recognize_l3(g);
        what = "l3 convex geometry";
    } else {
        notice(gl, "no characterization is known for k >= 4; checking the necessary conditions only");
        v = necessary_conditions(g, ConvexityParams(k));
        what = "chordal with diameter <= " + std::to_string(k) + " (necessary for an l" + std::to_string(k) +
               " convex geometry)";
    }
    if (!validate_certificate(g, v, k)) throw Failure("internal error: certificate failed re-validation");

    Report r;
    r.result = to_json(v, base);
    r.result["k"] = k;
    if (k >= 4) r.result["necessary_conditions_only"] = true;
    std::ostringstream out;
    out << (v.accepted ? "accepted: " : "rejected: not ") << what << '\n';
    if (!v.accepted) out << "certificate (" << v.kind() << "): " << describe_certificate(v.certificate, base) << '\n';
    if (v.accepted && !v.solved_gems.empty()) {
        out << v.solved_gems.size() << " induced gems with n >= 4, all solved\n";
        if (gl.verbose)
            for (const auto& s : v.solved_gems)
                out << "  gem " << dashes(s.gem.base.vertices, base) << " apex " << s.gem.apex + base << " solved by "
                    << dashes(s.solving_path.vertices, base) << '\n';
    }
    r.text = out.str();
    r.status = v.accepted ? exit_yes : exit_no;
    return r;
}

Report cmd_interval(const Globals& gl, const LabeledGraph& in, std::size_t k, const std::string& pair_text) {
    const vertex_t base = in.label_base;
    auto [u, v] = parse_pair(pair_text, in.graph.order(), base);
    auto s = interval(in.graph, params_for(gl, k, in.graph), u, v);
    Report r;
    r.result = {{"u", u + base}, {"v", v + base}, {"k", k}, {"interval", to_json(s, base)}};
    r.text = "I[" + std::to_string(u + base) + "," + std::to_string(v + base) + "] = " + braces(s, base) + "\n";
    return r;
}

Report cmd_hull(const Globals& gl, const LabeledGraph& in, std::size_t k, const std::string& set_text) {
    const vertex_t base = in.label_base;
    auto s = parse_set(set_text, in.graph.order(), base);
    auto t = hull(in.graph, params_for(gl, k, in.graph), s);
    Report r;
    r.result = to_json(t, base);
    r.result["k"] = k;
    r.result["hull"] = to_json(t.fixed_point(), base);
    std::ostringstream out;
    for (std::size_t i = 0; i < t.iterates.size(); ++i) out << "I^" << i << " = " << braces(t.iterates[i], base) << '\n';
    out << "hull = " << braces(t.fixed_point(), base) << ", steps = " << t.steps() << '\n';
    r.text = out.str();
    return r;
}

Report cmd_extremes(const Globals& gl, const LabeledGraph& in, std::size_t k, const std::string& set_text) {
    const vertex_t base = in.label_base;
    auto s = parse_set(set_text, in.graph.order(), base);
    LkConvexity cx(in.graph, params_for(gl, k, in.graph));
    Report r;
    if (auto bad = cx.find_violation(s)) {
        if (s.contains(bad->escaped) || !cx.interval(bad->u, bad->v).contains(bad->escaped))
            throw Failure("internal error: convexity witness failed re-validation");
        r.result = {{"convex", false},
                    {"violation", {{"u", bad->u + base}, {"v", bad->v + base}, {"escaped", bad->escaped + base}}}};
        r.text = "not convex: " + std::to_string(bad->escaped + base) + " lies in I[" + std::to_string(bad->u + base) +
                 "," + std::to_string(bad->v + base) + "] but not in the set\n";
        r.status = exit_no;
        return r;
    }
    auto ext = cx.extreme_points(s);
    r.result = {{"convex", true}, {"extreme_points", to_json(ext, base)}, {"k", k}};
    r.text = "Ext = " + braces(ext, base) + "\n";
    return r;
}

Report cmd_gems(const Globals&, const LabeledGraph& in, std::size_t min_n) {
    const Graph& g = in.graph;
    const vertex_t base = in.label_base;
    require_connected(g);
    Report r;
    json list = json::array();
    std::ostringstream out;
    std::size_t solved = 0, total = 0;
    for_each_gem(g, min_n, [&](const GemWitness& w) {
        ++total;
        json item = to_json(w, base);
        auto path = solving_path(g, w);
        item["solved"] = path.has_value();
        out << w.n() << "-gem " << dashes(w.base.vertices, base) << " apex " << w.apex + base;
        if (path) {
            if (!is_valid_solving_path(g, w, *path)) throw Failure("internal error: solving path failed re-validation");
            ++solved;
            item["solving_path"] = to_json(*path, base);
            out << ": solved by " << dashes(path->vertices, base) << '\n';
        } else {
            out << ": unsolved\n";
        }
        list.push_back(item);
        return true;
    });
    out << total << " gems with n >= " << min_n << ", " << solved << " solved, " << total - solved << " unsolved\n";
    r.result = {{"gems", list}, {"count", total}, {"solved", solved}, {"unsolved", total - solved}, {"min_n", min_n}};
    r.text = out.str();
    return r;
}

Report cmd_oracle(const Globals& gl, const LabeledGraph& in, std::size_t k, std::optional<std::size_t> max_n,
                  bool all) {
    const vertex_t base = in.label_base;
    auto p = params_for(gl, k, in.graph);
    auto v = verify_geometry(in.graph, p, {.max_n = oracle_cap(max_n), .collect_all = all});
    if (v.certificate && !validate_violation(in.graph, p, *v.certificate))
        throw Failure("internal error: violation failed re-validation");
    Report r;
    r.result = to_json(v, base);
    r.result["k"] = k;
    std::ostringstream out;
    if (v.is_geometry) {
        out << "convex geometry: every l" << k << "-convex set is the hull of its extreme points\n";
    } else {
        const auto& c = *v.certificate;
        out << "not a convex geometry: S = " << braces(c.set, base) << " is convex, Ext(S) = " << braces(c.ext, base)
            << ", hull(Ext(S)) = " << braces(c.hull, base) << '\n';
        if (all) out << v.all_violations.size() << " violating convex sets in total\n";
    }
    r.text = out.str();
    r.status = v.is_geometry ? exit_yes : exit_no;
    return r;
}

struct CrosscheckArgs {
    std::size_t k = 3;
    std::size_t exhaustive_n = 0;
    std::size_t random = 0;
    std::size_t size = 12;
    std::uint64_t seed = 42;
    unsigned jobs = 0;
    std::string dump_dir;
};

Report cmd_crosscheck(const Globals& gl, const CrosscheckArgs& a) {
    CrosscheckOptions opt;
    opt.target = a.k == 2 ? Characterization::l2 : Characterization::l3;
    opt.exhaustive_n = a.exhaustive_n;
    opt.random_count = a.random;
    opt.random_max_size = a.size;
    opt.random_min_size = std::min<std::size_t>(opt.random_min_size, a.size);
    opt.seed = Seed{a.seed};
    opt.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
    notice(gl, "running on " + std::to_string(opt.jobs) + " threads");
    auto rep = run_crosscheck(opt);

    Report r;
    json kinds = json::object();
    for (const auto& [kind, count] : rep.rejections_by_kind) kinds[kind] = count;
    json mismatches = json::array();
    std::ostringstream out;
    out << "l" << a.k << " recognizer vs oracle: " << rep.instances << " graphs (" << rep.exhaustive_instances
        << " exhaustive, " << rep.random_instances << " random)\n";
    out << "accepted " << rep.accepted << ", rejected " << rep.instances - rep.accepted;
    for (const auto& [kind, count] : rep.rejections_by_kind) out << " [" << kind << " " << count << "]";
    out << "\nmismatches " << rep.mismatches.size() << ", invalid certificates " << rep.invalid_certificates << '\n';
    for (const auto& m : rep.mismatches) {
        json item = {{"source", m.instance.source},
                     {"index", m.instance.index},
                     {"recognizer", m.recognizer_accepts},
                     {"oracle", m.oracle_accepts}};
        if (!a.dump_dir.empty()) {
            std::filesystem::create_directories(a.dump_dir);
            auto file = std::filesystem::path(a.dump_dir) /
                        ("mismatch_" + m.instance.source + "_" + std::to_string(m.instance.index) + ".txt");
            std::ofstream f(file);
            write_graph(f, m.instance.graph);
            item["file"] = file.string();
        }
        out << "  " << m.instance.source << " #" << m.instance.index << ": recognizer "
            << (m.recognizer_accepts ? "accepts" : "rejects") << ", oracle "
            << (m.oracle_accepts ? "accepts" : "rejects") << '\n';
        mismatches.push_back(item);
    }
    r.result = {{"k", a.k},
                {"instances", rep.instances},
                {"exhaustive", rep.exhaustive_instances},
                {"random", rep.random_instances},
                {"seed", a.seed},
                {"accepted", rep.accepted},
                {"rejections", kinds},
                {"invalid_certificates", rep.invalid_certificates},
                {"mismatches", mismatches},
                {"clean", rep.clean()}};
    r.text = out.str();
    r.status = rep.clean() ? exit_yes : exit_no;
    return r;
}

struct GenerateArgs {
    std::string family;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double density = 0.5;
    std::string format = "edge";
    std::string output;
};

Graph generate(const GenerateArgs& a) {
    const auto& f = a.family;
    if (f == "two-step") return two_step_graph();
    if (a.n == 0) throw InvalidArgument("family '" + f + "' needs a size");
    if (f == "gem") return gem(a.n);
    if (f == "path") return path(a.n);
    if (f == "cycle") return cycle(a.n);
    if (f == "complete") return complete(a.n);
    if (f == "star") return star(a.n);
    if (f == "chordal") return random_connected_chordal(a.n, a.density, Seed{a.seed});
    if (f == "trivially-perfect") return random_trivially_perfect(a.n, Seed{a.seed});
    if (f == "connected") return random_connected_graph(a.n, a.density, Seed{a.seed});
    throw InvalidArgument("unknown family '" + f + "'");
}

Report cmd_generate(const GenerateArgs& a) {
    Graph g = generate(a);
    auto fmt = a.format == "dimacs" ? GraphFormat::dimacs : GraphFormat::edge_list;
    const std::string text = to_text(g, fmt);
    Report r;
    r.input = std::pair{g.order(), g.size()};
    r.result = {{"family", a.family}, {"format", a.format}};
    if (a.output.empty()) {
        r.result["graph"] = text;
        r.text = text;
    } else {
        std::ofstream f(a.output);
        if (!f) throw InvalidArgument("cannot write '" + a.output + "'");
        f << text;
        r.result["file"] = a.output;
    }
    return r;
}

Report cmd_demo() {
    const Graph g = two_step_graph();
    const ConvexityParams k3(3);
    constexpr vertex_t base = 1;
    std::ostringstream out;
    json cases = json::array();
    bool reproduced = true;

    // Reports use the labels of G; ids of a deleted graph are mapped back through to_host.
    auto run = [&](const std::string& name, const InducedSubgraph& h, bool expect_accept) {
        const Graph& sg = h.graph;
        auto v = recognize_l3(sg);
        bool oracle = verify_geometry(sg, k3).is_geometry;
        bool ok = v.accepted == expect_accept && oracle == expect_accept && validate_certificate(sg, v, 3);
        auto cert = relabel(v.certificate, h.to_host);
        auto ext = relabel(extreme_points(sg, k3, sg.vertices()), h.to_host, 7);
        auto ends = VertexSet(sg.order(), {*h.from_host[0], *h.from_host[6]});
        auto hull_of_ends = relabel(hull(sg, k3, ends).fixed_point(), h.to_host, 7);
        if (!expect_accept) ok = ok && ext == VertexSet(7, {0, 6}) && hull_of_ends == VertexSet(7, {0, 6});
        out << name << ": recognizer " << (v.accepted ? "accepts" : "rejects") << ", oracle "
            << (oracle ? "accepts" : "rejects");
        if (!v.accepted) out << "; " << describe_certificate(cert, base);
        out << "\n  Ext(V) = " << braces(ext, base) << ", hull({1,7}) = " << braces(hull_of_ends, base) << '\n';
        cases.push_back({{"graph", name},
                         {"recognizer", v.accepted},
                         {"oracle", oracle},
                         {"expected", expect_accept},
                         {"certificate", certificate_json(cert, base)},
                         {"ext", to_json(ext, base)},
                         {"hull_of_1_7", to_json(hull_of_ends, base)}});
        reproduced = reproduced && ok;
    };

    run("G", induced_subgraph(g, g.vertices()), true);
    for (vertex_t label : {2u, 5u, 3u}) run("G-" + std::to_string(label), delete_vertex(g, label - 1), label == 3);
    out << (reproduced ? "pattern reproduced: " : "pattern NOT reproduced: ")
        << "l3 convex geometries are not closed under vertex deletion\n";

    Report r;
    r.result = {{"cases", cases}, {"reproduced", reproduced}};
    r.text = out.str();
    r.status = reproduced ? exit_yes : exit_no;
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"l^k convexity on graphs: intervals, hulls, extreme points, convex-geometry oracle and recognizers"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_flag("--json", gl.json, "emit a JSON report on stdout");
    app.add_flag("-v,--verbose", gl.verbose, "print notices on stderr");

    std::string file;
    std::size_t k = 3;
    std::string pair_text, set_text;
    std::size_t min_n = 4;
    std::optional<std::size_t> max_n;
    bool all = false;
    CrosscheckArgs cc;
    GenerateArgs gen;

    auto add_k = [&](CLI::App* sub) {
        sub->add_option("-k,--k", k, "path length bound k >= 2")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    };

    auto* recognize = app.add_subcommand("recognize", "decide whether the graph is an l^k convex geometry (k = 2, 3)");
    recognize->add_option("file", file, "graph file")->required();
    add_k(recognize);

    auto* interval_cmd = app.add_subcommand("interval", "the l^k interval of a vertex pair");
    interval_cmd->add_option("file", file, "graph file")->required();
    add_k(interval_cmd);
    interval_cmd->add_option("--pair", pair_text, "two vertices u,v")->required();

    auto* hull_cmd = app.add_subcommand("hull", "iterated-interval hull of a vertex set");
    hull_cmd->add_option("file", file, "graph file")->required();
    add_k(hull_cmd);
    hull_cmd->add_option("--set", set_text, "vertices v1,v2,...")->required();

    auto* extremes = app.add_subcommand("extremes", "extreme points of a convex set");
    extremes->add_option("file", file, "graph file")->required();
    add_k(extremes);
    extremes->add_option("--set", set_text, "vertices v1,v2,...")->required();

    auto* gems = app.add_subcommand("gems", "list induced gems and whether each is solved");
    gems->add_option("file", file, "graph file")->required();
    gems->add_option("--min-n", min_n, "smallest base length (edges)")->check(CLI::Range(3, 1 << 20));

    auto* oracle = app.add_subcommand("oracle", "exhaustive convex-geometry check (exponential)");
    oracle->add_option("file", file, "graph file")->required();
    add_k(oracle);
    oracle->add_option("--max-n", max_n, "largest graph the oracle accepts (default 16, or CONVEXITY_MAX_N)");
    oracle->add_flag("--all", all, "collect every violating convex set");

    auto* crosscheck = app.add_subcommand("crosscheck", "compare a recognizer with the oracle on many graphs");
    crosscheck->add_option("-k,--k", cc.k, "2 or 3")->check(CLI::IsMember({2, 3}));
    crosscheck->add_option("--exhaustive-n", cc.exhaustive_n, "all connected graphs up to this order")
        ->check(CLI::Range(0, 6));
    crosscheck->add_option("--random", cc.random, "number of random connected chordal graphs");
    crosscheck->add_option("--size", cc.size, "largest random graph order")->check(CLI::Range(1, 16));
    crosscheck->add_option("--seed", cc.seed, "seed of the random ensemble");
    crosscheck->add_option("--jobs", cc.jobs, "worker threads (0 = all cores)");
    crosscheck->add_option("--dump-dir", cc.dump_dir, "write mismatching graphs here");

    auto* generate_cmd = app.add_subcommand("generate", "write a named or random graph in the canonical format");
    generate_cmd
        ->add_option("family", gen.family,
                     "gem, path, cycle, complete, star, two-step, chordal, trivially-perfect, connected")
        ->required();
    generate_cmd->add_option("n", gen.n, "order (gem: base length)");
    generate_cmd->add_option("--seed", gen.seed, "seed for random families");
    generate_cmd->add_option("--density", gen.density, "edge density in [0,1] for random families")
        ->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--format", gen.format, "edge or dimacs")->check(CLI::IsMember({"edge", "dimacs"}));
    generate_cmd->add_option("-o,--output", gen.output, "output file (default stdout)");

    auto* demo = app.add_subcommand("demo-non-hereditary", "show that deleting a vertex can destroy an l3 geometry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        auto load = [&] { return read_graph_file(file); };
        if (*recognize) {
            auto in = load();
            report = cmd_recognize(gl, in, k);
            report.input = std::pair{in.graph.order(), in.graph.size()};
        } else if (*interval_cmd || *hull_cmd || *extremes || *gems || *oracle) {
            auto in = load();
            if (*interval_cmd) report = cmd_interval(gl, in, k, pair_text);
            else if (*hull_cmd) report = cmd_hull(gl, in, k, set_text);
            else if (*extremes) report = cmd_extremes(gl, in, k, set_text);
            else if (*gems) report = cmd_gems(gl, in, min_n);
            else report = cmd_oracle(gl, in, k, max_n, all);
            report.input = std::pair{in.graph.order(), in.graph.size()};
        } else if (*crosscheck) {
            report = cmd_crosscheck(gl, cc);
        } else if (*generate_cmd) {
            report = cmd_generate(gen);
        } else if (*demo) {
            report = cmd_demo();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    report.command = app.get_subcommands().front()->get_name();

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (gl.json) {
        json out = {{"command", report.command}, {"input", nullptr}, {"result", report.result},
                    {"wall_time_ms", ms}, {"exit_code", report.status}};
        if (report.input) out["input"] = {{"vertices", report.input->first}, {"edges", report.input->second}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << report.text;
        notice(gl, "wall time " + std::to_string(ms) + " ms");
    }
    return report.status;
}
