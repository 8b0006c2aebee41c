// Command-line surface over the diagram, class, supervector and graph
// operations. All numeric list arguments are comma-separated; kappa is a
// "[+|-]p/q" literal. Global flags can also come from TISO_* environment
// variables. Exit codes: 0 success (and every requested verification
// passing), 1 verification failure, 2 bad usage or configuration.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiso/cayley.hpp"
#include "tiso/classes.hpp"
#include "tiso/diagrams.hpp"
#include "tiso/serialize.hpp"
#include "tiso/svaction.hpp"

using namespace tiso;
using nlohmann::json;

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad integer list: " + text);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

Partition parse_lambda(const RectConfig& rect, const std::string& text) {
    std::vector<int> parts;
    for (Int x : parse_int_list(text)) parts.push_back(static_cast<int>(x));
    return {rect, std::move(parts)};
}

SuperVector parse_seed(const RectConfig& rect, const std::string& text) {
    std::vector<Int> entries = parse_int_list(text);
    if (static_cast<int>(entries.size()) != rect.n() + rect.m())
        throw std::invalid_argument("seed needs n+m entries");
    return {{entries.begin(), entries.begin() + rect.n()},
            {entries.begin() + rect.n(), entries.end()}};
}

BfsCaps parse_caps(const std::string& text) {
    std::vector<Int> v = parse_int_list(text);
    if (v.size() != 2 || v[0] < 1 || v[1] < 1)
        throw std::invalid_argument("caps must be max_vertices,max_abs_coordinate");
    return {static_cast<std::size_t>(v[0]), v[1]};
}

DegreeWindow parse_window(const std::string& text) {
    std::vector<Int> v = parse_int_list(text);
    if (v.size() != 2) throw std::invalid_argument("window must be lo,hi");
    return {v[0], v[1]};
}

std::pair<int, int> parse_restrict(const std::string& text) {
    std::vector<Int> v = parse_int_list(text);
    if (v.size() != 2) throw std::invalid_argument("restriction must be rows,cols");
    return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

struct Options {
    int n = 0;
    int m = 0;
    std::string kappa;
    std::string format = "text";
    int threads = 1;
    std::uint64_t prng_seed = 42;

    RectConfig rect() const { return {n, m}; }
    Kappa kappa_or_principal() const {
        return kappa.empty() ? Kappa::principal(rect()) : Kappa::parse(kappa);
    }
    bool json_out() const { return format == "json"; }
};

json labeled_json(const LabeledDiagram& s) { return json::parse(labeled_key(s)); }
json sv_json(const SuperVector& v) { return json::parse(sv_key(v)); }

int cmd_diagram(const Options& opt, const std::string& lambda_text) {
    Partition p = parse_lambda(opt.rect(), lambda_text);
    auto outer = p.corners(Sign::plus);
    auto inner = p.corners(Sign::minus);
    if (opt.json_out()) {
        json out{{"lambda", p.parts()},
                 {"size", p.size()},
                 {"dual", p.dual().parts()},
                 {"word", p.word().letters()},
                 {"outer_corners", json::array()},
                 {"inner_corners", json::array()},
                 {"row_full", p.row_full()},
                 {"row_empty", p.row_empty()},
                 {"col_full", p.col_full()},
                 {"col_empty", p.col_empty()},
                 {"has_outer_pseudo", p.has_outer_pseudo()},
                 {"is_reduced", p.is_reduced()}};
        for (const Root& r : outer) out["outer_corners"].push_back(json::parse(root_key(r)));
        for (const Root& r : inner) out["inner_corners"].push_back(json::parse(root_key(r)));
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "diagram " << p.str() << " in " << opt.n << "x" << opt.m << ", size " << p.size()
              << "\n";
    std::cout << "dual: " << p.dual().str() << "\n";
    std::cout << "word: " << p.word().letters() << "\n";
    std::cout << "outer corners:";
    for (const Root& r : outer) std::cout << " " << r.label();
    std::cout << "\ninner corners:";
    for (const Root& r : inner) std::cout << " " << r.label();
    std::cout << "\nrow full/empty: " << p.row_full() << "/" << p.row_empty()
              << "  col full/empty: " << p.col_full() << "/" << p.col_empty() << "\n";
    std::cout << "outer pseudo-corner: " << p.has_outer_pseudo()
              << "  reduced: " << p.is_reduced() << "\n";
    return 0;
}

int cmd_class(const Options& opt, const std::string& lambda_text, Int k) {
    EquivClass c({parse_lambda(opt.rect(), lambda_text), k});
    if (opt.json_out()) {
        json out{{"canonical", labeled_json(c.canonical())},
                 {"degree", c.degree()},
                 {"members", json::array()}};
        for (const LabeledDiagram& s : c.members()) out["members"].push_back(labeled_json(s));
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "class of " << c.members().front().str() << " at " << opt.n << "x" << opt.m
              << ", degree " << c.degree() << ", " << c.members().size() << " members\n";
    for (const LabeledDiagram& s : c.members())
        std::cout << "  " << s.str() << "  degree " << s.degree() << "\n";
    std::cout << "canonical: " << c.canonical().str() << "\n";
    return 0;
}

int cmd_xhat(const Options& opt, const std::string& lambda_text, Int k) {
    LabeledDiagram s{parse_lambda(opt.rect(), lambda_text), k};
    SuperVector v = build_x_hat(s);
    AugMatrix aug = AugMatrix::of(v);
    if (opt.json_out()) {
        std::cout << json{{"input", labeled_json(s)},
                          {"supervector", sv_json(v)},
                          {"degree", *sv_degree(v)}}
                         .dump()
                  << "\n";
        return 0;
    }
    std::cout << "xhat" << s.str() << " = " << v.str() << "\n";
    std::cout << aug.text();
    return 0;
}

int cmd_orbit(const Options& opt, const std::string& seed_text, const std::string& caps_text,
              const std::string& restrict_text, bool conjecture) {
    RectConfig rect = opt.rect();
    Kappa kappa = opt.kappa_or_principal();
    SuperVector seed = seed_text.empty() ? base_point(rect) : parse_seed(rect, seed_text);
    BfsCaps caps = caps_text.empty() ? BfsCaps{} : parse_caps(caps_text);
    std::optional<std::pair<int, int>> restriction;
    if (!restrict_text.empty()) restriction = parse_restrict(restrict_text);

    SvOrbit orbit = orbit_bfs(rect, kappa, seed, caps, restriction, opt.threads);
    if (conjecture) orbit.report.witnesses = conjecture_scan(rect, orbit.vertices);
    const auto& scan = orbit.report.witnesses;

    if (opt.json_out()) {
        json out = json::parse(report_json(orbit.report));
        out["kappa"] = kappa.str();
        out["seed"] = sv_json(seed);
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "orbit of " << seed.str() << " under kappa " << kappa.str() << " at " << opt.n
              << "x" << opt.m;
    if (restriction)
        std::cout << ", base restricted to " << restriction->first << "x" << restriction->second;
    std::cout << "\nstatus: " << status_name(orbit.report.status)
              << "\nvertices: " << orbit.report.vertex_count
              << "\nmax coordinate: " << orbit.report.max_coordinate << "\n";
    if (scan) {
        if (scan->witness)
            std::cout << "conjecture witness: " << scan->witness->first.str() << " = base + "
                      << scan->witness->second << "\n";
        else
            std::cout << "conjecture witness: none within caps (inconclusive)\n";
        std::cout << "permutation near misses: " << scan->permutation_near_misses.size() << "\n";
    }
    return 0;
}

int cmd_graph(const Options& opt, const std::string& functor, const std::string& window_text,
              const std::string& lambda_text, const std::string& caps_text) {
    RectConfig rect = opt.rect();
    BfsCaps caps = caps_text.empty() ? BfsCaps{} : parse_caps(caps_text);

    CayleyGraph graph;
    OrbitReport report;
    if (functor == "F") {
        Partition seed =
            lambda_text.empty() ? Partition::empty(rect) : parse_lambda(rect, lambda_text);
        DiagramOrbit orbit = orbit_bfs(seed, caps, opt.threads);
        graph = std::move(orbit.graph);
        report = orbit.report;
    } else if (functor == "classes") {
        ClassOrbit window = window_graph(rect, parse_window(window_text));
        graph = std::move(window.graph);
        report = window.report;
    } else if (functor == "sv") {
        ClassOrbit window = window_graph(rect, parse_window(window_text));
        SvOrbit mirror = sv_window_graph(rect, window);
        graph = std::move(mirror.graph);
        report = mirror.report;
    } else {
        throw std::invalid_argument("functor must be F, classes or sv");
    }

    if (opt.format == "dot")
        std::cout << to_dot(graph);
    else if (opt.format == "json")
        std::cout << graph_json(graph, &report) << "\n";
    else {
        std::cout << "graph: " << graph.vertices.size() << " vertices, " << graph.edges.size()
                  << " edges, status " << status_name(report.status) << "\n";
        for (const GraphEdge& e : graph.edges)
            std::cout << "  " << graph.vertices[e.src] << " -> " << graph.vertices[e.dst] << "  "
                      << e.label.label() << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, const std::string& window_text) {
    RectConfig rect = opt.rect();
    ClassOrbit window = window_graph(rect, parse_window(window_text));
    SvOrbit mirror = sv_window_graph(rect, window);
    IsoReport report = check_equivariant_iso(rect, window.graph, mirror.graph);
    if (opt.json_out())
        std::cout << iso_report_json(report) << "\n";
    else {
        std::cout << "window [" << window_text << "] at " << opt.n << "x" << opt.m << ": "
                  << window.vertices.size() << " classes, " << window.graph.edges.size()
                  << " edges\n";
        std::cout << "equivariant bijection check: " << (report.pass ? "PASS" : "FAIL") << "\n";
        if (!report.pass) std::cout << "first mismatch: " << report.first_mismatch << "\n";
    }
    return report.pass ? 0 : 1;
}

int cmd_scan(const Options& opt, std::size_t random_seeds, Int seed_range,
             const std::vector<std::string>& seed_texts, const std::string& restrict_text,
             const std::string& caps_text) {
    RectConfig rect = opt.rect();
    Kappa kappa = opt.kappa_or_principal();
    BfsCaps caps = caps_text.empty() ? BfsCaps{} : parse_caps(caps_text);

    ScanCell cell{rect, kappa, {}, {}};
    if (!restrict_text.empty()) cell.base_restriction = parse_restrict(restrict_text);
    for (const std::string& text : seed_texts) cell.seeds.push_back(parse_seed(rect, text));
    if (random_seeds > 0) {
        auto drawn =
            random_supervectors(rect, random_seeds, -seed_range, seed_range, opt.prng_seed);
        cell.seeds.insert(cell.seeds.end(), drawn.begin(), drawn.end());
    }
    if (cell.seeds.empty()) cell.seeds.push_back(base_point(rect));

    ScanRow row = scan_finiteness({cell}, caps, opt.threads).front();
    if (opt.json_out()) {
        json out{{"kappa", kappa.str()},
                 {"prng_seed", opt.prng_seed},
                 {"closed", row.closed},
                 {"capped", row.capped},
                 {"max_vertex_count", row.max_vertex_count},
                 {"statuses", json::array()},
                 {"seeds", json::array()}};
        for (OrbitStatus s : row.statuses) out["statuses"].push_back(status_name(s));
        for (const SuperVector& s : cell.seeds) out["seeds"].push_back(sv_json(s));
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "scan: kappa " << kappa.str() << " at " << opt.n << "x" << opt.m;
    if (cell.base_restriction)
        std::cout << ", base restricted to " << cell.base_restriction->first << "x"
                  << cell.base_restriction->second;
    std::cout << ", prng seed " << opt.prng_seed << "\n";
    for (std::size_t t = 0; t < cell.seeds.size(); ++t)
        std::cout << "  " << cell.seeds[t].str() << ": " << status_name(row.statuses[t]) << "\n";
    std::cout << "summary: closed=" << row.closed << " capped=" << row.capped
              << " largest_orbit=" << row.max_vertex_count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Young diagrams, labeled classes and integer supervectors under the isotropic "
                 "groupoid action, with Cayley-graph tooling"};
    app.require_subcommand(1);
    // global flags may appear after the subcommand name
    app.fallthrough();

    Options opt;
    app.add_option("--n", opt.n, "rows of the rectangle")->required()->envname("TISO_N");
    app.add_option("--m", opt.m, "columns of the rectangle")->required()->envname("TISO_M");
    app.add_option("--kappa", opt.kappa, "deformation parameter, e.g. -3/2 (default -m/n)")
        ->envname("TISO_KAPPA");
    app.add_option("--format", opt.format, "output format: text, json, dot (graph only)")
        ->envname("TISO_FORMAT")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--threads", opt.threads, "worker threads for orbit searches")
        ->envname("TISO_THREADS")
        ->check(CLI::PositiveNumber);
    app.add_option("--prng-seed", opt.prng_seed, "seed for randomized scans")
        ->envname("TISO_PRNG_SEED");

    std::string lambda_text, seed_text, caps_text, restrict_text, window_text, functor = "F";
    std::vector<std::string> seed_texts;
    Int k = 0, seed_range = 20;
    std::size_t random_seeds = 0;
    bool conjecture = false;

    CLI::App* diagram = app.add_subcommand("diagram", "inspect one diagram");
    diagram->add_option("--lambda", lambda_text, "comma-separated parts")->required();

    CLI::App* cls = app.add_subcommand("class", "enumerate an equivalence class");
    cls->add_option("--lambda", lambda_text, "comma-separated parts")->required();
    cls->add_option("--k", k, "integer label");

    CLI::App* xhat = app.add_subcommand("xhat", "supervector image and augmented matrix");
    xhat->add_option("--lambda", lambda_text, "comma-separated parts")->required();
    xhat->add_option("--k", k, "integer label");

    CLI::App* orbit = app.add_subcommand("orbit", "breadth-first orbit closure of a supervector");
    orbit->add_option("--seed", seed_text, "n+m comma-separated entries (default base point)");
    orbit->add_option("--caps", caps_text, "max_vertices,max_abs_coordinate");
    orbit->add_option("--restrict", restrict_text, "restrict roots to rows,cols");
    orbit->add_flag("--conjecture", conjecture, "scan reached vertices for base translates");

    CLI::App* graph = app.add_subcommand("graph", "export a Cayley graph");
    graph->add_option("--functor", functor, "F, classes or sv");
    graph->add_option("--window", window_text, "degree window lo,hi (classes and sv)");
    graph->add_option("--lambda", lambda_text, "seed diagram for functor F");
    graph->add_option("--caps", caps_text, "max_vertices,max_abs_coordinate");

    CLI::App* verify = app.add_subcommand("verify", "check the window bijection edge by edge");
    verify->add_option("--window", window_text, "degree window lo,hi")->required();

    CLI::App* scan = app.add_subcommand("scan", "orbit finiteness scan for one kappa cell");
    scan->add_option("--random-seeds", random_seeds, "number of drawn seeds");
    scan->add_option("--seed-range", seed_range, "entries drawn from [-range, range]");
    scan->add_option("--seed", seed_texts, "explicit seed, repeatable");
    scan->add_option("--restrict", restrict_text, "restrict roots to rows,cols");
    scan->add_option("--caps", caps_text, "max_vertices,max_abs_coordinate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*diagram) return cmd_diagram(opt, lambda_text);
        if (*cls) return cmd_class(opt, lambda_text, k);
        if (*xhat) return cmd_xhat(opt, lambda_text, k);
        if (*orbit) return cmd_orbit(opt, seed_text, caps_text, restrict_text, conjecture);
        if (*graph) return cmd_graph(opt, functor, window_text, lambda_text, caps_text);
        if (*verify) return cmd_verify(opt, window_text);
        if (*scan)
            return cmd_scan(opt, random_seeds, seed_range, seed_texts, restrict_text, caps_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
