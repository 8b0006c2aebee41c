#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "tiso/cayley.hpp"
#include "tiso/serialize.hpp"

using namespace tiso;
using namespace tiso::test;

namespace {

const RectConfig r23(2, 3);
const SuperVector L0{{3, 0}, {0, 2, 4}};

using EdgeKey = std::tuple<std::string, std::string, Root>;

std::set<EdgeKey> edge_keys(const CayleyGraph& g) {
    std::set<EdgeKey> out;
    for (const GraphEdge& e : g.edges) out.insert({g.vertices[e.src], g.vertices[e.dst], e.label});
    return out;
}

void check_edge_symmetry(const CayleyGraph& g) {
    auto keys = edge_keys(g);
    for (const auto& [src, dst, label] : keys) CHECK(keys.contains({dst, src, label.negated()}));
}

}  // namespace

TEST_CASE("diagram orbit covers the whole rectangle") {
    DiagramOrbit orbit = orbit_bfs(Partition::empty(r23), BfsCaps{});
    CHECK(orbit.report.status == OrbitStatus::closed);
    CHECK(orbit.report.vertex_count == 10);
    CHECK(orbit.vertices.size() == 10);
    check_edge_symmetry(orbit.graph);

    // box moves change the size by one, so every edge connects adjacent sizes
    for (const GraphEdge& e : orbit.graph.edges) {
        Int d = orbit.vertices[e.dst].size() - orbit.vertices[e.src].size();
        CHECK(d == (e.label.positive() ? 1 : -1));
    }
}

TEST_CASE("class orbit is unbounded, caps report as such") {
    ClassOrbit orbit = orbit_bfs(EquivClass({Partition::empty(r23), 0}), BfsCaps{30, 1000000});
    CHECK(orbit.report.status == OrbitStatus::cap_exceeded);
    CHECK(orbit.report.vertex_count == 30);
}

TEST_CASE("principal supervector orbit exceeds caps") {
    SvOrbit orbit = orbit_bfs(r23, Kappa::principal(r23), L0, BfsCaps{500, 1000000});
    CHECK(orbit.report.status == OrbitStatus::cap_exceeded);
    CHECK(orbit.report.vertex_count == 500);
    for (const SuperVector& v : orbit.vertices) {
        CHECK(residue_complete(v));
        std::set<int> rows, cols;
        for (const Root& z : AugMatrix::of(v).zero_boxes()) {
            CHECK(rows.insert(z.i).second);
            CHECK(cols.insert(z.j).second);
        }
    }
}

TEST_CASE("positive special kappa closes from the base point") {
    SvOrbit orbit = orbit_bfs(r23, Kappa::parse("+3/2"), L0, BfsCaps{});
    CHECK(orbit.report.status == OrbitStatus::closed);
    CHECK(orbit.report.vertex_count == 4);
    std::set<SuperVector> expected{{{3, 0}, {0, 2, 4}},
                                   {{3, 2}, {-3, 2, 4}},
                                   {{3, 4}, {-3, -1, 4}},
                                   {{3, 6}, {-3, -1, 1}}};
    CHECK(std::set<SuperVector>(orbit.vertices.begin(), orbit.vertices.end()) == expected);
    check_edge_symmetry(orbit.graph);
}

TEST_CASE("restricted base closes under the principal action") {
    SvOrbit orbit = orbit_bfs(r23, Kappa::principal(r23), L0, BfsCaps{}, {{2, 2}});
    CHECK(orbit.report.status == OrbitStatus::closed);
    CHECK(orbit.report.vertex_count == 6);
    std::set<SuperVector> expected{{{3, 0}, {0, 2, 4}}, {{3, 2}, {3, 2, 4}},
                                   {{5, 2}, {6, 2, 4}}, {{3, 4}, {3, 5, 4}},
                                   {{5, 4}, {6, 5, 4}}, {{7, 4}, {6, 8, 4}}};
    CHECK(std::set<SuperVector>(orbit.vertices.begin(), orbit.vertices.end()) == expected);
    // roots outside the restricted base never label an edge
    for (const GraphEdge& e : orbit.graph.edges) {
        CHECK(e.label.i <= 2);
        CHECK(e.label.j <= 2);
    }
}

TEST_CASE("bfs output is independent of thread count and seed choice") {
    DiagramOrbit one = orbit_bfs(Partition::empty(r23), BfsCaps{}, 1);
    DiagramOrbit two = orbit_bfs(Partition::empty(r23), BfsCaps{}, 3);
    CHECK(one.graph.vertices == two.graph.vertices);
    CHECK(one.graph.edges == two.graph.edges);

    DiagramOrbit other_seed = orbit_bfs(Partition::full(r23), BfsCaps{});
    CHECK(std::set<std::string>(one.graph.vertices.begin(), one.graph.vertices.end()) ==
          std::set<std::string>(other_seed.graph.vertices.begin(),
                                other_seed.graph.vertices.end()));
    CHECK(edge_keys(one.graph) == edge_keys(other_seed.graph));

    SvOrbit sv_one = orbit_bfs(r23, Kappa::principal(r23), L0, BfsCaps{200, 1000000}, {}, 1);
    SvOrbit sv_two = orbit_bfs(r23, Kappa::principal(r23), L0, BfsCaps{200, 1000000}, {}, 4);
    CHECK(sv_one.graph.vertices == sv_two.graph.vertices);
    CHECK(sv_one.graph.edges == sv_two.graph.edges);
}

TEST_CASE("window graphs") {
    CHECK_THROWS_AS(window_graph(r23, {4, 2}), WindowEmpty);

    ClassOrbit zero = window_graph(r23, {0, 0});
    CHECK(zero.vertices.size() == 2);  // two classes per degree at (2,3)
    EquivClass base({Partition::empty(r23), 0});
    CHECK(std::count(zero.vertices.begin(), zero.vertices.end(), base) == 1);
    CHECK(zero.graph.edges.empty());  // every move leaves the single degree

    ClassOrbit window = window_graph(r23, {0, 1});
    EquivClass up({make(r23, {1, 0}), 0});
    auto iu = window.graph.index_of(class_key(base));
    auto iv = window.graph.index_of(class_key(up));
    REQUIRE(iu);
    REQUIRE(iv);
    CHECK(std::count(window.graph.edges.begin(), window.graph.edges.end(),
                     GraphEdge{*iu, *iv, plus(2, 1)}) == 1);
    check_edge_symmetry(window.graph);

    SvOrbit mirror = sv_window_graph(r23, window);
    auto su = mirror.graph.index_of(sv_key(L0));
    auto sv = mirror.graph.index_of(sv_key(SuperVector{{3, 2}, {3, 2, 4}}));
    REQUIRE(su);
    REQUIRE(sv);
    CHECK(std::count(mirror.graph.edges.begin(), mirror.graph.edges.end(),
                     GraphEdge{*su, *sv, plus(2, 1)}) == 1);

    // degree rises by one along every positive edge of the mirror
    for (const GraphEdge& e : mirror.graph.edges) {
        Int lo = *sv_degree(mirror.vertices[e.src]);
        Int hi = *sv_degree(mirror.vertices[e.dst]);
        CHECK(hi - lo == (e.label.positive() ? 1 : -1));
    }
}

TEST_CASE("equivariant isomorphism check") {
    for (auto [rect, lo, hi] : {std::tuple{RectConfig(2, 3), Int{0}, Int{6}},
                                std::tuple{RectConfig(3, 4), Int{0}, Int{5}},
                                std::tuple{RectConfig(2, 3), Int{0}, Int{0}}}) {
        ClassOrbit window = window_graph(rect, {lo, hi});
        SvOrbit mirror = sv_window_graph(rect, window);
        IsoReport report = check_equivariant_iso(rect, window.graph, mirror.graph);
        CHECK(report.pass);
        CHECK(report.first_mismatch.empty());
        CHECK(report.vertices_checked == window.vertices.size());
        CHECK(report.edges_checked == window.graph.edges.size());
    }

    // the base class maps to the base point
    CHECK(build_x_hat(EquivClass({Partition::empty(r23), 0}).canonical()) == L0);

    // a mangled orbit graph is flagged
    ClassOrbit window = window_graph(r23, {0, 2});
    SvOrbit mirror = sv_window_graph(r23, window);
    std::swap(mirror.graph.vertices.front(), mirror.graph.vertices.back());
    IsoReport broken = check_equivariant_iso(r23, window.graph, mirror.graph);
    CHECK_FALSE(broken.pass);
    CHECK_FALSE(broken.first_mismatch.empty());
}

TEST_CASE("finiteness scan over kappa cells") {
    std::uint64_t prng_seed = 20240817;
    std::vector<ScanCell> cells{
        {r23, Kappa::parse("+3/2"), {}, random_supervectors(r23, 6, -20, 20, prng_seed)},
        {r23, Kappa::principal(r23), {{2, 2}}, {L0}},
        {r23, Kappa::principal(r23), {}, {L0}},
    };
    auto rows = scan_finiteness(cells, BfsCaps{10000, 1000000});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].closed == 6);
    CHECK(rows[0].capped == 0);
    CHECK(rows[1].closed == 1);
    CHECK(rows[2].capped == 1);
    CHECK(rows[2].statuses == std::vector<OrbitStatus>{OrbitStatus::cap_exceeded});

    // fixed prng seed, fixed draws
    auto again = random_supervectors(r23, 6, -20, 20, prng_seed);
    CHECK(again == cells[0].seeds);
    for (const SuperVector& v : again)
        for (Int x : v.a) {
            CHECK(x >= -20);
            CHECK(x <= 20);
        }
}

TEST_CASE("conjecture scan") {
    SUBCASE("the base point is its own witness") {
        SvOrbit orbit = orbit_bfs(r23, Kappa::principal(r23), L0, BfsCaps{50, 1000000});
        ConjectureReport report = conjecture_scan(r23, orbit.vertices);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->first == L0);
        CHECK(report.witness->second == 0);
        CHECK(report.scanned == orbit.vertices.size());
    }

    SUBCASE("translated seeds carry their shift") {
        SvOrbit orbit = orbit_bfs(r23, Kappa::principal(r23), L0.shifted(7), BfsCaps{50, 1000000});
        ConjectureReport report = conjecture_scan(r23, orbit.vertices);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->second == 7);
    }

    SUBCASE("block permutations are near misses, not witnesses") {
        SuperVector permuted = rotate_nu(L0);  // (0,3|0,2,4)
        ConjectureReport report = conjecture_scan(r23, {permuted});
        CHECK_FALSE(report.witness.has_value());
        REQUIRE(report.permutation_near_misses.size() == 1);
        CHECK(report.permutation_near_misses.front().first == permuted);
        CHECK(report.permutation_near_misses.front().second == 0);
    }

    SUBCASE("scan data rides along in the orbit report") {
        SvOrbit orbit = orbit_bfs(r23, Kappa::principal(r23), L0, BfsCaps{10, 1000000});
        orbit.report.witnesses = conjecture_scan(r23, orbit.vertices);
        std::string encoded = report_json(orbit.report);
        CHECK(encoded.find("\"witnesses\"") != std::string::npos);
        CHECK(encoded.find("\"shift\":0") != std::string::npos);
    }
}

TEST_CASE("window vertices all connect through a shared archimedean target") {
    ClassOrbit window = window_graph(r23, {0, 3});
    Int top = 0;
    std::vector<EquivClass> targets;
    std::vector<Int> target_labels;
    for (const EquivClass& c : window.vertices) {
        KSplit split = split_label(r23, c.canonical().k);
        Int big = ceil_div(split.i, 3) + ceil_div(split.j, 2) + 1;
        target_labels.push_back(big * 6);
        top = std::max(top, big * 6);
    }
    for (std::size_t t = 0; t < window.vertices.size(); ++t) {
        // up to the class's own target, then on to the shared top one
        EquivClass own({Partition::empty(r23), target_labels[t]});
        CHECK(poset_leq(window.vertices[t], own, 100000).status == PosetStatus::found);
        CHECK(poset_leq(own, EquivClass({Partition::empty(r23), top}), 100000).status ==
              PosetStatus::found);
    }
}

TEST_CASE("exports") {
    RectConfig r11(1, 1);
    DiagramOrbit orbit = orbit_bfs(Partition::empty(r11), BfsCaps{});
    CHECK(to_dot(orbit.graph) ==
          "digraph cayley {\n"
          "  v0 [label=\"[0]\"];\n"
          "  v1 [label=\"[1]\"];\n"
          "  v0 -> v1 [label=\"+e(1)-d(1)\"];\n"
          "  v1 -> v0 [label=\"-e(1)-d(1)\"];\n"
          "}\n");
    CHECK(graph_json(orbit.graph, &orbit.report) ==
          R"x({"edges":[{"dst":1,"label":"+e(1)-d(1)","src":0},)x"
          R"x({"dst":0,"label":"-e(1)-d(1)","src":1}],)x"
          R"x("report":{"max_coordinate":1,"status":"Closed","vertex_count":2},)x"
          R"x("vertices":[[0],[1]]})x");

    CHECK(parse_sv(sv_key(L0)) == L0);
    CHECK(parse_labeled(r23, labeled_key({make(r23, {3, 1}), -2})) ==
          LabeledDiagram{make(r23, {3, 1}), -2});
    CHECK(parse_partition(r23, partition_key(make(r23, {2, 1}))) == make(r23, {2, 1}));
    CHECK(parse_root(root_key(minus(2, 3))) == minus(2, 3));
    CHECK(class_key(EquivClass({Partition::empty(r23), 0})) == R"x({"k":-6,"lambda":[3,3]})x");
    CHECK(word_key(make(r23, {3, 1}).word()) == "\"rdrrd\"");
    CHECK(chain_key({plus(2, 1), minus(1, 2)}) ==
          R"x([{"i":2,"j":1,"sign":"+"},{"i":1,"j":2,"sign":"-"}])x");
}
