#include "tiso/cayley.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "tiso/serialize.hpp"

namespace tiso {

std::string status_name(OrbitStatus s) {
    return s == OrbitStatus::closed ? "Closed" : "CapExceeded";
}

std::optional<std::size_t> CayleyGraph::index_of(const std::string& key) const {
    auto it = std::find(vertices.begin(), vertices.end(), key);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

namespace {

template <class V>
struct BfsOut {
    std::vector<V> vertices;  // discovery order
    std::set<std::tuple<V, V, Root>> edges;
    OrbitStatus status = OrbitStatus::closed;
};

// Level-synchronous closure. The frontier is expanded in sorted order and
// per-thread chunks are concatenated in chunk order, so the reached set,
// the discovery order and the edge set do not depend on the thread count.
template <class V, class Expand>
BfsOut<V> bfs_engine(const V& seed, Expand expand, const BfsCaps& caps, int threads) {
    BfsOut<V> out;
    std::set<V> known{seed};
    out.vertices.push_back(seed);
    std::vector<V> frontier{seed};
    bool capped = false;

    using Move = std::tuple<V, Root, V, bool>;  // src, label, target, target under caps
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<Move> moves;
        auto expand_range = [&expand](std::size_t lo, std::size_t hi, const std::vector<V>& from,
                                      std::vector<Move>& into) {
            for (std::size_t t = lo; t < hi; ++t)
                for (auto& [label, target, ok] : expand(from[t]))
                    into.emplace_back(from[t], label, std::move(target), ok);
        };
        if (threads <= 1 || frontier.size() < 2) {
            expand_range(0, frontier.size(), frontier, moves);
        } else {
            std::size_t workers = std::min<std::size_t>(threads, frontier.size());
            std::vector<std::vector<Move>> parts(workers);
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                std::size_t lo = frontier.size() * w / workers;
                std::size_t hi = frontier.size() * (w + 1) / workers;
                pool.emplace_back(expand_range, lo, hi, std::cref(frontier), std::ref(parts[w]));
            }
            for (auto& th : pool) th.join();
            for (auto& part : parts)
                for (auto& move : part) moves.push_back(std::move(move));
        }

        std::vector<V> next;
        for (auto& [src, label, target, ok] : moves) {
            if (!ok) {
                capped = true;
                continue;
            }
            if (!known.contains(target)) {
                if (known.size() >= caps.max_vertices) {
                    capped = true;
                    continue;
                }
                known.insert(target);
                out.vertices.push_back(target);
                next.push_back(target);
            }
            out.edges.emplace(src, target, label);
        }
        frontier = std::move(next);
    }

    // Keep the edge set symmetric even when caps cut the boundary short.
    for (auto edge : std::set<std::tuple<V, V, Root>>(out.edges))
        out.edges.emplace(std::get<1>(edge), std::get<0>(edge), std::get<2>(edge).negated());

    out.status = capped ? OrbitStatus::cap_exceeded : OrbitStatus::closed;
    return out;
}

template <class V, class Key>
CayleyGraph keyed_graph(const BfsOut<V>& bfs, Key key) {
    CayleyGraph g;
    std::map<V, std::size_t> index;
    for (const V& v : bfs.vertices) {
        index.emplace(v, g.vertices.size());
        g.vertices.push_back(key(v));
    }
    for (const auto& [src, dst, label] : bfs.edges)
        g.edges.push_back({index.at(src), index.at(dst), label});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<Root> signed_roots(int n, int m) {
    std::vector<Root> out;
    for (Sign sign : {Sign::plus, Sign::minus})
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) out.push_back({i, j, sign});
    return out;
}

}  // namespace

DiagramOrbit orbit_bfs(const Partition& seed, const BfsCaps& caps, int threads) {
    auto expand = [](const Partition& p) {
        std::vector<std::tuple<Root, Partition, bool>> out;
        for (Sign sign : {Sign::plus, Sign::minus})
            for (const Root& root : p.corners(sign)) out.emplace_back(root, p.apply(root), true);
        return out;
    };
    auto bfs = bfs_engine(seed, expand, caps, threads);

    DiagramOrbit orbit;
    orbit.graph = keyed_graph(bfs, [](const Partition& p) { return partition_key(p); });
    Int max_part = 0;
    for (const Partition& p : bfs.vertices) max_part = std::max<Int>(max_part, p.part(1));
    orbit.report.status = bfs.status;
    orbit.report.vertex_count = bfs.vertices.size();
    orbit.report.max_coordinate = max_part;
    orbit.vertices = std::move(bfs.vertices);
    return orbit;
}

ClassOrbit orbit_bfs(const EquivClass& seed, const BfsCaps& caps, int threads) {
    const RectConfig rect = seed.rect();
    rect.require_coprime();
    const auto roots = signed_roots(rect.n(), rect.m());
    auto expand = [&roots](const EquivClass& c) {
        std::vector<std::tuple<Root, EquivClass, bool>> out;
        for (const Root& root : roots)
            if (c.witness(root)) out.emplace_back(root, c.apply(root), true);
        return out;
    };
    auto bfs = bfs_engine(seed, expand, caps, threads);

    ClassOrbit orbit;
    orbit.graph = keyed_graph(bfs, [](const EquivClass& c) { return class_key(c); });
    Int max_k = 0;
    for (const EquivClass& c : bfs.vertices)
        max_k = std::max(max_k, std::abs(c.canonical().k));
    orbit.report.status = bfs.status;
    orbit.report.vertex_count = bfs.vertices.size();
    orbit.report.max_coordinate = max_k;
    orbit.vertices = std::move(bfs.vertices);
    return orbit;
}

namespace {

Int max_abs_entry(const SuperVector& v) {
    Int out = 0;
    for (Int x : v.a) out = std::max(out, std::abs(x));
    for (Int x : v.b) out = std::max(out, std::abs(x));
    return out;
}

}  // namespace

SvOrbit orbit_bfs(const RectConfig& rect, const Kappa& kappa, const SuperVector& seed,
                  const BfsCaps& caps, std::optional<std::pair<int, int>> base_restriction,
                  int threads) {
    if (seed.n() != rect.n() || seed.m() != rect.m())
        throw std::invalid_argument("seed blocks do not match the rectangle");
    int rows = base_restriction ? base_restriction->first : rect.n();
    int cols = base_restriction ? base_restriction->second : rect.m();
    if (rows < 1 || rows > rect.n() || cols < 1 || cols > rect.m())
        throw std::invalid_argument("base restriction must cut down the rectangle");
    const auto roots = signed_roots(rows, cols);

    auto expand = [&roots, &kappa, &caps](const SuperVector& v) {
        std::vector<std::tuple<Root, SuperVector, bool>> out;
        for (const Root& root : roots) {
            if (!on_hyperplane(v, root, kappa)) continue;
            SuperVector target = apply_tau(v, root, kappa);
            bool ok = max_abs_entry(target) <= caps.max_abs_coordinate;
            out.emplace_back(root, std::move(target), ok);
        }
        return out;
    };
    auto bfs = bfs_engine(seed, expand, caps, threads);

    SvOrbit orbit;
    orbit.graph = keyed_graph(bfs, [](const SuperVector& v) { return sv_key(v); });
    Int max_coord = 0;
    for (const SuperVector& v : bfs.vertices) max_coord = std::max(max_coord, max_abs_entry(v));
    orbit.report.status = bfs.status;
    orbit.report.vertex_count = bfs.vertices.size();
    orbit.report.max_coordinate = max_coord;
    orbit.vertices = std::move(bfs.vertices);
    return orbit;
}

ClassOrbit window_graph(const RectConfig& rect, DegreeWindow window) {
    rect.require_coprime();
    if (window.lo > window.hi)
        throw WindowEmpty("degree window [" + std::to_string(window.lo) + ", " +
                          std::to_string(window.hi) + "] is empty");

    ClassOrbit out;
    out.vertices = classes_in_degree_range(rect, window.lo, window.hi);
    std::map<LabeledDiagram, std::size_t> index;
    for (std::size_t t = 0; t < out.vertices.size(); ++t) {
        index.emplace(out.vertices[t].canonical(), t);
        out.graph.vertices.push_back(class_key(out.vertices[t]));
    }

    Int max_k = 0;
    for (std::size_t u = 0; u < out.vertices.size(); ++u) {
        max_k = std::max(max_k, std::abs(out.vertices[u].canonical().k));
        for (const Root& root : signed_roots(rect.n(), rect.m())) {
            if (!out.vertices[u].witness(root)) continue;
            EquivClass image = out.vertices[u].apply(root);
            auto it = index.find(image.canonical());
            if (it != index.end()) out.graph.edges.push_back({u, it->second, root});
        }
    }
    std::sort(out.graph.edges.begin(), out.graph.edges.end());
    out.report.vertex_count = out.vertices.size();
    out.report.max_coordinate = max_k;
    return out;
}

SvOrbit sv_window_graph(const RectConfig& rect, const ClassOrbit& classes) {
    rect.require_coprime();
    if (classes.vertices.empty()) throw WindowEmpty("class window has no vertices");
    const Kappa kappa = Kappa::principal(rect);

    Int lo = classes.vertices.front().degree(), hi = lo;
    SvOrbit out;
    std::map<SuperVector, std::size_t> index;
    for (const EquivClass& c : classes.vertices) {
        lo = std::min(lo, c.degree());
        hi = std::max(hi, c.degree());
        SuperVector image = build_x_hat(c.canonical());
        if (!index.emplace(image, out.vertices.size()).second)
            throw std::runtime_error("class window maps onto a repeated supervector: " +
                                     image.str());
        out.graph.vertices.push_back(sv_key(image));
        out.vertices.push_back(std::move(image));
    }

    Int max_coord = 0;
    for (std::size_t u = 0; u < out.vertices.size(); ++u) {
        max_coord = std::max(max_coord, max_abs_entry(out.vertices[u]));
        for (const Root& root : signed_roots(rect.n(), rect.m())) {
            if (!on_hyperplane(out.vertices[u], root, kappa)) continue;
            SuperVector target = apply_tau(out.vertices[u], root, kappa);
            auto it = index.find(target);
            if (it != index.end()) {
                out.graph.edges.push_back({u, it->second, root});
                continue;
            }
            auto deg = sv_degree(target);
            if (deg && *deg >= lo && *deg <= hi)
                throw std::runtime_error("window image is not closed under the action at " +
                                         out.vertices[u].str() + " via " + root.label());
        }
    }
    std::sort(out.graph.edges.begin(), out.graph.edges.end());
    out.report.vertex_count = out.vertices.size();
    out.report.max_coordinate = max_coord;
    return out;
}

IsoReport check_equivariant_iso(const RectConfig& rect, const CayleyGraph& class_graph,
                                const CayleyGraph& orbit_graph) {
    IsoReport report;
    auto fail = [&report](std::string what) {
        report.pass = false;
        if (report.first_mismatch.empty()) report.first_mismatch = std::move(what);
        return report;
    };

    if (class_graph.vertices.size() != orbit_graph.vertices.size())
        return fail("vertex counts differ: " + std::to_string(class_graph.vertices.size()) +
                    " classes vs " + std::to_string(orbit_graph.vertices.size()) + " orbit");

    std::map<std::string, std::size_t> orbit_index;
    for (std::size_t t = 0; t < orbit_graph.vertices.size(); ++t)
        orbit_index.emplace(orbit_graph.vertices[t], t);

    std::vector<std::size_t> image(class_graph.vertices.size());
    std::set<std::size_t> covered;
    for (std::size_t t = 0; t < class_graph.vertices.size(); ++t) {
        LabeledDiagram s = parse_labeled(rect, class_graph.vertices[t]);
        std::string key = sv_key(build_x_hat(s));
        auto it = orbit_index.find(key);
        if (it == orbit_index.end())
            return fail("image of " + class_graph.vertices[t] + " = " + key +
                        " is not an orbit vertex");
        if (!covered.insert(it->second).second)
            return fail("two classes map to the same orbit vertex " + key);
        image[t] = it->second;
        ++report.vertices_checked;
    }

    std::set<std::tuple<std::size_t, std::size_t, Root>> orbit_edges;
    for (const GraphEdge& e : orbit_graph.edges) orbit_edges.emplace(e.src, e.dst, e.label);
    if (class_graph.edges.size() != orbit_edges.size())
        return fail("edge counts differ: " + std::to_string(class_graph.edges.size()) +
                    " class edges vs " + std::to_string(orbit_edges.size()) + " orbit edges");
    for (const GraphEdge& e : class_graph.edges) {
        if (!orbit_edges.contains({image[e.src], image[e.dst], e.label}))
            return fail("class edge " + class_graph.vertices[e.src] + " -> " +
                        class_graph.vertices[e.dst] + " [" + e.label.label() +
                        "] has no matching orbit edge");
        ++report.edges_checked;
    }

    report.pass = true;
    return report;
}

std::vector<ScanRow> scan_finiteness(const std::vector<ScanCell>& cells, const BfsCaps& caps,
                                     int threads) {
    std::vector<ScanRow> out;
    for (const ScanCell& cell : cells) {
        ScanRow row;
        for (const SuperVector& seed : cell.seeds) {
            SvOrbit orbit = orbit_bfs(cell.rect, cell.kappa, seed, caps, cell.base_restriction,
                                      threads);
            row.statuses.push_back(orbit.report.status);
            row.max_vertex_count = std::max(row.max_vertex_count, orbit.report.vertex_count);
            ++(orbit.report.status == OrbitStatus::closed ? row.closed : row.capped);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<SuperVector> random_supervectors(const RectConfig& rect, std::size_t count, Int lo,
                                             Int hi, std::uint64_t prng_seed) {
    if (lo > hi) throw std::invalid_argument("empty seed entry range");
    std::mt19937_64 rng(prng_seed);
    // draw by modulo, not uniform_int_distribution: identical streams on
    // every platform for a fixed prng_seed
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    auto draw = [&rng, lo, span] { return lo + static_cast<Int>(rng() % span); };

    std::vector<SuperVector> out(count);
    for (SuperVector& v : out) {
        v.a.resize(rect.n());
        v.b.resize(rect.m());
        for (Int& x : v.a) x = draw();
        for (Int& x : v.b) x = draw();
    }
    return out;
}

ConjectureReport conjecture_scan(const RectConfig& rect, const std::vector<SuperVector>& reached) {
    const SuperVector base = base_point(rect);
    auto sorted_blocks = [](const SuperVector& v) {
        SuperVector s = v;
        std::sort(s.a.begin(), s.a.end());
        std::sort(s.b.begin(), s.b.end());
        return s;
    };
    const SuperVector base_sorted = sorted_blocks(base);

    ConjectureReport report;
    for (const SuperVector& v : reached) {
        ++report.scanned;
        if (auto c = translation_offset(v, base)) {
            if (!report.witness) report.witness = {v, *c};
            continue;
        }
        if (auto c = translation_offset(sorted_blocks(v), base_sorted))
            report.permutation_near_misses.emplace_back(v, *c);
    }
    return report;
}

}  // namespace tiso
