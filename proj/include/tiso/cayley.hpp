#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiso/base.hpp"
#include "tiso/classes.hpp"
#include "tiso/diagrams.hpp"
#include "tiso/svaction.hpp"

namespace tiso {

struct BfsCaps {
    std::size_t max_vertices = 200000;
    Int max_abs_coordinate = 1000000;
};

enum class OrbitStatus { closed, cap_exceeded };

std::string status_name(OrbitStatus s);  // "Closed" / "CapExceeded"

struct GraphEdge {
    std::size_t src = 0;
    std::size_t dst = 0;
    Root label;

    auto operator<=>(const GraphEdge&) const = default;
};

/// Directed multigraph with canonical JSON vertex keys. Every edge's reverse
/// (negated label) is present whenever both endpoints are.
struct CayleyGraph {
    std::vector<std::string> vertices;  // unique, in discovery order
    std::vector<GraphEdge> edges;       // sorted by (src, dst, label)

    std::optional<std::size_t> index_of(const std::string& key) const;
};

struct ConjectureReport {
    std::optional<std::pair<SuperVector, Int>> witness;  // vertex, shift from base point
    std::vector<std::pair<SuperVector, Int>> permutation_near_misses;
    std::size_t scanned = 0;
};

struct OrbitReport {
    OrbitStatus status = OrbitStatus::closed;
    std::size_t vertex_count = 0;
    Int max_coordinate = 0;
    std::optional<ConjectureReport> witnesses;  // attached by conjecture scans
};

struct DiagramOrbit {
    CayleyGraph graph;
    OrbitReport report;
    std::vector<Partition> vertices;
};

struct ClassOrbit {
    CayleyGraph graph;
    OrbitReport report;
    std::vector<EquivClass> vertices;
};

struct SvOrbit {
    CayleyGraph graph;
    OrbitReport report;
    std::vector<SuperVector> vertices;
};

/// Closure under box moves at corners. Finite: the whole diagram set.
DiagramOrbit orbit_bfs(const Partition& seed, const BfsCaps& caps, int threads = 1);

/// Closure of a class under all signed-root actions.
ClassOrbit orbit_bfs(const EquivClass& seed, const BfsCaps& caps, int threads = 1);

/// Closure of a supervector under the kappa action; base_restriction (n',m')
/// limits roots to i <= n', j <= m'. Closed only if every applicable move
/// from every reached vertex stays inside the set under the caps.
SvOrbit orbit_bfs(const RectConfig& rect, const Kappa& kappa, const SuperVector& seed,
                  const BfsCaps& caps, std::optional<std::pair<int, int>> base_restriction = {},
                  int threads = 1);

struct DegreeWindow {
    Int lo = 0;
    Int hi = 0;
};

/// All classes with degree in the window plus every action edge between
/// them. Throws WindowEmpty for an inverted window.
ClassOrbit window_graph(const RectConfig& rect, DegreeWindow window);

/// The window's image under build_x_hat, with edges recomputed directly by
/// the principal supervector action; a move from an image vertex whose
/// target degree stays inside the window must land in the image set, and a
/// violation throws (the image is a genuine slice of the orbit).
SvOrbit sv_window_graph(const RectConfig& rect, const ClassOrbit& classes);

struct IsoReport {
    bool pass = false;
    std::size_t vertices_checked = 0;
    std::size_t edges_checked = 0;
    std::string first_mismatch;  // empty when pass
};

/// Verify that build_x_hat is a bijection from the class window onto the
/// supervector window carrying every labeled edge to the identically labeled
/// edge. Label-preserving map verification, not graph isomorphism search.
IsoReport check_equivariant_iso(const RectConfig& rect, const CayleyGraph& class_graph,
                                const CayleyGraph& orbit_graph);

struct ScanCell {
    RectConfig rect;
    Kappa kappa;
    std::optional<std::pair<int, int>> base_restriction;
    std::vector<SuperVector> seeds;
};

struct ScanRow {
    std::vector<OrbitStatus> statuses;  // one per seed
    std::size_t closed = 0;
    std::size_t capped = 0;
    std::size_t max_vertex_count = 0;
};

std::vector<ScanRow> scan_finiteness(const std::vector<ScanCell>& cells, const BfsCaps& caps,
                                     int threads = 1);

/// Deterministic seeds with entries in [lo, hi], reproducible for a fixed
/// prng_seed on any platform.
std::vector<SuperVector> random_supervectors(const RectConfig& rect, std::size_t count, Int lo,
                                             Int hi, std::uint64_t prng_seed);

/// Scan reached vertices for a translate of the base point; vectors that
/// match only after sorting each block are flagged separately. Absence is
/// inconclusive, never a refutation.
ConjectureReport conjecture_scan(const RectConfig& rect, const std::vector<SuperVector>& reached);

}  // namespace tiso
