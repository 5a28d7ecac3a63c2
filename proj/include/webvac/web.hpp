#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "webvac/matching.hpp"

namespace webvac {

/// Exact plane point with doubled coordinates, so the half-integer apexes
/// and crossing points of slope-1 arc triangles stay integral.
struct Point2 {
  std::int64_t x2 = 0;
  std::int64_t y2 = 0;
  auto operator<=>(const Point2&) const = default;
};

/// Boundary vertices are addressed by their label 1..N, interior vertices
/// by a positive id. Boundary sorts before interior.
struct VertexId {
  enum class Kind : int { Boundary = 0, Interior = 1 };
  Kind kind = Kind::Boundary;
  int num = 0;
  auto operator<=>(const VertexId&) const = default;
};

inline VertexId boundary_vertex(int label) { return {VertexId::Kind::Boundary, label}; }
inline VertexId interior_vertex(int id) { return {VertexId::Kind::Interior, id}; }

/// An arc of the source matching running over an edge. `forward` is true
/// when the arc's clockwise traversal agrees with tail->head.
struct ArcUse {
  int color = 0;
  Arc arc{};
  bool forward = true;
  auto operator<=>(const ArcUse&) const = default;
};

struct WebEdge {
  VertexId tail;
  VertexId head;
  int weight = 0;
  bool undirected = false;            // convention flag, printed as 'u'
  std::optional<Point2> bend;         // apex bend, for geometry and rendering
  std::vector<ArcUse> provenance;     // one arc, or two for Y/dumbbell edges
};

struct InteriorVertex {
  int id = 0;
  Point2 pos;
};

/// Plane-embedded directed edge-weighted graph with labeled boundary.
/// Boundary vertices are implicit: label p sits at (2p, 0).
class WebGraph {
 public:
  WebGraph(int n, int boundary_points, std::vector<InteriorVertex> interior,
           std::vector<WebEdge> edges);

  int rank() const { return n_; }                    // n
  int boundary_count() const { return boundary_; }   // N
  const std::vector<InteriorVertex>& interior() const { return interior_; }
  const std::vector<WebEdge>& edges() const { return edges_; }

  Point2 position(VertexId v) const;
  int degree(VertexId v) const;
  bool has_provenance() const;

  /// Structural equality: same n, N, interior vertices and edge list values.
  bool operator==(const WebGraph& other) const;

 private:
  int n_;
  int boundary_;
  std::vector<InteriorVertex> interior_;  // strictly increasing ids
  std::vector<WebEdge> edges_;            // construction order
};

struct ArcRef {
  int color = 0;
  Arc arc{};
  auto operator<=>(const ArcRef&) const = default;
};

/// Crossing of two arcs, left.start < right.start < left.end < right.end.
/// The point lies on the descending segment of `left` and the ascending
/// segment of `right`, at x2 = right.start + left.end, y2 = left.end - right.start.
struct Crossing {
  ArcRef left;
  ArcRef right;
  Point2 point;
};

/// Ordered traversal events of one arc: start (boundary point or shared Y
/// site), crossings on the ascending then descending segment by increasing
/// x2, then the end.
struct ArcPath {
  ArcRef ref;
  bool start_shared = false;
  bool end_shared = false;
  std::vector<int> ascending;   // crossing indices; this arc is the right arc
  std::vector<int> descending;  // crossing indices; this arc is the left arc
};

struct Arrangement {
  int n = 0;
  int boundary = 0;
  std::vector<int> shared_points;  // ascending
  std::vector<Crossing> crossings; // sorted by (x2, y2)
  std::vector<ArcPath> paths;      // layer-major, start ascending
};

/// Exact crossing arrangement of a standard rectangular matching.
Arrangement arrangement_from_ncm(const MulticoloredNcm& m);

/// Builds the raw web: Y shapes at shared boundary points, dumbbells at
/// crossings, single-arc edges directed clockwise with the arc color,
/// two-arc edges directed with the higher color and weighted by the
/// difference. Interior ids: Y vertices by boundary point ascending, then
/// dumbbell pairs by crossing x2 ascending, top before bottom.
WebGraph web_from_ncm(const MulticoloredNcm& m);

/// Flips edges ending top-color arcs so every boundary stub is directed out
/// of the boundary with weight 1. An edge joining two boundary vertices
/// (only for n = 2) cannot point out of both; it keeps weight 1 and is
/// marked undirected instead.
WebGraph standardize_boundary(const WebGraph& w);

/// ncm_from_tableau + web_from_ncm + standardize_boundary.
WebGraph web_from_tableau(const StandardTableau& t);

/// Mirror over the vertical line x = (N+1)/2: positions map
/// x2 -> 2(N+1) - x2, boundary label i -> N+1-i, weights and directions are
/// carried along, provenance arcs are re-indexed and recolored.
WebGraph reflect_web(const WebGraph& w);

/// Reverses each listed edge and replaces its weight x by n-x. Edge indices
/// refer to w.edges(). Throws UnknownEdge.
WebGraph flip_edges(const WebGraph& w, const std::vector<int>& edge_indices);

/// Indices of the non-boundary edges whose provenance holds a single arc.
std::vector<int> single_arc_interior_edges(const WebGraph& w);

struct FlowCheck {
  bool ok = true;
  VertexId vertex;  // first violating interior vertex
  int residue = 0;  // (in - out) mod n, nonzero on failure
};

/// Flow mod n must vanish at every interior vertex.
FlowCheck check_flow(const WebGraph& w);

struct WitnessCheck {
  bool ok = true;
  std::string witness;
};

/// Degrees, weight range, flow, face-traced Euler characteristic per
/// component, and boundary contact of every component.
WitnessCheck check_web_invariants(const WebGraph& w);

enum class WebEqualMode { UndirectedUnweighted, Exact };

/// Anchored isomorphism: a vertex bijection fixing boundary labels that
/// maps edges to edges. Exact mode also matches direction, weight and the
/// undirected flag (undirected edges compare orientation-free).
/// Throws MismatchedBoundary when n or N differ.
WitnessCheck web_equal_anchored(const WebGraph& a, const WebGraph& b, WebEqualMode mode);

/// Comparison of identically positioned webs: edges are identified by their
/// endpoint coordinates. Independent of the isomorphism search.
WitnessCheck web_equal_positional(const WebGraph& a, const WebGraph& b, WebEqualMode mode);

/// Rewrites an sl3 or sl4 web from the tableau pipeline into the customary
/// form: for n=3 every edge weight 1, for n=4 weight-3 edges flipped to
/// weight 1 and weight-2 edges marked undirected; interior vertices end up
/// sources or sinks on their directed edges. Throws ConventionUnreachable
/// if the result violates those constraints.
WebGraph apply_convention_34(const WebGraph& w);

}  // namespace webvac
