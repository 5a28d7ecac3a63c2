#include "webvac/web.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace webvac {

namespace {

std::string vertex_str(VertexId v) {
  std::ostringstream os;
  os << (v.kind == VertexId::Kind::Boundary ? 'b' : 'i') << v.num;
  return os.str();
}

std::string point_str(Point2 p) {
  std::ostringstream os;
  os << "(" << p.x2 << "," << p.y2 << ")";
  return os.str();
}

std::string arc_str(const Arc& a) {
  std::ostringstream os;
  os << "(" << a.start << "," << a.end << ")";
  return os.str();
}

}  // namespace

WebGraph::WebGraph(int n, int boundary_points, std::vector<InteriorVertex> interior,
                   std::vector<WebEdge> edges)
    : n_(n), boundary_(boundary_points), interior_(std::move(interior)),
      edges_(std::move(edges)) {
  if (n_ < 2) throw Error("web rank must be at least 2");
  if (boundary_ < 1) throw Error("web needs boundary points");
  for (size_t i = 0; i < interior_.size(); ++i) {
    if (interior_[i].id <= 0) throw Error("interior vertex ids must be positive");
    if (i > 0 && interior_[i].id <= interior_[i - 1].id)
      throw Error("interior vertex ids must be strictly increasing");
  }
  auto valid = [&](VertexId v) {
    if (v.kind == VertexId::Kind::Boundary)
      return v.num >= 1 && v.num <= boundary_;
    auto it = std::lower_bound(interior_.begin(), interior_.end(), v.num,
                               [](const InteriorVertex& a, int id) { return a.id < id; });
    return it != interior_.end() && it->id == v.num;
  };
  for (const WebEdge& e : edges_) {
    if (!valid(e.tail) || !valid(e.head))
      throw Error("edge endpoint " + vertex_str(!valid(e.tail) ? e.tail : e.head) +
                  " does not exist");
    if (e.tail == e.head) throw Error("self-loops are not allowed");
    if (e.weight < 1 || e.weight > n_ - 1) {
      std::ostringstream os;
      os << "edge weight " << e.weight << " outside 1.." << n_ - 1;
      throw Error(os.str());
    }
    if (e.undirected && (2 * e.weight) % n_ != 0)
      throw Error("undirected flag requires a self-dual weight");
  }
}

Point2 WebGraph::position(VertexId v) const {
  if (v.kind == VertexId::Kind::Boundary) {
    if (v.num < 1 || v.num > boundary_) throw Error("boundary label out of range");
    return {2 * static_cast<std::int64_t>(v.num), 0};
  }
  auto it = std::lower_bound(interior_.begin(), interior_.end(), v.num,
                             [](const InteriorVertex& a, int id) { return a.id < id; });
  if (it == interior_.end() || it->id != v.num)
    throw Error("interior vertex " + vertex_str(v) + " does not exist");
  return it->pos;
}

int WebGraph::degree(VertexId v) const {
  int d = 0;
  for (const WebEdge& e : edges_)
    d += (e.tail == v) + (e.head == v);
  return d;
}

bool WebGraph::has_provenance() const {
  for (const WebEdge& e : edges_)
    if (e.provenance.empty()) return false;
  return true;
}

bool WebGraph::operator==(const WebGraph& other) const {
  if (n_ != other.n_ || boundary_ != other.boundary_) return false;
  if (interior_.size() != other.interior_.size()) return false;
  for (size_t i = 0; i < interior_.size(); ++i)
    if (interior_[i].id != other.interior_[i].id ||
        interior_[i].pos != other.interior_[i].pos)
      return false;
  // format-visible value: provenance and bends are construction metadata
  using Key = std::tuple<VertexId, VertexId, int, bool>;
  auto keys = [](const WebGraph& w) {
    std::vector<Key> ks;
    ks.reserve(w.edges_.size());
    for (const WebEdge& e : w.edges_)
      ks.emplace_back(e.tail, e.head, e.weight, e.undirected);
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  return keys(*this) == keys(other);
}

Arrangement arrangement_from_ncm(const MulticoloredNcm& m) {
  auto check = is_standard_rectangular(m);
  if (!check.ok) throw NotStandardRectangular(check.reason);

  Arrangement arr;
  arr.n = m.rank();
  arr.boundary = m.boundary_count();

  // arcs ending and starting at each point; shared points have both
  std::vector<std::vector<std::pair<int, Arc>>> ends(arr.boundary + 1), starts(arr.boundary + 1);
  std::vector<ArcRef> all;
  for (int x = 1; x <= m.layer_count(); ++x)
    for (const Arc& a : m.layer(x)) {
      starts[a.start].push_back({x, a});
      ends[a.end].push_back({x, a});
      all.push_back({x, a});
    }
  for (int p = 1; p <= arr.boundary; ++p)
    if (!ends[p].empty() && !starts[p].empty()) arr.shared_points.push_back(p);

  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      const Arc& a = all[i].arc;
      const Arc& b = all[j].arc;
      if (a.start < b.start && b.start < a.end && a.end < b.end) {
        Point2 p{static_cast<std::int64_t>(b.start) + a.end,
                 static_cast<std::int64_t>(a.end) - b.start};
        arr.crossings.push_back({all[i], all[j], p});
      }
    }
  std::sort(arr.crossings.begin(), arr.crossings.end(), [](const Crossing& a, const Crossing& b) {
    return std::tie(a.point.x2, a.point.y2, a.left, a.right) <
           std::tie(b.point.x2, b.point.y2, b.left, b.right);
  });
  for (size_t i = 1; i < arr.crossings.size(); ++i)
    if (arr.crossings[i].point == arr.crossings[i - 1].point)
      throw DegenerateArrangement("two crossings coincide at " +
                                  point_str(arr.crossings[i].point));
  for (const Crossing& c : arr.crossings)
    for (const ArcRef& r : all) {
      Point2 apex{static_cast<std::int64_t>(r.arc.start) + r.arc.end,
                  static_cast<std::int64_t>(r.arc.end) - r.arc.start};
      if (c.point == apex)
        throw DegenerateArrangement("crossing " + point_str(c.point) +
                                    " hits the apex of arc " + arc_str(r.arc));
    }

  for (const ArcRef& r : all) {
    ArcPath path;
    path.ref = r;
    path.start_shared = !ends[r.arc.start].empty();
    path.end_shared = !starts[r.arc.end].empty();
    for (size_t ci = 0; ci < arr.crossings.size(); ++ci) {
      if (arr.crossings[ci].right == r) path.ascending.push_back(static_cast<int>(ci));
      if (arr.crossings[ci].left == r) path.descending.push_back(static_cast<int>(ci));
    }
    // crossings are globally sorted by x2, so the per-segment lists are too
    arr.paths.push_back(std::move(path));
  }
  return arr;
}

WebGraph web_from_ncm(const MulticoloredNcm& m) {
  Arrangement arr = arrangement_from_ncm(m);
  const int n = arr.n;

  std::vector<InteriorVertex> interior;
  std::map<int, int> y_id;  // shared point -> interior id
  int next_id = 1;
  for (int p : arr.shared_points) {
    y_id[p] = next_id;
    interior.push_back({next_id, Point2{2 * static_cast<std::int64_t>(p), 1}});
    ++next_id;
  }
  // dumbbell pair per crossing: top above the crossing point, bottom on it,
  // so interior vertices stay strictly above the boundary line
  std::vector<int> top_id(arr.crossings.size()), bottom_id(arr.crossings.size());
  for (size_t c = 0; c < arr.crossings.size(); ++c) {
    Point2 p = arr.crossings[c].point;
    top_id[c] = next_id;
    interior.push_back({next_id, Point2{p.x2, p.y2 + 1}});
    ++next_id;
    bottom_id[c] = next_id;
    interior.push_back({next_id, p});
    ++next_id;
  }

  std::vector<WebEdge> edges;

  // shared boundary points: Y stub directed out of the boundary, weight 1
  std::map<int, std::pair<ArcRef, ArcRef>> shared_arcs;  // point -> (ending, starting)
  for (const ArcPath& path : arr.paths) {
    if (path.end_shared) shared_arcs[path.ref.arc.end].first = path.ref;
    if (path.start_shared) shared_arcs[path.ref.arc.start].second = path.ref;
  }
  for (int p : arr.shared_points) {
    const auto& [ending, starting] = shared_arcs[p];
    if (starting.color != ending.color + 1)
      throw Error("shared point colors are not consecutive; matching check bug");
    WebEdge e;
    e.tail = boundary_vertex(p);
    e.head = interior_vertex(y_id[p]);
    e.weight = 1;
    e.provenance = {{starting.color, starting.arc, true}, {ending.color, ending.arc, false}};
    edges.push_back(std::move(e));
  }

  // dumbbell verticals: directed with the clockwise trajectory of the
  // higher color, weighted by the color difference
  for (size_t c = 0; c < arr.crossings.size(); ++c) {
    const Crossing& cr = arr.crossings[c];
    WebEdge e;
    if (cr.right.color > cr.left.color) {
      e.tail = interior_vertex(bottom_id[c]);  // right arc ascends bottom -> top
      e.head = interior_vertex(top_id[c]);
      e.weight = cr.right.color - cr.left.color;
      e.provenance = {{cr.right.color, cr.right.arc, true}, {cr.left.color, cr.left.arc, false}};
    } else {
      e.tail = interior_vertex(top_id[c]);  // left arc descends top -> bottom
      e.head = interior_vertex(bottom_id[c]);
      e.weight = cr.left.color - cr.right.color;
      e.provenance = {{cr.left.color, cr.left.arc, true}, {cr.right.color, cr.right.arc, false}};
    }
    edges.push_back(std::move(e));
  }

  // single-arc curve edges between consecutive traversal events
  for (const ArcPath& path : arr.paths) {
    const Arc arc = path.ref.arc;
    struct Event {
      VertexId entry, exit;
      int phase;  // 0 ascending, 1 descending
    };
    std::vector<Event> events;
    VertexId start = path.start_shared ? interior_vertex(y_id[arc.start])
                                       : boundary_vertex(arc.start);
    events.push_back({start, start, 0});
    for (int ci : path.ascending)
      events.push_back({interior_vertex(bottom_id[ci]), interior_vertex(top_id[ci]), 0});
    for (int ci : path.descending)
      events.push_back({interior_vertex(top_id[ci]), interior_vertex(bottom_id[ci]), 1});
    VertexId finish = path.end_shared ? interior_vertex(y_id[arc.end])
                                      : boundary_vertex(arc.end);
    events.push_back({finish, finish, 1});

    for (size_t i = 0; i + 1 < events.size(); ++i) {
      WebEdge e;
      e.tail = events[i].exit;
      e.head = events[i + 1].entry;
      e.weight = path.ref.color;
      if (events[i].phase == 0 && events[i + 1].phase == 1)
        e.bend = Point2{static_cast<std::int64_t>(arc.start) + arc.end,
                        static_cast<std::int64_t>(arc.end) - arc.start};
      e.provenance = {{path.ref.color, arc, true}};
      edges.push_back(std::move(e));
    }
  }

  return WebGraph(n, arr.boundary, std::move(interior), std::move(edges));
}

WebGraph standardize_boundary(const WebGraph& w) {
  std::vector<WebEdge> edges = w.edges();
  for (WebEdge& e : edges) {
    if (e.head.kind != VertexId::Kind::Boundary) continue;
    if (e.tail.kind == VertexId::Kind::Boundary) {
      // an edge joining two boundary vertices cannot point out of both
      e.undirected = true;
    } else {
      std::swap(e.tail, e.head);
      e.weight = w.rank() - e.weight;
      for (ArcUse& u : e.provenance) u.forward = !u.forward;
    }
  }
  return WebGraph(w.rank(), w.boundary_count(), w.interior(), std::move(edges));
}

WebGraph web_from_tableau(const StandardTableau& t) {
  return standardize_boundary(web_from_ncm(ncm_from_tableau(t)));
}

WebGraph reflect_web(const WebGraph& w) {
  const int total = w.boundary_count();
  const std::int64_t axis2 = 2 * static_cast<std::int64_t>(total + 1);
  auto flip_point = [&](Point2 p) { return Point2{axis2 - p.x2, p.y2}; };
  auto flip_vertex = [&](VertexId v) {
    if (v.kind == VertexId::Kind::Boundary) return boundary_vertex(total + 1 - v.num);
    return v;
  };
  std::vector<InteriorVertex> interior = w.interior();
  for (InteriorVertex& iv : interior) iv.pos = flip_point(iv.pos);
  std::vector<WebEdge> edges = w.edges();
  for (WebEdge& e : edges) {
    e.tail = flip_vertex(e.tail);
    e.head = flip_vertex(e.head);
    if (e.bend) e.bend = flip_point(*e.bend);
    for (ArcUse& u : e.provenance) {
      u.arc = {total + 1 - u.arc.end, total + 1 - u.arc.start};
      u.color = w.rank() - u.color;
      u.forward = !u.forward;  // the reflected arc's clockwise run reverses
    }
  }
  return WebGraph(w.rank(), total, std::move(interior), std::move(edges));
}

WebGraph flip_edges(const WebGraph& w, const std::vector<int>& edge_indices) {
  std::vector<WebEdge> edges = w.edges();
  std::vector<int> unique_indices = edge_indices;  // flips act on an edge set
  std::sort(unique_indices.begin(), unique_indices.end());
  unique_indices.erase(std::unique(unique_indices.begin(), unique_indices.end()),
                       unique_indices.end());
  for (int idx : unique_indices) {
    if (idx < 0 || idx >= static_cast<int>(edges.size())) {
      std::ostringstream os;
      os << "edge index " << idx << " out of range 0.." << edges.size() - 1;
      throw UnknownEdge(os.str());
    }
    WebEdge& e = edges[idx];
    std::swap(e.tail, e.head);
    e.weight = w.rank() - e.weight;
    for (ArcUse& u : e.provenance) u.forward = !u.forward;
  }
  return WebGraph(w.rank(), w.boundary_count(), w.interior(), std::move(edges));
}

std::vector<int> single_arc_interior_edges(const WebGraph& w) {
  if (!w.has_provenance())
    throw Error("web carries no provenance; built from a file, not a matching");
  std::vector<int> out;
  for (size_t i = 0; i < w.edges().size(); ++i) {
    const WebEdge& e = w.edges()[i];
    if (e.provenance.size() == 1 && e.tail.kind == VertexId::Kind::Interior &&
        e.head.kind == VertexId::Kind::Interior)
      out.push_back(static_cast<int>(i));
  }
  return out;
}

FlowCheck check_flow(const WebGraph& w) {
  std::map<int, int> residue;  // interior id -> (in - out)
  for (const InteriorVertex& iv : w.interior()) residue[iv.id] = 0;
  for (const WebEdge& e : w.edges()) {
    if (e.head.kind == VertexId::Kind::Interior) residue[e.head.num] += e.weight;
    if (e.tail.kind == VertexId::Kind::Interior) residue[e.tail.num] -= e.weight;
  }
  for (const auto& [id, r] : residue) {
    int mod = ((r % w.rank()) + w.rank()) % w.rank();
    if (mod != 0) return {false, interior_vertex(id), mod};
  }
  return {};
}

namespace {

// dense vertex indexing: boundary label p -> p-1, i-th interior -> N + i
struct DenseIndexer {
  explicit DenseIndexer(const WebGraph& w) : boundary(w.boundary_count()) {
    for (size_t i = 0; i < w.interior().size(); ++i)
      interior_slot[w.interior()[i].id] = boundary + static_cast<int>(i);
  }
  int operator()(VertexId v) const {
    if (v.kind == VertexId::Kind::Boundary) return v.num - 1;
    return interior_slot.at(v.num);
  }
  int count(const WebGraph& w) const {
    return boundary + static_cast<int>(w.interior().size());
  }
  int boundary;
  std::map<int, int> interior_slot;
};

Point2 direction_at(const WebGraph& w, const WebEdge& e, bool at_tail) {
  Point2 here = w.position(at_tail ? e.tail : e.head);
  Point2 target = e.bend ? *e.bend : w.position(at_tail ? e.head : e.tail);
  return {target.x2 - here.x2, target.y2 - here.y2};
}

// counterclockwise angular order starting from the positive x-axis
bool angle_less(Point2 a, Point2 b) {
  auto half = [](Point2 d) { return (d.y2 > 0 || (d.y2 == 0 && d.x2 > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  __int128 cross = static_cast<__int128>(a.x2) * b.y2 - static_cast<__int128>(a.y2) * b.x2;
  return cross > 0;
}

// per dense vertex: incident edge-ends (edge index, at_tail) sorted CCW
std::vector<std::vector<std::pair<int, bool>>> rotation_orders(const WebGraph& w,
                                                               const DenseIndexer& dense) {
  std::vector<std::vector<std::pair<int, bool>>> rot(dense.count(w));
  for (size_t i = 0; i < w.edges().size(); ++i) {
    const WebEdge& e = w.edges()[i];
    rot[dense(e.tail)].push_back({static_cast<int>(i), true});
    rot[dense(e.head)].push_back({static_cast<int>(i), false});
  }
  for (auto& ends : rot)
    std::sort(ends.begin(), ends.end(), [&](const auto& a, const auto& b) {
      Point2 da = direction_at(w, w.edges()[a.first], a.second);
      Point2 db = direction_at(w, w.edges()[b.first], b.second);
      if (da != db) {
        if (angle_less(da, db)) return true;
        if (angle_less(db, da)) return false;
      }
      return a < b;  // collinear tie, deterministic fallback
    });
  return rot;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

WitnessCheck check_web_invariants(const WebGraph& w) {
  auto fail = [](const std::string& s) { return WitnessCheck{false, s}; };

  std::vector<int> degree(w.boundary_count() + 1, 0);
  std::map<int, int> interior_degree;
  for (const InteriorVertex& iv : w.interior()) interior_degree[iv.id] = 0;
  for (const WebEdge& e : w.edges()) {
    for (VertexId v : {e.tail, e.head}) {
      if (v.kind == VertexId::Kind::Boundary)
        ++degree[v.num];
      else
        ++interior_degree[v.num];
    }
    if (e.weight < 1 || e.weight > w.rank() - 1)
      return fail("edge weight out of range at " + vertex_str(e.tail));
  }
  for (int p = 1; p <= w.boundary_count(); ++p)
    if (degree[p] != 1) {
      std::ostringstream os;
      os << "boundary vertex b" << p << " has degree " << degree[p];
      return fail(os.str());
    }
  for (const auto& [id, d] : interior_degree)
    if (d != 3) {
      std::ostringstream os;
      os << "interior vertex i" << id << " has degree " << d;
      return fail(os.str());
    }

  FlowCheck flow = check_flow(w);
  if (!flow.ok) {
    std::ostringstream os;
    os << "flow residue " << flow.residue << " at " << vertex_str(flow.vertex);
    return fail(os.str());
  }

  // Euler characteristic of the rotation system, per connected component
  DenseIndexer dense(w);
  const int vcount = dense.count(w);
  UnionFind uf(vcount);
  for (const WebEdge& e : w.edges()) uf.unite(dense(e.tail), dense(e.head));

  auto rot = rotation_orders(w, dense);
  // darts: 2*edge + 0 tail->head, +1 head->tail; face successor follows the
  // reverse dart's CCW successor at the target vertex
  const int ecount = static_cast<int>(w.edges().size());
  std::vector<int> slot_of_dart(2 * ecount, -1);
  for (int v = 0; v < vcount; ++v)
    for (size_t s = 0; s < rot[v].size(); ++s) {
      auto [ei, at_tail] = rot[v][s];
      slot_of_dart[2 * ei + (at_tail ? 0 : 1)] = static_cast<int>(s);
    }
  auto next_dart = [&](int d) {
    int ei = d / 2;
    bool from_tail = (d % 2) == 0;
    const WebEdge& e = w.edges()[ei];
    VertexId target = from_tail ? e.head : e.tail;
    int tv = dense(target);
    int reverse = 2 * ei + (from_tail ? 1 : 0);
    int slot = slot_of_dart[reverse];
    int nslot = (slot + 1) % static_cast<int>(rot[tv].size());
    auto [nei, n_at_tail] = rot[tv][nslot];
    return 2 * nei + (n_at_tail ? 0 : 1);
  };
  std::vector<char> seen(2 * ecount, 0);
  std::map<int, int> faces, verts, edges_per_comp;
  for (int d = 0; d < 2 * ecount; ++d) {
    if (seen[d]) continue;
    int root = uf.find(dense(w.edges()[d / 2].tail));
    ++faces[root];
    for (int cur = d; !seen[cur]; cur = next_dart(cur)) seen[cur] = 1;
  }
  for (int v = 0; v < vcount; ++v)
    if (!rot[v].empty()) ++verts[uf.find(v)];
  for (const WebEdge& e : w.edges()) ++edges_per_comp[uf.find(dense(e.tail))];
  for (int v = 0; v < vcount; ++v)
    if (rot[v].empty()) return fail("isolated vertex");
  for (const auto& [root, f] : faces) {
    int chi = verts[root] - edges_per_comp[root] + f;
    if (chi != 2) {
      std::ostringstream os;
      os << "component Euler characteristic " << chi << " (expected 2)";
      return fail(os.str());
    }
  }
  // every component must reach the boundary
  std::set<int> with_boundary;
  for (int p = 0; p < w.boundary_count(); ++p) with_boundary.insert(uf.find(p));
  for (int v = w.boundary_count(); v < vcount; ++v)
    if (!with_boundary.count(uf.find(v)))
      return fail("component without boundary contact");
  return {};
}

namespace {

// 0 = out of the vertex, 1 = into it, 2 = undirected
struct RelEdge {
  int other;   // dense index of the far endpoint
  int weight;
  int dir;
};

int attr_code(const WebEdge& e, bool from_tail, WebEqualMode mode) {
  if (mode == WebEqualMode::UndirectedUnweighted) return 0;
  if (e.undirected) return 2;
  return from_tail ? 0 : 1;
}

int attr_weight(const WebEdge& e, WebEqualMode mode) {
  return mode == WebEqualMode::UndirectedUnweighted ? 0 : e.weight;
}

using EdgeKey = std::tuple<int, int, int, int>;  // endpoints (ordered), weight, dircode

std::vector<EdgeKey> canonical_edge_keys(const WebGraph& w, const DenseIndexer& dense,
                                         const std::vector<int>& relabel, WebEqualMode mode) {
  std::vector<EdgeKey> keys;
  keys.reserve(w.edges().size());
  for (const WebEdge& e : w.edges()) {
    int t = relabel[dense(e.tail)], h = relabel[dense(e.head)];
    int wgt = attr_weight(e, mode);
    bool directed = mode == WebEqualMode::Exact && !e.undirected;
    if (!directed && t > h) std::swap(t, h);
    int dir = directed ? 1 : (mode == WebEqualMode::Exact ? 2 : 0);
    keys.emplace_back(t, h, wgt, dir);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

WitnessCheck web_equal_anchored(const WebGraph& a, const WebGraph& b, WebEqualMode mode) {
  if (a.boundary_count() != b.boundary_count())
    throw MismatchedBoundary("webs have different boundary sizes");
  if (a.rank() != b.rank())
    throw MismatchedBoundary("webs have different ranks");
  if (a.interior().size() != b.interior().size())
    return {false, "interior vertex counts differ"};
  if (a.edges().size() != b.edges().size())
    return {false, "edge counts differ"};

  DenseIndexer da(a), db(b);
  const int nb = a.boundary_count();
  const int ia = static_cast<int>(a.interior().size());

  auto adjacency = [&](const WebGraph& w, const DenseIndexer& dense) {
    std::vector<std::vector<RelEdge>> adj(dense.count(w));
    for (const WebEdge& e : w.edges()) {
      int t = dense(e.tail), h = dense(e.head);
      adj[t].push_back({h, attr_weight(e, mode), attr_code(e, true, mode)});
      adj[h].push_back({t, attr_weight(e, mode), attr_code(e, false, mode)});
    }
    return adj;
  };
  auto adj_a = adjacency(a, da), adj_b = adjacency(b, db);

  // interior match order: breadth-first from the anchored boundary
  std::vector<int> order;
  {
    std::vector<char> visited(da.count(a), 0);
    std::vector<int> queue;
    for (int p = 0; p < nb; ++p) {
      queue.push_back(p);
      visited[p] = 1;
    }
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (const RelEdge& r : adj_a[queue[qi]])
        if (!visited[r.other]) {
          visited[r.other] = 1;
          queue.push_back(r.other);
          order.push_back(r.other);
        }
    for (int v = nb; v < da.count(a); ++v)
      if (!visited[v]) order.push_back(v);
  }

  std::vector<int> match(da.count(a), -1);  // a-dense -> b-dense
  std::vector<char> used(db.count(b), 0);
  for (int p = 0; p < nb; ++p) match[p] = p;

  // multiset of (weight, dir) attrs on edges between v and a mapped target
  auto attrs_between = [](const std::vector<RelEdge>& edges, int target) {
    std::vector<std::pair<int, int>> at;
    for (const RelEdge& r : edges)
      if (r.other == target) at.push_back({r.weight, r.dir});
    std::sort(at.begin(), at.end());
    return at;
  };

  auto consistent = [&](int va, int vb) {
    if (adj_a[va].size() != adj_b[vb].size()) return false;
    std::set<int> targets;
    for (const RelEdge& r : adj_a[va])
      if (r.other < nb || match[r.other] >= 0) targets.insert(r.other);
    for (int t : targets)
      if (attrs_between(adj_a[va], t) != attrs_between(adj_b[vb], match[t]))
        return false;
    // the image must not touch mapped vertices the source does not
    std::set<int> images;
    for (int t : targets) images.insert(match[t]);
    std::vector<char> is_mapped(db.count(b), 0);
    for (int p = 0; p < nb; ++p) is_mapped[p] = 1;
    for (int v = 0; v < da.count(a); ++v)
      if (match[v] >= 0) is_mapped[match[v]] = 1;
    for (const RelEdge& r : adj_b[vb])
      if (is_mapped[r.other] && !images.count(r.other)) {
        // edge to a mapped vertex with no counterpart at va
        return false;
      }
    return true;
  };

  std::function<bool(size_t)> search = [&](size_t k) -> bool {
    if (k == order.size()) return true;
    int va = order[k];
    for (int ub = 0; ub < ia; ++ub) {
      int vb = nb + ub;
      if (used[vb]) continue;
      if (!consistent(va, vb)) continue;
      match[va] = vb;
      used[vb] = 1;
      if (search(k + 1)) return true;
      match[va] = -1;
      used[vb] = 0;
    }
    return false;
  };

  bool found = search(0);
  if (found) {
    // full recheck of the induced edge correspondence
    std::vector<int> ident(db.count(b));
    std::iota(ident.begin(), ident.end(), 0);
    auto ka = canonical_edge_keys(a, da, match, mode);
    auto kb = canonical_edge_keys(b, db, ident, mode);
    if (ka == kb) return {};
    found = false;
  }
  if (mode == WebEqualMode::Exact) {
    // if the graphs agree undirected, name an edge whose attributes differ
    auto undirected = web_equal_anchored(a, b, WebEqualMode::UndirectedUnweighted);
    if (undirected.ok)
      return {false, "underlying graphs agree; some edge differs in direction or weight"};
  }
  return {false, "no anchored isomorphism"};
}

WitnessCheck web_equal_positional(const WebGraph& a, const WebGraph& b, WebEqualMode mode) {
  if (a.boundary_count() != b.boundary_count())
    throw MismatchedBoundary("webs have different boundary sizes");
  if (a.rank() != b.rank())
    throw MismatchedBoundary("webs have different ranks");
  auto positions = [](const WebGraph& w) {
    std::vector<Point2> ps;
    for (const InteriorVertex& iv : w.interior()) ps.push_back(iv.pos);
    std::sort(ps.begin(), ps.end());
    return ps;
  };
  if (positions(a) != positions(b))
    return {false, "interior vertex positions differ"};

  using Key = std::tuple<Point2, Point2, int, int>;
  auto keys = [&](const WebGraph& w) {
    std::vector<Key> ks;
    for (const WebEdge& e : w.edges()) {
      Point2 t = w.position(e.tail), h = w.position(e.head);
      int wgt = attr_weight(e, mode);
      bool directed = mode == WebEqualMode::Exact && !e.undirected;
      if (!directed && h < t) std::swap(t, h);
      ks.emplace_back(t, h, wgt, directed ? 1 : 0);
    }
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  auto ka = keys(a), kb = keys(b);
  if (ka == kb) return {};
  for (size_t i = 0; i < std::min(ka.size(), kb.size()); ++i)
    if (ka[i] != kb[i]) {
      std::ostringstream os;
      os << "edges differ at " << point_str(std::get<0>(ka[i])) << "-"
         << point_str(std::get<1>(ka[i]));
      return {false, os.str()};
    }
  return {false, "edge counts differ"};
}

WebGraph apply_convention_34(const WebGraph& w) {
  const int n = w.rank();
  if (n != 3 && n != 4)
    throw Error("conventions are defined for n = 3 and n = 4 only");
  std::vector<int> to_flip;
  for (size_t i = 0; i < w.edges().size(); ++i)
    if (w.edges()[i].weight == n - 1) to_flip.push_back(static_cast<int>(i));
  WebGraph out = flip_edges(w, to_flip);
  std::vector<WebEdge> edges = out.edges();
  if (n == 4)
    for (WebEdge& e : edges)
      if (e.weight == 2) e.undirected = true;
  WebGraph result(n, w.boundary_count(), w.interior(), std::move(edges));

  for (const WebEdge& e : result.edges()) {
    if (n == 3 && e.weight != 1)
      throw ConventionUnreachable("an sl3 edge kept a weight other than 1");
    if (n == 4 && e.weight != 1 && e.weight != 2)
      throw ConventionUnreachable("an sl4 edge kept a weight other than 1 or 2");
    if (e.head.kind == VertexId::Kind::Boundary && !e.undirected)
      throw ConventionUnreachable("boundary vertex " + vertex_str(e.head) +
                                  " is not a source");
  }
  // every interior vertex must be a source or a sink on its directed edges
  std::map<int, std::pair<int, int>> io;  // id -> (directed in, directed out)
  for (const WebEdge& e : result.edges()) {
    if (e.undirected) continue;
    if (e.head.kind == VertexId::Kind::Interior) ++io[e.head.num].first;
    if (e.tail.kind == VertexId::Kind::Interior) ++io[e.tail.num].second;
  }
  for (const auto& [id, inout] : io)
    if (inout.first > 0 && inout.second > 0)
      throw ConventionUnreachable("interior vertex i" + std::to_string(id) +
                                  " is neither a source nor a sink");
  return result;
}

}  // namespace webvac
