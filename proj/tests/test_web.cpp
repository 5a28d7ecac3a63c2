#include "webvac/web.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace webvac;

namespace {

StandardTableau tab(const Grid& g) { return StandardTableau::validate(g); }

const Grid kFourByThree{{1, 3, 5}, {2, 4, 8}, {6, 9, 10}, {7, 11, 12}};
const Grid kFiveByTwo{{1, 2}, {3, 4}, {5, 7}, {6, 8}, {9, 10}};
const Grid kThreeByThree{{1, 2, 3}, {4, 5, 8}, {6, 7, 9}};

std::set<std::pair<Arc, Arc>> crossing_pairs(const Arrangement& arr) {
  std::set<std::pair<Arc, Arc>> out;
  for (const Crossing& c : arr.crossings) out.insert({c.left.arc, c.right.arc});
  return out;
}

const WebEdge& edge_at_boundary(const WebGraph& w, int label) {
  for (const WebEdge& e : w.edges())
    if (e.tail == boundary_vertex(label) || e.head == boundary_vertex(label)) return e;
  throw std::logic_error("no edge at boundary point");
}

}  // namespace

TEST_CASE("arrangement of the 5x2 matching") {
  Arrangement arr = arrangement_from_ncm(ncm_from_tableau(tab(kFiveByTwo)));
  CHECK(arr.shared_points == std::vector<int>{3, 4, 5, 6, 7, 8});
  REQUIRE(arr.crossings.size() == 2);
  CHECK(crossing_pairs(arr) ==
        std::set<std::pair<Arc, Arc>>{{{1, 4}, {3, 7}}, {{3, 7}, {6, 10}}});
  CHECK(arr.crossings[0].point == Point2{7, 1});
  CHECK(arr.crossings[1].point == Point2{13, 1});
}

TEST_CASE("arrangement of the 4x3 matching") {
  Arrangement arr = arrangement_from_ncm(ncm_from_tableau(tab(kFourByThree)));
  CHECK(crossing_pairs(arr) ==
        std::set<std::pair<Arc, Arc>>{{{4, 6}, {5, 8}}, {{2, 10}, {9, 12}}});
}

TEST_CASE("single-arc matching has an empty arrangement") {
  Arrangement arr = arrangement_from_ncm(MulticoloredNcm::create(2, 2, {{{1, 2}}}));
  CHECK(arr.crossings.empty());
  CHECK(arr.shared_points.empty());
}

TEST_CASE("arrangement crossings match the brute-force pair scan") {
  for (const StandardTableau& t : enumerate_syt({3, 3})) {
    MulticoloredNcm m = ncm_from_tableau(t);
    Arrangement arr = arrangement_from_ncm(m);
    auto brute = oracles::brute_force_crossings(m);
    REQUIRE(arr.crossings.size() == brute.size());
    std::set<std::pair<Arc, Arc>> expected;
    for (const auto& p : brute) expected.insert({p.left, p.right});
    CHECK(crossing_pairs(arr) == expected);
    // every crossing shows up on exactly one ascending and one descending list
    std::vector<int> asc(arr.crossings.size(), 0), desc(arr.crossings.size(), 0);
    for (const ArcPath& path : arr.paths) {
      for (int ci : path.ascending) ++asc[ci];
      for (int ci : path.descending) ++desc[ci];
      CHECK(std::is_sorted(path.ascending.begin(), path.ascending.end(),
                           [&](int a, int b) {
                             return arr.crossings[a].point.x2 < arr.crossings[b].point.x2;
                           }));
      CHECK(std::is_sorted(path.descending.begin(), path.descending.end(),
                           [&](int a, int b) {
                             return arr.crossings[a].point.x2 < arr.crossings[b].point.x2;
                           }));
    }
    for (size_t i = 0; i < arr.crossings.size(); ++i) {
      CHECK(asc[i] == 1);
      CHECK(desc[i] == 1);
    }
  }
}

TEST_CASE("the 5x2 web has the expected counts") {
  WebGraph w = web_from_tableau(tab(kFiveByTwo));
  CHECK(w.boundary_count() == 10);
  CHECK(w.interior().size() == 10);  // 6 Y + 4 dumbbell
  CHECK(w.edges().size() == 20);
  for (int p = 1; p <= 10; ++p) CHECK(w.degree(boundary_vertex(p)) == 1);
  for (const InteriorVertex& iv : w.interior())
    CHECK(w.degree(interior_vertex(iv.id)) == 3);
  CHECK(check_flow(w).ok);
  CHECK(check_web_invariants(w).ok);
}

TEST_CASE("5x2 web single-arc interior edges") {
  WebGraph w = web_from_tableau(tab(kFiveByTwo));
  std::vector<int> flips = single_arc_interior_edges(w);
  CHECK(flips.size() == 8);
  std::multiset<int> weights;
  for (int i : flips) weights.insert(w.edges()[i].weight);
  CHECK(weights == std::multiset<int>{1, 2, 2, 2, 2, 3, 3, 4});
}

TEST_CASE("standardization flips the top-color boundary stubs") {
  MulticoloredNcm m = ncm_from_tableau(tab(kFourByThree));
  WebGraph raw = web_from_ncm(m);
  const WebEdge& before = edge_at_boundary(raw, 12);
  CHECK(before.head == boundary_vertex(12));
  CHECK(before.weight == 3);

  WebGraph wt = standardize_boundary(raw);
  const WebEdge& after = edge_at_boundary(wt, 12);
  CHECK(after.tail == boundary_vertex(12));
  CHECK(after.weight == 1);

  for (int p = 1; p <= wt.boundary_count(); ++p) {
    const WebEdge& e = edge_at_boundary(wt, p);
    CHECK(e.tail == boundary_vertex(p));
    CHECK(e.weight == 1);
  }
}

TEST_CASE("smallest webs") {
  // one arc, n = 2: a single undirected weight-1 edge between the endpoints
  WebGraph cup = standardize_boundary(web_from_ncm(MulticoloredNcm::create(2, 2, {{{1, 2}}})));
  REQUIRE(cup.edges().size() == 1);
  CHECK(cup.interior().empty());
  CHECK(cup.edges()[0].weight == 1);
  CHECK(cup.edges()[0].undirected);
  CHECK(check_web_invariants(cup).ok);

  // single column, n = 3: three weight-1 stubs into one sink
  WebGraph y = web_from_tableau(tab({{1}, {2}, {3}}));
  REQUIRE(y.interior().size() == 1);
  REQUIRE(y.edges().size() == 3);
  for (const WebEdge& e : y.edges()) {
    CHECK(e.weight == 1);
    CHECK(e.head == interior_vertex(1));
  }
  CHECK(check_flow(y).ok);
}

TEST_CASE("web invariants hold exhaustively on 3x3") {
  for (const StandardTableau& t : enumerate_syt({3, 3})) {
    MulticoloredNcm m = ncm_from_tableau(t);
    Arrangement arr = arrangement_from_ncm(m);
    WebGraph raw = web_from_ncm(m);
    WebGraph wt = standardize_boundary(raw);
    CHECK(check_web_invariants(raw).ok);
    CHECK(check_web_invariants(wt).ok);
    CHECK(wt.interior().size() == 2 * arr.crossings.size() + arr.shared_points.size());
    CHECK(wt.edges().size() == (3 * wt.interior().size() + 9) / 2);
  }
}

TEST_CASE("reflection is an involution that preserves the invariants") {
  for (const Grid& g : {kFiveByTwo, kThreeByThree, kFourByThree}) {
    WebGraph w = web_from_tableau(tab(g));
    WebGraph r = reflect_web(w);
    CHECK(reflect_web(r) == w);
    CHECK(check_web_invariants(r).ok);
    for (int p = 1; p <= r.boundary_count(); ++p) {
      const WebEdge& e = edge_at_boundary(r, p);
      CHECK(e.tail == boundary_vertex(p));
      CHECK(e.weight == 1);
    }
  }
}

TEST_CASE("edge flips") {
  WebGraph w = web_from_tableau(tab(kFourByThree));  // n = 4
  std::vector<int> all(w.edges().size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

  CHECK(flip_edges(flip_edges(w, all), all) == w);

  int interior_one = -1;
  for (size_t i = 0; i < w.edges().size(); ++i)
    if (w.edges()[i].weight == 1 && w.edges()[i].tail.kind == VertexId::Kind::Interior &&
        w.edges()[i].head.kind == VertexId::Kind::Interior)
      interior_one = static_cast<int>(i);
  REQUIRE(interior_one >= 0);
  WebGraph flipped = flip_edges(w, {interior_one});
  CHECK(flipped.edges()[interior_one].weight == 3);
  CHECK(flipped.edges()[interior_one].tail == w.edges()[interior_one].head);

  CHECK_THROWS_AS(flip_edges(w, {static_cast<int>(w.edges().size())}), UnknownEdge);
}

TEST_CASE("flow survives flipping every edge") {
  for (const StandardTableau& t : enumerate_syt({3, 3})) {
    WebGraph w = web_from_tableau(t);
    std::vector<int> all(w.edges().size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    CHECK(check_flow(flip_edges(w, all)).ok);
  }
}

TEST_CASE("n=2 webs have no single-arc interior edges") {
  for (const StandardTableau& t : enumerate_syt({2, 4}))
    CHECK(single_arc_interior_edges(web_from_tableau(t)).empty());
}

TEST_CASE("reflection maps the flip set onto the evacuated web's") {
  for (const StandardTableau& t : enumerate_syt({2, 3})) {
    WebGraph wt = web_from_tableau(t);
    WebGraph we = web_from_tableau(evacuate(t));
    WebGraph rw = reflect_web(wt);
    auto positions = [](const WebGraph& w, const std::vector<int>& idx) {
      std::set<std::pair<Point2, Point2>> out;
      for (int i : idx) {
        Point2 a = w.position(w.edges()[i].tail), b = w.position(w.edges()[i].head);
        if (b < a) std::swap(a, b);
        out.insert({a, b});
      }
      return out;
    };
    CHECK(positions(rw, single_arc_interior_edges(wt)) ==
          positions(we, single_arc_interior_edges(we)));
  }
}

TEST_CASE("check_flow reports a violating vertex") {
  std::vector<WebEdge> edges(3);
  edges[0] = {boundary_vertex(1), interior_vertex(1), 1, false, {}, {}};
  edges[1] = {interior_vertex(1), boundary_vertex(2), 1, false, {}, {}};
  edges[2] = {interior_vertex(1), boundary_vertex(3), 1, false, {}, {}};
  WebGraph w(3, 3, {{1, {4, 1}}}, edges);
  FlowCheck flow = check_flow(w);
  CHECK_FALSE(flow.ok);
  CHECK(flow.vertex == interior_vertex(1));
  CHECK(flow.residue == 2);  // in 1, out 2
}

TEST_CASE("anchored equality") {
  WebGraph w = web_from_tableau(tab(kFiveByTwo));
  CHECK(web_equal_anchored(w, w, WebEqualMode::Exact).ok);

  WebGraph we = web_from_tableau(evacuate(tab(kFiveByTwo)));
  WebGraph rw = reflect_web(w);
  CHECK(web_equal_anchored(rw, we, WebEqualMode::UndirectedUnweighted).ok);
  WitnessCheck exact = web_equal_anchored(rw, we, WebEqualMode::Exact);
  CHECK_FALSE(exact.ok);
  CHECK(exact.witness.find("direction or weight") != std::string::npos);

  WebGraph small = web_from_tableau(tab({{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(web_equal_anchored(w, small, WebEqualMode::Exact), MismatchedBoundary);
}

TEST_CASE("right square strong form on the 5x2 tableau") {
  WebGraph wt = web_from_tableau(tab(kFiveByTwo));
  WebGraph we = web_from_tableau(evacuate(tab(kFiveByTwo)));
  WebGraph rw = reflect_web(wt);
  WebGraph flipped = flip_edges(rw, single_arc_interior_edges(wt));
  CHECK(web_equal_anchored(flipped, we, WebEqualMode::Exact).ok);
  CHECK(web_equal_positional(flipped, we, WebEqualMode::Exact).ok);
}

TEST_CASE("sl3 conventions on the worked example") {
  WebGraph wt = apply_convention_34(web_from_tableau(tab(kThreeByThree)));
  std::map<int, std::pair<int, int>> io;
  for (const WebEdge& e : wt.edges()) {
    CHECK(e.weight == 1);
    if (e.head.kind == VertexId::Kind::Interior) ++io[e.head.num].first;
    if (e.tail.kind == VertexId::Kind::Interior) ++io[e.tail.num].second;
  }
  CHECK(io.size() == 5);
  for (const auto& [id, inout] : io)
    CHECK((inout.first == 0 || inout.second == 0));

  // the reflected web agrees with the evacuated one on the nose
  WebGraph lhs = apply_convention_34(reflect_web(web_from_tableau(tab(kThreeByThree))));
  WebGraph rhs = apply_convention_34(web_from_tableau(evacuate(tab(kThreeByThree))));
  CHECK(web_equal_anchored(lhs, rhs, WebEqualMode::Exact).ok);
  CHECK(web_equal_positional(lhs, rhs, WebEqualMode::Exact).ok);
}

TEST_CASE("conventions commute with reflection") {
  for (const StandardTableau& t : enumerate_syt({3, 3})) {
    WebGraph a = apply_convention_34(reflect_web(web_from_tableau(t)));
    WebGraph b = reflect_web(apply_convention_34(web_from_tableau(t)));
    CHECK(a == b);
  }
  for (const StandardTableau& t : enumerate_syt({4, 2})) {
    WebGraph a = apply_convention_34(reflect_web(web_from_tableau(t)));
    WebGraph b = reflect_web(apply_convention_34(web_from_tableau(t)));
    CHECK(a == b);
  }
}

TEST_CASE("the 4x3 web edge weight profile") {
  WebGraph w = web_from_tableau(tab(kFourByThree));
  CHECK(w.interior().size() == 10);
  CHECK(w.edges().size() == 21);
  std::multiset<int> interior_weights;
  int boundary_edges = 0;
  for (const WebEdge& e : w.edges()) {
    bool touches_boundary = e.tail.kind == VertexId::Kind::Boundary ||
                            e.head.kind == VertexId::Kind::Boundary;
    if (touches_boundary) {
      ++boundary_edges;
      CHECK(e.weight == 1);
      CHECK(e.tail.kind == VertexId::Kind::Boundary);
    } else {
      interior_weights.insert(e.weight);
    }
  }
  CHECK(boundary_edges == 12);
  // two dumbbell verticals plus seven single-arc interior edges
  CHECK(interior_weights == std::multiset<int>{1, 1, 1, 2, 2, 2, 2, 2, 3});
  CHECK(single_arc_interior_edges(w).size() == 7);
}

TEST_CASE("anchoring distinguishes relabeled cup diagrams") {
  WebGraph nested = web_from_tableau(tab({{1, 2}, {3, 4}}));   // cups 1-4, 2-3
  WebGraph side = web_from_tableau(tab({{1, 3}, {2, 4}}));     // cups 1-2, 3-4
  CHECK_FALSE(web_equal_anchored(nested, side, WebEqualMode::UndirectedUnweighted).ok);
  CHECK(web_equal_anchored(nested, nested, WebEqualMode::UndirectedUnweighted).ok);
}

TEST_CASE("disconnected webs trace faces per component") {
  // the sl3 example web splits into two pieces, one per arc group
  WebGraph w = web_from_tableau(tab(kThreeByThree));
  CHECK(check_web_invariants(w).ok);
  CHECK(w.interior().size() == 5);
  CHECK(w.boundary_count() == 9);
}

TEST_CASE("degenerate arrangements are rejected as nonstandard input") {
  auto bad = MulticoloredNcm::create(3, 4, {{{1, 2}, {3, 4}}, {{2, 3}}});
  CHECK_THROWS_AS(arrangement_from_ncm(bad), NotStandardRectangular);
  CHECK_THROWS_AS(web_from_ncm(bad), NotStandardRectangular);
}
