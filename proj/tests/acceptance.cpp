// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "webvac/io.hpp"
#include "webvac/render.hpp"
#include "webvac/verify.hpp"

using namespace webvac;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

StandardTableau tab(const Grid& g) { return StandardTableau::validate(g); }

std::vector<Shape> shape_set() {
  std::vector<Shape> shapes;
  for (int k = 1; k <= 8; ++k) shapes.push_back({2, k});
  for (Shape s : {Shape{3, 2}, Shape{3, 3}, Shape{3, 4}, Shape{4, 2}, Shape{4, 3}, Shape{5, 2}})
    shapes.push_back(s);
  return shapes;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// criterion 8 cross-check: filter all N! fillings
std::uint64_t brute_force_count(Shape shape) {
  const int total = shape.boxes();
  std::vector<int> perm(total);
  for (int i = 0; i < total; ++i) perm[i] = i + 1;
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int r = 0; r < shape.rows && ok; ++r)
      for (int c = 0; c < shape.cols && ok; ++c) {
        int v = perm[r * shape.cols + c];
        if (c > 0 && perm[r * shape.cols + c - 1] >= v) ok = false;
        if (r > 0 && perm[(r - 1) * shape.cols + c] >= v) ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

void criterion1() {
  struct Golden {
    Grid input, expected;
    const char* name;
  };
  const std::vector<Golden> goldens = {
      {{{1, 3}, {2, 4}, {5, 6}}, {{1, 2}, {3, 5}, {4, 6}}, "3x2"},
      {{{1, 3, 5}, {2, 4, 8}, {6, 9, 10}, {7, 11, 12}},
       {{1, 2, 6}, {3, 4, 7}, {5, 9, 11}, {8, 10, 12}},
       "4x3"},
      {{{1, 2}, {3, 4}, {5, 7}, {6, 8}, {9, 10}},
       {{1, 2}, {3, 5}, {4, 6}, {7, 8}, {9, 10}},
       "5x2"},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const Golden& g : goldens) {
    StandardTableau t = tab(g.input);
    evacuate(t);  // warm
    auto start = Clock::now();
    StandardTableau result = evacuate(t);
    double ms = ms_since(start);
    bool exact = result == tab(g.expected);
    bool fast = ms < 1.0;
    ok = ok && exact && fast;
    detail << g.name << "=" << (exact ? "exact" : "WRONG") << "/" << ms << "ms ";
  }
  report(1, "golden evacuations", ok, detail.str());
}

void run_per_tableau(int criterion, const std::string& what,
                     const std::vector<Shape>& shapes,
                     bool (*check)(const StandardTableau&), double limit_ms = 0) {
  auto start = Clock::now();
  std::uint64_t checked = 0;
  std::string first_fail;
  for (Shape shape : shapes)
    for (const StandardTableau& t : enumerate_syt(shape)) {
      ++checked;
      if (!check(t) && first_fail.empty()) {
        std::ostringstream os;
        os << "failed at " << shape.rows << "x" << shape.cols << " word=";
        for (int v : t.reading_word()) os << v << ",";
        first_fail = os.str();
      }
    }
  double ms = ms_since(start);
  std::ostringstream detail;
  detail << checked << " tableaux, " << static_cast<long>(ms) << "ms";
  if (!first_fail.empty()) detail << ", " << first_fail;
  bool ok = first_fail.empty() && (limit_ms <= 0 || ms < limit_ms);
  if (limit_ms > 0 && ms >= limit_ms) detail << ", over time limit";
  report(criterion, what, ok, detail.str());
}

bool pp_check(const StandardTableau& t) { return evacuate_fast(t) == evacuate(t); }

bool left_square_ok(const StandardTableau& t) {
  return check_left_square(t).status == CheckStatus::Pass;
}

bool right_weak_ok(const StandardTableau& t) {
  return check_right_square(t).undirected.status == CheckStatus::Pass;
}

bool right_strong_ok(const StandardTableau& t) {
  RightSquareOutcome rs = check_right_square(t);
  return rs.flipset.status == CheckStatus::Pass && rs.exact.status == CheckStatus::Pass;
}

bool conventions_ok(const StandardTableau& t) {
  return check_conventions_34(t).status == CheckStatus::Pass;
}

bool web_invariants_ok(const StandardTableau& t) {
  MulticoloredNcm m = ncm_from_tableau(t);
  Arrangement arr = arrangement_from_ncm(m);
  WebGraph raw = web_from_ncm(m);
  WebGraph wt = standardize_boundary(raw);
  WebGraph rw = reflect_web(wt);
  for (const WebGraph* w : {&raw, &wt, &rw})
    if (!check_web_invariants(*w).ok) return false;
  if (wt.interior().size() != 2 * arr.crossings.size() + arr.shared_points.size())
    return false;
  if (wt.edges().size() != (3 * wt.interior().size() + wt.boundary_count()) / 2)
    return false;
  return true;
}

bool involutions_ok(const StandardTableau& t) {
  if (!(evacuate(evacuate(t)) == t)) return false;
  MulticoloredNcm m = ncm_from_tableau(t);
  if (!(reflect_ncm(reflect_ncm(m)) == m)) return false;
  WebGraph w = web_from_tableau(t);
  if (!(reflect_web(reflect_web(w)) == w)) return false;
  std::vector<int> all(w.edges().size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return flip_edges(flip_edges(w, all), all) == w;
}

void criterion8() {
  struct Expected {
    Shape shape;
    std::uint64_t count;
  };
  const std::vector<Expected> table = {
      {{2, 2}, 2}, {{2, 3}, 5}, {{3, 3}, 42}, {{4, 3}, 462}, {{5, 2}, 42}};
  bool ok = true;
  std::ostringstream detail;
  for (const Expected& e : table) {
    std::uint64_t enumerated = enumerate_syt(e.shape).size();
    std::uint64_t hook = count_syt(e.shape);
    bool match = enumerated == e.count && hook == e.count;
    if (e.shape.boxes() <= 9) match = match && brute_force_count(e.shape) == e.count;
    ok = ok && match;
    detail << e.shape.rows << "x" << e.shape.cols << "=" << enumerated
           << (match ? " " : "!=expected ");
  }
  report(8, "counting oracle", ok, detail.str());
}

void criterion10() {
  std::mt19937 rng(20240612);
  std::vector<Shape> shapes = shape_set();
  std::vector<std::vector<StandardTableau>> pool;
  for (Shape s : shapes) pool.push_back(enumerate_syt(s));

  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const auto& ts = pool[rng() % pool.size()];
    const StandardTableau& t = ts[rng() % ts.size()];
    switch (trial % 6) {
      case 0: {
        StandardTableau x = promote(t);
        ok = parse_tableau(print_tableau(x)) == x;
        break;
      }
      case 1: {
        MulticoloredNcm m = ncm_from_tableau(t);
        ok = parse_ncm(print_ncm(m)) == m;
        break;
      }
      case 2: {
        MulticoloredNcm m = reflect_ncm(ncm_from_tableau(t));
        ok = parse_ncm(print_ncm(m)) == m;
        break;
      }
      case 3: {
        WebGraph w = web_from_tableau(t);
        ok = parse_web(print_web(w)) == w &&
             print_web(parse_web(print_web(w))) == print_web(w);
        break;
      }
      case 4: {
        WebGraph w = reflect_web(web_from_tableau(t));
        ok = parse_web(print_web(w)) == w;
        break;
      }
      case 5: {
        WebGraph w = web_from_ncm(ncm_from_tableau(t));  // before standardization
        ok = parse_web(print_web(w)) == w;
        break;
      }
    }
    if (!ok) detail = "round trip failed at trial " + std::to_string(trial);
  }

  if (ok) {
    StandardTableau sample = tab({{1, 3, 5}, {2, 4, 8}, {6, 9, 10}, {7, 11, 12}});
    MulticoloredNcm m = ncm_from_tableau(sample);
    WebGraph w = web_from_tableau(sample);
    for (auto format : {RenderSpec::Format::Svg, RenderSpec::Format::Tikz}) {
      RenderSpec spec;
      spec.format = format;
      if (render_ncm(m, spec) != render_ncm(m, spec) ||
          render_web(w, spec) != render_web(w, spec)) {
        ok = false;
        detail = "render output not byte-deterministic";
      }
    }
  }
  report(10, "format round trips and render determinism", ok, detail);
}

}  // namespace

int main() {
  std::vector<Shape> shapes = shape_set();
  std::vector<Shape> conv_shapes = {{3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}};

  criterion1();
  run_per_tableau(2, "rotate-complement equals evacuation", shapes, pp_check);
  run_per_tableau(3, "left square commutes", shapes, left_square_ok);
  run_per_tableau(4, "right square, undirected unweighted", shapes, right_weak_ok, 60000);
  run_per_tableau(5, "right square, exact after flips", shapes, right_strong_ok);
  run_per_tableau(6, "sl3/sl4 convention equality", conv_shapes, conventions_ok);
  run_per_tableau(7, "web structural invariants", shapes, web_invariants_ok);
  criterion8();
  run_per_tableau(9, "involutions", shapes, involutions_ok);
  criterion10();

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
