#include "webvac/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <thread>

#include "webvac/matching.hpp"
#include "webvac/web.hpp"

namespace webvac {

namespace {

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ' ' || c == '\n' || c == '\t') c = '_';
  return s;
}

std::string word_of(const StandardTableau& t) {
  std::ostringstream os;
  os << "word=";
  auto word = t.reading_word();
  for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  return os.str();
}

CheckOutcome fail_with(const StandardTableau& t, const std::string& detail) {
  return {CheckStatus::Fail, word_of(t) + ";" + sanitize(detail)};
}

CheckOutcome pass() { return {}; }

std::string describe_ncm(const MulticoloredNcm& m) {
  std::ostringstream os;
  for (int x = 1; x <= m.layer_count(); ++x)
    for (const Arc& a : m.layer(x))
      os << "c" << x << "(" << a.start << "," << a.end << ")";
  return os.str();
}

using PosPair = std::pair<Point2, Point2>;

std::set<PosPair> edge_positions(const WebGraph& w, const std::vector<int>& indices) {
  std::set<PosPair> out;
  for (int i : indices) {
    const WebEdge& e = w.edges()[i];
    Point2 a = w.position(e.tail), b = w.position(e.head);
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

WitnessCheck equal_both_routes(const WebGraph& a, const WebGraph& b, WebEqualMode mode) {
  WitnessCheck anchored = web_equal_anchored(a, b, mode);
  if (!anchored.ok) return anchored;
  WitnessCheck positional = web_equal_positional(a, b, mode);
  if (!positional.ok) positional.witness = "positional:" + positional.witness;
  return positional;
}

}  // namespace

CheckOutcome check_left_square(const StandardTableau& t) {
  MulticoloredNcm reflected = reflect_ncm(ncm_from_tableau(t));
  MulticoloredNcm evacuated = ncm_from_tableau(evacuate(t));
  if (reflected == evacuated) return pass();
  return fail_with(t, "reflected=" + describe_ncm(reflected) +
                          ";evacuated=" + describe_ncm(evacuated));
}

RightSquareOutcome check_right_square(const StandardTableau& t) {
  RightSquareOutcome out;
  WebGraph wt = web_from_tableau(t);
  WebGraph we = web_from_tableau(evacuate(t));
  WebGraph rw = reflect_web(wt);

  WitnessCheck weak = equal_both_routes(rw, we, WebEqualMode::UndirectedUnweighted);
  out.undirected = weak.ok ? pass() : fail_with(t, weak.witness);

  std::vector<int> flips = single_arc_interior_edges(wt);  // indices survive reflection
  std::set<PosPair> reflected_set = edge_positions(rw, flips);
  std::set<PosPair> evacuated_set = edge_positions(we, single_arc_interior_edges(we));
  if (reflected_set == evacuated_set) {
    out.flipset = pass();
  } else {
    std::ostringstream os;
    os << "flip_sets_differ:" << reflected_set.size() << "_vs_" << evacuated_set.size();
    out.flipset = fail_with(t, os.str());
  }

  WitnessCheck strong = equal_both_routes(flip_edges(rw, flips), we, WebEqualMode::Exact);
  out.exact = strong.ok ? pass() : fail_with(t, strong.witness);
  return out;
}

CheckOutcome check_conventions_34(const StandardTableau& t) {
  const int n = t.shape().rows;
  if (n != 3 && n != 4) return {CheckStatus::Skip, "n_not_3_or_4"};
  WebGraph lhs = apply_convention_34(reflect_web(web_from_tableau(t)));
  WebGraph rhs = apply_convention_34(web_from_tableau(evacuate(t)));
  WitnessCheck result = equal_both_routes(lhs, rhs, WebEqualMode::Exact);
  return result.ok ? pass() : fail_with(t, result.witness);
}

namespace {

enum CheckIndex {
  kConventions34 = 0,
  kEvacuationInvolution,
  kLeftSquare,
  kNcmRoundtrip,
  kRightSquareExact,
  kRightSquareFlipset,
  kRightSquareUndirected,
  kRotateComplement,
  kWebInvariants,
  kCheckCount,
};

constexpr const char* kCheckNames[kCheckCount] = {
    "conventions_34",
    "evacuation_involution",
    "left_square",
    "ncm_roundtrip",
    "right_square_exact",
    "right_square_flipset",
    "right_square_undirected",
    "rotate_complement",
    "web_invariants",
};

CheckOutcome check_web_invariants_of(const StandardTableau& t) {
  MulticoloredNcm m = ncm_from_tableau(t);
  Arrangement arr = arrangement_from_ncm(m);
  WebGraph raw = web_from_ncm(m);
  WebGraph wt = standardize_boundary(raw);
  WebGraph rw = reflect_web(wt);
  for (const WebGraph* w : {&raw, &wt, &rw}) {
    WitnessCheck inv = check_web_invariants(*w);
    if (!inv.ok) return fail_with(t, inv.witness);
  }
  size_t expected_interior = 2 * arr.crossings.size() + arr.shared_points.size();
  if (wt.interior().size() != expected_interior)
    return fail_with(t, "interior_count_formula_violated");
  size_t expected_edges = (3 * expected_interior + arr.boundary) / 2;
  if (wt.edges().size() != expected_edges)
    return fail_with(t, "edge_count_formula_violated");
  return pass();
}

std::array<CheckOutcome, kCheckCount> run_battery(const StandardTableau& t,
                                                  bool matching_applies) {
  std::array<CheckOutcome, kCheckCount> out;
  out[kEvacuationInvolution] =
      evacuate(evacuate(t)) == t ? pass() : fail_with(t, "double_evacuation_differs");
  out[kRotateComplement] = evacuate_fast(t) == evacuate(t)
                      ? pass()
                      : fail_with(t, "rotate_complement_differs_from_evacuation");
  if (!matching_applies) return out;
  out[kNcmRoundtrip] = tableau_from_ncm(ncm_from_tableau(t)) == t
                           ? pass()
                           : fail_with(t, "ncm_roundtrip_differs");
  out[kLeftSquare] = check_left_square(t);
  RightSquareOutcome rs = check_right_square(t);
  out[kRightSquareUndirected] = rs.undirected;
  out[kRightSquareFlipset] = rs.flipset;
  out[kRightSquareExact] = rs.exact;
  out[kConventions34] = check_conventions_34(t);
  out[kWebInvariants] = check_web_invariants_of(t);
  return out;
}

struct Accumulator {
  std::array<std::int64_t, kCheckCount> fail_index;
  std::array<CheckOutcome, kCheckCount> fail_outcome;
  Accumulator() { fail_index.fill(-1); }

  void record(std::int64_t idx, const std::array<CheckOutcome, kCheckCount>& outs) {
    for (size_t c = 0; c < kCheckCount; ++c)
      if (outs[c].status == CheckStatus::Fail && fail_index[c] < 0) {
        fail_index[c] = idx;
        fail_outcome[c] = outs[c];
      }
  }
  void merge(const Accumulator& other) {
    for (size_t c = 0; c < kCheckCount; ++c)
      if (other.fail_index[c] >= 0 &&
          (fail_index[c] < 0 || other.fail_index[c] < fail_index[c])) {
        fail_index[c] = other.fail_index[c];
        fail_outcome[c] = other.fail_outcome[c];
      }
  }
};

void run_range(const std::vector<StandardTableau>& ts, size_t lo, size_t hi,
               bool matching_applies, Accumulator& acc) {
  for (size_t i = lo; i < hi; ++i)
    acc.record(static_cast<std::int64_t>(i), run_battery(ts[i], matching_applies));
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::vector<Shape>& shapes,
                                          std::uint64_t budget, int threads) {
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(std::clamp(hw, 1u, 8u));
  }
  std::vector<VerificationReport> reports;
  for (Shape shape : shapes) {
    VerificationReport report;
    report.shape = shape;
    std::vector<StandardTableau> ts;
    try {
      ts = enumerate_syt(shape, budget);
    } catch (const BudgetExceeded& e) {
      report.checks["enumeration"] = {CheckStatus::Skip, sanitize(e.what())};
      reports.push_back(std::move(report));
      continue;
    }
    report.tableau_count = ts.size();
    {
      std::ostringstream os;
      os << "count=" << ts.size();
      CheckStatus st = ts.size() == count_syt(shape) ? CheckStatus::Pass : CheckStatus::Fail;
      report.checks["enumeration"] = {st, os.str()};
    }
    const bool matching_applies = shape.rows >= 2;

    int workers = std::max(1, std::min<int>(threads, static_cast<int>(ts.size())));
    std::vector<Accumulator> accs(workers);
    {
      std::vector<std::thread> pool;
      size_t chunk = (ts.size() + workers - 1) / workers;
      for (int wi = 0; wi < workers; ++wi) {
        size_t lo = wi * chunk, hi = std::min(ts.size(), lo + chunk);
        if (lo >= hi) continue;
        pool.emplace_back(run_range, std::cref(ts), lo, hi, matching_applies,
                          std::ref(accs[wi]));
      }
      for (auto& th : pool) th.join();
    }
    Accumulator total;
    for (const Accumulator& a : accs) total.merge(a);

    for (size_t c = 0; c < kCheckCount; ++c) {
      const bool needs_matching = c != kEvacuationInvolution && c != kRotateComplement;
      if (needs_matching && !matching_applies) {
        report.checks[kCheckNames[c]] = {CheckStatus::Skip, "n<2"};
      } else if (c == kConventions34 && shape.rows != 3 && shape.rows != 4) {
        report.checks[kCheckNames[c]] = {CheckStatus::Skip, "n_not_3_or_4"};
      } else if (total.fail_index[c] >= 0) {
        report.checks[kCheckNames[c]] = total.fail_outcome[c];
      } else {
        report.checks[kCheckNames[c]] = {};
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string print_reports(const std::vector<VerificationReport>& reports) {
  std::vector<const VerificationReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->shape < b->shape; });
  std::ostringstream os;
  for (const auto* r : sorted)
    for (const auto& [name, outcome] : r->checks) {
      os << r->shape.rows << "x" << r->shape.cols << " " << name << " ";
      switch (outcome.status) {
        case CheckStatus::Pass: os << "pass"; break;
        case CheckStatus::Fail: os << "fail"; break;
        case CheckStatus::Skip: os << "skip"; break;
      }
      os << " " << (outcome.witness.empty() ? "-" : outcome.witness) << "\n";
    }
  return os.str();
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    for (const auto& [name, outcome] : r.checks)
      if (outcome.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace webvac
