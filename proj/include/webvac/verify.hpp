#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "webvac/tableau.hpp"

namespace webvac {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // empty on pass; self-contained reproduction data on fail
};

struct VerificationReport {
  Shape shape;
  std::uint64_t tableau_count = 0;
  std::map<std::string, CheckOutcome> checks;
};

/// reflect_ncm(ncm_from_tableau(t)) must equal ncm_from_tableau(evacuate(t)).
CheckOutcome check_left_square(const StandardTableau& t);

struct RightSquareOutcome {
  CheckOutcome undirected;  // reflected web equals the evacuated web as
                            // undirected unweighted graphs
  CheckOutcome flipset;     // reflection maps the single-arc interior edge
                            // set onto the evacuated web's
  CheckOutcome exact;       // flipping that set yields exact equality
};
RightSquareOutcome check_right_square(const StandardTableau& t);

/// For n in {3,4}: conventionalized reflected web equals the
/// conventionalized evacuated web exactly.
CheckOutcome check_conventions_34(const StandardTableau& t);

/// Runs the whole per-tableau check battery over every tableau of every
/// shape; first-failure witnesses, deterministic output. Budget overruns
/// are reported per shape, not fatal. `threads` 0 picks a default.
std::vector<VerificationReport> run_suite(const std::vector<Shape>& shapes,
                                          std::uint64_t budget = kDefaultEnumerationBudget,
                                          int threads = 0);

/// One line per (shape, check, status, witness-or-dash), sorted.
std::string print_reports(const std::vector<VerificationReport>& reports);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace webvac
