#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdlab/bisemimodule.hpp"
#include "zdlab/structure.hpp"

namespace zdlab {

// One broken claim: the named structure violates `claim` at `witness`.
struct SuiteViolation {
  std::string structure;
  std::string claim;
  std::vector<std::int64_t> witness;
};

struct SuiteOptions {
  std::uint32_t order = 0;   // cap on carrier orders; 0 = suite default
  std::uint32_t degree = 2;  // degree bound for polynomial-flavoured checks
  std::uint32_t jobs = 1;
  std::vector<FiniteStructure> corpus;  // overrides enumeration when nonempty
};

// Violations come in enumeration order, so serial and parallel runs agree
// byte for byte once elapsed_seconds (which is never serialized) is dropped.
struct SuiteReport {
  std::string suite;
  std::uint64_t structures_checked = 0;
  std::vector<SuiteViolation> violations;
  nlohmann::json data = nlohmann::json::object();
  double elapsed_seconds = 0;

  bool clean() const { return violations.empty(); }
};

nlohmann::json to_json(const SuiteReport& r);

std::vector<std::string> suite_names();

// Runs the named suite.  Unknown names are input errors, as are corpus
// structures of a kind the suite cannot digest.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// ---------------------------------------------------------------------------
// Triangular characterization comparator.
// ---------------------------------------------------------------------------

// Element (s, m, t) where a membership condition and the brute-force
// zero-divisor oracle disagree on the triangular carrier.
struct TriangularMismatch {
  std::string claim;
  ElementId s = 0, m = 0, t = 0;
};

struct TriangularAgreement {
  std::string direction;
  std::uint64_t checked = 0;
  std::uint64_t agreed = 0;
  std::uint64_t checked_m_nonzero = 0;
  std::uint64_t agreed_m_nonzero = 0;

  bool exact() const { return agreed == checked; }
};

struct TriangularComparison {
  std::vector<TriangularAgreement> directions;
  std::vector<TriangularMismatch> mismatches;
};

nlohmann::json to_json(const TriangularComparison& c);

// For every element X = (s, m, t) of the triangular carrier over (S, M, T),
// compares three membership tests against brute-force zero-divisor checks
// computed straight from the component tables:
//
//   left conditions    s in Z_l(S);  or s in Z_l(S)-{0}, t in Z_l(T) with a
//                      common right annihilator t'' of t killed by m;  or
//                      s in Z_l(S)-{0}, t in Z_l(T)-{0} and s kills some
//                      nonzero module element
//   right conditions   the same three clauses verbatim with Z_r in place of
//                      Z_l and left annihilators of t
//   right dual         the left conditions mirrored through the flip
//                      (s, m, t) -> (t, m, s), i.e. led by t in Z_r(T)
//
// Each implication direction is tallied separately, with a second tally
// restricted to elements with nonzero module part; every disagreement is
// recorded with its element.  Directions appear in the fixed order
// left_conditions_imply_zd, left_zd_implies_conditions,
// right_conditions_imply_zd, right_zd_implies_conditions,
// right_dual_conditions_imply_zd, right_zd_implies_dual_conditions.
TriangularComparison compare_triangular_characterization(
    const FiniteStructure& s, const Bisemimodule& m, const FiniteStructure& t);

// ---------------------------------------------------------------------------
// Counterexample hunting.
// ---------------------------------------------------------------------------

struct HuntResult {
  std::optional<FiniteStructure> found;
  std::uint64_t scanned = 0;
  std::uint32_t found_order = 0;  // meaningful only when found
};

nlohmann::json to_json(const HuntResult& r);

// Walks structures of the kind at orders 2..max_order (isomorphism classes,
// first representative) and returns the first one satisfying the expression,
// or an exhaustion notice carrying the number scanned.  Expressions combine
// registered property names with "and", "or", "not" and parentheses; unknown
// names and malformed expressions are input errors.
HuntResult find_counterexample(const std::string& expression, Kind kind,
                               std::uint32_t max_order);

}  // namespace zdlab
