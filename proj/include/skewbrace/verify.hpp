#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewbrace/arithmetic.hpp"
#include "skewbrace/enumeration.hpp"

namespace skewbrace {

// Names of the properties whose universal validity over all skew braces of
// order n the criterion characterises. Solution-level entries are evaluated on
// r_A: flip_solution, involutive_solution, multipermutation_solution.
std::vector<std::string> theorem_properties(CriterionKind kind);

// Whether a single brace has one of the named properties above.
bool theorem_property_holds(const EnumeratedBrace& a, const std::string& property);

struct VerificationRow {
  int n = 0;
  bool arithmetic = false;
  bool enumeration = false;
  // First brace (index into the enumeration) failing some property, and that property.
  std::optional<int> counterexample;
  std::string counterexample_property;
  std::optional<SkewBrace> counterexample_brace;
  // literal Theorem C reading disagrees while the odd-prime reading agrees
  bool flagged = false;
  double seconds = 0.0;
};

struct VerificationReport {
  CriterionKind kind = CriterionKind::theorem_a;
  std::vector<VerificationRow> rows;

  std::vector<int> flagged_orders() const;
};

// Compares criterion(n, kind) with the enumeration for 1 <= n <= n_max.
// Every listed property must be universally true exactly when the criterion
// holds; for supersolubility the witness of every supersoluble brace must
// also be accepted. Throws MismatchFound(n, property, brace index), except
// that a theorem_c_literal disagreement backed by the odd reading is flagged.
VerificationReport verify_theorem(CriterionKind kind, int n_max);

// Same, reusing enumerations; enumerations[i] must be enumerate_order(i + 1).
VerificationReport verify_theorem(CriterionKind kind, std::span<const EnumerationResult> enumerations);

}  // namespace skewbrace
