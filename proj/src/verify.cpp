#include "skewbrace/verify.hpp"

#include <algorithm>
#include <chrono>

#include "skewbrace/error.hpp"
#include "skewbrace/solution.hpp"

namespace skewbrace {
namespace {

bool brace_property(const EnumeratedBrace& a, PropertyKind kind) {
  return a.properties[static_cast<std::size_t>(kind)];
}

std::string mismatch_text(int n, const std::string& property, std::optional<int> index) {
  std::string out = "n=" + std::to_string(n) + " property=" + property;
  if (index) out += " brace=" + std::to_string(*index);
  return out;
}

VerificationRow check_order(CriterionKind kind, const EnumerationResult& e) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRow row;
  row.n = e.order;
  row.arithmetic = criterion(e.order, kind);
  row.enumeration = true;
  const auto properties = theorem_properties(kind);
  std::vector<bool> universal(properties.size(), true);
  std::vector<std::optional<int>> first_failure(properties.size());
  for (std::size_t i = 0; i < e.braces.size(); ++i) {
    const EnumeratedBrace& a = e.braces[i];
    for (std::size_t k = 0; k < properties.size(); ++k) {
      if (!theorem_property_holds(a, properties[k])) {
        if (universal[k]) first_failure[k] = static_cast<int>(i);
        universal[k] = false;
        if (!row.counterexample) {
          row.counterexample = static_cast<int>(i);
          row.counterexample_property = properties[k];
          row.counterexample_brace = a.brace;
        }
      }
    }
    if (kind == CriterionKind::theorem_c_literal || kind == CriterionKind::theorem_c_odd) {
      if (brace_property(a, PropertyKind::supersoluble)) {
        const WitnessCheck check = verify_witness(from_skew_brace(a.brace), witness_from_supersoluble(a.brace));
        if (!check) {
          throw Error(ErrorCode::MismatchFound,
                      mismatch_text(e.order, "supersoluble_solution", static_cast<int>(i)) + ": " + check.detail);
        }
      }
    }
  }
  row.enumeration = std::all_of(universal.begin(), universal.end(), [](bool b) { return b; });
  for (std::size_t k = 0; k < properties.size(); ++k) {
    if (universal[k] == row.arithmetic) continue;
    if (kind == CriterionKind::theorem_c_literal && criterion(e.order, CriterionKind::theorem_c_odd) == universal[k]) {
      row.flagged = true;
      continue;
    }
    throw Error(ErrorCode::MismatchFound, mismatch_text(e.order, properties[k], first_failure[k]));
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<std::string> theorem_properties(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::theorem_a:
      return {"flip_solution", "trivial_brace", "trivial", "almost_trivial", "weakly_trivial", "one_generator"};
    case CriterionKind::theorem_b:
      return {"multipermutation_solution", "involutive_solution", "finite_mp_level",
              "right_nilpotent",           "annihilator_nilpotent", "is_brace",
              "two_sided",                 "bi_skew",               "lambda_homomorphic"};
    case CriterionKind::left_nilpotent:
      return {"left_nilpotent"};
    case CriterionKind::theorem_c_literal:
    case CriterionKind::theorem_c_odd:
      return {"supersoluble"};
  }
  return {};
}

bool theorem_property_holds(const EnumeratedBrace& a, const std::string& property) {
  if (property == "flip_solution") return is_flip(from_skew_brace(a.brace));
  if (property == "involutive_solution") return is_involutive(from_skew_brace(a.brace));
  if (property == "multipermutation_solution") return mp_level(from_skew_brace(a.brace)).has_value();
  if (property == "trivial_brace") {
    return brace_property(a, PropertyKind::trivial) && brace_property(a, PropertyKind::is_brace);
  }
  const auto kind = property_from_string(property);
  if (!kind) throw Error(ErrorCode::BadInput, "unknown property " + property);
  return brace_property(a, *kind);
}

std::vector<int> VerificationReport::flagged_orders() const {
  std::vector<int> out;
  for (const VerificationRow& r : rows) {
    if (r.flagged) out.push_back(r.n);
  }
  return out;
}

VerificationReport verify_theorem(CriterionKind kind, std::span<const EnumerationResult> enumerations) {
  VerificationReport report;
  report.kind = kind;
  for (const EnumerationResult& e : enumerations) report.rows.push_back(check_order(kind, e));
  return report;
}

VerificationReport verify_theorem(CriterionKind kind, int n_max) {
  if (n_max > kDeskBound) throw Error(ErrorCode::OrderTooLarge, "n_max must be at most 12");
  VerificationReport report;
  report.kind = kind;
  for (int n = 1; n <= n_max; ++n) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRow row = check_order(kind, enumerate_order(n));
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace skewbrace
