#include <gtest/gtest.h>

#include <algorithm>

#include "skewbrace/error.hpp"
#include "skewbrace/verify.hpp"

using namespace skewbrace;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::BadInput;
}

const std::vector<EnumerationResult>& enumerations() {
  static const std::vector<EnumerationResult> all = [] {
    std::vector<EnumerationResult> out;
    for (int n = 1; n <= kDeskBound; ++n) out.push_back(enumerate_order(n));
    return out;
  }();
  return all;
}

const VerificationRow& row(const VerificationReport& r, int n) { return r.rows.at(n - 1); }

}  // namespace

TEST(TheoremProperties, Lists) {
  EXPECT_EQ(theorem_properties(CriterionKind::theorem_a).size(), 6u);
  EXPECT_EQ(theorem_properties(CriterionKind::theorem_b).size(), 9u);
  EXPECT_EQ(theorem_properties(CriterionKind::left_nilpotent), (std::vector<std::string>{"left_nilpotent"}));
  EXPECT_EQ(theorem_properties(CriterionKind::theorem_c_odd), (std::vector<std::string>{"supersoluble"}));
}

TEST(TheoremProperties, SolutionLevelNames) {
  const auto& six = enumerations()[5].braces;
  const auto it = std::find_if(six.begin(), six.end(), [](const EnumeratedBrace& b) {
    return b.properties[static_cast<int>(PropertyKind::trivial)] && b.properties[static_cast<int>(PropertyKind::is_brace)];
  });
  ASSERT_NE(it, six.end());
  const EnumeratedBrace& trivial6 = *it;
  EXPECT_TRUE(theorem_property_holds(trivial6, "flip_solution"));
  EXPECT_TRUE(theorem_property_holds(trivial6, "multipermutation_solution"));
  EXPECT_EQ(code_of([&] { theorem_property_holds(trivial6, "no_such_property"); }), ErrorCode::BadInput);
}

TEST(VerifyTheorem, TheoremA) {
  const VerificationReport r = verify_theorem(CriterionKind::theorem_a, enumerations());
  ASSERT_EQ(r.rows.size(), 12u);
  for (const auto& x : r.rows) EXPECT_EQ(x.arithmetic, x.enumeration) << x.n;
  const VerificationRow& six = row(r, 6);
  EXPECT_FALSE(six.arithmetic);
  ASSERT_TRUE(six.counterexample.has_value());
  ASSERT_TRUE(six.counterexample_brace.has_value());
  EXPECT_FALSE(theorem_property_holds(enumerations()[5].braces[*six.counterexample], six.counterexample_property));
  // some order-6 brace is not trivial
  bool nontrivial = false;
  for (const auto& b : enumerations()[5].braces) nontrivial |= !theorem_property_holds(b, "trivial_brace");
  EXPECT_TRUE(nontrivial);
  EXPECT_TRUE(r.flagged_orders().empty());
}

TEST(VerifyTheorem, TheoremB) {
  const std::span<const EnumerationResult> upto10(enumerations().data(), 10);
  const VerificationReport r = verify_theorem(CriterionKind::theorem_b, upto10);
  ASSERT_EQ(r.rows.size(), 10u);
  EXPECT_FALSE(row(r, 8).arithmetic);
  EXPECT_FALSE(row(r, 8).enumeration);
  bool witness = false;
  for (const auto& b : enumerations()[7].braces)
    witness |= !theorem_property_holds(b, "two_sided") && !theorem_property_holds(b, "bi_skew") &&
               !theorem_property_holds(b, "finite_mp_level");
  EXPECT_TRUE(witness);
  EXPECT_TRUE(row(r, 9).arithmetic);
  EXPECT_TRUE(row(r, 9).enumeration);
}

TEST(VerifyTheorem, LeftNilpotent) {
  const VerificationReport r = verify_theorem(CriterionKind::left_nilpotent, enumerations());
  for (const auto& x : r.rows) EXPECT_EQ(x.arithmetic, x.enumeration) << x.n;
}

TEST(VerifyTheorem, TheoremCReadings) {
  const std::span<const EnumerationResult> upto10(enumerations().data(), 10);
  const VerificationReport odd = verify_theorem(CriterionKind::theorem_c_odd, upto10);
  EXPECT_TRUE(odd.flagged_orders().empty());
  for (const auto& x : odd.rows) EXPECT_EQ(x.arithmetic, x.enumeration) << x.n;
  const VerificationReport literal = verify_theorem(CriterionKind::theorem_c_literal, upto10);
  EXPECT_EQ(literal.flagged_orders(), (std::vector<int>{4}));
  EXPECT_FALSE(row(literal, 4).arithmetic);
  EXPECT_TRUE(row(literal, 4).enumeration);
}

TEST(VerifyTheorem, DirectOverloadMatches) {
  const VerificationReport a = verify_theorem(CriterionKind::theorem_a, 8);
  ASSERT_EQ(a.rows.size(), 8u);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(row(a, n).enumeration, row(verify_theorem(CriterionKind::theorem_a, enumerations()), n).enumeration);
  EXPECT_EQ(code_of([] { verify_theorem(CriterionKind::theorem_a, 13); }), ErrorCode::OrderTooLarge);
}

TEST(VerifyTheorem, MismatchIsReported) {
  // Keep only the trivial braces of order 6: the enumeration side then claims
  // Theorem A's properties hold universally while 6 fails the arithmetic.
  std::vector<EnumerationResult> doctored(enumerations().begin(), enumerations().begin() + 6);
  auto& six = doctored[5].braces;
  std::erase_if(six, [](const EnumeratedBrace& b) {
    return !b.properties[static_cast<int>(PropertyKind::trivial)] ||
           !b.properties[static_cast<int>(PropertyKind::is_brace)];
  });
  ASSERT_FALSE(six.empty());
  EXPECT_EQ(code_of([&] { verify_theorem(CriterionKind::theorem_a, doctored); }), ErrorCode::MismatchFound);
}
