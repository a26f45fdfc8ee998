// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 only if
// every line passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "construction_corpus.hpp"
#include "skewbrace/constructions.hpp"
#include "skewbrace/enumeration.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/solution.hpp"
#include "skewbrace/verify.hpp"

using namespace skewbrace;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool run(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("%s %s: %s (%s) [%.2fs]\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), seconds_since(start));
  std::fflush(stdout);
  return o.pass;
}

const std::vector<EnumerationResult>& enumerations() {
  static const std::vector<EnumerationResult> all = [] {
    std::vector<EnumerationResult> out;
    for (int n = 1; n <= 12; ++n) out.push_back(enumerate_order(n));
    return out;
  }();
  return all;
}

bool property(const EnumeratedBrace& e, PropertyKind k) { return e.properties[static_cast<std::size_t>(k)]; }

bool has_ideal_of_size(const SkewBrace& a, std::size_t size) {
  const auto all = ideals(a);
  return std::any_of(all.begin(), all.end(), [&](const ElementSet& i) { return i.size() == size; });
}

Outcome counts() {
  const auto start = Clock::now();
  const EnumerationResult e8 = enumerate_order(8);
  const EnumerationResult e9 = enumerate_order(9);
  const EnumerationResult e10 = enumerate_order(10);
  const double took = seconds_since(start);
  const bool pass = e9.total == 4 && e9.brace_count == 4 && e10.brace_count == 2 && e8.non_brace_count == 20 && took < 60;
  char buf[200];
  std::snprintf(buf, sizeof buf, "order 9: %d classes, %d braces; order 10: %d braces; order 8: %d non-braces; %.2fs",
                e9.total, e9.brace_count, e10.brace_count, e8.non_brace_count, took);
  return {pass, buf};
}

// Multiset of (additive group, property vector) over the representatives.
std::multiset<std::pair<int, PropertyVector>> signature(const EnumerationResult& e) {
  std::multiset<std::pair<int, PropertyVector>> out;
  for (const EnumeratedBrace& b : e.braces) out.emplace(b.additive_index, b.properties);
  return out;
}

Outcome oracle() {
  std::string detail;
  bool pass = true;
  for (int n = 1; n <= 6; ++n) {
    const EnumerationResult fast = enumerate_order(n);
    const EnumerationResult slow = direct_oracle(n);
    bool same = fast.total == slow.total && signature(fast) == signature(slow);
    // Each oracle class must match exactly one holomorph class.
    for (const EnumeratedBrace& s : slow.braces) {
      const auto matches = std::count_if(fast.braces.begin(), fast.braces.end(),
                                         [&](const EnumeratedBrace& f) { return isomorphic(f.brace, s.brace); });
      same = same && matches == 1;
    }
    pass = pass && same;
    detail += (n > 1 ? ", " : "") + std::string("n=") + std::to_string(n) + ":" + std::to_string(fast.total) + "/" +
              std::to_string(slow.total);
  }
  return {pass, "holomorph/brute-force classes " + detail};
}

Outcome examples() {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) failed.push_back(what);
  };
  const SkewBrace pq1_i = example_generator(ExampleFamily::pq1_i, {3, 2, {}});
  expect(!has_property(pq1_i, PropertyKind::two_sided), "pq1(i) two-sided");
  expect(first_method_criteria(example_spec(ExampleFamily::pq1_i, {3, 2, {}})).two_sided == false, "pq1(i) criterion");

  const SkewBrace pq1_ii = example_generator(ExampleFamily::pq1_ii, {3, 2, {}});
  expect(!has_property(pq1_ii, PropertyKind::bi_skew), "pq1(ii) bi-skew");
  expect(!has_property(pq1_ii, PropertyKind::lambda_homomorphic), "pq1(ii) lambda-homomorphic");

  const ConstructionSpec pq2_spec = example_spec(ExampleFamily::pq2, {5, 2, 4});
  const SkewBrace pq2 = second_method(pq2_spec);
  expect(pq2.order() == 50, "pq2 order");
  expect(!has_ideal_of_size(pq2, 2), "pq2 ideal of order 2");
  expect(!has_ideal_of_size(pq2, 5), "pq2 ideal of order 5");
  expect(!has_property(pq2, PropertyKind::supersoluble), "pq2 supersoluble");
  for (const ElementSet& i : all_subgroups(pq2_spec.b)) {
    if (i.size() == 5) expect(!second_method_ideal_test(pq2_spec, i), "pq2 ideal test on an order-5 subgroup");
  }

  const ConstructionSpec p3_spec = example_spec(ExampleFamily::p3, {3, 0, {}});
  const SkewBrace p3 = second_method(p3_spec);
  expect(lambda_kernel(p3) == ElementSet{0}, "p3 Ker(lambda)");
  expect(second_method_kernel(p3_spec) == ElementSet{0}, "p3 kernel formula");
  expect(socle(p3) == ElementSet{0}, "p3 socle");
  expect(!multipermutation_level(p3).has_value(), "p3 multipermutation level");
  expect(!mp_level(from_skew_brace(p3)).has_value(), "p3 solution level");
  expect(!has_property(p3, PropertyKind::two_sided), "p3 two-sided");
  expect(!has_property(p3, PropertyKind::bi_skew), "p3 bi-skew");
  expect(!has_property(p3, PropertyKind::lambda_homomorphic), "p3 lambda-homomorphic");
  const CriteriaReport r = second_method_criteria(p3_spec);
  expect(r.lambda_homomorphic == false, "p3 criterion (c)");

  std::string detail = failed.empty() ? "pq1(i), pq1(ii), pq2(5,2,g=4), p3(3) reproduce" : "failed:";
  for (const std::string& f : failed) detail += " [" + f + "]";
  return {failed.empty(), detail};
}

Outcome mp_levels() {
  int checked = 0, finite = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const EnumeratedBrace& e : enumerations()[n - 1].braces) {
      const auto brace_level = multipermutation_level(e.brace);
      if (mp_level(from_skew_brace(e.brace)) != brace_level) {
        return {false, "order " + std::to_string(n) + " disagrees after " + std::to_string(checked) + " braces"};
      }
      ++checked;
      finite += brace_level.has_value();
    }
  }
  return {true, std::to_string(checked) + " braces, " + std::to_string(finite) + " of finite level"};
}

Outcome involutive() {
  int checked = 0, involutive = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const EnumeratedBrace& e : enumerations()[n - 1].braces) {
      const bool inv = is_involutive(from_skew_brace(e.brace));
      if (inv != group_predicate(e.brace.additive(), GroupProperty::abelian)) {
        return {false, "order " + std::to_string(n) + " disagrees"};
      }
      ++checked;
      involutive += inv;
    }
  }
  return {true, std::to_string(checked) + " braces, " + std::to_string(involutive) + " involutive"};
}

Outcome theorems() {
  std::span<const EnumerationResult> all(enumerations());
  const struct {
    CriterionKind kind;
    int n_max;
  } runs[] = {{CriterionKind::theorem_a, 12},
              {CriterionKind::left_nilpotent, 12},
              {CriterionKind::theorem_b, 10},
              {CriterionKind::theorem_c_odd, 10},
              {CriterionKind::theorem_c_literal, 10}};
  std::string detail;
  bool pass = true;
  for (const auto& run : runs) {
    try {
      const VerificationReport r = verify_theorem(run.kind, all.first(run.n_max));
      const auto flagged = r.flagged_orders();
      const bool ok = run.kind == CriterionKind::theorem_c_literal ? flagged == std::vector<int>{4} : flagged.empty();
      pass = pass && ok;
      detail += std::string(to_string(run.kind)) + (ok ? " agrees" : " unexpected flags");
      if (!flagged.empty()) {
        detail += " (flagged n=";
        for (std::size_t i = 0; i < flagged.size(); ++i) detail += (i ? "," : "") + std::to_string(flagged[i]);
        detail += ")";
      }
    } catch (const Error& e) {
      pass = false;
      detail += std::string(to_string(run.kind)) + " " + e.what();
    }
    detail += "; ";
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Outcome criteria_corpus() {
  const auto first = testing::check_first_method_corpus(testing::first_method_corpus(7, 6));
  const auto second = testing::check_second_method_corpus(testing::second_method_corpus(11, 6));
  const bool pass = first.specs >= 200 && second.specs >= 200 && first.mismatches.empty() && second.mismatches.empty();
  char buf[400];
  std::snprintf(buf, sizeof buf,
                "first method: %d specs, %d criteria (%d true/%d false), %d kernels, %d ideal tests, %zu mismatches; "
                "second method: %d specs, %d criteria (%d true/%d false, %d inapplicable), %d kernels, %d ideal tests, "
                "%zu mismatches",
                first.specs, first.criteria_compared, first.criteria_true, first.criteria_false, first.kernels_checked,
                first.ideal_tests, first.mismatches.size(), second.specs, second.criteria_compared, second.criteria_true,
                second.criteria_false, second.criteria_inapplicable, second.kernels_checked, second.ideal_tests,
                second.mismatches.size());
  std::string detail = buf;
  for (const auto* c : {&first, &second}) {
    for (std::size_t i = 0; i < std::min<std::size_t>(c->mismatches.size(), 5); ++i) detail += "; " + c->mismatches[i];
  }
  return {pass, detail};
}

Outcome witnesses() {
  int checked = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto& braces = enumerations()[n - 1].braces;
    for (std::size_t i = 0; i < braces.size(); ++i) {
      if (!property(braces[i], PropertyKind::supersoluble)) continue;
      const WitnessCheck c = verify_witness(from_skew_brace(braces[i].brace), witness_from_supersoluble(braces[i].brace));
      if (!c) {
        return {false, "order " + std::to_string(n) + " brace " + std::to_string(i) + " rejected at condition " +
                           std::to_string(c.failed_condition) + ": " + c.detail};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " supersoluble braces, all witnesses accepted"};
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run("AC1", "enumeration counts", counts);
  ok &= run("AC2", "oracle equivalence for n <= 6", oracle);
  ok &= run("AC3", "example reproduction", examples);
  ok &= run("AC4", "multipermutation level of r_A equals that of A, n <= 10", mp_levels);
  ok &= run("AC5", "r_A involutive iff additive group abelian, n <= 10", involutive);
  ok &= run("AC6", "theorem harness", theorems);
  ok &= run("AC7", "construction criteria against general predicates", criteria_corpus);
  ok &= run("AC8", "supersoluble witnesses, n <= 10", witnesses);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
