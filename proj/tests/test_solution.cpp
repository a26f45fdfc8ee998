#include <gtest/gtest.h>

#include "skewbrace/catalog.hpp"
#include "skewbrace/constructions.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/solution.hpp"

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

Table table_of(int n, auto&& op) {
  Table t(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t.at(a, b) = static_cast<Elem>(op(a, b));
  return t;
}

SkewBrace z4_brace() {
  return validate_skew_brace(table_of(4, [](int a, int b) { return (a + b) % 4; }),
                             table_of(4, [](int a, int b) { return (a + b + 2 * a * b) % 4; }));
}

// r(x, y) = (lambda[x][y], rho[y][x]); checks r12 r23 r12 = r23 r12 r23 on every triple.
bool braid_holds(const Table& lambda, const Table& rho) {
  const int n = lambda.order();
  auto r = [&](Elem x, Elem y) { return std::pair{lambda.at(x, y), rho.at(y, x)}; };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, z);
        auto [a3, b3] = r(a1, b2);
        auto [q1, w1] = r(y, z);
        auto [p2, q2] = r(x, q1);
        auto [q3, w3] = r(q2, w1);
        if (std::tuple{a3, b3, c2} != std::tuple{p2, q3, w3}) return false;
      }
  return true;
}

Table constant_rows(int n, const Permutation& p) {
  return table_of(n, [&](int, int y) { return p[y]; });
}

}  // namespace

TEST(ValidateSolution, Flip) {
  const Solution s = validate_solution(table_of(3, [](int, int y) { return y; }), table_of(3, [](int, int x) { return x; }));
  EXPECT_EQ(s, flip(3));
  EXPECT_TRUE(is_flip(s));
  EXPECT_EQ(s.apply(1, 2), (std::pair<Elem, Elem>{2, 1}));
}

TEST(ValidateSolution, ConstantRhoOverIdentityLambdaIsASolution) {
  // r(x, y) = (y, s(x)) satisfies the braid relation for every permutation s.
  const Table lambda = constant_rows(3, {0, 1, 2});
  const Table rho = constant_rows(3, {1, 2, 0});
  ASSERT_TRUE(braid_holds(lambda, rho));
  const Solution s = validate_solution(lambda, rho);
  EXPECT_FALSE(is_involutive(s));
  EXPECT_EQ(mp_level(s), 1);
}

TEST(ValidateSolution, NonCommutingPermutationSolutionFails) {
  // r(x, y) = (s(y), t(x)) needs s t = t s.
  const Table lambda = constant_rows(3, {1, 0, 2});
  const Table rho = constant_rows(3, {0, 2, 1});
  ASSERT_FALSE(braid_holds(lambda, rho));
  EXPECT_EQ(code_of([&] { validate_solution(lambda, rho); }), ErrorCode::BraidFails);
}

TEST(ValidateSolution, OtherFailures) {
  EXPECT_EQ(code_of([] { validate_solution(Table::from_rows({{0, 0}, {0, 1}}), flip(2).rho_table()); }),
            ErrorCode::NotPermutation);
  const Table shift = table_of(2, [](int x, int y) { return (x + y) % 2; });
  // r(x, y) = (x + y, x + y) is not injective
  EXPECT_EQ(code_of([&] { validate_solution(shift, shift); }), ErrorCode::RNotBijective);
  EXPECT_EQ(code_of([] { validate_solution(flip(2).lambda_table(), flip(3).rho_table()); }), ErrorCode::BadInput);
}

TEST(ValidateSolution, SkewBraceSolutionsAreValid) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : groups_of_order(n))
      for (const SkewBrace& a : {trivial_brace(g.group), almost_trivial_brace(g.group)}) {
        const Solution s = from_skew_brace(a);
        EXPECT_TRUE(braid_holds(s.lambda_table(), s.rho_table())) << g.name;
        EXPECT_NO_THROW(validate_solution(s.lambda_table(), s.rho_table()));
      }
  const Solution p3 = from_skew_brace(example_generator(ExampleFamily::p3, {3, 0, std::nullopt}));
  EXPECT_NO_THROW(validate_solution(p3.lambda_table(), p3.rho_table()));
}

TEST(Flip, Basics) {
  EXPECT_EQ(flip(1).size(), 1);
  EXPECT_TRUE(is_involutive(flip(4)));
  EXPECT_EQ(code_of([] { flip(0); }), ErrorCode::BadInput);
}

TEST(FromSkewBrace, Examples) {
  const FiniteGroup g = cyclic_group(5);
  EXPECT_EQ(from_skew_brace(trivial_brace(g)), flip(5));
  const FiniteGroup s3 = dihedral_group(3);
  const Solution s = from_skew_brace(trivial_brace(s3));
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      const auto [u, v] = s.apply(a, b);
      EXPECT_EQ(u, b);
      EXPECT_EQ(v, s3.op(s3.op(s3.inverse(b), a), b));
    }
  EXPECT_FALSE(is_involutive(s));
  EXPECT_TRUE(is_involutive(from_skew_brace(z4_brace())));
}

TEST(Retraction, Examples) {
  const Retraction r5 = retraction(flip(5));
  EXPECT_EQ(r5.solution.size(), 1);
  EXPECT_EQ(r5.projection, (std::vector<Elem>(5, 0)));

  const Retraction r4 = retraction(from_skew_brace(z4_brace()));
  EXPECT_EQ(r4.solution.size(), 2);
  EXPECT_EQ(r4.projection, (std::vector<Elem>{0, 1, 0, 1}));
  EXPECT_TRUE(check_solution_map(from_skew_brace(z4_brace()), r4.solution, r4.projection));

  const Solution p3 = from_skew_brace(example_generator(ExampleFamily::p3, {3, 0, std::nullopt}));
  EXPECT_EQ(retraction(p3).solution.size(), 27);
}

TEST(MpLevel, Examples) {
  EXPECT_EQ(mp_level(flip(1)), 0);
  EXPECT_EQ(mp_level(flip(7)), 1);
  EXPECT_EQ(mp_level(from_skew_brace(z4_brace())), 2);
  EXPECT_EQ(retraction_sizes(from_skew_brace(z4_brace())), (std::vector<int>{4, 2, 1}));
  const Solution p3 = from_skew_brace(example_generator(ExampleFamily::p3, {3, 0, std::nullopt}));
  EXPECT_EQ(mp_level(p3), std::nullopt);
  EXPECT_EQ(retraction_sizes(p3), (std::vector<int>{27}));
}

TEST(SolutionMap, Examples) {
  const Solution s = from_skew_brace(example_generator(ExampleFamily::pq1_i, {3, 2, std::nullopt}));
  EXPECT_TRUE(check_solution_map(s, s, identity_permutation(6)));
  EXPECT_TRUE(check_solution_map(s, flip(1), std::vector<Elem>(6, 0)));
}

TEST(SolutionMap, QuotientProjectionsAreMorphisms) {
  for (const SkewBrace& a : {z4_brace(), example_generator(ExampleFamily::pq1_ii, {3, 2, std::nullopt}),
                             example_generator(ExampleFamily::p2_elementary, {3, 0, std::nullopt})}) {
    const Solution s = from_skew_brace(a);
    for (const auto& i : ideals(a)) {
      const Quotient q = quotient(a, i);
      EXPECT_TRUE(check_solution_map(s, from_skew_brace(q.brace), q.projection));
    }
  }
}

TEST(Witness, CyclicFourBrace) {
  const SkewBrace a = z4_brace();
  const SupersolubleWitness w = witness_from_supersoluble(a);
  EXPECT_EQ(w.chain, (std::vector<ElementSet>{{0}, {0, 2}, full_set(4)}));
  ASSERT_EQ(w.stages.size(), 2u);
  EXPECT_EQ(w.stages[0].target.size(), 4);
  EXPECT_EQ(w.stages[1].target.size(), 2);
  const WitnessCheck c = verify_witness(from_skew_brace(a), w);
  EXPECT_TRUE(c.accepted) << c.detail;
}

TEST(Witness, OneElementBrace) {
  const SkewBrace a = trivial_brace(cyclic_group(1));
  const SupersolubleWitness w = witness_from_supersoluble(a);
  EXPECT_EQ(w.chain.size(), 1u);
  EXPECT_TRUE(w.stages.empty());
  EXPECT_TRUE(verify_witness(from_skew_brace(a), w));
}

TEST(Witness, NotSupersoluble) {
  EXPECT_EQ(code_of([] { witness_from_supersoluble(example_generator(ExampleFamily::pq2, {5, 2, 4})); }),
            ErrorCode::NotSupersoluble);
}

TEST(Witness, UnequalClassesFailConditionTwo) {
  SupersolubleWitness w;
  w.chain = {{0}, full_set(4)};
  w.stages = {{flip(2), {0, 1, 1, 1}}};
  const WitnessCheck c = verify_witness(flip(4), w);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.failed_condition, 2);
  EXPECT_EQ(c.level, 0);
}

TEST(Witness, CompositeTopFailsConditionFive) {
  SupersolubleWitness w;
  w.chain = {{0}, full_set(4)};
  w.stages = {{flip(4), identity_permutation(4)}};
  const WitnessCheck c = verify_witness(flip(4), w);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.failed_condition, 5);
  // The same shape on three points is accepted.
  w.chain = {{0}, full_set(3)};
  w.stages = {{flip(3), identity_permutation(3)}};
  EXPECT_TRUE(verify_witness(flip(3), w));
}

TEST(Witness, MalformedAndOtherConditions) {
  const Solution s = from_skew_brace(z4_brace());
  SupersolubleWitness good = witness_from_supersoluble(z4_brace());

  SupersolubleWitness short_chain = good;
  short_chain.chain.pop_back();
  EXPECT_EQ(verify_witness(s, short_chain).failed_condition, 0);

  // Stage 0 with X_0 = {0} but the map collapsing 0 and 2 breaks (1).
  SupersolubleWitness merged = good;
  merged.stages[0] = good.stages[1];
  EXPECT_EQ(verify_witness(s, merged).failed_condition, 1);

  // X_1 = {0, 2} is a class of {0, 1, 0, 1}, but X_2 = {0, 1, 2} splits {1, 3}.
  SupersolubleWitness split;
  split.chain = {{0}, {0, 2}, {0, 1, 2}, full_set(4)};
  split.stages = {{flip(4), identity_permutation(4)}, {flip(2), {0, 1, 0, 1}}, {flip(1), {0, 0, 0, 0}}};
  const WitnessCheck c = verify_witness(flip(4), split);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.failed_condition, 3);
  EXPECT_EQ(c.level, 1);
}

TEST(Witness, InvarianceFailsConditionFour) {
  // r(x, y) = (y, s(x)) with s = (1 2): {0, 1} is not rho-invariant.
  const Solution s = validate_solution(constant_rows(3, {0, 1, 2}), constant_rows(3, {0, 2, 1}));
  SupersolubleWitness w;
  w.chain = {{0}, {0, 1}, full_set(3)};
  w.stages = {{s, identity_permutation(3)}, {flip(1), {0, 0, 0}}};
  const WitnessCheck c = verify_witness(s, w);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.failed_condition, 4);
}
