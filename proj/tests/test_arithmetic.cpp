#include <gtest/gtest.h>

#include <map>

#include "skewbrace/arithmetic.hpp"

using namespace skewbrace;

namespace {

// Prime exponents by repeated division, independent of factorize.
std::map<long long, int> exponents(long long n) {
  std::map<long long, int> out;
  for (long long p = 2; n > 1; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  return out;
}

long long power(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Each condition checked directly over all ordered pairs of prime divisors.
bool reference(long long n, CriterionKind kind) {
  const auto f = exponents(n);
  for (const auto& [pi, ai] : f) {
    if (kind == CriterionKind::theorem_a && ai > 1) return false;
    if ((kind == CriterionKind::theorem_b || kind == CriterionKind::theorem_c_literal ||
         kind == CriterionKind::theorem_c_odd) && ai > 2)
      return false;
    if (kind == CriterionKind::theorem_c_literal || kind == CriterionKind::theorem_c_odd) {
      const bool applies = kind == CriterionKind::theorem_c_literal || pi % 2 == 1;
      if (n % 4 == 0 && ai == 2 && applies && pi % 4 != 1) return false;
    }
    for (const auto& [pj, aj] : f) {
      if (pi == pj) continue;
      switch (kind) {
        case CriterionKind::theorem_a:
          if ((pj - 1) % pi == 0) return false;
          break;
        case CriterionKind::theorem_b:
          if ((power(pj, aj) - 1) % pi == 0) return false;
          break;
        case CriterionKind::left_nilpotent:
          for (int k = 1; k <= aj; ++k)
            if ((power(pj, k) - 1) % pi == 0) return false;
          break;
        case CriterionKind::theorem_c_literal:
        case CriterionKind::theorem_c_odd:
          if (aj == 2 && (pj * pj - 1) % pi == 0) return false;
          break;
      }
    }
  }
  return true;
}

constexpr CriterionKind kAllKinds[] = {CriterionKind::theorem_a, CriterionKind::theorem_b,
                                       CriterionKind::left_nilpotent, CriterionKind::theorem_c_literal,
                                       CriterionKind::theorem_c_odd};

}  // namespace

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(1).factors.empty());
  EXPECT_EQ(factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(45).factors, (std::vector<PrimePower>{{3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(97).factors, (std::vector<PrimePower>{{97, 1}}));
}

TEST(Factorize, RoundTrips) {
  for (long long n = 1; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    long long prod = 1;
    long long last = 1;
    for (const auto& pp : f.factors) {
      EXPECT_TRUE(is_prime(pp.prime));
      EXPECT_GT(pp.prime, last);
      last = pp.prime;
      prod *= ipow(pp.prime, pp.exponent);
    }
    EXPECT_EQ(prod, n);
    EXPECT_EQ(f.n, n);
  }
}

TEST(Primes, Basics) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(7919));
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_EQ(ipow(5, 0), 1);
}

TEST(Criterion, Examples) {
  EXPECT_TRUE(criterion(15, CriterionKind::theorem_a));
  EXPECT_FALSE(criterion(6, CriterionKind::theorem_a));
  EXPECT_TRUE(criterion(45, CriterionKind::theorem_b));
  EXPECT_FALSE(criterion(4, CriterionKind::theorem_c_literal));
  EXPECT_TRUE(criterion(4, CriterionKind::theorem_c_odd));
  EXPECT_TRUE(criterion(1, CriterionKind::theorem_a));
}

TEST(Criterion, FailureDetails) {
  const CriterionVerdict v = evaluate_criterion(12, CriterionKind::theorem_b);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.p_i, 3);
  EXPECT_EQ(v.p_j, 2);
  EXPECT_FALSE(v.reason.empty());
  const CriterionVerdict a = evaluate_criterion(4, CriterionKind::theorem_a);
  EXPECT_FALSE(a.holds);
  EXPECT_EQ(a.p_i, 2);
  const CriterionVerdict l = evaluate_criterion(12, CriterionKind::left_nilpotent);
  EXPECT_FALSE(l.holds);
  EXPECT_EQ(l.k, 2);
}

TEST(Criterion, MatchesReferenceEvaluation) {
  for (long long n = 1; n <= 3000; ++n)
    for (CriterionKind kind : kAllKinds) ASSERT_EQ(criterion(n, kind), reference(n, kind)) << n << " " << to_string(kind);
}

TEST(Criterion, TheoremAImpliesTheoremB) {
  for (long long n = 1; n <= 1000; ++n)
    if (criterion(n, CriterionKind::theorem_a)) EXPECT_TRUE(criterion(n, CriterionKind::theorem_b)) << n;
}

TEST(Criterion, LiteralAndOddReadingsDifferOnlyWhenTwoSquaredExactly) {
  for (long long n = 1; n <= 2000; ++n) {
    const bool lit = criterion(n, CriterionKind::theorem_c_literal);
    const bool odd = criterion(n, CriterionKind::theorem_c_odd);
    if (lit != odd) EXPECT_EQ(exponents(n)[2], 2) << n;
  }
}

TEST(Criterion, NamesRoundTrip) {
  for (CriterionKind kind : kAllKinds) EXPECT_EQ(criterion_from_string(to_string(kind)), kind);
  EXPECT_EQ(criterion_from_string("theorem_d"), std::nullopt);
}
