#include "skewbrace/arithmetic.hpp"

#include <array>
#include <string>

#include "skewbrace/error.hpp"

namespace skewbrace {

Factorization factorize(long long n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "cannot factorize " + std::to_string(n));
  Factorization f;
  f.n = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long long ipow(long long base, int exponent) {
  long long r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

namespace {

constexpr std::array<std::pair<CriterionKind, std::string_view>, 5> kNames = {{
    {CriterionKind::theorem_a, "theorem_a"},
    {CriterionKind::theorem_b, "theorem_b"},
    {CriterionKind::left_nilpotent, "left_nilpotent"},
    {CriterionKind::theorem_c_literal, "theorem_c_literal"},
    {CriterionKind::theorem_c_odd, "theorem_c_odd"},
}};

CriterionVerdict fail(std::string reason, std::optional<long long> pi = {},
                      std::optional<long long> pj = {}, std::optional<int> k = {}) {
  return CriterionVerdict{false, std::move(reason), pi, pj, k};
}

std::string divides(long long pi, long long pj, int k) {
  return std::to_string(pi) + " divides " + std::to_string(pj) + "^" + std::to_string(k) + " - 1";
}

CriterionVerdict exponent_bound(const Factorization& f, int bound) {
  for (const PrimePower& pp : f.factors) {
    if (pp.exponent > bound) {
      return fail("exponent of " + std::to_string(pp.prime) + " is " + std::to_string(pp.exponent) +
                      " > " + std::to_string(bound),
                  pp.prime);
    }
  }
  return {};
}

}  // namespace

std::string_view to_string(CriterionKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<CriterionKind> criterion_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

CriterionVerdict evaluate_criterion(long long n, CriterionKind kind) {
  const Factorization f = factorize(n);
  const auto& fs = f.factors;

  // p_i does not divide p_j^k - 1 for i != j and each k produced by `exponents`.
  auto no_divisibility = [&](auto exponents) -> CriterionVerdict {
    for (const PrimePower& pj : fs) {
      for (int k : exponents(pj)) {
        for (const PrimePower& pi : fs) {
          if (pi.prime == pj.prime) continue;
          if ((ipow(pj.prime, k) - 1) % pi.prime == 0) {
            return fail(divides(pi.prime, pj.prime, k), pi.prime, pj.prime, k);
          }
        }
      }
    }
    return {};
  };

  switch (kind) {
    case CriterionKind::theorem_a: {
      if (auto v = exponent_bound(f, 1); !v.holds) return v;
      return no_divisibility([](const PrimePower&) { return std::vector<int>{1}; });
    }
    case CriterionKind::theorem_b: {
      if (auto v = exponent_bound(f, 2); !v.holds) return v;
      return no_divisibility([](const PrimePower& p) { return std::vector<int>{p.exponent}; });
    }
    case CriterionKind::left_nilpotent:
      return no_divisibility([](const PrimePower& p) {
        std::vector<int> ks;
        for (int k = 1; k <= p.exponent; ++k) ks.push_back(k);
        return ks;
      });
    case CriterionKind::theorem_c_literal:
    case CriterionKind::theorem_c_odd: {
      if (auto v = exponent_bound(f, 2); !v.holds) return v;
      auto v = no_divisibility([](const PrimePower& p) {
        return p.exponent == 2 ? std::vector<int>{2} : std::vector<int>{};
      });
      if (!v.holds) return v;
      if (n % 4 == 0) {
        for (const PrimePower& pi : fs) {
          if (pi.exponent != 2) continue;
          if (kind == CriterionKind::theorem_c_odd && pi.prime == 2) continue;
          if (pi.prime % 4 != 1) {
            return fail("4 divides n but " + std::to_string(pi.prime) + " is not 1 mod 4", pi.prime);
          }
        }
      }
      return {};
    }
  }
  return {};
}

bool criterion(long long n, CriterionKind kind) { return evaluate_criterion(n, kind).holds; }

}  // namespace skewbrace
