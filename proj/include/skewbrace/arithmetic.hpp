#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skewbrace {

struct PrimePower {
  long long prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = product of prime^exponent, primes strictly ascending.
struct Factorization {
  long long n = 1;
  std::vector<PrimePower> factors;
};

// Trial division; n >= 1.
Factorization factorize(long long n);

bool is_prime(long long n);

long long ipow(long long base, int exponent);

enum class CriterionKind { theorem_a, theorem_b, left_nilpotent, theorem_c_literal, theorem_c_odd };

std::string_view to_string(CriterionKind kind);
std::optional<CriterionKind> criterion_from_string(std::string_view name);

struct CriterionVerdict {
  bool holds = true;
  // For a failure: the violated condition and the primes involved. k is the
  // exponent in p_i | p_j^k - 1 where that is the violated condition.
  std::string reason;
  std::optional<long long> p_i;
  std::optional<long long> p_j;
  std::optional<int> k;
};

// Literal evaluation of the arithmetic condition of the given kind:
//   theorem_a:      every exponent is 1 and p_i does not divide p_j - 1 (i != j)
//   theorem_b:      every exponent <= 2 and p_i does not divide p_j^a_j - 1
//   left_nilpotent: p_i does not divide p_j^k - 1 for 1 <= k <= a_j
//   theorem_c_*:    every exponent <= 2; if a_j = 2 then p_i does not divide
//                   p_j^2 - 1; if 4 | n then p_i = 1 (mod 4) whenever a_i = 2
//                   (theorem_c_odd applies the last bullet to odd p_i only).
CriterionVerdict evaluate_criterion(long long n, CriterionKind kind);

bool criterion(long long n, CriterionKind kind);

}  // namespace skewbrace
