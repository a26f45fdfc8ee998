#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// A finite non-degenerate set-theoretic solution of the Yang-Baxter equation,
// r(x, y) = (lambda_x(y), rho_y(x)). Row x of the lambda table is lambda_x and
// row y of the rho table is rho_y.
class Solution {
 public:
  int size() const noexcept { return lambda_.order(); }

  Elem lambda(Elem x, Elem y) const { return lambda_.at(x, y); }
  Elem rho(Elem y, Elem x) const { return rho_.at(y, x); }
  std::pair<Elem, Elem> apply(Elem x, Elem y) const { return {lambda(x, y), rho(y, x)}; }

  const Table& lambda_table() const noexcept { return lambda_; }
  const Table& rho_table() const noexcept { return rho_; }

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  Solution(Table lambda, Table rho) : lambda_(std::move(lambda)), rho_(std::move(rho)) {}

  friend Solution validate_solution(Table lambda, Table rho);

  Table lambda_;
  Table rho_;
};

// Exhaustive check of non-degeneracy, bijectivity and the braid relation.
// Throws NotPermutation, RNotBijective or BraidFails(x, y, z).
Solution validate_solution(Table lambda, Table rho);

Solution flip(int n);

// r_A(a, b) = (lambda_a(b), lambda_a(b)^-1 o a o b)
Solution from_skew_brace(const SkewBrace& a);

bool is_involutive(const Solution& s);
bool is_flip(const Solution& s);

struct Retraction {
  Solution solution;
  std::vector<Elem> projection;  // class index of each point; classes ordered by smallest member
};

// Identifies x and y when lambda_x = lambda_y and rho_x = rho_y. Throws
// InducedMapIllDefined if the induced maps depend on representatives.
Retraction retraction(const Solution& s);

// Smallest m with |Ret^m(S)| = 1, if any.
std::optional<int> mp_level(const Solution& s);

// Sizes of S, Ret(S), Ret^2(S), ... up to the first repetition.
std::vector<int> retraction_sizes(const Solution& s);

// (f x f) after r equals t after (f x f) on all pairs.
bool check_solution_map(const Solution& source, const Solution& target, std::span<const Elem> image);

struct WitnessStage {
  Solution target;
  std::vector<Elem> map;  // a morphism of solutions from the checked solution into target
};

// Data certifying that a solution is supersoluble at base_point: a chain
// {base_point} = X_0 <= X_1 <= ... <= X_m = X and one morphism per step.
struct SupersolubleWitness {
  Elem base_point = 0;
  std::vector<ElementSet> chain;
  std::vector<WitnessStage> stages;
};

// Witness built from a prime-factor ideal series: X_i = I_i and the stage
// maps are the quotient projections A -> A/I_i. Throws NotSupersoluble.
SupersolubleWitness witness_from_supersoluble(const SkewBrace& a);

struct WitnessCheck {
  bool accepted = true;
  int failed_condition = 0;  // 1..5 as in the checks of verify_witness, 0 for malformed data
  int level = -1;
  std::string detail;

  explicit operator bool() const noexcept { return accepted; }
};

WitnessCheck verify_witness(const Solution& s, const SupersolubleWitness& w);

}  // namespace skewbrace
