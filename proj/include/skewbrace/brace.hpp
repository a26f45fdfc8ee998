#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

// A finite skew brace (A, +, o): two group tables on 0..n-1 sharing the
// identity 0 and satisfying a o (b + c) = a o b - a + a o c. The lambda maps
// lambda_a(b) = -a + a o b are cached at validation.
class SkewBrace {
 public:
  int order() const noexcept { return add_.order(); }

  const FiniteGroup& additive() const noexcept { return add_; }
  const FiniteGroup& multiplicative() const noexcept { return circle_; }

  Elem add(Elem a, Elem b) const { return add_.op(a, b); }
  Elem neg(Elem a) const { return add_.inverse(a); }
  Elem circ(Elem a, Elem b) const { return circle_.op(a, b); }
  Elem circ_inverse(Elem a) const { return circle_.inverse(a); }

  Elem lambda(Elem a, Elem b) const { return lambda_.at(a, b); }
  std::span<const Elem> lambda_row(Elem a) const { return lambda_.row(a); }
  const Table& lambda_table() const noexcept { return lambda_; }

  friend bool operator==(const SkewBrace& x, const SkewBrace& y) {
    return x.add_ == y.add_ && x.circle_ == y.circle_;
  }

 private:
  SkewBrace(FiniteGroup add, FiniteGroup circle, Table lambda)
      : add_(std::move(add)), circle_(std::move(circle)), lambda_(std::move(lambda)) {}

  friend SkewBrace validate_skew_brace(const Table& add, const Table& circle);

  FiniteGroup add_;
  FiniteGroup circle_;
  Table lambda_;
};

// Throws BadAdditiveGroup, BadMultiplicativeGroup, IdentityMismatch or
// DistributivityFails(a, b, c).
SkewBrace validate_skew_brace(const Table& add, const Table& circle);

SkewBrace trivial_brace(const FiniteGroup& g);        // a o b = a + b
SkewBrace almost_trivial_brace(const FiniteGroup& g); // a o b = b + a

Permutation lambda_of(const SkewBrace& a, Elem x);

// a * b = -a + a o b - b = lambda_a(b) - b
Elem star(const SkewBrace& a, Elem x, Elem y);

// Additive subgroup generated by all x * y with x in xs, y in ys.
ElementSet star_closure(const SkewBrace& a, std::span<const Elem> xs, std::span<const Elem> ys);

enum class SubsetRole { not_closed, sub_skew_brace, left_ideal, ideal };

std::string_view to_string(SubsetRole role);

// Strongest applicable classification of a subset containing 0.
SubsetRole subset_role(const SkewBrace& a, const ElementSet& s);

// All ideals, smallest first; always contains {0} and A.
std::vector<ElementSet> ideals(const SkewBrace& a);

struct Quotient {
  SkewBrace brace;
  // projection[x] is the index of the coset x + I; cosets are numbered by
  // their smallest member, so the coset of 0 is 0.
  std::vector<Elem> projection;
};

// Throws NotAnIdeal.
Quotient quotient(const SkewBrace& a, const ElementSet& ideal);

ElementSet lambda_kernel(const SkewBrace& a);
ElementSet socle(const SkewBrace& a);        // Z(A,+) meet Ker(lambda)
ElementSet annihilator(const SkewBrace& a);  // Z(A,o) meet Soc(A)

enum class SeriesKind { socle, annihilator, left, right };

// Ascending series start at {0}, descending ones at A; terms are listed until
// the first repetition (which is omitted).
std::vector<ElementSet> series(const SkewBrace& a, SeriesKind kind);

// Smallest m with Soc_m(A) = A, if any.
std::optional<int> multipermutation_level(const SkewBrace& a);

enum class PropertyKind {
  trivial,
  almost_trivial,
  is_brace,
  two_sided,
  bi_skew,
  lambda_homomorphic,
  weakly_trivial,
  meta_trivial,
  one_generator,
  left_nilpotent,
  right_nilpotent,
  annihilator_nilpotent,
  finite_mp_level,
  supersoluble,
  soluble,
};

inline constexpr std::size_t kPropertyCount = 15;

const std::array<PropertyKind, kPropertyCount>& all_properties();
std::string_view to_string(PropertyKind kind);
std::optional<PropertyKind> property_from_string(std::string_view name);

bool has_property(const SkewBrace& a, PropertyKind kind);

// Ideal series {0} = I_0 < ... < I_m = A with prime-order factors, if one exists.
std::optional<std::vector<ElementSet>> supersoluble_series(const SkewBrace& a);

// Ideal series whose factors are trivial braces, if one exists.
std::optional<std::vector<ElementSet>> soluble_series(const SkewBrace& a);

// Same multiplication, reversed addition.
SkewBrace opposite(const SkewBrace& a);

// One ideal per prime divisor of |A|; requires both groups nilpotent
// (throws NotNilpotentType).
std::vector<ElementSet> sylow_decomposition(const SkewBrace& a);

struct BraceInvariants {
  int order = 0;
  std::vector<std::pair<int, int>> element_orders;  // sorted (additive, multiplicative) order pairs
  int socle_size = 0;
  int annihilator_size = 0;
  int derived_size = 0;

  friend auto operator<=>(const BraceInvariants&, const BraceInvariants&) = default;
  friend bool operator==(const BraceInvariants&, const BraceInvariants&) = default;
};

BraceInvariants invariants(const SkewBrace& a);

std::optional<Permutation> find_brace_isomorphism(const SkewBrace& a, const SkewBrace& b);
bool isomorphic(const SkewBrace& a, const SkewBrace& b);

}  // namespace skewbrace
