#pragma once

#include <optional>
#include <span>
#include <vector>

#include "skewbrace/table.hpp"

namespace skewbrace {

// A finite group given by its Cayley table. Index 0 is the identity.
// Instances are immutable and only obtainable through validation (or from
// builders whose output is valid by construction).
class FiniteGroup {
 public:
  int order() const noexcept { return table_.order(); }
  Elem op(Elem a, Elem b) const { return table_.at(a, b); }
  Elem inverse(Elem a) const { return inverse_[a]; }
  int element_order(Elem a) const { return element_order_[a]; }
  const Table& table() const noexcept { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  struct Trusted {};
  FiniteGroup(Table table, Trusted);

  friend FiniteGroup validate_group(Table table);
  friend FiniteGroup trusted_group(Table table);

  Table table_;
  std::vector<Elem> inverse_;
  std::vector<int> element_order_;
};

// Checks the Latin-square property, the identity at index 0 and
// associativity. Throws NotLatinSquare, NoIdentityAtZero or NotAssociative
// naming the first violating cell or triple.
FiniteGroup validate_group(Table table);
FiniteGroup validate_group(const std::vector<std::vector<Elem>>& rows);

// Wraps a table known to be a group without the cubic associativity check.
// Used for holomorphs, whose tables come from a verified product formula.
FiniteGroup trusted_group(Table table);

ElementSet subgroup_generated(const FiniteGroup& g, std::span<const Elem> seed);

// Subgroup generated by an existing subgroup and one extra element.
ElementSet subgroup_join(const FiniteGroup& g, const ElementSet& h, Elem x);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);

// Every subgroup, sorted by (size, members).
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

enum class GroupProperty { abelian, cyclic, nilpotent, soluble };

bool group_predicate(const FiniteGroup& g, GroupProperty kind);

ElementSet center(const FiniteGroup& g);

// Subgroup generated by all commutators [x, y] with x in a, y in b.
ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Elem> image);

// All automorphisms, sorted lexicographically (so the identity comes first).
std::vector<Permutation> automorphisms(const FiniteGroup& g);

std::optional<Permutation> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Hol(G) on pairs (g, alpha) with (g, a)(h, b) = (g * a(h), a b). The pair
// (g, automorphism index i) has index g + |G| * i; automorphism 0 is the identity.
struct Holomorph {
  FiniteGroup group;
  std::vector<Permutation> automorphisms;
  int base_order = 0;

  Elem encode(Elem g, int automorphism_index) const { return g + base_order * automorphism_index; }
  Elem translation_part(Elem h) const { return h % base_order; }
  int automorphism_index(Elem h) const { return h / base_order; }

  // The element h acting on the carrier of G: x -> g * alpha(x).
  Elem act(const FiniteGroup& base, Elem h, Elem x) const {
    return base.op(translation_part(h), automorphisms[automorphism_index(h)][x]);
  }

  ElementSet translations() const;
  ElementSet point_stabilizer() const;
};

Holomorph holomorph(const FiniteGroup& g);

// Elements of p-power order. Throws NotNilpotent unless g is nilpotent.
ElementSet sylow_subgroup(const FiniteGroup& g, int p);

}  // namespace skewbrace
