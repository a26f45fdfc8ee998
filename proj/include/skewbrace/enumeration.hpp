#pragma once

#include <array>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

inline constexpr int kDeskBound = 12;
inline constexpr int kHardCap = 15;

// Regular subgroups of Hol(g), as element sets of holomorph(g).group.
// Throws OrderTooLarge when |g| exceeds bound (bound itself is capped at 15).
std::vector<ElementSet> regular_subgroups(const FiniteGroup& g, int bound = kDeskBound);

// One skew brace per regular subgroup R: a o b = r_a(b), where r_a is the
// element of R sending 0 to a.
std::vector<SkewBrace> skew_braces_on(const FiniteGroup& g, int bound = kDeskBound);

using PropertyVector = std::array<bool, kPropertyCount>;

// Indexed like all_properties().
PropertyVector property_vector(const SkewBrace& a);

struct EnumeratedBrace {
  SkewBrace brace;
  int additive_index = 0;  // position of the additive group in groups_of_order
  std::string additive_name;
  PropertyVector properties{};
};

struct EnumerationResult {
  int order = 0;
  std::vector<EnumeratedBrace> braces;
  int total = 0;
  int brace_count = 0;
  int non_brace_count = 0;
};

// All skew braces of order n up to isomorphism, sorted by (additive group,
// circle table). Throws OrderTooLarge.
EnumerationResult enumerate_order(int n, int bound = kDeskBound);

// Independent brute force for n <= 6: rows of the circle table are chosen
// among those compatible with distributivity, then filtered for the group
// axioms and classified by pairwise isomorphism tests. Throws OrderTooLarge.
EnumerationResult direct_oracle(int n);

}  // namespace skewbrace
