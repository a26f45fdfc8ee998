#pragma once

#include <string>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

FiniteGroup cyclic_group(int n);

// (b, c) is stored at index b + |B| * c.
FiniteGroup direct_product(const FiniteGroup& b, const FiniteGroup& c);

// <a, b | a^m = 1, b^n = a^s, b a b^-1 = a^k>, with a^i b^j at index i + m * j.
// Requires k^n = 1 and k * s = s (mod m); the result is validated.
FiniteGroup metacyclic_group(int m, int n, int s, int k);

FiniteGroup dihedral_group(int m);   // order 2m
FiniteGroup quaternion_group();      // order 8
FiniteGroup dicyclic_group(int m);   // order 4m
FiniteGroup alternating_group_4();
FiniteGroup elementary_abelian_group(int p, int rank);

// Closure of the given permutations under composition; the identity gets index 0.
FiniteGroup group_from_permutations(const std::vector<Permutation>& generators);

struct CatalogGroup {
  std::string name;
  FiniteGroup group;
};

constexpr int kCatalogMaxOrder = 15;

// One representative per isomorphism class of groups of order n (1 <= n <= 15),
// in a fixed order. Throws OrderOutOfCatalog otherwise.
std::vector<CatalogGroup> groups_of_order(int n);

}  // namespace skewbrace
