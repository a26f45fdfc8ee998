#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "skewbrace/table.hpp"

namespace skewbrace {

// Bijections f between two carriers, each equipped with the same number of
// group operations, such that f(x op_k y) = f(x) op_k f(y) for every k.
//
// The first operation must be a group with identity 0; a generating sequence
// for it is chosen greedily and candidate images are restricted to elements
// whose orders agree in every operation. The map is then extended along words
// in the generators and checked on the whole carrier.
class StructureMatcher {
 public:
  StructureMatcher(std::vector<const Table*> from, std::vector<const Table*> to);

  std::optional<Permutation> first() const;

  // Calls visit for every isomorphism; stops early when visit returns false.
  void for_each(const std::function<bool(const Permutation&)>& visit) const;

 private:
  std::vector<const Table*> from_;
  std::vector<const Table*> to_;
};

// Greedy short generating sequence of the group with table t: at each step
// the element enlarging the generated subgroup most is taken.
std::vector<Elem> greedy_generators(const Table& t);

// Order of x in the group table t (identity at 0).
int order_in(const Table& t, Elem x);

}  // namespace skewbrace
