#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace skewbrace {

// Elements of every finite structure are the indices 0..n-1.
using Elem = int;

// A permutation (or more generally a self-map) of 0..n-1, p[x] is the image of x.
using Permutation = std::vector<Elem>;

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Elem>;

// Square operation table stored row-major; at(a, b) is the product of a and b.
class Table {
 public:
  Table() = default;
  explicit Table(int order);
  Table(int order, std::vector<Elem> cells);

  // Throws Error(BadInput) unless rows form a square table with entries in range.
  static Table from_rows(const std::vector<std::vector<Elem>>& rows);

  int order() const noexcept { return order_; }

  Elem at(Elem a, Elem b) const { return cells_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem& at(Elem a, Elem b) { return cells_[static_cast<std::size_t>(a) * order_ + b]; }

  std::span<const Elem> row(Elem a) const {
    return {cells_.data() + static_cast<std::size_t>(a) * order_, static_cast<std::size_t>(order_)};
  }

  std::vector<std::vector<Elem>> rows() const;
  const std::vector<Elem>& cells() const noexcept { return cells_; }

  // Same order and same cells; ordering is lexicographic on (order, cells).
  friend auto operator<=>(const Table&, const Table&) = default;
  friend bool operator==(const Table&, const Table&) = default;

 private:
  int order_ = 0;
  std::vector<Elem> cells_;
};

Permutation identity_permutation(int n);

// (f after g)(x) = f(g(x))
Permutation compose(std::span<const Elem> f, std::span<const Elem> g);

Permutation inverse(std::span<const Elem> p);

bool is_permutation(std::span<const Elem> p);

// Sorts and removes duplicates.
ElementSet normalized(ElementSet s);

bool contains(const ElementSet& s, Elem x);

// Image of a set under a map, normalized.
ElementSet image_of(std::span<const Elem> map, const ElementSet& s);

ElementSet full_set(int n);

}  // namespace skewbrace
