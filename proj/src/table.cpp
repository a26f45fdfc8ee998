#include "skewbrace/table.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "skewbrace/error.hpp"

namespace skewbrace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::OrderOutOfCatalog: return "OrderOutOfCatalog";
    case ErrorCode::BadAdditiveGroup: return "BadAdditiveGroup";
    case ErrorCode::BadMultiplicativeGroup: return "BadMultiplicativeGroup";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::DistributivityFails: return "DistributivityFails";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotNilpotentType: return "NotNilpotentType";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::RNotBijective: return "RNotBijective";
    case ErrorCode::BraidFails: return "BraidFails";
    case ErrorCode::InducedMapIllDefined: return "InducedMapIllDefined";
    case ErrorCode::NotSupersoluble: return "NotSupersoluble";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::ConditionFails: return "ConditionFails";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::MismatchFound: return "MismatchFound";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Table::Table(int order) : order_(order), cells_(static_cast<std::size_t>(order) * order, 0) {}

Table::Table(int order, std::vector<Elem> cells) : order_(order), cells_(std::move(cells)) {
  if (order < 0 || cells_.size() != static_cast<std::size_t>(order) * order) {
    throw Error(ErrorCode::BadInput, "cell count does not match order " + std::to_string(order));
  }
}

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const int n = static_cast<int>(rows.size());
  Table t(n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n) {
      throw Error(ErrorCode::BadInput, "row " + std::to_string(a) + " has length " +
                                           std::to_string(rows[a].size()) + ", expected " +
                                           std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      const Elem v = rows[a][b];
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::BadInput, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") = " + std::to_string(v) + " out of range");
      }
      t.at(a, b) = v;
    }
  }
  return t;
}

std::vector<std::vector<Elem>> Table::rows() const {
  std::vector<std::vector<Elem>> out(order_);
  for (int a = 0; a < order_; ++a) out[a].assign(row(a).begin(), row(a).end());
  return out;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(std::span<const Elem> f, std::span<const Elem> g) {
  Permutation h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

Permutation inverse(std::span<const Elem> p) {
  Permutation q(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<Elem>(x);
  return q;
}

bool is_permutation(std::span<const Elem> p) {
  std::vector<char> seen(p.size(), 0);
  for (Elem v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

ElementSet normalized(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const ElementSet& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

ElementSet image_of(std::span<const Elem> map, const ElementSet& s) {
  ElementSet out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(map[x]);
  return normalized(std::move(out));
}

ElementSet full_set(int n) { return identity_permutation(n); }

}  // namespace skewbrace
