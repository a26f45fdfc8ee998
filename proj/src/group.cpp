#include "skewbrace/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "skewbrace/error.hpp"
#include "skewbrace/isomorphism.hpp"

namespace skewbrace {
namespace {

std::string cell(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

ElementSet closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::deque<Elem> todo{0};
  in[0] = 1;
  while (!todo.empty()) {
    const Elem x = todo.front();
    todo.pop_front();
    for (Elem s : gens) {
      const Elem y = g.op(x, s);
      if (!in[y]) {
        in[y] = 1;
        todo.push_back(y);
      }
    }
  }
  ElementSet out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

Elem commutator(const FiniteGroup& g, Elem x, Elem y) {
  return g.op(g.op(g.inverse(x), g.inverse(y)), g.op(x, y));
}

std::vector<ElementSet> upper_central_series(const FiniteGroup& g) {
  std::vector<ElementSet> series{ElementSet{0}};
  for (;;) {
    const ElementSet& z = series.back();
    ElementSet next;
    for (Elem x = 0; x < g.order(); ++x) {
      bool central = true;
      for (Elem y = 0; y < g.order() && central; ++y) central = contains(z, commutator(g, x, y));
      if (central) next.push_back(x);
    }
    if (next == z) return series;
    series.push_back(std::move(next));
  }
}

std::vector<ElementSet> derived_series(const FiniteGroup& g) {
  std::vector<ElementSet> series{full_set(g.order())};
  for (;;) {
    ElementSet next = commutator_subgroup(g, series.back(), series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

}  // namespace

FiniteGroup::FiniteGroup(Table table, Trusted) : table_(std::move(table)) {
  const int n = table_.order();
  inverse_.assign(n, 0);
  element_order_.assign(n, 1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (table_.at(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    element_order_[a] = order_in(table_, a);
  }
}

FiniteGroup trusted_group(Table table) { return FiniteGroup(std::move(table), FiniteGroup::Trusted{}); }

FiniteGroup validate_group(Table t) {
  const int n = t.order();
  if (n < 1) throw Error(ErrorCode::BadInput, "empty table");
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      const Elem v = t.at(a, b);
      if (v < 0 || v >= n) throw Error(ErrorCode::BadInput, "entry " + cell(a, b) + " out of range");
      if (seen[v]) throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(a) + " repeats " + std::to_string(v) + " at cell " + cell(a, b));
      seen[v] = 1;
    }
  }
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      const Elem v = t.at(a, b);
      if (seen[v]) throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(b) + " repeats " + std::to_string(v) + " at cell " + cell(a, b));
      seen[v] = 1;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (t.at(0, a) != a) throw Error(ErrorCode::NoIdentityAtZero, "cell " + cell(0, a));
    if (t.at(a, 0) != a) throw Error(ErrorCode::NoIdentityAtZero, "cell " + cell(a, 0));
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = t.at(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (t.at(ab, c) != t.at(a, t.at(b, c))) {
          throw Error(ErrorCode::NotAssociative, "triple (" + std::to_string(a) + "," +
                                                     std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return FiniteGroup(std::move(t), FiniteGroup::Trusted{});
}

FiniteGroup validate_group(const std::vector<std::vector<Elem>>& rows) {
  return validate_group(Table::from_rows(rows));
}

ElementSet subgroup_generated(const FiniteGroup& g, std::span<const Elem> seed) {
  return closure(g, seed);
}

ElementSet subgroup_join(const FiniteGroup& g, const ElementSet& h, Elem x) {
  std::vector<Elem> gens = h;
  gens.push_back(x);
  return closure(g, gens);
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!contains(s, 0)) return false;
  for (Elem a : s) {
    for (Elem b : s) {
      if (!contains(s, g.op(a, b))) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem a : s) {
      if (!contains(s, g.op(g.op(x, a), g.inverse(x)))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  // Each subgroup is stored with a short generating list so joins stay cheap.
  std::map<ElementSet, std::vector<Elem>> found;
  std::deque<ElementSet> todo;
  found.emplace(ElementSet{0}, std::vector<Elem>{});
  todo.push_back(ElementSet{0});
  while (!todo.empty()) {
    const ElementSet h = todo.front();
    todo.pop_front();
    const std::vector<Elem> gens = found.at(h);
    for (Elem x = 1; x < g.order(); ++x) {
      if (contains(h, x)) continue;
      std::vector<Elem> more = gens;
      more.push_back(x);
      ElementSet k = closure(g, more);
      if (found.emplace(k, more).second) todo.push_back(std::move(k));
    }
  }
  std::vector<ElementSet> out;
  for (auto& [s, gens] : found) out.push_back(s);
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  return out;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.op(x, y) == g.op(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> gens;
  for (Elem x : a) {
    for (Elem y : b) gens.push_back(commutator(g, x, y));
  }
  gens = normalized(std::move(gens));
  return closure(g, gens);
}

bool group_predicate(const FiniteGroup& g, GroupProperty kind) {
  switch (kind) {
    case GroupProperty::abelian:
      return static_cast<int>(center(g).size()) == g.order();
    case GroupProperty::cyclic:
      for (Elem x = 0; x < g.order(); ++x) {
        if (g.element_order(x) == g.order()) return true;
      }
      return false;
    case GroupProperty::nilpotent:
      return static_cast<int>(upper_central_series(g).back().size()) == g.order();
    case GroupProperty::soluble:
      return derived_series(g).back().size() == 1;
  }
  return false;
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Elem> image) {
  if (static_cast<int>(image.size()) != source.order()) return false;
  for (Elem v : image) {
    if (v < 0 || v >= target.order()) return false;
  }
  for (Elem x = 0; x < source.order(); ++x) {
    for (Elem y = 0; y < source.order(); ++y) {
      if (image[source.op(x, y)] != target.op(image[x], image[y])) return false;
    }
  }
  return true;
}

std::vector<Permutation> automorphisms(const FiniteGroup& g) {
  std::vector<Permutation> out;
  StructureMatcher({&g.table()}, {&g.table()}).for_each([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Permutation> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  return StructureMatcher({&a.table()}, {&b.table()}).first();
}

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_group_isomorphism(a, b).has_value();
}

ElementSet Holomorph::translations() const {
  ElementSet s(base_order);
  for (Elem g = 0; g < base_order; ++g) s[g] = encode(g, 0);
  return s;
}

ElementSet Holomorph::point_stabilizer() const {
  ElementSet s(automorphisms.size());
  for (std::size_t i = 0; i < automorphisms.size(); ++i) s[i] = encode(0, static_cast<int>(i));
  return s;
}

Holomorph holomorph(const FiniteGroup& g) {
  std::vector<Permutation> autos = automorphisms(g);
  const int n = g.order();
  const int m = static_cast<int>(autos.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < m; ++i) index.emplace(autos[i], i);
  std::vector<int> aut_product(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aut_product[static_cast<std::size_t>(i) * m + j] = index.at(compose(autos[i], autos[j]));
  }
  Table t(n * m);
  for (int i = 0; i < m; ++i) {
    for (Elem a = 0; a < n; ++a) {
      for (int j = 0; j < m; ++j) {
        for (Elem b = 0; b < n; ++b) {
          t.at(a + n * i, b + n * j) = g.op(a, autos[i][b]) + n * aut_product[static_cast<std::size_t>(i) * m + j];
        }
      }
    }
  }
  return Holomorph{trusted_group(std::move(t)), std::move(autos), n};
}

ElementSet sylow_subgroup(const FiniteGroup& g, int p) {
  if (!group_predicate(g, GroupProperty::nilpotent)) {
    throw Error(ErrorCode::NotNilpotent, "Sylow subgroups are not unique in a non-nilpotent group");
  }
  ElementSet out;
  for (Elem x = 0; x < g.order(); ++x) {
    int k = g.element_order(x);
    while (k % p == 0) k /= p;
    if (k == 1) out.push_back(x);
  }
  return out;
}

}  // namespace skewbrace
