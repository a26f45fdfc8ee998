#include "skewbrace/brace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "skewbrace/arithmetic.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/isomorphism.hpp"

namespace skewbrace {
namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

bool same_set(const ElementSet& s, int n) { return static_cast<int>(s.size()) == n; }

ElementSet intersect(const ElementSet& x, const ElementSet& y) {
  ElementSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// Preimage of a set of cosets under a quotient projection.
ElementSet preimage(const std::vector<Elem>& projection, const ElementSet& s) {
  ElementSet out;
  for (Elem x = 0; x < static_cast<Elem>(projection.size()); ++x) {
    if (contains(s, projection[x])) out.push_back(x);
  }
  return out;
}

ElementSet opposite_derived(const SkewBrace& a) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      gens.push_back(a.add(a.add(a.neg(y), a.circ(x, y)), a.neg(x)));
    }
  }
  return subgroup_generated(a.additive(), normalized(std::move(gens)));
}

// Smallest subset containing x closed under both operations.
ElementSet generated_sub_brace(const SkewBrace& a, Elem x) {
  ElementSet current{0, x};
  current = normalized(std::move(current));
  for (;;) {
    ElementSet next = subgroup_generated(a.additive(), current);
    next = subgroup_generated(a.multiplicative(), next);
    std::vector<Elem> with_inverses = next;
    for (Elem y : next) {
      with_inverses.push_back(a.neg(y));
      with_inverses.push_back(a.circ_inverse(y));
    }
    next = normalized(std::move(with_inverses));
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_prime_index(std::size_t big, std::size_t small) {
  return big % small == 0 && is_prime(static_cast<long long>(big / small));
}

// J / I is a trivial brace: abelian, and a o b = a + b modulo I.
bool trivial_factor(const SkewBrace& a, const ElementSet& big, const ElementSet& small) {
  for (Elem x : big) {
    for (Elem y : big) {
      if (!contains(small, a.add(a.neg(y), a.lambda(x, y)))) return false;
      const Elem comm = a.add(a.add(a.neg(x), a.neg(y)), a.add(x, y));
      if (!contains(small, comm)) return false;
    }
  }
  return true;
}

// Depth-first search for a chain of ideals from {0} to A whose consecutive
// factors pass `step`; memoized on the ideal reached.
template <typename Step>
std::optional<std::vector<ElementSet>> ideal_chain(const SkewBrace& a, Step step) {
  const std::vector<ElementSet> all = ideals(a);
  const std::size_t top = all.size() - 1;  // A itself is the largest ideal
  std::vector<int> memo(all.size(), -1);   // -1 unknown, 0 dead end, 1 reaches A
  std::vector<std::size_t> next(all.size(), 0);
  auto reach = [&](auto&& self, std::size_t i) -> bool {
    if (i == top) return true;
    if (memo[i] >= 0) return memo[i] == 1;
    memo[i] = 0;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[j].size() <= all[i].size()) continue;
      if (!std::includes(all[j].begin(), all[j].end(), all[i].begin(), all[i].end())) continue;
      if (!step(all[j], all[i])) continue;
      if (self(self, j)) {
        memo[i] = 1;
        next[i] = j;
        break;
      }
    }
    return memo[i] == 1;
  };
  if (!reach(reach, 0)) return std::nullopt;
  std::vector<ElementSet> chain{all[0]};
  for (std::size_t i = 0; i != top; i = next[i]) chain.push_back(all[next[i]]);
  return chain;
}

}  // namespace

SkewBrace validate_skew_brace(const Table& add_table, const Table& circle_table) {
  if (add_table.order() != circle_table.order()) {
    throw Error(ErrorCode::BadInput, "tables of different order");
  }
  std::optional<FiniteGroup> add;
  try {
    add = validate_group(add_table);
  } catch (const Error& e) {
    throw Error(ErrorCode::BadAdditiveGroup, e.what());
  }
  std::optional<FiniteGroup> circle;
  try {
    circle = validate_group(circle_table);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoIdentityAtZero) throw Error(ErrorCode::IdentityMismatch, e.what());
    throw Error(ErrorCode::BadMultiplicativeGroup, e.what());
  }
  const int n = add->order();
  for (Elem a = 0; a < n; ++a) {
    const Elem na = add->inverse(a);
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = circle->op(a, b);
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = circle->op(a, add->op(b, c));
        const Elem rhs = add->op(add->op(ab, na), circle->op(a, c));
        if (lhs != rhs) throw Error(ErrorCode::DistributivityFails, "triple " + triple(a, b, c));
      }
    }
  }
  Table lambda(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) lambda.at(a, b) = add->op(add->inverse(a), circle->op(a, b));
  }
  // Consequences of the axioms; a failure here means the checks above are wrong.
  for (Elem a = 0; a < n; ++a) {
    if (!is_homomorphism(*add, *add, lambda.row(a)) || !is_permutation(lambda.row(a))) {
      throw Error(ErrorCode::DistributivityFails, "lambda_" + std::to_string(a) + " is not an automorphism");
    }
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = circle->op(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (lambda.at(ab, c) != lambda.at(a, lambda.at(b, c))) {
          throw Error(ErrorCode::DistributivityFails, "lambda is not a homomorphism at " + triple(a, b, c));
        }
      }
    }
  }
  return SkewBrace(std::move(*add), std::move(*circle), std::move(lambda));
}

SkewBrace trivial_brace(const FiniteGroup& g) { return validate_skew_brace(g.table(), g.table()); }

SkewBrace almost_trivial_brace(const FiniteGroup& g) {
  Table circle(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) circle.at(a, b) = g.op(b, a);
  }
  return validate_skew_brace(g.table(), circle);
}

Permutation lambda_of(const SkewBrace& a, Elem x) {
  auto row = a.lambda_row(x);
  return Permutation(row.begin(), row.end());
}

Elem star(const SkewBrace& a, Elem x, Elem y) { return a.add(a.lambda(x, y), a.neg(y)); }

ElementSet star_closure(const SkewBrace& a, std::span<const Elem> xs, std::span<const Elem> ys) {
  std::vector<Elem> gens;
  for (Elem x : xs) {
    for (Elem y : ys) gens.push_back(star(a, x, y));
  }
  return subgroup_generated(a.additive(), normalized(std::move(gens)));
}

std::string_view to_string(SubsetRole role) {
  switch (role) {
    case SubsetRole::not_closed: return "not_closed";
    case SubsetRole::sub_skew_brace: return "sub_skew_brace";
    case SubsetRole::left_ideal: return "left_ideal";
    case SubsetRole::ideal: return "ideal";
  }
  return "unknown";
}

SubsetRole subset_role(const SkewBrace& a, const ElementSet& s) {
  if (!is_subgroup(a.additive(), s)) return SubsetRole::not_closed;
  bool lambda_invariant = true;
  for (Elem x = 0; x < a.order() && lambda_invariant; ++x) {
    for (Elem y : s) {
      if (!contains(s, a.lambda(x, y))) {
        lambda_invariant = false;
        break;
      }
    }
  }
  if (!lambda_invariant) {
    return is_subgroup(a.multiplicative(), s) ? SubsetRole::sub_skew_brace : SubsetRole::not_closed;
  }
  if (is_normal_subgroup(a.additive(), s) && is_normal_subgroup(a.multiplicative(), s)) {
    return SubsetRole::ideal;
  }
  return SubsetRole::left_ideal;
}

std::vector<ElementSet> ideals(const SkewBrace& a) {
  std::vector<ElementSet> out;
  for (ElementSet& s : all_subgroups(a.additive())) {
    if (subset_role(a, s) == SubsetRole::ideal) out.push_back(std::move(s));
  }
  return out;
}

Quotient quotient(const SkewBrace& a, const ElementSet& ideal) {
  if (subset_role(a, ideal) != SubsetRole::ideal) {
    throw Error(ErrorCode::NotAnIdeal, "subset of size " + std::to_string(ideal.size()));
  }
  const int n = a.order();
  std::vector<Elem> projection(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (projection[x] >= 0) continue;
    const Elem index = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : ideal) projection[a.add(x, i)] = index;
  }
  const int m = static_cast<int>(reps.size());
  Table add(m), circle(m);
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      add.at(x, y) = projection[a.add(reps[x], reps[y])];
      circle.at(x, y) = projection[a.circ(reps[x], reps[y])];
    }
  }
  return Quotient{validate_skew_brace(add, circle), std::move(projection)};
}

ElementSet lambda_kernel(const SkewBrace& a) {
  ElementSet out;
  const Permutation id = identity_permutation(a.order());
  for (Elem x = 0; x < a.order(); ++x) {
    if (std::equal(id.begin(), id.end(), a.lambda_row(x).begin())) out.push_back(x);
  }
  return out;
}

ElementSet socle(const SkewBrace& a) { return intersect(center(a.additive()), lambda_kernel(a)); }

ElementSet annihilator(const SkewBrace& a) { return intersect(center(a.multiplicative()), socle(a)); }

std::vector<ElementSet> series(const SkewBrace& a, SeriesKind kind) {
  const int n = a.order();
  const ElementSet all = full_set(n);
  std::vector<ElementSet> out;
  switch (kind) {
    case SeriesKind::socle:
    case SeriesKind::annihilator: {
      out.push_back(ElementSet{0});
      for (int step = 0; step < n; ++step) {
        const Quotient q = quotient(a, out.back());
        const ElementSet top = kind == SeriesKind::socle ? socle(q.brace) : annihilator(q.brace);
        ElementSet next = preimage(q.projection, top);
        if (next == out.back()) break;
        out.push_back(std::move(next));
      }
      break;
    }
    case SeriesKind::left:
    case SeriesKind::right: {
      out.push_back(all);
      for (int step = 0; step < n; ++step) {
        ElementSet next = kind == SeriesKind::left ? star_closure(a, all, out.back())
                                                   : star_closure(a, out.back(), all);
        if (next == out.back()) break;
        out.push_back(std::move(next));
      }
      break;
    }
  }
  return out;
}

std::optional<int> multipermutation_level(const SkewBrace& a) {
  const auto s = series(a, SeriesKind::socle);
  if (!same_set(s.back(), a.order())) return std::nullopt;
  return static_cast<int>(s.size()) - 1;
}

const std::array<PropertyKind, kPropertyCount>& all_properties() {
  static const std::array<PropertyKind, kPropertyCount> kinds = {
      PropertyKind::trivial,         PropertyKind::almost_trivial,
      PropertyKind::is_brace,        PropertyKind::two_sided,
      PropertyKind::bi_skew,         PropertyKind::lambda_homomorphic,
      PropertyKind::weakly_trivial,  PropertyKind::meta_trivial,
      PropertyKind::one_generator,   PropertyKind::left_nilpotent,
      PropertyKind::right_nilpotent, PropertyKind::annihilator_nilpotent,
      PropertyKind::finite_mp_level, PropertyKind::supersoluble,
      PropertyKind::soluble,
  };
  return kinds;
}

std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::trivial: return "trivial";
    case PropertyKind::almost_trivial: return "almost_trivial";
    case PropertyKind::is_brace: return "is_brace";
    case PropertyKind::two_sided: return "two_sided";
    case PropertyKind::bi_skew: return "bi_skew";
    case PropertyKind::lambda_homomorphic: return "lambda_homomorphic";
    case PropertyKind::weakly_trivial: return "weakly_trivial";
    case PropertyKind::meta_trivial: return "meta_trivial";
    case PropertyKind::one_generator: return "one_generator";
    case PropertyKind::left_nilpotent: return "left_nilpotent";
    case PropertyKind::right_nilpotent: return "right_nilpotent";
    case PropertyKind::annihilator_nilpotent: return "annihilator_nilpotent";
    case PropertyKind::finite_mp_level: return "finite_mp_level";
    case PropertyKind::supersoluble: return "supersoluble";
    case PropertyKind::soluble: return "soluble";
  }
  return "unknown";
}

std::optional<PropertyKind> property_from_string(std::string_view name) {
  for (PropertyKind k : all_properties()) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<std::vector<ElementSet>> supersoluble_series(const SkewBrace& a) {
  return ideal_chain(a, [](const ElementSet& big, const ElementSet& small) {
    return is_prime_index(big.size(), small.size());
  });
}

std::optional<std::vector<ElementSet>> soluble_series(const SkewBrace& a) {
  return ideal_chain(a, [&a](const ElementSet& big, const ElementSet& small) {
    return trivial_factor(a, big, small);
  });
}

bool has_property(const SkewBrace& a, PropertyKind kind) {
  const int n = a.order();
  switch (kind) {
    case PropertyKind::trivial:
      return a.additive().table() == a.multiplicative().table();
    case PropertyKind::almost_trivial:
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (a.circ(x, y) != a.add(y, x)) return false;
        }
      }
      return true;
    case PropertyKind::is_brace:
      return group_predicate(a.additive(), GroupProperty::abelian);
    case PropertyKind::two_sided:
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          const Elem xy = a.add(x, y);
          for (Elem z = 0; z < n; ++z) {
            const Elem rhs = a.add(a.add(a.circ(x, z), a.neg(z)), a.circ(y, z));
            if (a.circ(xy, z) != rhs) return false;
          }
        }
      }
      return true;
    case PropertyKind::bi_skew:
      // lambda_{a+b} = lambda_b lambda_a and lambda_{lambda_a(b)} = lambda_a lambda_b lambda_a^-1
      for (Elem x = 0; x < n; ++x) {
        const Permutation lx = lambda_of(a, x);
        const Permutation lx_inv = inverse(lx);
        for (Elem y = 0; y < n; ++y) {
          const Permutation ly = lambda_of(a, y);
          const Permutation sum = lambda_of(a, a.add(x, y));
          if (sum != compose(ly, lx)) return false;
          if (lambda_of(a, a.lambda(x, y)) != compose(lx, compose(ly, lx_inv))) return false;
        }
      }
      return true;
    case PropertyKind::lambda_homomorphic:
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          const Elem s = a.add(x, y);
          for (Elem z = 0; z < n; ++z) {
            if (a.lambda(s, z) != a.lambda(x, a.lambda(y, z))) return false;
          }
        }
      }
      return true;
    case PropertyKind::weakly_trivial: {
      const ElementSet all = full_set(n);
      return intersect(star_closure(a, all, all), opposite_derived(a)).size() == 1;
    }
    case PropertyKind::meta_trivial: {
      const ElementSet all = full_set(n);
      const ElementSet d = star_closure(a, all, all);
      for (Elem x : d) {
        for (Elem y : d) {
          if (a.circ(x, y) != a.add(x, y)) return false;
        }
      }
      return true;
    }
    case PropertyKind::one_generator:
      for (Elem x = 0; x < n; ++x) {
        if (same_set(generated_sub_brace(a, x), n)) return true;
      }
      return false;
    case PropertyKind::left_nilpotent:
      return series(a, SeriesKind::left).back().size() == 1;
    case PropertyKind::right_nilpotent:
      return series(a, SeriesKind::right).back().size() == 1;
    case PropertyKind::annihilator_nilpotent:
      return same_set(series(a, SeriesKind::annihilator).back(), n);
    case PropertyKind::finite_mp_level:
      return same_set(series(a, SeriesKind::socle).back(), n);
    case PropertyKind::supersoluble:
      return supersoluble_series(a).has_value();
    case PropertyKind::soluble:
      return soluble_series(a).has_value();
  }
  return false;
}

SkewBrace opposite(const SkewBrace& a) {
  Table add(a.order());
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) add.at(x, y) = a.add(y, x);
  }
  return validate_skew_brace(add, a.multiplicative().table());
}

std::vector<ElementSet> sylow_decomposition(const SkewBrace& a) {
  if (!group_predicate(a.additive(), GroupProperty::nilpotent) ||
      !group_predicate(a.multiplicative(), GroupProperty::nilpotent)) {
    throw Error(ErrorCode::NotNilpotentType, "additive and multiplicative groups must be nilpotent");
  }
  std::vector<ElementSet> parts;
  for (const PrimePower& pp : factorize(a.order()).factors) {
    ElementSet s = sylow_subgroup(a.additive(), static_cast<int>(pp.prime));
    if (subset_role(a, s) != SubsetRole::ideal) {
      throw Error(ErrorCode::NotAnIdeal, "Sylow " + std::to_string(pp.prime) + "-subgroup");
    }
    parts.push_back(std::move(s));
  }
  // Distinct parts commute and their sum equals their circle product, and
  // the sum map from the product of the parts is onto A.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (Elem x : parts[i]) {
        for (Elem y : parts[j]) {
          const Elem s = a.add(x, y);
          if (s != a.add(y, x) || s != a.circ(x, y) || s != a.circ(y, x)) {
            throw Error(ErrorCode::NotNilpotentType, "Sylow ideals do not form a direct product");
          }
        }
      }
    }
  }
  ElementSet reached{0};
  for (const ElementSet& part : parts) {
    ElementSet next;
    for (Elem x : reached) {
      for (Elem y : part) next.push_back(a.add(x, y));
    }
    reached = normalized(std::move(next));
  }
  if (!same_set(reached, a.order())) {
    throw Error(ErrorCode::NotNilpotentType, "Sylow ideals do not cover A");
  }
  return parts;
}

BraceInvariants invariants(const SkewBrace& a) {
  BraceInvariants inv;
  inv.order = a.order();
  for (Elem x = 0; x < a.order(); ++x) {
    inv.element_orders.emplace_back(a.additive().element_order(x), a.multiplicative().element_order(x));
  }
  std::sort(inv.element_orders.begin(), inv.element_orders.end());
  inv.socle_size = static_cast<int>(socle(a).size());
  inv.annihilator_size = static_cast<int>(annihilator(a).size());
  const ElementSet all = full_set(a.order());
  inv.derived_size = static_cast<int>(star_closure(a, all, all).size());
  return inv;
}

std::optional<Permutation> find_brace_isomorphism(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return std::nullopt;
  return StructureMatcher({&a.additive().table(), &a.multiplicative().table()},
                          {&b.additive().table(), &b.multiplicative().table()})
      .first();
}

bool isomorphic(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return false;
  if (invariants(a) != invariants(b)) return false;
  return find_brace_isomorphism(a, b).has_value();
}

}  // namespace skewbrace
