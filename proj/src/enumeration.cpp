#include "skewbrace/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "skewbrace/catalog.hpp"
#include "skewbrace/error.hpp"

namespace skewbrace {
namespace {

void check_bound(int n, int bound, int cap) {
  if (n < 1) throw Error(ErrorCode::BadInput, "order must be positive");
  if (n > std::min(bound, cap)) {
    throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(std::min(bound, cap)));
  }
}

// Closure of gens in the holomorph, abandoned as soon as two elements share a
// translation part or the size exceeds n.
std::optional<ElementSet> semiregular_closure(const Holomorph& hol, const std::vector<Elem>& gens,
                                              std::vector<char>& seen_translation) {
  const int n = hol.base_order;
  std::fill(seen_translation.begin(), seen_translation.end(), 0);
  ElementSet elems{0};
  seen_translation[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Elem g : gens) {
      const Elem y = hol.group.op(elems[head], g);
      if (std::find(elems.begin(), elems.end(), y) != elems.end()) continue;
      const Elem t = hol.translation_part(y);
      if (seen_translation[t] || static_cast<int>(elems.size()) == n) return std::nullopt;
      seen_translation[t] = 1;
      elems.push_back(y);
    }
  }
  if (n % static_cast<int>(elems.size()) != 0) return std::nullopt;
  return normalized(std::move(elems));
}

void search(const Holomorph& hol, std::vector<Elem>& gens, const ElementSet& current, std::vector<char>& scratch,
            std::vector<ElementSet>& out) {
  const int n = hol.base_order;
  if (static_cast<int>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  std::vector<char> covered(n, 0);
  for (Elem h : current) covered[hol.translation_part(h)] = 1;
  const Elem a = static_cast<Elem>(std::find(covered.begin(), covered.end(), 0) - covered.begin());
  for (int i = 0; i < static_cast<int>(hol.automorphisms.size()); ++i) {
    gens.push_back(hol.encode(a, i));
    if (auto next = semiregular_closure(hol, gens, scratch)) search(hol, gens, *next, scratch, out);
    gens.pop_back();
  }
}

SkewBrace brace_from_regular_subgroup(const FiniteGroup& g, const Holomorph& hol, const ElementSet& r) {
  const int n = g.order();
  std::vector<Elem> by_translation(n);
  for (Elem h : r) by_translation[hol.translation_part(h)] = h;
  Table circ(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) circ.at(a, b) = hol.act(g, by_translation[a], b);
  }
  return validate_skew_brace(g.table(), circ);
}

// Circle table relabelled by an additive automorphism f: the brace
// transported along f has x o' y = f(f^-1(x) o f^-1(y)).
std::vector<Elem> transported(const SkewBrace& a, const Permutation& f, const Permutation& f_inv) {
  const int n = a.order();
  std::vector<Elem> cells(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) cells[static_cast<std::size_t>(x) * n + y] = f[a.circ(f_inv[x], f_inv[y])];
  }
  return cells;
}

std::vector<Elem> canonical_circle(const SkewBrace& a, const std::vector<Permutation>& autos,
                                   const std::vector<Permutation>& autos_inv) {
  std::vector<Elem> best;
  for (std::size_t i = 0; i < autos.size(); ++i) {
    std::vector<Elem> cells = transported(a, autos[i], autos_inv[i]);
    if (best.empty() || cells < best) best = std::move(cells);
  }
  return best;
}

EnumeratedBrace make_entry(SkewBrace brace, int index, const std::string& name) {
  PropertyVector props = property_vector(brace);
  return EnumeratedBrace{std::move(brace), index, name, props};
}

// Keeps the first of every isomorphism class, using invariants to bucket.
std::vector<SkewBrace> isomorphism_classes(std::vector<SkewBrace> candidates) {
  std::map<BraceInvariants, std::vector<std::size_t>> buckets;
  std::vector<SkewBrace> reps;
  for (SkewBrace& c : candidates) {
    auto& bucket = buckets[invariants(c)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) { return isomorphic(reps[i], c); });
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(c));
    }
  }
  return reps;
}

EnumerationResult finish(int n, std::vector<EnumeratedBrace> braces) {
  std::sort(braces.begin(), braces.end(), [](const EnumeratedBrace& x, const EnumeratedBrace& y) {
    if (x.additive_index != y.additive_index) return x.additive_index < y.additive_index;
    return std::lexicographical_compare(x.brace.multiplicative().table().cells().begin(),
                                        x.brace.multiplicative().table().cells().end(),
                                        y.brace.multiplicative().table().cells().begin(),
                                        y.brace.multiplicative().table().cells().end());
  });
  EnumerationResult out;
  out.order = n;
  out.total = static_cast<int>(braces.size());
  const std::size_t brace_slot = static_cast<std::size_t>(PropertyKind::is_brace);
  out.brace_count = static_cast<int>(
      std::count_if(braces.begin(), braces.end(), [&](const EnumeratedBrace& e) { return e.properties[brace_slot]; }));
  out.non_brace_count = out.total - out.brace_count;
  out.braces = std::move(braces);
  return out;
}

}  // namespace

std::vector<ElementSet> regular_subgroups(const FiniteGroup& g, int bound) {
  check_bound(g.order(), bound, kHardCap);
  const Holomorph hol = holomorph(g);
  std::vector<ElementSet> out;
  std::vector<Elem> gens;
  std::vector<char> scratch(g.order(), 0);
  search(hol, gens, ElementSet{0}, scratch, out);
  return out;
}

std::vector<SkewBrace> skew_braces_on(const FiniteGroup& g, int bound) {
  check_bound(g.order(), bound, kHardCap);
  const Holomorph hol = holomorph(g);
  std::vector<ElementSet> subgroups;
  std::vector<Elem> gens;
  std::vector<char> scratch(g.order(), 0);
  search(hol, gens, ElementSet{0}, scratch, subgroups);
  std::vector<SkewBrace> out;
  out.reserve(subgroups.size());
  for (const ElementSet& r : subgroups) out.push_back(brace_from_regular_subgroup(g, hol, r));
  return out;
}

PropertyVector property_vector(const SkewBrace& a) {
  PropertyVector v{};
  const auto& kinds = all_properties();
  for (std::size_t i = 0; i < kinds.size(); ++i) v[i] = has_property(a, kinds[i]);
  return v;
}

EnumerationResult enumerate_order(int n, int bound) {
  check_bound(n, bound, kHardCap);
  std::vector<EnumeratedBrace> found;
  const auto groups = groups_of_order(n);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const FiniteGroup& g = groups[gi].group;
    const std::vector<Permutation> autos = automorphisms(g);
    std::vector<Permutation> autos_inv;
    for (const Permutation& f : autos) autos_inv.push_back(inverse(f));
    // Braces on the same additive group are isomorphic exactly when an
    // additive automorphism carries one circle table to the other.
    std::map<std::vector<Elem>, std::size_t> orbit_seen;
    std::vector<SkewBrace> orbit_reps;
    for (SkewBrace& b : skew_braces_on(g, bound)) {
      if (orbit_seen.emplace(canonical_circle(b, autos, autos_inv), orbit_reps.size()).second) {
        orbit_reps.push_back(std::move(b));
      }
    }
    for (SkewBrace& b : isomorphism_classes(std::move(orbit_reps))) {
      found.push_back(make_entry(std::move(b), static_cast<int>(gi), groups[gi].name));
    }
  }
  return finish(n, std::move(found));
}

EnumerationResult direct_oracle(int n) {
  check_bound(n, 6, 6);
  std::vector<EnumeratedBrace> found;
  const auto groups = groups_of_order(n);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const FiniteGroup& g = groups[gi].group;
    const ElementSet all = full_set(n);
    const std::vector<Elem> gens = [&] {
      std::vector<Elem> out;
      ElementSet span{0};
      for (Elem x = 1; x < n && span.size() < all.size(); ++x) {
        if (!contains(span, x)) {
          out.push_back(x);
          span = subgroup_join(g, span, x);
        }
      }
      return out;
    }();
    // Rows compatible with a o (b + c) = a o b - a + a o c, for each a.
    std::vector<std::vector<std::vector<Elem>>> rows(n);
    rows[0].push_back(std::vector<Elem>(all.begin(), all.end()));
    for (Elem a = 1; a < n; ++a) {
      std::vector<Elem> images(gens.size(), 0);
      std::function<void(std::size_t)> choose = [&](std::size_t k) {
        if (k == gens.size()) {
          std::vector<Elem> row(n, -1);
          row[0] = a;
          std::vector<Elem> queue{0};
          for (std::size_t head = 0; head < queue.size(); ++head) {
            const Elem b = queue[head];
            for (std::size_t i = 0; i < gens.size(); ++i) {
              const Elem c = g.op(b, gens[i]);
              const Elem v = g.op(g.op(row[b], g.inverse(a)), images[i]);
              if (row[c] == -1) {
                row[c] = v;
                queue.push_back(c);
              } else if (row[c] != v) {
                return;
              }
            }
          }
          for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
              if (row[g.op(b, c)] != g.op(g.op(row[b], g.inverse(a)), row[c])) return;
            }
          }
          if (is_permutation(row)) rows[a].push_back(std::move(row));
          return;
        }
        for (Elem v = 0; v < n; ++v) {
          images[k] = v;
          choose(k + 1);
        }
      };
      choose(0);
    }
    std::vector<SkewBrace> candidates;
    std::vector<std::size_t> pick(n, 0);
    std::function<void(Elem)> assemble = [&](Elem a) {
      if (a == n) {
        Table circ(n);
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) circ.at(x, y) = rows[x][pick[x]][y];
        }
        try {
          candidates.push_back(validate_skew_brace(g.table(), circ));
        } catch (const Error&) {
        }
        return;
      }
      for (pick[a] = 0; pick[a] < rows[a].size(); ++pick[a]) assemble(a + 1);
    };
    assemble(0);
    for (SkewBrace& b : isomorphism_classes(std::move(candidates))) {
      found.push_back(make_entry(std::move(b), static_cast<int>(gi), groups[gi].name));
    }
  }
  return finish(n, std::move(found));
}

}  // namespace skewbrace
