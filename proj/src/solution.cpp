#include "skewbrace/solution.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "skewbrace/arithmetic.hpp"
#include "skewbrace/error.hpp"

namespace skewbrace {
namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

struct Triple {
  Elem x, y, z;
  friend bool operator==(const Triple&, const Triple&) = default;
};

Triple r12(const Solution& s, Triple t) {
  auto [u, v] = s.apply(t.x, t.y);
  return {u, v, t.z};
}

Triple r23(const Solution& s, Triple t) {
  auto [u, v] = s.apply(t.y, t.z);
  return {t.x, u, v};
}

WitnessCheck reject(int condition, int level, std::string detail) {
  return WitnessCheck{false, condition, level, std::move(detail)};
}

}  // namespace

Solution validate_solution(Table lambda, Table rho) {
  const int n = lambda.order();
  if (n < 1 || rho.order() != n) throw Error(ErrorCode::BadInput, "lambda and rho must be non-empty and of equal size");
  for (Elem x = 0; x < n; ++x) {
    if (!is_permutation(lambda.row(x))) throw Error(ErrorCode::NotPermutation, "lambda_" + std::to_string(x));
    if (!is_permutation(rho.row(x))) throw Error(ErrorCode::NotPermutation, "rho_" + std::to_string(x));
  }
  Solution s(std::move(lambda), std::move(rho));
  std::vector<char> hit(static_cast<std::size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      char& h = hit[static_cast<std::size_t>(u) * n + v];
      if (h) {
        throw Error(ErrorCode::RNotBijective, "(" + std::to_string(u) + "," + std::to_string(v) + ") is hit twice");
      }
      h = 1;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        const Triple t{x, y, z};
        if (r12(s, r23(s, r12(s, t))) != r23(s, r12(s, r23(s, t)))) {
          throw Error(ErrorCode::BraidFails, "triple " + triple(x, y, z));
        }
      }
    }
  }
  return s;
}

Solution flip(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "flip needs n >= 1");
  Table id(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) id.at(x, y) = y;
  }
  return validate_solution(id, id);
}

Solution from_skew_brace(const SkewBrace& a) {
  const int n = a.order();
  Table rho(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      rho.at(y, x) = a.circ(a.circ(a.circ_inverse(a.lambda(x, y)), x), y);
    }
  }
  return validate_solution(a.lambda_table(), std::move(rho));
}

bool is_involutive(const Solution& s) {
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      auto [u, v] = s.apply(x, y);
      if (s.apply(u, v) != std::pair{x, y}) return false;
    }
  }
  return true;
}

bool is_flip(const Solution& s) {
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      if (s.apply(x, y) != std::pair{y, x}) return false;
    }
  }
  return true;
}

Retraction retraction(const Solution& s) {
  const int n = s.size();
  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, Elem> classes;
  std::vector<Elem> projection(n);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    auto l = s.lambda_table().row(x);
    auto r = s.rho_table().row(x);
    auto key = std::pair{std::vector<Elem>(l.begin(), l.end()), std::vector<Elem>(r.begin(), r.end())};
    auto [it, fresh] = classes.emplace(std::move(key), static_cast<Elem>(reps.size()));
    if (fresh) reps.push_back(x);
    projection[x] = it->second;
  }
  const int m = static_cast<int>(reps.size());
  Table lambda(m), rho(m);
  for (Elem cx = 0; cx < m; ++cx) {
    for (Elem cy = 0; cy < m; ++cy) {
      lambda.at(cx, cy) = projection[s.lambda(reps[cx], reps[cy])];
      rho.at(cy, cx) = projection[s.rho(reps[cy], reps[cx])];
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      if (projection[u] != lambda.at(projection[x], projection[y]) ||
          projection[v] != rho.at(projection[y], projection[x])) {
        throw Error(ErrorCode::InducedMapIllDefined,
                    "at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  return Retraction{validate_solution(std::move(lambda), std::move(rho)), std::move(projection)};
}

std::vector<int> retraction_sizes(const Solution& s) {
  std::vector<int> sizes{s.size()};
  Solution current = s;
  for (int step = 0; step < s.size(); ++step) {
    Solution next = retraction(current).solution;
    if (next.size() == current.size()) break;
    sizes.push_back(next.size());
    current = std::move(next);
  }
  return sizes;
}

std::optional<int> mp_level(const Solution& s) {
  const std::vector<int> sizes = retraction_sizes(s);
  if (sizes.back() != 1) return std::nullopt;
  return static_cast<int>(sizes.size()) - 1;
}

bool check_solution_map(const Solution& source, const Solution& target, std::span<const Elem> image) {
  if (static_cast<int>(image.size()) != source.size()) return false;
  for (Elem v : image) {
    if (v < 0 || v >= target.size()) return false;
  }
  for (Elem x = 0; x < source.size(); ++x) {
    for (Elem y = 0; y < source.size(); ++y) {
      auto [u, v] = source.apply(x, y);
      if (target.apply(image[x], image[y]) != std::pair{image[u], image[v]}) return false;
    }
  }
  return true;
}

SupersolubleWitness witness_from_supersoluble(const SkewBrace& a) {
  auto chain = supersoluble_series(a);
  if (!chain) throw Error(ErrorCode::NotSupersoluble, "no ideal series with prime-order factors");
  SupersolubleWitness w;
  w.base_point = 0;
  w.chain = *chain;
  for (std::size_t i = 0; i + 1 < chain->size(); ++i) {
    Quotient q = quotient(a, (*chain)[i]);
    w.stages.push_back(WitnessStage{from_skew_brace(q.brace), std::move(q.projection)});
  }
  return w;
}

WitnessCheck verify_witness(const Solution& s, const SupersolubleWitness& w) {
  const int n = s.size();
  const std::size_t m = w.stages.size();
  if (w.chain.size() != m + 1) return reject(0, -1, "chain length must be one more than the number of stages");
  if (w.chain.front() != ElementSet{w.base_point}) return reject(0, 0, "X_0 must be the base point");
  if (w.chain.back() != full_set(n)) return reject(0, static_cast<int>(m), "X_m must be the whole set");
  for (std::size_t i = 0; i < m; ++i) {
    const ElementSet& xi = w.chain[i];
    const ElementSet& next = w.chain[i + 1];
    const int level = static_cast<int>(i);
    if (!std::includes(next.begin(), next.end(), xi.begin(), xi.end())) {
      return reject(0, level, "chain is not increasing");
    }
    const WitnessStage& stage = w.stages[i];
    if (!check_solution_map(s, stage.target, stage.map)) return reject(0, level, "stage map is not a morphism of solutions");

    std::map<Elem, ElementSet> classes;
    for (Elem x = 0; x < n; ++x) classes[stage.map[x]].push_back(x);

    // (1) X_i is a class of ~f_i.
    const auto cls = classes.find(stage.map[xi.front()]);
    if (cls->second != xi) return reject(1, level, "X_i is not an equivalence class");
    // (2) every class has size |X_i|.
    for (const auto& [image, members] : classes) {
      if (members.size() != xi.size()) return reject(2, level, "classes of unequal size");
    }
    // (3) X_{i+1} is a union of classes.
    for (Elem x : next) {
      for (Elem y : classes[stage.map[x]]) {
        if (!contains(next, y)) return reject(3, level, "X_{i+1} splits a class");
      }
    }
    // (4) X_{i+1} is invariant under every lambda_x and rho_x.
    for (Elem x = 0; x < n; ++x) {
      if (image_of(s.lambda_table().row(x), next) != next) return reject(4, level, "lambda_x moves X_{i+1}");
      if (image_of(s.rho_table().row(x), next) != next) return reject(4, level, "rho_x moves X_{i+1}");
    }
    // (5) the restriction of the target to f_i(X_{i+1}) is a flip of prime size.
    const ElementSet top = image_of(stage.map, next);
    if (!is_prime(static_cast<long long>(top.size()))) {
      return reject(5, level, "f_i(X_{i+1}) has non-prime size " + std::to_string(top.size()));
    }
    for (Elem u : top) {
      for (Elem v : top) {
        if (stage.target.apply(u, v) != std::pair{v, u}) return reject(5, level, "restriction is not the flip");
      }
    }
  }
  return WitnessCheck{true, 0, -1, {}};
}

}  // namespace skewbrace
