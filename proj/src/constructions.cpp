#include "skewbrace/constructions.hpp"

#include <string>

#include "skewbrace/arithmetic.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/error.hpp"

namespace skewbrace {
namespace {

using Maps = std::vector<Permutation>;

std::string pair_text(Elem c, Elem d) { return "(" + std::to_string(c) + "," + std::to_string(d) + ")"; }

bool commute(std::span<const Elem> f, std::span<const Elem> g) { return compose(f, g) == compose(g, f); }

// (f - id)(g - id) = 0, i.e. f fixes every g(v) - v.
bool product_vanishes(const FiniteGroup& b, std::span<const Elem> f, std::span<const Elem> g) {
  for (Elem v = 0; v < b.order(); ++v) {
    const Elem w = b.op(g[v], b.inverse(v));
    if (f[w] != w) return false;
  }
  return true;
}

Maps inverses(const Maps& maps) {
  Maps out;
  out.reserve(maps.size());
  for (const Permutation& m : maps) out.push_back(inverse(m));
  return out;
}

Maps pointwise_compose(const Maps& f, const Maps& g) {
  Maps out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(compose(f[i], g[i]));
  return out;
}

void check_spec(const ConstructionSpec& s, bool with_gamma) {
  if (!group_predicate(s.b, GroupProperty::abelian)) throw Error(ErrorCode::BadInput, "B must be abelian");
  auto fits = [&](const HomIntoAut& h, const char* name) {
    if (!(h.source == s.c) || !(h.target == s.b) || static_cast<int>(h.maps.size()) != s.c.order()) {
      throw Error(ErrorCode::BadInput, std::string(name) + " does not map C into Aut(B)");
    }
  };
  fits(s.phi, "phi");
  fits(s.psi, "psi");
  if (with_gamma) {
    if (!s.gamma) throw Error(ErrorCode::BadInput, "the second method needs gamma");
    fits(*s.gamma, "gamma");
  }
}

Table additive_table(const ConstructionSpec& s) {
  const int nb = s.b.order();
  const int nc = s.c.order();
  Table add(nb * nc);
  for (Elem c1 = 0; c1 < nc; ++c1) {
    for (Elem b1 = 0; b1 < nb; ++b1) {
      for (Elem c2 = 0; c2 < nc; ++c2) {
        for (Elem b2 = 0; b2 < nb; ++b2) {
          add.at(encode_pair(s, b1, c1), encode_pair(s, b2, c2)) =
              encode_pair(s, s.b.op(b1, s.phi.maps[c1][b2]), s.c.op(c1, c2));
        }
      }
    }
  }
  return add;
}

bool gamma_image_abelian(const Maps& gamma) {
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (std::size_t j = i + 1; j < gamma.size(); ++j) {
      if (!commute(gamma[i], gamma[j])) return false;
    }
  }
  return true;
}

// Mod-p 2x2 matrices, row-major.
struct Mat {
  long long a, b, c, d;
};

long long mod(long long x, long long p) { return ((x % p) + p) % p; }

Mat mul(const Mat& x, const Mat& y, long long p) {
  return {mod(x.a * y.a + x.b * y.c, p), mod(x.a * y.b + x.b * y.d, p), mod(x.c * y.a + x.d * y.c, p),
          mod(x.c * y.b + x.d * y.d, p)};
}

long long power_mod(long long base, long long e, long long p) {
  long long r = 1 % p;
  base = mod(base, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return r;
}

long long inverse_mod(long long x, long long p) { return power_mod(x, p - 2, p); }

Mat inv(const Mat& m, long long p) {
  const long long det = inverse_mod(mod(m.a * m.d - m.b * m.c, p), p);
  return {mod(m.d * det, p), mod(-m.b * det, p), mod(-m.c * det, p), mod(m.a * det, p)};
}

Mat mat_pow(Mat m, long long e, long long p) {
  Mat r{1, 0, 0, 1};
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, m, p);
    m = mul(m, m, p);
  }
  return r;
}

bool is_identity(const Mat& m) { return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1; }

Permutation act(int p, const Mat& m) { return matrix_action(p, {m.a, m.b, m.c, m.d}); }

int multiplicative_order(long long g, long long p) {
  g = mod(g, p);
  if (g == 0) return 0;
  int k = 1;
  for (long long x = g; x != 1; x = x * g % p) ++k;
  return k;
}

HomIntoAut cyclic_hom(const FiniteGroup& c, const FiniteGroup& b, std::span<const Elem> generator_image) {
  // c is cyclic_group(q): element k is k times the generator 1.
  Maps maps{identity_permutation(b.order())};
  for (int k = 1; k < c.order(); ++k) maps.push_back(compose(maps.back(), generator_image));
  return validate_hom(c, b, std::move(maps));
}

void require_prime(int p, const char* name) {
  if (!is_prime(p)) throw Error(ErrorCode::BadParameters, std::string(name) + " = " + std::to_string(p) + " is not prime");
}

// An automorphism of order q of F_p (when q | p-1) or of F_p^2.
std::pair<FiniteGroup, Permutation> order_q_automorphism(int p, int q) {
  if ((p - 1) % q == 0) {
    int root = 2;
    while (multiplicative_order(root, p) != p - 1) ++root;
    return {cyclic_group(p), scalar_action(p, power_mod(root, (p - 1) / q, p))};
  }
  for (long long a0 = 1; a0 < p; ++a0) {
    for (long long a1 = 0; a1 < p; ++a1) {
      const Mat companion{0, mod(-a0, p), 1, mod(-a1, p)};
      if (is_identity(mat_pow(companion, q, p))) return {elementary_abelian_group(p, 2), act(p, companion)};
    }
  }
  throw Error(ErrorCode::BadParameters, "no element of order q in GL(2,p)");
}

}  // namespace

HomIntoAut validate_hom(const FiniteGroup& c, const FiniteGroup& b, std::vector<Permutation> maps) {
  if (static_cast<int>(maps.size()) != c.order()) {
    throw Error(ErrorCode::NotAHomomorphism, "need one map per element of C");
  }
  for (Elem x = 0; x < c.order(); ++x) {
    if (static_cast<int>(maps[x].size()) != b.order() || !is_permutation(maps[x]) ||
        !is_homomorphism(b, b, maps[x])) {
      throw Error(ErrorCode::NotAHomomorphism, "map of " + std::to_string(x) + " is not an automorphism of B");
    }
  }
  for (Elem x = 0; x < c.order(); ++x) {
    for (Elem y = 0; y < c.order(); ++y) {
      if (maps[c.op(x, y)] != compose(maps[x], maps[y])) {
        throw Error(ErrorCode::NotAHomomorphism, "fails at " + pair_text(x, y));
      }
    }
  }
  return HomIntoAut{c, b, std::move(maps)};
}

HomIntoAut trivial_hom(const FiniteGroup& c, const FiniteGroup& b) {
  return HomIntoAut{c, b, Maps(c.order(), identity_permutation(b.order()))};
}

std::optional<HomIntoAut> extend_hom(const FiniteGroup& c, const FiniteGroup& b, std::span<const Elem> generators,
                                     const std::vector<Permutation>& images) {
  if (generators.size() != images.size()) return std::nullopt;
  std::vector<std::optional<Permutation>> known(c.order());
  known[0] = identity_permutation(b.order());
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const Elem y = c.op(x, generators[i]);
      Permutation img = compose(*known[x], images[i]);
      if (known[y]) {
        if (*known[y] != img) return std::nullopt;
      } else {
        known[y] = std::move(img);
        queue.push_back(y);
      }
    }
  }
  if (static_cast<int>(queue.size()) != c.order()) return std::nullopt;
  Maps maps;
  for (auto& m : known) maps.push_back(std::move(*m));
  try {
    return validate_hom(c, b, std::move(maps));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::pair<Table, Table> first_method_tables(const ConstructionSpec& s) {
  check_spec(s, false);
  const Maps& phi = s.phi.maps;
  const Maps& psi = s.psi.maps;
  const Maps phi_inv = inverses(phi);
  const int nb = s.b.order();
  const int nc = s.c.order();
  Table circ(nb * nc);
  for (Elem c1 = 0; c1 < nc; ++c1) {
    for (Elem b1 = 0; b1 < nb; ++b1) {
      const Elem u1 = phi_inv[c1][b1];
      for (Elem c2 = 0; c2 < nc; ++c2) {
        const Elem c = s.c.op(c1, c2);
        for (Elem b2 = 0; b2 < nb; ++b2) {
          const Elem u2 = phi_inv[c2][b2];
          circ.at(encode_pair(s, b1, c1), encode_pair(s, b2, c2)) =
              encode_pair(s, phi[c][s.b.op(u1, psi[c1][u2])], c);
        }
      }
    }
  }
  return {additive_table(s), std::move(circ)};
}

SkewBrace first_method(const ConstructionSpec& s) {
  check_spec(s, false);
  const Maps& phi = s.phi.maps;
  const Maps& psi = s.psi.maps;
  for (Elem c = 0; c < s.c.order(); ++c) {
    for (Elem d = 0; d < s.c.order(); ++d) {
      if (compose(phi[c], psi[d]) != compose(psi[d], phi[c])) {
        throw Error(ErrorCode::ConditionFails, "phi_c psi_c' != psi_c' phi_c at " + pair_text(c, d));
      }
    }
  }
  auto [add, circ] = first_method_tables(s);
  return validate_skew_brace(add, circ);
}

std::pair<Table, Table> second_method_tables(const ConstructionSpec& s) {
  check_spec(s, true);
  const Maps psi_inv = inverses(s.psi.maps);
  const Maps subst = pointwise_compose(s.phi.maps, s.gamma->maps);
  const Maps subst_inv = inverses(subst);
  const int nb = s.b.order();
  const int nc = s.c.order();
  Table circ(nb * nc);
  for (Elem c1 = 0; c1 < nc; ++c1) {
    for (Elem b1 = 0; b1 < nb; ++b1) {
      const Elem u1 = subst_inv[c1][b1];
      for (Elem c2 = 0; c2 < nc; ++c2) {
        const Elem c = s.c.op(c1, c2);
        for (Elem b2 = 0; b2 < nb; ++b2) {
          const Elem u2 = subst_inv[c2][b2];
          circ.at(encode_pair(s, b1, c1), encode_pair(s, b2, c2)) =
              encode_pair(s, subst[c][s.b.op(psi_inv[c2][u1], u2)], c);
        }
      }
    }
  }
  return {additive_table(s), std::move(circ)};
}

SkewBrace second_method(const ConstructionSpec& s) {
  check_spec(s, true);
  const Maps& phi = s.phi.maps;
  const Maps& gamma = s.gamma->maps;
  const Maps gamma_psi_inv = pointwise_compose(gamma, inverses(s.psi.maps));
  const int nc = s.c.order();
  for (Elem c = 0; c < nc; ++c) {
    for (Elem d = 0; d < nc; ++d) {
      if (compose(phi[c], gamma[d]) != compose(gamma[d], phi[c])) {
        throw Error(ErrorCode::ConditionFails, "first relation fails at " + pair_text(c, d));
      }
      const Elem cd = s.c.op(c, d);
      for (Elem v = 0; v < s.b.order(); ++v) {
        const Elem lhs = phi[d][s.b.op(gamma_psi_inv[cd][v], s.b.inverse(gamma_psi_inv[d][v]))];
        const Elem rhs = s.b.op(gamma_psi_inv[c][v], s.b.inverse(v));
        if (lhs != rhs) throw Error(ErrorCode::ConditionFails, "second relation fails at " + pair_text(c, d));
      }
    }
  }
  auto [add, circ] = second_method_tables(s);
  return validate_skew_brace(add, circ);
}

CriteriaReport first_method_criteria(const ConstructionSpec& s) {
  check_spec(s, false);
  const Maps& phi = s.phi.maps;
  const Maps& psi = s.psi.maps;
  const Maps phi_psi = pointwise_compose(phi, psi);
  bool two_sided = true, bi_skew = true, lambda_hom = true;
  const int nc = s.c.order();
  for (Elem c = 0; c < nc; ++c) {
    for (Elem d = 0; d < nc; ++d) {
      two_sided = two_sided && commute(phi[c], phi[d]) && product_vanishes(s.b, phi_psi[c], psi[d]);
      bi_skew = bi_skew && commute(psi[c], psi[d]) && product_vanishes(s.b, phi_psi[c], phi[d]);
      lambda_hom = lambda_hom && product_vanishes(s.b, phi[c], phi[d]) && product_vanishes(s.b, phi[c], psi[d]);
    }
  }
  return CriteriaReport{two_sided, bi_skew, lambda_hom};
}

CriteriaReport second_method_criteria(const ConstructionSpec& s) {
  check_spec(s, true);
  const Maps& phi = s.phi.maps;
  const Maps& psi = s.psi.maps;
  const Maps& gamma = s.gamma->maps;
  const Maps psi_inv = inverses(psi);
  const Maps phi_gamma = pointwise_compose(phi, gamma);
  const Maps phi_gamma_inv = inverses(phi_gamma);
  const Maps phi_psi_inv = pointwise_compose(phi, psi_inv);
  const Maps phi_gamma_psi_inv = pointwise_compose(phi_gamma, psi_inv);
  bool two_sided = true, bi_skew = true, lambda_hom = true;
  const int nb = s.b.order();
  const int nc = s.c.order();
  for (Elem c = 0; c < nc; ++c) {
    for (Elem d = 0; d < nc; ++d) {
      const bool gamma_psi = commute(gamma[c], psi[d]);
      two_sided = two_sided && gamma_psi && commute(phi[c], phi_psi_inv[d]) &&
                  product_vanishes(s.b, phi_gamma[c], gamma[d]);
      bi_skew = bi_skew && gamma_psi;
      for (Elem v = 0; v < nb && bi_skew; ++v) {
        const Elem w = s.b.op(phi_gamma_inv[d][v], s.b.inverse(v));
        bi_skew = phi_gamma_inv[c][w] == psi_inv[c][w];
      }
      lambda_hom = lambda_hom && product_vanishes(s.b, phi_gamma_psi_inv[c], phi_gamma_psi_inv[d]) &&
                   product_vanishes(s.b, phi_gamma_psi_inv[c], gamma[d]);
    }
  }
  CriteriaReport out;
  if (gamma_image_abelian(gamma)) {
    out.two_sided = two_sided;
    out.bi_skew = bi_skew;
  }
  out.lambda_homomorphic = lambda_hom;
  return out;
}

std::optional<bool> second_method_bi_skew_closed_form(const ConstructionSpec& s) {
  check_spec(s, true);
  const Maps& gamma = s.gamma->maps;
  if (!gamma_image_abelian(gamma)) return std::nullopt;
  const Maps phi_gamma = pointwise_compose(s.phi.maps, gamma);
  const Maps phi_gamma_psi_inv = pointwise_compose(phi_gamma, inverses(s.psi.maps));
  for (Elem c = 0; c < s.c.order(); ++c) {
    for (Elem d = 0; d < s.c.order(); ++d) {
      if (!commute(gamma[c], s.psi.maps[d]) || !product_vanishes(s.b, phi_gamma[c], phi_gamma_psi_inv[d])) return false;
    }
  }
  return true;
}

ElementSet second_method_kernel(const ConstructionSpec& s) {
  check_spec(s, true);
  const Maps& phi = s.phi.maps;
  const Maps& gamma = s.gamma->maps;
  const Maps phi_gamma = pointwise_compose(phi, gamma);
  const Maps phi_gamma_psi_inv = pointwise_compose(phi_gamma, inverses(s.psi.maps));
  const int nb = s.b.order();
  const int nc = s.c.order();
  ElementSet fixed;
  for (Elem v = 0; v < nb; ++v) {
    bool all = true;
    for (Elem y = 0; y < nc && all; ++y) all = phi_gamma_psi_inv[y][v] == v;
    if (all) fixed.push_back(v);
  }
  const Permutation id = identity_permutation(nb);
  ElementSet out;
  for (Elem c = 0; c < nc; ++c) {
    if (gamma[c] != id) continue;
    for (Elem v : fixed) out.push_back(encode_pair(s, phi_gamma[c][v], c));
  }
  return normalized(std::move(out));
}

bool second_method_ideal_test(const ConstructionSpec& s, const ElementSet& i) {
  check_spec(s, true);
  if (!is_subgroup(s.b, i)) throw Error(ErrorCode::BadInput, "not a subgroup of B");
  for (Elem c = 0; c < s.c.order(); ++c) {
    for (const Maps* maps : {&s.phi.maps, &s.gamma->maps, &s.psi.maps}) {
      if (image_of((*maps)[c], i) != i) return false;
    }
  }
  return true;
}

Permutation matrix_action(int p, std::array<long long, 4> m) {
  Permutation out(static_cast<std::size_t>(p) * p);
  for (long long y = 0; y < p; ++y) {
    for (long long x = 0; x < p; ++x) {
      const long long u = mod(m[0] * x + m[1] * y, p);
      const long long v = mod(m[2] * x + m[3] * y, p);
      out[x + p * y] = static_cast<Elem>(u + p * v);
    }
  }
  return out;
}

Permutation scalar_action(int p, long long k) {
  Permutation out(p);
  for (long long x = 0; x < p; ++x) out[x] = static_cast<Elem>(mod(k * x, p));
  return out;
}

std::string_view to_string(ExampleFamily family) {
  switch (family) {
    case ExampleFamily::pq1_i: return "pq1_i";
    case ExampleFamily::pq1_ii: return "pq1_ii";
    case ExampleFamily::pq2: return "pq2";
    case ExampleFamily::p3: return "p3";
    case ExampleFamily::p2_cyclic: return "p2_cyclic";
    case ExampleFamily::p2_elementary: return "p2_elementary";
  }
  return "unknown";
}

std::optional<ExampleFamily> family_from_string(std::string_view name) {
  for (ExampleFamily f : {ExampleFamily::pq1_i, ExampleFamily::pq1_ii, ExampleFamily::pq2, ExampleFamily::p3,
                          ExampleFamily::p2_cyclic, ExampleFamily::p2_elementary}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

ConstructionSpec example_spec(ExampleFamily family, const ExampleParams& params) {
  const int p = params.p;
  const int q = params.q;
  require_prime(p, "p");
  switch (family) {
    case ExampleFamily::pq1_i:
    case ExampleFamily::pq1_ii: {
      require_prime(q, "q");
      if ((static_cast<long long>(p) * p - 1) % q != 0) {
        throw Error(ErrorCode::BadParameters, "q must divide p^2 - 1");
      }
      auto [b, beta] = order_q_automorphism(p, q);
      const FiniteGroup c = cyclic_group(q);
      HomIntoAut powers = cyclic_hom(c, b, beta);
      HomIntoAut id = trivial_hom(c, b);
      if (family == ExampleFamily::pq1_i) return ConstructionSpec{b, c, std::move(id), std::move(powers), std::nullopt};
      return ConstructionSpec{b, c, std::move(powers), std::move(id), std::nullopt};
    }
    case ExampleFamily::pq2: {
      require_prime(q, "q");
      if ((p - 1) % q != 0) throw Error(ErrorCode::BadParameters, "q must divide p - 1");
      int g = 0;
      if (params.g) {
        g = *params.g;
        if (multiplicative_order(g, p) != q) {
          throw Error(ErrorCode::BadParameters, "g must have multiplicative order q modulo p");
        }
      } else {
        g = 2;
        while (multiplicative_order(g, p) != q) ++g;
      }
      const long long gi = inverse_mod(g, p);
      const Mat twist{1, 1, 1, mod(-1, p)};
      const Mat diag_g{mod(g, p), 0, 0, 1};
      const FiniteGroup b = elementary_abelian_group(p, 2);
      const FiniteGroup c = cyclic_group(q);
      return ConstructionSpec{b, c, cyclic_hom(c, b, act(p, Mat{gi, 0, 0, mod(g, p)})),
                              cyclic_hom(c, b, act(p, mul(mul(twist, diag_g, p), inv(twist, p), p))),
                              cyclic_hom(c, b, act(p, diag_g))};
    }
    case ExampleFamily::p3: {
      if (p == 2) throw Error(ErrorCode::BadParameters, "p must be odd");
      const Mat twist{1, 1, 1, mod(-1, p)};
      const Mat unipotent{1, 1, 0, 1};
      const FiniteGroup b = elementary_abelian_group(p, 2);
      const FiniteGroup c = cyclic_group(p);
      return ConstructionSpec{b, c, cyclic_hom(c, b, act(p, Mat{1, mod(-2, p), 0, 1})),
                              cyclic_hom(c, b, act(p, mul(mul(twist, unipotent, p), inv(twist, p), p))),
                              cyclic_hom(c, b, act(p, unipotent))};
    }
    case ExampleFamily::p2_cyclic:
    case ExampleFamily::p2_elementary:
      break;
  }
  throw Error(ErrorCode::BadParameters, std::string(to_string(family)) + " is not built from a construction spec");
}

SkewBrace example_generator(ExampleFamily family, const ExampleParams& params) {
  switch (family) {
    case ExampleFamily::pq1_i:
    case ExampleFamily::pq1_ii:
      return first_method(example_spec(family, params));
    case ExampleFamily::pq2:
    case ExampleFamily::p3:
      return second_method(example_spec(family, params));
    case ExampleFamily::p2_cyclic: {
      const int p = params.p;
      require_prime(p, "p");
      const int n = p * p;
      Table add(n), circ(n);
      for (long long a = 0; a < n; ++a) {
        for (long long b = 0; b < n; ++b) {
          add.at(a, b) = static_cast<Elem>((a + b) % n);
          circ.at(a, b) = static_cast<Elem>((a + b + p * a * b) % n);
        }
      }
      return validate_skew_brace(add, circ);
    }
    case ExampleFamily::p2_elementary: {
      const int p = params.p;
      require_prime(p, "p");
      const int n = p * p;
      Table add(n), circ(n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          const int a1 = a % p, a2 = a / p, b1 = b % p, b2 = b / p;
          add.at(a, b) = (a1 + b1) % p + p * ((a2 + b2) % p);
          circ.at(a, b) = (a1 + b1 + a2 * b2) % p + p * ((a2 + b2) % p);
        }
      }
      return validate_skew_brace(add, circ);
    }
  }
  throw Error(ErrorCode::BadParameters, "unknown family");
}

}  // namespace skewbrace
