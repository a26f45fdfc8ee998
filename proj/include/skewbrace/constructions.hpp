#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// A homomorphism c -> maps[c] from a group C into Aut(B).
struct HomIntoAut {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Permutation> maps;
};

// Checks that every map is an automorphism of b and that c -> maps[c] is a
// homomorphism. Throws NotAHomomorphism.
HomIntoAut validate_hom(const FiniteGroup& c, const FiniteGroup& b, std::vector<Permutation> maps);

HomIntoAut trivial_hom(const FiniteGroup& c, const FiniteGroup& b);

// Extends images of the given generators of c to a homomorphism, if one exists.
std::optional<HomIntoAut> extend_hom(const FiniteGroup& c, const FiniteGroup& b, std::span<const Elem> generators,
                                     const std::vector<Permutation>& images);

// Input of both constructions. The pair (b, c) of B x C has index b + |B| c.
struct ConstructionSpec {
  FiniteGroup b;
  FiniteGroup c;
  HomIntoAut phi;
  HomIntoAut psi;
  std::optional<HomIntoAut> gamma;  // present for the second method only
};

inline Elem encode_pair(const ConstructionSpec& s, Elem b, Elem c) { return b + s.b.order() * c; }

// The (add, circle) tables given by the formulas below, without any
// condition check or validation.
std::pair<Table, Table> first_method_tables(const ConstructionSpec& spec);
std::pair<Table, Table> second_method_tables(const ConstructionSpec& spec);

// (b1,c1) + (b2,c2) = (b1 + phi_c1(b2), c1 c2)
// (phi_c1(b1),c1) o (phi_c2(b2),c2) = (phi_c1c2(b1 + psi_c1(b2)), c1 c2)
// Requires phi_c psi_c' = psi_c' phi_c; throws ConditionFails(c, c') otherwise.
SkewBrace first_method(const ConstructionSpec& spec);

// Same addition; ((phi_c1 gamma_c1)(b1),c1) o ((phi_c2 gamma_c2)(b2),c2)
//   = ((phi_c1c2 gamma_c1c2)(psi_c2^-1(b1) + b2), c1 c2).
// Requires phi_c gamma_c' = gamma_c' phi_c and
// phi_c'(gamma_cc' psi_cc'^-1 - gamma_c' psi_c'^-1) = gamma_c psi_c^-1 - id.
SkewBrace second_method(const ConstructionSpec& spec);

// Operator-identity criteria for the constructed brace. For the second method
// two_sided and bi_skew are only decided when Im(gamma) is abelian, and
// bi_skew is evaluated as
//   (phi_c^-1 gamma_c^-1)(w) = psi_c^-1(w) for every w in Im(phi_d^-1 gamma_d^-1 - id),
// together with gamma_c psi_d = psi_d gamma_c.
struct CriteriaReport {
  std::optional<bool> two_sided;
  std::optional<bool> bi_skew;
  std::optional<bool> lambda_homomorphic;
};

CriteriaReport first_method_criteria(const ConstructionSpec& spec);
CriteriaReport second_method_criteria(const ConstructionSpec& spec);

// The bi-skew identity in its usual closed form,
//   (phi_c gamma_c - id)(phi_d gamma_d psi_d^-1 - id) = 0 and gamma_c psi_d = psi_d gamma_c,
// evaluated as written. It is not equivalent to bi-skewness when phi and psi
// do not commute (see the constructions tests); kept for comparison only.
std::optional<bool> second_method_bi_skew_closed_form(const ConstructionSpec& spec);

// Ker(lambda) of the second-method brace: ((phi_c gamma_c)(b), c) with b in the
// intersection of Ker(phi_y gamma_y psi_y^-1 - id) and gamma_c = id.
ElementSet second_method_kernel(const ConstructionSpec& spec);

// Whether i x {1} is an ideal, read off from invariance of i under phi, gamma, psi.
bool second_method_ideal_test(const ConstructionSpec& spec, const ElementSet& i);

// Action of a 2x2 matrix {a, b, c, d} = [[a, b], [c, d]] on F_p^2 with (x, y)
// stored at x + p y.
Permutation matrix_action(int p, std::array<long long, 4> m);

// Multiplication by k on F_p.
Permutation scalar_action(int p, long long k);

enum class ExampleFamily { pq1_i, pq1_ii, pq2, p3, p2_cyclic, p2_elementary };

std::string_view to_string(ExampleFamily family);
std::optional<ExampleFamily> family_from_string(std::string_view name);

struct ExampleParams {
  int p = 0;
  int q = 0;
  std::optional<int> g;  // pq2: multiplicative order q mod p; smallest such if absent
};

// Construction input for the families built by first_method (pq1_*) or
// second_method (pq2, p3). Throws BadParameters.
ConstructionSpec example_spec(ExampleFamily family, const ExampleParams& params);

// Throws BadParameters.
SkewBrace example_generator(ExampleFamily family, const ExampleParams& params);

}  // namespace skewbrace
