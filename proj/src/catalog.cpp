#include "skewbrace/catalog.hpp"

#include <map>

#include "skewbrace/error.hpp"

namespace skewbrace {

FiniteGroup cyclic_group(int n) {
  Table t(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
  }
  return validate_group(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& b, const FiniteGroup& c) {
  const int nb = b.order();
  const int n = nb * c.order();
  Table t(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      t.at(x, y) = b.op(x % nb, y % nb) + nb * c.op(x / nb, y / nb);
    }
  }
  return validate_group(std::move(t));
}

FiniteGroup metacyclic_group(int m, int n, int s, int k) {
  std::vector<int> kpow(n + 1, 1);
  for (int j = 1; j <= n; ++j) kpow[j] = kpow[j - 1] * k % m;
  const int order = m * n;
  Table t(order);
  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y) {
      const int i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
      int i = i1 + kpow[j1] * i2;
      int j = j1 + j2;
      if (j >= n) {
        j -= n;
        i += s;
      }
      t.at(x, y) = i % m + m * j;
    }
  }
  return validate_group(std::move(t));
}

FiniteGroup dihedral_group(int m) { return metacyclic_group(m, 2, 0, m - 1); }

FiniteGroup quaternion_group() { return metacyclic_group(4, 2, 2, 3); }

FiniteGroup dicyclic_group(int m) { return metacyclic_group(2 * m, 2, m, 2 * m - 1); }

FiniteGroup alternating_group_4() {
  return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}});
}

FiniteGroup elementary_abelian_group(int p, int rank) {
  FiniteGroup g = cyclic_group(p);
  FiniteGroup out = cyclic_group(1);
  for (int i = 0; i < rank; ++i) out = direct_product(out, g);
  return out;
}

FiniteGroup group_from_permutations(const std::vector<Permutation>& generators) {
  const int degree = generators.empty() ? 0 : static_cast<int>(generators.front().size());
  std::vector<Permutation> elements{identity_permutation(degree)};
  std::map<Permutation, int> index{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& g : generators) {
      Permutation p = compose(elements[i], g);
      if (index.emplace(p, static_cast<int>(elements.size())).second) elements.push_back(std::move(p));
    }
  }
  const int n = static_cast<int>(elements.size());
  Table t(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) t.at(a, b) = index.at(compose(elements[a], elements[b]));
  }
  return validate_group(std::move(t));
}

std::vector<CatalogGroup> groups_of_order(int n) {
  if (n < 1 || n > kCatalogMaxOrder) {
    throw Error(ErrorCode::OrderOutOfCatalog, "no catalog for order " + std::to_string(n));
  }
  auto z = [](int k) { return cyclic_group(k); };
  std::vector<CatalogGroup> out;
  out.push_back({"C" + std::to_string(n), z(n)});
  switch (n) {
    case 4:
      out.push_back({"C2xC2", direct_product(z(2), z(2))});
      break;
    case 6:
      out.push_back({"S3", dihedral_group(3)});
      break;
    case 8:
      out.push_back({"C4xC2", direct_product(z(4), z(2))});
      out.push_back({"C2xC2xC2", elementary_abelian_group(2, 3)});
      out.push_back({"D8", dihedral_group(4)});
      out.push_back({"Q8", quaternion_group()});
      break;
    case 9:
      out.push_back({"C3xC3", direct_product(z(3), z(3))});
      break;
    case 10:
      out.push_back({"D10", dihedral_group(5)});
      break;
    case 12:
      out.push_back({"C6xC2", direct_product(z(6), z(2))});
      out.push_back({"D12", dihedral_group(6)});
      out.push_back({"A4", alternating_group_4()});
      out.push_back({"Dic12", dicyclic_group(3)});
      break;
    case 14:
      out.push_back({"D14", dihedral_group(7)});
      break;
    default:
      break;
  }
  return out;
}

}  // namespace skewbrace
