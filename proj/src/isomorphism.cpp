#include "skewbrace/isomorphism.hpp"

#include <algorithm>
#include <deque>

namespace skewbrace {
namespace {

// Closure of {0} under right multiplication by gens, in the group table t.
std::vector<char> closure_mask(const Table& t, std::span<const Elem> gens) {
  std::vector<char> in(t.order(), 0);
  std::deque<Elem> todo{0};
  in[0] = 1;
  while (!todo.empty()) {
    const Elem x = todo.front();
    todo.pop_front();
    for (Elem g : gens) {
      const Elem y = t.at(x, g);
      if (!in[y]) {
        in[y] = 1;
        todo.push_back(y);
      }
    }
  }
  return in;
}

using Signature = std::vector<int>;

std::vector<Signature> signatures(const std::vector<const Table*>& tables) {
  const int n = tables.front()->order();
  std::vector<Signature> sig(n);
  for (int x = 0; x < n; ++x) {
    for (const Table* t : tables) sig[x].push_back(order_in(*t, x));
  }
  return sig;
}

class Search {
 public:
  Search(const std::vector<const Table*>& from, const std::vector<const Table*>& to,
         const std::function<bool(const Permutation&)>& visit)
      : from_(from), to_(to), visit_(visit), n_(from.front()->order()) {}

  void run() {
    from_sig_ = signatures(from_);
    to_sig_ = signatures(to_);
    {
      auto a = from_sig_, b = to_sig_;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return;
    }
    gens_ = greedy_generators(*from_.front());
    images_.assign(gens_.size(), -1);
    recurse(0);
  }

 private:
  // Extends the map along the first `count` generators; false on conflict.
  bool extend(std::size_t count, Permutation& map) const {
    map.assign(n_, -1);
    std::vector<char> used(n_, 0);
    map[0] = 0;
    used[0] = 1;
    std::deque<Elem> todo{0};
    std::vector<Elem> domain{0};
    const Table& src = *from_.front();
    const Table& dst = *to_.front();
    while (!todo.empty()) {
      const Elem x = todo.front();
      todo.pop_front();
      for (std::size_t j = 0; j < count; ++j) {
        const Elem y = src.at(x, gens_[j]);
        const Elem fy = dst.at(map[x], images_[j]);
        if (map[y] < 0) {
          if (used[fy]) return false;
          map[y] = fy;
          used[fy] = 1;
          todo.push_back(y);
          domain.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    for (std::size_t k = 1; k < from_.size(); ++k) {
      for (Elem a : domain) {
        for (Elem b : domain) {
          const Elem c = from_[k]->at(a, b);
          if (map[c] < 0) continue;
          if (map[c] != to_[k]->at(map[a], map[b])) return false;
        }
      }
    }
    return true;
  }

  void recurse(std::size_t level) {
    if (stop_) return;
    if (level == gens_.size()) {
      Permutation map;
      if (extend(level, map)) {
        if (!visit_(map)) stop_ = true;
      }
      return;
    }
    Permutation partial;
    if (level > 0 && !extend(level, partial)) return;
    for (Elem h = 0; h < n_ && !stop_; ++h) {
      if (to_sig_[h] != from_sig_[gens_[level]]) continue;
      if (level > 0 && std::find(partial.begin(), partial.end(), h) != partial.end()) continue;
      images_[level] = h;
      Permutation probe;
      if (extend(level + 1, probe)) recurse(level + 1);
    }
    images_[level] = -1;
  }

  const std::vector<const Table*>& from_;
  const std::vector<const Table*>& to_;
  const std::function<bool(const Permutation&)>& visit_;
  int n_;
  std::vector<Signature> from_sig_, to_sig_;
  std::vector<Elem> gens_;
  std::vector<Elem> images_;
  bool stop_ = false;
};

}  // namespace

int order_in(const Table& t, Elem x) {
  int k = 1;
  for (Elem y = x; y != 0; y = t.at(y, x)) ++k;
  return k;
}

std::vector<Elem> greedy_generators(const Table& t) {
  std::vector<Elem> gens;
  auto current = closure_mask(t, gens);
  auto count = [](const std::vector<char>& m) { return std::count(m.begin(), m.end(), 1); };
  while (count(current) < t.order()) {
    Elem best = -1;
    long best_size = -1;
    for (Elem x = 1; x < t.order(); ++x) {
      if (current[x]) continue;
      gens.push_back(x);
      const long size = count(closure_mask(t, gens));
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    current = closure_mask(t, gens);
  }
  return gens;
}

StructureMatcher::StructureMatcher(std::vector<const Table*> from, std::vector<const Table*> to)
    : from_(std::move(from)), to_(std::move(to)) {}

void StructureMatcher::for_each(const std::function<bool(const Permutation&)>& visit) const {
  if (from_.empty() || from_.size() != to_.size()) return;
  for (std::size_t k = 0; k < from_.size(); ++k) {
    if (from_[k]->order() != from_.front()->order() || to_[k]->order() != from_.front()->order()) {
      return;
    }
  }
  Search(from_, to_, visit).run();
}

std::optional<Permutation> StructureMatcher::first() const {
  std::optional<Permutation> found;
  for_each([&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

}  // namespace skewbrace
