#include "group.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>

namespace orb {

Group Group::from_table(std::vector<std::vector<int>> table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw OrbError("group: empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n)
      throw OrbError("group: table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      int v = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n)
        throw OrbError("group: table entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
  }
  Group g;
  g.order = n;
  g.mul = std::move(table);
  for (int a = 0; a < n; ++a)
    if (g.times(0, a) != a || g.times(a, 0) != a)
      throw OrbError("group: index 0 is not an identity at element " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c)))
          throw OrbError("group: associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  g.inv.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.times(a, b) == 0 && g.times(b, a) == 0) { g.inv[static_cast<std::size_t>(a)] = b; break; }
    if (g.inv[static_cast<std::size_t>(a)] < 0)
      throw OrbError("group: no inverse for element " + std::to_string(a));
  }
  return g;
}

Group Group::from_permutations(int degree, const std::vector<std::vector<int>>& gens) {
  if (degree <= 0) throw OrbError("group: permutation degree must be positive");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) throw OrbError("group: generator has wrong degree");
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
        throw OrbError("group: generator is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  auto compose = [degree](const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> r(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) r[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
    return r;
  };
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;

  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens) {
      std::vector<int> next = compose(elems[head], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) elems.push_back(next);
      if (elems.size() > 4096) throw OrbError("group: closure exceeds supported order");
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index.at(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  return from_table(std::move(table));
}

std::vector<std::vector<int>> Group::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  for (int g = 0; g < order; ++g) {
    if (seen[static_cast<std::size_t>(g)]) continue;
    std::vector<int> cls;
    for (int h = 0; h < order; ++h) {
      int c = conj(h, g);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

} // namespace orb
