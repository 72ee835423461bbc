// Finite groups as explicit multiplication tables, index 0 the identity.
// Tables are either given directly or generated from permutation generators.
#pragma once

#include <string>
#include <vector>

namespace orb {

struct Group {
  int order = 1;
  std::vector<std::vector<int>> mul; // mul[a][b] = a*b
  std::vector<int> inv;

  int times(int a, int b) const { return mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inv[static_cast<std::size_t>(a)]; }
  // h g h^{-1}
  int conj(int h, int g) const { return times(times(h, g), inverse(h)); }

  // Full-enumeration check of the group axioms; throws OrbError on violation.
  static Group from_table(std::vector<std::vector<int>> table);

  // Closure of permutation generators (images, 0-based). Elements are
  // enumerated breadth-first from the identity, right-multiplying by the
  // generators in their listed order; composition is (s*t)(i) = s(t(i)).
  static Group from_permutations(int degree, const std::vector<std::vector<int>>& gens);

  // Classes ordered by smallest member, members ascending; identity class first.
  std::vector<std::vector<int>> conjugacy_classes() const;
};

} // namespace orb
