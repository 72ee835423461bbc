// The product structures on the total sector space: age gradings, the
// obstruction classes of pair sectors, the twisted multiplication in both
// intersection-theoretic and K-theoretic normalization, the group action on
// the total space, and invariants. Elements are coefficient vectors over the
// flat basis formed by all single-sector basis elements.
#pragma once

#include "orbdata.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace orb {

enum class Theory { chow, k };

std::string theory_name(Theory t);

// Sum over eigenvalue exponents alpha of alpha * (eigenline class).
KClass age_class(const SingleSector& s);
// Rank of the age class.
Rat sector_age(const SingleSector& s);

// e1-pulled age class of the first sector plus e2-pulled age class of the
// second plus the inversion-pulled age class of the inverse product sector,
// minus the pair sector's normal class.
KClass obstruction(const OrbifoldDatum& d, const DoubleSector& ds);

struct StringyEntry {
  int g = 0, comp = 0, idx = 0;
};

struct StringySpace {
  const OrbifoldDatum* datum = nullptr;
  std::vector<StringyEntry> entries;
  std::map<std::pair<int, int>, int> offsets; // (g, comp) -> first flat index

  int dim() const { return static_cast<int>(entries.size()); }
  int offset_of(int g, int comp) const;
  const Algebra& algebra_of(int g, int comp) const;
  std::string label(int i) const;           // "g{g}c{comp}:{basis name}"
  int find_label(const std::string& l) const; // -1 when absent
};

StringySpace stringy_space(const OrbifoldDatum& d);

using StringyVec = std::vector<Rat>;

StringyVec sv_zero(const StringySpace& sp);
StringyVec sv_basis(const StringySpace& sp, int i);
std::string sv_str(const StringySpace& sp, const StringyVec& v);

// (p + age, n) of a flat basis element; the first part is additive for the
// twisted product, the second for the K-index.
std::pair<Rat, int> stringy_bidegree(const StringySpace& sp, int i);
int stringy_parity(const StringySpace& sp, int i);

// Per-pair-component multiplication state: the obstruction-dependent factor
// is computed once per component.
struct MulCache {
  const StringySpace* space = nullptr;
  Theory theory = Theory::chow;
  std::map<std::array<int, 3>, Element> factor; // (g1, g2, comp) -> factor in the pair algebra
};

MulCache build_mul_cache(const StringySpace& sp, Theory t);
// x * y. Throws when the support of x and y meets a pair of group elements
// with no pair-sector data and no declared-empty marker.
StringyVec stringy_mul(const MulCache& cache, const StringyVec& x, const StringyVec& y);

// Left translation action of h on the total space.
StringyVec stringy_act(const StringySpace& sp, int h, const StringyVec& x);

// Sector-wise cup product with the inverse Todd class of the age class;
// intertwines the K-normalized product with the intersection-theoretic one.
StringyVec stringy_chern(const StringySpace& sp, const StringyVec& x);

// Rows are a canonical basis (reduced echelon form) of the subspace fixed by
// the whole group action.
Mat invariant_basis(const StringySpace& sp);

struct ProductTable {
  std::vector<std::string> labels;
  // For the invariant table, row i of `vectors` is basis vector i in flat
  // coordinates; empty for the full table.
  std::vector<StringyVec> vectors;
  // coeffs[i][j] = coordinates of basis_i * basis_j in the table's own basis
  std::vector<std::vector<std::vector<Rat>>> coeffs;
};

// Full table over the flat basis, or the table of the invariant subalgebra.
// Throws when an invariant product does not lie in the invariant span.
ProductTable product_table(const StringySpace& sp, Theory t, bool invariant_only);

} // namespace orb
