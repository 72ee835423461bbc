// Finite-dimensional bigraded algebra presentations and the exact
// characteristic-class calculus on them. A sector's cohomology is handed to
// the engine as a basis with bidegrees (p, n), a unit, and structure
// constants; classes of vector-bundle type are lists of (first Chern root,
// multiplicity) pairs, and ch/td/c_top/euler are evaluated by truncated
// series arithmetic on nilpotent roots, all over exact rationals.
#pragma once

#include "linalg.hpp"
#include "rational.hpp"
#include "series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orb {

struct Algebra {
  std::string name; // where this presentation came from, used in messages
  std::vector<std::string> basis;
  std::vector<std::pair<int, int>> bidegree; // (p, n) per basis element
  std::vector<int> parity;                   // Koszul sign bit per basis element
  int unit = 0;
  int dim = 0; // dimension of the underlying variety; top admissible p

  int size() const { return static_cast<int>(basis.size()); }
  const Rat& cijk(int i, int j, int k) const {
    std::size_t b = basis.size();
    return c_[(static_cast<std::size_t>(i) * b + static_cast<std::size_t>(j)) * b + static_cast<std::size_t>(k)];
  }
  Rat& cijk_mut(int i, int j, int k) {
    std::size_t b = basis.size();
    return c_[(static_cast<std::size_t>(i) * b + static_cast<std::size_t>(j)) * b + static_cast<std::size_t>(k)];
  }
  void init_table() { c_.assign(basis.size() * basis.size() * basis.size(), Rat(0)); }

  // Unit axiom, bidegree additivity, sign rule, degree bounds, associativity,
  // on every basis tuple. Throws OrbError naming the offending entry.
  void check_axioms() const;

 private:
  std::vector<Rat> c_; // structure constants, c[i][j][k] dense
};

struct Element {
  const Algebra* owner = nullptr;
  std::vector<Rat> v;

  bool is_zero() const;
  bool operator==(const Element& o) const { return owner == o.owner && v == o.v; }
};

Element el_zero(const Algebra& a);
Element el_unit(const Algebra& a);
Element el_basis(const Algebra& a, int i);
Element el_add(const Element& x, const Element& y);
Element el_sub(const Element& x, const Element& y);
Element el_scale(const Rat& c, const Element& x);
Element el_mul(const Element& x, const Element& y);
Element el_pow(const Element& x, int k);
// Homogeneous part of bidegree (p, n).
Element el_part(const Element& x, int p, int n);
std::string el_str(const Element& x);

// sum_k s[k] x^k truncated by nilpotency; requires x supported in p >= 1.
Element el_eval_series(const Series& s, const Element& x);

enum class MapKind { pullback, pushforward };

// A linear map between sector presentations, realized as a matrix acting on
// coefficient vectors (rows indexed by the target basis).
struct LinearMap {
  const Algebra* source = nullptr;
  const Algebra* target = nullptr;
  MapKind kind = MapKind::pullback;
  int shift = 0; // p-degree shift; 0 for pullbacks
  Mat m;

  Element apply(const Element& x) const;
  // Kind-specific structure: pullbacks are unital, multiplicative and
  // bidegree-preserving; pushforwards shift p by `shift` and preserve n.
  void check(const std::string& name) const;
};

LinearMap compose(const LinearMap& outer, const LinearMap& inner); // outer . inner on elements

struct KLine {
  Element root; // concentrated in bidegree (1, 0)
  Rat mult;
};

struct KClass {
  const Algebra* owner = nullptr;
  std::vector<KLine> lines;

  Rat rank() const;
  // Canonical form: equal roots combined, zero multiplicities dropped, roots
  // sorted. Two classes are equal iff their merged line lists coincide.
  KClass merged() const;
};

KClass kclass_empty(const Algebra& a);
KClass kclass_add(const KClass& x, const KClass& y);
KClass kclass_negate(const KClass& x);
bool kclass_equal(const KClass& x, const KClass& y);
// Transport along a pullback: maps every root, keeps multiplicities.
KClass kclass_pull(const LinearMap& f, const KClass& x);
std::string kclass_str(const KClass& x);
// Throws unless every root is concentrated in bidegree (1, 0).
void kclass_check_roots(const KClass& x, const std::string& name);

// Chern character sum mult * exp(root); truncation must be >= owner dim.
Element ch(const KClass& x, int truncation);
// Todd class, multiplicative over lines, rational multiplicities allowed.
Element todd(const KClass& x);
// Top Chern class of a class of honest nonnegative integer rank.
Element c_top(const KClass& x);
// ch of lambda_{-1} of the dual: product over lines of (1 - e^{-root}),
// honest nonnegative integer multiplicities required on nonzero roots.
Element euler_k(const KClass& x);

} // namespace orb
