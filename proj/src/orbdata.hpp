// The full input datum for one global quotient: group, fixed-locus sector
// presentations (single, pair and triple level), their connecting pullbacks
// and pushforwards, normal-bundle classes, logarithmic eigenvalue data, the
// inversion correspondence and the group action on sectors. Documents are
// JSON; rationals are "p/q" strings, matrices row-major, group elements
// referenced by index into the multiplication table.
#pragma once

#include "algebra.hpp"
#include "group.hpp"
#include "report.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orb {

struct EigenEntry {
  Rat alpha;    // in (0,1); exp(2 pi i alpha) is the eigenvalue
  KClass lines; // eigenline bundle of that eigenvalue, on the sector algebra
};

struct SingleSector {
  int g = 0, comp = 0;
  int dim = 0;
  Algebra alg;
  KClass normal; // of the sector inside the ambient variety
  std::vector<EigenEntry> eigen;
  int sigma_comp = -1; // component of the g^{-1} sector the inversion lands in
  LinearMap sigma;     // pullback from that component's algebra to this one
};

struct DoubleSector {
  std::array<int, 2> g{};
  int comp = 0;
  int dim = 0;
  Algebra alg;
  KClass normal;
  int e1_comp = -1, e2_comp = -1, mu_comp = -1, smu_comp = -1;
  LinearMap e1, e2;          // pullbacks from the X^{g1} / X^{g2} components
  LinearMap mu_pull, mu_push; // against the inclusion into the X^{g1 g2} component
  LinearMap smu;             // pullback from the X^{(g1 g2)^{-1}} component along inversion-after-inclusion
};

struct TripleSector {
  std::array<int, 3> g{};
  int comp = 0;
  int dim = 0;
  Algebra alg;
  KClass normal;
  int e12_comp = -1, e23_comp = -1, m123_comp = -1, m1_23_comp = -1;
  LinearMap e12;   // from the (g1, g2) pair sector
  LinearMap e23;   // from the (g2, g3) pair sector
  LinearMap m123;  // from the (g1 g2, g3) pair sector
  LinearMap m1_23; // from the (g1, g2 g3) pair sector
  std::array<int, 4> j_comp{-1, -1, -1, -1};
  std::array<LinearMap, 4> j; // corner pullbacks from X^{g1}, X^{g2}, X^{g3}, X^{g1 g2 g3}
};

struct ActionMap {
  int to_comp = -1;
  LinearMap map; // pullback-kind, from the (g, c) algebra to the (h g h^{-1}, to_comp) algebra
};

struct Resolution {
  Algebra alg;
  std::optional<std::vector<Rat>> integral; // top-degree projection functional
};

struct SkeletonPair {
  std::string orb;  // label of an invariant-basis vector
  std::string res;  // resolution basis element name
  bool scalable = false;
};

struct Skeleton {
  std::vector<SkeletonPair> pairs;
};

struct OrbifoldDatum {
  // Maps hold pointers into the sector containers; moving is fine (element
  // addresses survive container moves), copying is not.
  OrbifoldDatum() = default;
  OrbifoldDatum(const OrbifoldDatum&) = delete;
  OrbifoldDatum& operator=(const OrbifoldDatum&) = delete;
  OrbifoldDatum(OrbifoldDatum&&) = default;
  OrbifoldDatum& operator=(OrbifoldDatum&&) = default;

  Group group;
  std::vector<std::vector<SingleSector>> singles; // [g][comp]
  std::map<std::array<int, 2>, std::vector<DoubleSector>> doubles;
  std::map<std::array<int, 3>, std::vector<TripleSector>> triples;
  std::vector<std::array<int, 2>> doubles_declared_empty;
  std::vector<std::array<int, 3>> triples_declared_empty;
  bool has_triple_block = false;
  // action[h][g][comp]; h = 0 is always the identity action
  std::vector<std::vector<std::vector<ActionMap>>> action;

  int ambient_dim() const; // dimension of the identity sector
  const SingleSector& single(int g, int comp) const;
  bool double_declared(int g1, int g2) const;
  bool triple_declared(int g1, int g2, int g3) const;
  const std::vector<DoubleSector>* double_comps(int g1, int g2) const; // null when undeclared
  const std::vector<TripleSector>* triple_comps(int g1, int g2, int g3) const;
};

// A corpus document: a full datum, a resolution presentation, an isomorphism
// skeleton, or any combination.
struct Document {
  std::optional<OrbifoldDatum> datum;
  std::optional<Resolution> resolution;
  std::optional<Skeleton> skeleton;
};

// Parses and cross-links a document. Schema violations, unresolvable
// references and algebra-axiom failures throw OrbError with the JSON path.
Document load_document(const std::string& path);
Document load_document_text(const std::string& text, const std::string& label);

// The identity suite on the wiring itself: rerun of every type invariant,
// projection formula for each inclusion, factorization of the composite
// correspondences, inversion involutivity, eigen-data exhaustion against the
// normal classes, normal ranks against dimensions, action functoriality.
std::vector<CheckReport> validate(const Document& doc);

std::string component_label(int g, int comp);

} // namespace orb
