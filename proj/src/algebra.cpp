#include "algebra.hpp"

#include "error.hpp"
#include "series.hpp"

#include <algorithm>
#include <map>

namespace orb {

void Algebra::check_axioms() const {
  int b = size();
  if (b == 0) throw OrbError(name + ": empty basis");
  if (static_cast<int>(bidegree.size()) != b || static_cast<int>(parity.size()) != b)
    throw OrbError(name + ": basis/bidegree/parity length mismatch");
  if (c_.size() != static_cast<std::size_t>(b) * static_cast<std::size_t>(b) * static_cast<std::size_t>(b))
    throw OrbError(name + ": structure constant table has wrong size");
  if (unit < 0 || unit >= b) throw OrbError(name + ": unit index out of range");
  for (int i = 0; i < b; ++i) {
    auto [p, n] = bidegree[static_cast<std::size_t>(i)];
    if (p < 0 || n < 0) throw OrbError(name + ": negative bidegree on basis element " + basis[static_cast<std::size_t>(i)]);
    if (p > dim)
      throw OrbError(name + ": basis element " + basis[static_cast<std::size_t>(i)] + " has p-degree above the dimension");
    int par = parity[static_cast<std::size_t>(i)];
    if (par != 0 && par != 1) throw OrbError(name + ": parity must be 0 or 1");
    if (p == 0 && n == 0 && i != unit)
      throw OrbError(name + ": basis element " + basis[static_cast<std::size_t>(i)] + " duplicates the unit bidegree (0,0)");
  }
  if (bidegree[static_cast<std::size_t>(unit)] != std::pair<int, int>(0, 0))
    throw OrbError(name + ": unit must sit in bidegree (0,0)");
  if (parity[static_cast<std::size_t>(unit)] != 0) throw OrbError(name + ": unit must be even");
  for (int j = 0; j < b; ++j)
    for (int k = 0; k < b; ++k) {
      Rat want = (j == k) ? Rat(1) : Rat(0);
      if (cijk(unit, j, k) != want || cijk(j, unit, k) != want)
        throw OrbError(name + ": unit is not an identity against " + basis[static_cast<std::size_t>(j)]);
    }
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < b; ++k) {
        if (cijk(i, j, k) == 0) continue;
        auto [pi, ni] = bidegree[static_cast<std::size_t>(i)];
        auto [pj, nj] = bidegree[static_cast<std::size_t>(j)];
        auto [pk, nk] = bidegree[static_cast<std::size_t>(k)];
        if (pk != pi + pj || nk != ni + nj)
          throw OrbError(name + ": product " + basis[static_cast<std::size_t>(i)] + "*" + basis[static_cast<std::size_t>(j)] +
                         " violates bidegree additivity at " + basis[static_cast<std::size_t>(k)]);
      }
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      int sgn = (parity[static_cast<std::size_t>(i)] & parity[static_cast<std::size_t>(j)]) ? -1 : 1;
      for (int k = 0; k < b; ++k)
        if (cijk(i, j, k) != Rat(sgn) * cijk(j, i, k))
          throw OrbError(name + ": sign rule violated for basis pair (" + basis[static_cast<std::size_t>(i)] + ", " +
                         basis[static_cast<std::size_t>(j)] + ")");
    }
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < b; ++k)
        for (int l = 0; l < b; ++l) {
          Rat lhs(0), rhs(0);
          for (int m = 0; m < b; ++m) {
            lhs += cijk(i, j, m) * cijk(m, k, l);
            rhs += cijk(j, k, m) * cijk(i, m, l);
          }
          if (lhs != rhs)
            throw OrbError(name + ": associativity fails on (" + basis[static_cast<std::size_t>(i)] + ", " +
                           basis[static_cast<std::size_t>(j)] + ", " + basis[static_cast<std::size_t>(k)] + ")");
        }
}

bool Element::is_zero() const {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

Element el_zero(const Algebra& a) { return Element{&a, std::vector<Rat>(static_cast<std::size_t>(a.size()), Rat(0))}; }

Element el_unit(const Algebra& a) {
  Element e = el_zero(a);
  e.v[static_cast<std::size_t>(a.unit)] = 1;
  return e;
}

Element el_basis(const Algebra& a, int i) {
  Element e = el_zero(a);
  e.v.at(static_cast<std::size_t>(i)) = 1;
  return e;
}

static void require_same_owner(const Element& x, const Element& y, const char* op) {
  if (x.owner == nullptr || x.owner != y.owner) throw OrbError(std::string(op) + ": elements of different algebras");
}

Element el_add(const Element& x, const Element& y) {
  require_same_owner(x, y, "el_add");
  Element r = x;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += y.v[i];
  return r;
}

Element el_sub(const Element& x, const Element& y) {
  require_same_owner(x, y, "el_sub");
  Element r = x;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= y.v[i];
  return r;
}

Element el_scale(const Rat& c, const Element& x) {
  Element r = x;
  for (auto& e : r.v) e *= c;
  return r;
}

Element el_mul(const Element& x, const Element& y) {
  require_same_owner(x, y, "el_mul");
  const Algebra& a = *x.owner;
  Element r = el_zero(a);
  int b = a.size();
  for (int i = 0; i < b; ++i) {
    if (x.v[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < b; ++j) {
      if (y.v[static_cast<std::size_t>(j)] == 0) continue;
      Rat cij = x.v[static_cast<std::size_t>(i)] * y.v[static_cast<std::size_t>(j)];
      for (int k = 0; k < b; ++k) {
        const Rat& s = a.cijk(i, j, k);
        if (s != 0) r.v[static_cast<std::size_t>(k)] += cij * s;
      }
    }
  }
  return r;
}

Element el_pow(const Element& x, int k) {
  if (k < 0) throw OrbError("el_pow: negative exponent");
  Element r = el_unit(*x.owner);
  for (int i = 0; i < k; ++i) r = el_mul(r, x);
  return r;
}

Element el_part(const Element& x, int p, int n) {
  Element r = el_zero(*x.owner);
  for (int i = 0; i < x.owner->size(); ++i)
    if (x.owner->bidegree[static_cast<std::size_t>(i)] == std::pair<int, int>(p, n))
      r.v[static_cast<std::size_t>(i)] = x.v[static_cast<std::size_t>(i)];
  return r;
}

std::string el_str(const Element& x) {
  std::string s;
  for (int i = 0; i < x.owner->size(); ++i) {
    const Rat& c = x.v[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*" + x.owner->basis[static_cast<std::size_t>(i)];
  }
  return s.empty() ? "0" : s;
}

Element el_eval_series(const Series& s, const Element& x) {
  const Algebra& a = *x.owner;
  for (int i = 0; i < a.size(); ++i)
    if (x.v[static_cast<std::size_t>(i)] != 0 && a.bidegree[static_cast<std::size_t>(i)].first < 1)
      throw OrbError(a.name + ": series argument has a degree-0 part");
  Element r = el_zero(a);
  Element p = el_unit(a);
  int order = std::min<int>(a.dim, static_cast<int>(s.size()) - 1);
  for (int k = 0;; ++k) {
    if (k <= order && s[static_cast<std::size_t>(k)] != 0) r = el_add(r, el_scale(s[static_cast<std::size_t>(k)], p));
    if (k >= order) break;
    p = el_mul(p, x);
    if (p.is_zero()) break;
  }
  return r;
}

Element LinearMap::apply(const Element& x) const {
  if (x.owner != source) throw OrbError("LinearMap::apply: element not in the source algebra");
  return Element{target, mat_vec(m, x.v)};
}

void LinearMap::check(const std::string& name) const {
  if (source == nullptr || target == nullptr) throw OrbError(name + ": unset endpoints");
  if (m.rows != target->size() || m.cols != source->size())
    throw OrbError(name + ": matrix is " + std::to_string(m.rows) + "x" + std::to_string(m.cols) + ", expected " +
                   std::to_string(target->size()) + "x" + std::to_string(source->size()));
  if (kind == MapKind::pullback) {
    if (shift != 0) throw OrbError(name + ": pullback with nonzero degree shift");
    if (!(apply(el_unit(*source)) == el_unit(*target))) throw OrbError(name + ": pullback does not preserve the unit");
    for (int j = 0; j < source->size(); ++j) {
      auto [p, n] = source->bidegree[static_cast<std::size_t>(j)];
      for (int k = 0; k < target->size(); ++k)
        if (m.at(k, j) != 0 && target->bidegree[static_cast<std::size_t>(k)] != std::pair<int, int>(p, n))
          throw OrbError(name + ": pullback does not preserve bidegree on " + source->basis[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < source->size(); ++i)
      for (int j = 0; j < source->size(); ++j) {
        Element lhs = apply(el_mul(el_basis(*source, i), el_basis(*source, j)));
        Element rhs = el_mul(apply(el_basis(*source, i)), apply(el_basis(*source, j)));
        if (!(lhs == rhs))
          throw OrbError(name + ": pullback not multiplicative on (" + source->basis[static_cast<std::size_t>(i)] + ", " +
                         source->basis[static_cast<std::size_t>(j)] + ")");
      }
  } else {
    for (int j = 0; j < source->size(); ++j) {
      auto [p, n] = source->bidegree[static_cast<std::size_t>(j)];
      for (int k = 0; k < target->size(); ++k)
        if (m.at(k, j) != 0 && target->bidegree[static_cast<std::size_t>(k)] != std::pair<int, int>(p + shift, n))
          throw OrbError(name + ": pushforward does not shift degree by " + std::to_string(shift) + " on " +
                         source->basis[static_cast<std::size_t>(j)]);
    }
  }
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (inner.target != outer.source) throw OrbError("compose: maps do not chain");
  LinearMap r;
  r.source = inner.source;
  r.target = outer.target;
  r.kind = (outer.kind == MapKind::pullback && inner.kind == MapKind::pullback) ? MapKind::pullback : MapKind::pushforward;
  r.shift = outer.shift + inner.shift;
  r.m = mat_mul(outer.m, inner.m);
  return r;
}

Rat KClass::rank() const {
  Rat r(0);
  for (const auto& l : lines) r += l.mult;
  return r;
}

KClass KClass::merged() const {
  std::map<std::vector<Rat>, Rat> acc;
  for (const auto& l : lines) acc[l.root.v] += l.mult;
  KClass r;
  r.owner = owner;
  for (const auto& [root, mult] : acc) {
    if (mult == 0) continue;
    r.lines.push_back(KLine{Element{owner, root}, mult});
  }
  return r;
}

KClass kclass_empty(const Algebra& a) { return KClass{&a, {}}; }

KClass kclass_add(const KClass& x, const KClass& y) {
  if (x.owner != y.owner) throw OrbError("kclass_add: classes on different algebras");
  KClass r = x;
  r.lines.insert(r.lines.end(), y.lines.begin(), y.lines.end());
  return r;
}

KClass kclass_negate(const KClass& x) {
  KClass r = x;
  for (auto& l : r.lines) l.mult = -l.mult;
  return r;
}

bool kclass_equal(const KClass& x, const KClass& y) {
  if (x.owner != y.owner) return false;
  KClass a = x.merged(), b = y.merged();
  if (a.lines.size() != b.lines.size()) return false;
  for (std::size_t i = 0; i < a.lines.size(); ++i)
    if (a.lines[i].root.v != b.lines[i].root.v || a.lines[i].mult != b.lines[i].mult) return false;
  return true;
}

KClass kclass_pull(const LinearMap& f, const KClass& x) {
  if (f.kind != MapKind::pullback) throw OrbError("kclass_pull: map is not a pullback");
  if (x.owner != f.source) throw OrbError("kclass_pull: class not on the source algebra");
  KClass r = kclass_empty(*f.target);
  for (const auto& l : x.lines) r.lines.push_back(KLine{f.apply(l.root), l.mult});
  return r;
}

std::string kclass_str(const KClass& x) {
  KClass m = x.merged();
  if (m.lines.empty()) return "0";
  std::string s;
  for (const auto& l : m.lines) {
    if (!s.empty()) s += " + ";
    s += rat_str(l.mult) + "*[" + el_str(l.root) + "]";
  }
  return s;
}

void kclass_check_roots(const KClass& x, const std::string& name) {
  for (const auto& l : x.lines) {
    if (l.root.owner != x.owner) throw OrbError(name + ": root on a different algebra");
    for (int i = 0; i < x.owner->size(); ++i)
      if (l.root.v[static_cast<std::size_t>(i)] != 0 &&
          x.owner->bidegree[static_cast<std::size_t>(i)] != std::pair<int, int>(1, 0))
        throw OrbError(name + ": root not concentrated in bidegree (1,0)");
  }
}

Element ch(const KClass& x, int truncation) {
  const Algebra& a = *x.owner;
  if (truncation < a.dim) throw OrbError(a.name + ": ch truncation below the dimension");
  Series e(static_cast<std::size_t>(a.dim) + 1, Rat(0));
  Rat fact(1);
  for (int k = 0; k <= a.dim; ++k) {
    if (k > 0) fact *= k;
    e[static_cast<std::size_t>(k)] = 1 / fact;
  }
  Element r = el_zero(a);
  for (const auto& l : x.lines) r = el_add(r, el_scale(l.mult, el_eval_series(e, l.root)));
  return r;
}

Element todd(const KClass& x) {
  const Algebra& a = *x.owner;
  Series lt = series_log_todd(a.dim);
  Element s = el_zero(a);
  for (const auto& l : x.lines) s = el_add(s, el_scale(l.mult, el_eval_series(lt, l.root)));
  Series e(static_cast<std::size_t>(a.dim) + 1, Rat(0));
  Rat fact(1);
  for (int k = 0; k <= a.dim; ++k) {
    if (k > 0) fact *= k;
    e[static_cast<std::size_t>(k)] = 1 / fact;
  }
  return el_eval_series(e, s);
}

static long honest_rank(const KClass& x, const char* op) {
  Rat r = x.rank();
  if (!is_integer(r) || r < 0) throw OrbError(std::string(op) + ": rank " + rat_str(r) + " is not a nonnegative integer");
  return rat_long(r);
}

Element c_top(const KClass& x) {
  const Algebra& a = *x.owner;
  long r = honest_rank(x, "c_top");
  Series l1p = series_log1p(a.dim);
  Element s = el_zero(a);
  for (const auto& l : x.lines) s = el_add(s, el_scale(l.mult, el_eval_series(l1p, l.root)));
  Series e(static_cast<std::size_t>(a.dim) + 1, Rat(0));
  Rat fact(1);
  for (int k = 0; k <= a.dim; ++k) {
    if (k > 0) fact *= k;
    e[static_cast<std::size_t>(k)] = 1 / fact;
  }
  Element total = el_eval_series(e, s);
  if (r > a.dim) return el_zero(a);
  return el_part(total, static_cast<int>(r), 0);
}

Element euler_k(const KClass& x) {
  const Algebra& a = *x.owner;
  honest_rank(x, "euler_k");
  KClass m = x.merged();
  for (const auto& l : m.lines) {
    if (l.root.is_zero()) continue;
    if (!is_integer(l.mult) || l.mult < 0)
      throw OrbError("euler_k: multiplicity " + rat_str(l.mult) + " on a nonzero root is not a nonnegative integer");
  }
  for (const auto& l : m.lines)
    if (l.root.is_zero() && l.mult > 0) return el_zero(a); // a stray trivial line kills the product
  for (const auto& l : m.lines)
    if (l.root.is_zero() && l.mult < 0) throw OrbError("euler_k: negative multiplicity on the zero root");
  Series d = series_expm1_over_x(a.dim);
  Element r = el_unit(a);
  for (const auto& l : m.lines) {
    long mult = rat_long(l.mult);
    Element factor = el_mul(el_pow(l.root, static_cast<int>(mult)), el_pow(el_eval_series(d, l.root), static_cast<int>(mult)));
    r = el_mul(r, factor);
  }
  return r;
}

} // namespace orb
