#include "stringy.hpp"

#include "error.hpp"

#include <algorithm>

namespace orb {

std::string theory_name(Theory t) { return t == Theory::chow ? "chow" : "k"; }

KClass age_class(const SingleSector& s) {
  KClass out = kclass_empty(s.alg);
  for (const auto& e : s.eigen)
    for (const auto& l : e.lines.lines) out.lines.push_back(KLine{l.root, e.alpha * l.mult});
  return out.merged();
}

Rat sector_age(const SingleSector& s) { return age_class(s).rank(); }

KClass obstruction(const OrbifoldDatum& d, const DoubleSector& ds) {
  int g12 = d.group.times(ds.g[0], ds.g[1]);
  const SingleSector& s1 = d.single(ds.g[0], ds.e1_comp);
  const SingleSector& s2 = d.single(ds.g[1], ds.e2_comp);
  const SingleSector& sinv = d.single(d.group.inverse(g12), ds.smu_comp);
  KClass r = kclass_pull(ds.e1, age_class(s1));
  r = kclass_add(r, kclass_pull(ds.e2, age_class(s2)));
  r = kclass_add(r, kclass_pull(ds.smu, age_class(sinv)));
  r = kclass_add(r, kclass_negate(ds.normal));
  return r.merged();
}

int StringySpace::offset_of(int g, int comp) const {
  auto it = offsets.find({g, comp});
  if (it == offsets.end()) throw OrbError("no sector component g=" + std::to_string(g) + " c=" + std::to_string(comp));
  return it->second;
}

const Algebra& StringySpace::algebra_of(int g, int comp) const { return datum->single(g, comp).alg; }

std::string StringySpace::label(int i) const {
  const StringyEntry& e = entries[static_cast<std::size_t>(i)];
  return component_label(e.g, e.comp) + ":" + algebra_of(e.g, e.comp).basis[static_cast<std::size_t>(e.idx)];
}

int StringySpace::find_label(const std::string& l) const {
  for (int i = 0; i < dim(); ++i)
    if (label(i) == l) return i;
  return -1;
}

StringySpace stringy_space(const OrbifoldDatum& d) {
  StringySpace sp;
  sp.datum = &d;
  for (int g = 0; g < d.group.order; ++g)
    for (const auto& s : d.singles[static_cast<std::size_t>(g)]) {
      sp.offsets[{g, s.comp}] = sp.dim();
      for (int i = 0; i < s.alg.size(); ++i) sp.entries.push_back(StringyEntry{g, s.comp, i});
    }
  return sp;
}

StringyVec sv_zero(const StringySpace& sp) { return StringyVec(static_cast<std::size_t>(sp.dim()), Rat(0)); }

StringyVec sv_basis(const StringySpace& sp, int i) {
  StringyVec v = sv_zero(sp);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::string sv_str(const StringySpace& sp, const StringyVec& v) {
  std::string out;
  for (int i = 0; i < sp.dim(); ++i) {
    const Rat& c = v[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += rat_str(c) + "*" + sp.label(i);
  }
  return out.empty() ? "0" : out;
}

std::pair<Rat, int> stringy_bidegree(const StringySpace& sp, int i) {
  const StringyEntry& e = sp.entries[static_cast<std::size_t>(i)];
  const SingleSector& s = sp.datum->single(e.g, e.comp);
  auto [p, n] = s.alg.bidegree[static_cast<std::size_t>(e.idx)];
  return {Rat(p) + sector_age(s), n};
}

int stringy_parity(const StringySpace& sp, int i) {
  const StringyEntry& e = sp.entries[static_cast<std::size_t>(i)];
  return sp.algebra_of(e.g, e.comp).parity[static_cast<std::size_t>(e.idx)];
}

namespace {

Element block_of(const StringySpace& sp, const StringyVec& v, int g, int comp) {
  const Algebra& a = sp.algebra_of(g, comp);
  Element e = el_zero(a);
  int off = sp.offset_of(g, comp);
  for (int i = 0; i < a.size(); ++i) e.v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(off + i)];
  return e;
}

void add_block(const StringySpace& sp, StringyVec& v, int g, int comp, const Element& e) {
  int off = sp.offset_of(g, comp);
  for (std::size_t i = 0; i < e.v.size(); ++i) v[static_cast<std::size_t>(off) + i] += e.v[i];
}

} // namespace

MulCache build_mul_cache(const StringySpace& sp, Theory t) {
  MulCache cache;
  cache.space = &sp;
  cache.theory = t;
  const OrbifoldDatum& d = *sp.datum;
  for (const auto& [key, vec] : d.doubles)
    for (const auto& ds : vec) {
      KClass r = obstruction(d, ds);
      Element f = el_zero(ds.alg);
      if (t == Theory::chow) {
        f = c_top(r);
      } else {
        int g12 = d.group.times(key[0], key[1]);
        const SingleSector& tgt = d.single(g12, ds.mu_comp);
        KClass n_mu = kclass_add(ds.normal, kclass_negate(kclass_pull(ds.mu_pull, tgt.normal)));
        f = el_mul(euler_k(r), todd(kclass_negate(n_mu)));
      }
      cache.factor.emplace(std::array<int, 3>{key[0], key[1], ds.comp}, std::move(f));
    }
  return cache;
}

StringyVec stringy_mul(const MulCache& cache, const StringyVec& x, const StringyVec& y) {
  const StringySpace& sp = *cache.space;
  const OrbifoldDatum& d = *sp.datum;

  // Support pairs must be covered by pair-sector data or declared empty.
  std::vector<std::pair<int, int>> xs, ys;
  for (const auto& [gc, off] : sp.offsets) {
    const Algebra& a = sp.algebra_of(gc.first, gc.second);
    bool in_x = false, in_y = false;
    for (int i = 0; i < a.size(); ++i) {
      if (x[static_cast<std::size_t>(off + i)] != 0) in_x = true;
      if (y[static_cast<std::size_t>(off + i)] != 0) in_y = true;
    }
    if (in_x) xs.push_back(gc);
    if (in_y) ys.push_back(gc);
  }
  for (const auto& a : xs)
    for (const auto& b : ys)
      if (!d.double_declared(a.first, b.first))
        throw OrbError("no pair-sector data for (" + std::to_string(a.first) + "," + std::to_string(b.first) +
                       ") and the pair is not declared empty");

  StringyVec out = sv_zero(sp);
  for (const auto& [key, factor] : cache.factor) {
    const DoubleSector& ds = d.doubles.at({key[0], key[1]})[static_cast<std::size_t>(key[2])];
    Element xp = block_of(sp, x, key[0], ds.e1_comp);
    if (xp.is_zero()) continue;
    Element yp = block_of(sp, y, key[1], ds.e2_comp);
    if (yp.is_zero()) continue;
    Element z = el_mul(el_mul(ds.e1.apply(xp), ds.e2.apply(yp)), factor);
    int g12 = d.group.times(key[0], key[1]);
    add_block(sp, out, g12, ds.mu_comp, ds.mu_push.apply(z));
  }
  return out;
}

StringyVec stringy_act(const StringySpace& sp, int h, const StringyVec& x) {
  const OrbifoldDatum& d = *sp.datum;
  StringyVec out = sv_zero(sp);
  for (int g = 0; g < d.group.order; ++g) {
    int gh = d.group.conj(h, g);
    const auto& row = d.action[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)];
    for (std::size_t c = 0; c < row.size(); ++c) {
      Element xp = block_of(sp, x, g, static_cast<int>(c));
      if (xp.is_zero()) continue;
      add_block(sp, out, gh, row[c].to_comp, row[c].map.apply(xp));
    }
  }
  return out;
}

StringyVec stringy_chern(const StringySpace& sp, const StringyVec& x) {
  const OrbifoldDatum& d = *sp.datum;
  StringyVec out = sv_zero(sp);
  for (const auto& [gc, off] : sp.offsets) {
    Element xp = block_of(sp, x, gc.first, gc.second);
    if (xp.is_zero()) continue;
    const SingleSector& s = d.single(gc.first, gc.second);
    Element tw = todd(kclass_negate(age_class(s)));
    add_block(sp, out, gc.first, gc.second, el_mul(xp, tw));
  }
  return out;
}

Mat invariant_basis(const StringySpace& sp) {
  const OrbifoldDatum& d = *sp.datum;
  int n = sp.dim();
  // Averaging projector, assembled column by column, then the reduced row
  // echelon form of its transpose gives a canonical basis of the image.
  Mat pt(n, n);
  Rat inv_order(1, static_cast<unsigned long>(d.group.order));
  for (int j = 0; j < n; ++j) {
    StringyVec sum = sv_zero(sp);
    StringyVec ej = sv_basis(sp, j);
    for (int h = 0; h < d.group.order; ++h) {
      StringyVec img = stringy_act(sp, h, ej);
      for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] += img[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i) pt.at(j, i) = inv_order * sum[static_cast<std::size_t>(i)];
  }
  rref(pt);
  int rank = 0;
  for (int r = 0; r < n; ++r) {
    bool nonzero = false;
    for (int c = 0; c < n; ++c)
      if (pt.at(r, c) != 0) nonzero = true;
    if (nonzero) rank = r + 1;
  }
  Mat out(rank, n);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = pt.at(r, c);
  return out;
}

ProductTable product_table(const StringySpace& sp, Theory t, bool invariant_only) {
  MulCache cache = build_mul_cache(sp, t);
  ProductTable out;
  if (!invariant_only) {
    int n = sp.dim();
    for (int i = 0; i < n; ++i) out.labels.push_back(sp.label(i));
    out.coeffs.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
      out.coeffs[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
      StringyVec ei = sv_basis(sp, i);
      for (int j = 0; j < n; ++j) out.coeffs[static_cast<std::size_t>(i)].push_back(stringy_mul(cache, ei, sv_basis(sp, j)));
    }
    return out;
  }

  Mat basis = invariant_basis(sp);
  int k = basis.rows, n = sp.dim();
  for (int r = 0; r < k; ++r) {
    out.labels.push_back("inv" + std::to_string(r));
    StringyVec v(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] = basis.at(r, c);
    out.vectors.push_back(std::move(v));
  }
  // Columns of `span` are the basis vectors; products are expanded by solving.
  Mat span(n, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) span.at(c, r) = basis.at(r, c);
  out.coeffs.assign(static_cast<std::size_t>(k), {});
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      StringyVec prod = stringy_mul(cache, out.vectors[static_cast<std::size_t>(i)], out.vectors[static_cast<std::size_t>(j)]);
      auto sol = mat_solve(span, prod);
      if (!sol)
        throw OrbError("product of invariant vectors " + std::to_string(i) + " and " + std::to_string(j) +
                       " leaves the invariant span");
      sol->resize(static_cast<std::size_t>(k));
      out.coeffs[static_cast<std::size_t>(i)].push_back(std::move(*sol));
    }
  return out;
}

} // namespace orb
