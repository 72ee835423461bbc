#include "hkr.hpp"

#include "error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace orb {

namespace {

std::vector<std::vector<Rat>> kernel_basis(Mat m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(m.cols), Rat(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? q : Rat(1) / q;
  long n = e > 0 ? e : -e;
  Rat out(1);
  for (long i = 0; i < n; ++i) out *= base;
  return out;
}

long lcm_of_denominators(const std::vector<Rat>& v) {
  mpz_class l(1);
  for (const auto& r : v) {
    mpz_class d = r.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  if (!l.fits_slong_p()) throw OrbError("scaling system: denominator blowup");
  return l.get_si();
}

// Exact d-th root in the rationals, when it exists.
std::optional<Rat> exact_root(const Rat& v, long d) {
  if (d == 1) return v;
  if (v == 0) return Rat(0);
  bool neg = v < 0;
  if (neg && d % 2 == 0) return std::nullopt;
  mpz_class num = abs(v.get_num()), den = v.get_den();
  mpz_class rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d));
  int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d));
  if (!exact_n || !exact_d) return std::nullopt;
  Rat out(rn, rd);
  out.canonicalize();
  return neg ? -out : out;
}

struct PairRef {
  int flat = -1;  // index in the flat basis
  int res = -1;   // index in the resolution basis
  bool scalable = false;
  std::string orb_label, res_name;
};

std::vector<PairRef> resolve_pairs(const StringySpace& sp, const Resolution& res, const Skeleton& sk) {
  std::vector<PairRef> pairs;
  for (const auto& p : sk.pairs) {
    PairRef r;
    r.orb_label = p.orb;
    r.res_name = p.res;
    r.scalable = p.scalable;
    r.flat = sp.find_label(p.orb);
    if (r.flat < 0) throw OrbError("matching refers to unknown sector basis element '" + p.orb + "'");
    auto it = std::find(res.alg.basis.begin(), res.alg.basis.end(), p.res);
    if (it == res.alg.basis.end()) throw OrbError("matching refers to unknown resolution basis element '" + p.res + "'");
    r.res = static_cast<int>(it - res.alg.basis.begin());
    pairs.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].flat == pairs[j].flat) throw OrbError("basis element '" + pairs[i].orb_label + "' is matched twice");
      if (pairs[i].res == pairs[j].res) throw OrbError("resolution element '" + pairs[i].res_name + "' is matched twice");
    }
  return pairs;
}

} // namespace

std::map<std::pair<Rat, int>, int> stringy_graded_dims(const StringySpace& sp) {
  Mat basis = invariant_basis(sp);
  std::map<std::pair<Rat, int>, int> dims;
  for (int r = 0; r < basis.rows; ++r) {
    std::optional<std::pair<Rat, int>> deg;
    for (int c = 0; c < basis.cols; ++c) {
      if (basis.at(r, c) == 0) continue;
      auto d = stringy_bidegree(sp, c);
      if (deg && *deg != d) throw OrbError("invariant basis vector " + std::to_string(r) + " is not homogeneous");
      deg = d;
    }
    if (deg) ++dims[*deg];
  }
  return dims;
}

std::map<std::pair<Rat, int>, int> resolution_graded_dims(const Resolution& res) {
  std::map<std::pair<Rat, int>, int> dims;
  for (const auto& [p, n] : res.alg.bidegree) ++dims[{Rat(p), n}];
  return dims;
}

CheckReport compare_graded_dims(const StringySpace& sp, const Resolution& res) {
  CheckReport r{"graded_dims", "-", true, ""};
  try {
    auto a = stringy_graded_dims(sp);
    auto b = resolution_graded_dims(res);
    if (a != b) {
      auto fmt = [](const std::map<std::pair<Rat, int>, int>& dims) {
        std::string s;
        for (const auto& [deg, k] : dims) {
          if (!s.empty()) s += ", ";
          s += "(" + rat_str(deg.first) + "," + std::to_string(deg.second) + "):" + std::to_string(k);
        }
        return s.empty() ? std::string("empty") : s;
      };
      r.pass = false;
      r.detail = "invariant side has " + fmt(a) + " but the resolution has " + fmt(b);
    }
  } catch (const OrbError& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

ScalingResult solve_scalings(const StringySpace& sp, Theory t, const Resolution& res, const Skeleton& sk) {
  ScalingResult out;
  std::vector<PairRef> pairs = resolve_pairs(sp, res, sk);

  std::map<int, int> flat_to_pair, res_to_pair;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    flat_to_pair[pairs[k].flat] = static_cast<int>(k);
    res_to_pair[pairs[k].res] = static_cast<int>(k);
  }
  std::vector<int> var_of(pairs.size(), -1);
  std::vector<std::string> var_label;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k].scalable) {
      var_of[k] = static_cast<int>(var_label.size());
      var_label.push_back(pairs[k].orb_label);
      out.squares[pairs[k].orb_label] = std::nullopt;
    }
  int nvars = static_cast<int>(var_label.size());

  struct Equation {
    std::vector<Rat> expo;
    Rat q;
    std::string where;
  };
  std::vector<Equation> eqs;
  auto fail = [&](const std::string& msg) {
    if (out.status == ScalingStatus::consistent) {
      out.status = ScalingStatus::inconsistent;
      out.witness = msg;
    }
  };

  MulCache cache = build_mul_cache(sp, t);
  for (std::size_t i = 0; i < pairs.size() && out.status == ScalingStatus::consistent; ++i)
    for (std::size_t j = 0; j < pairs.size() && out.status == ScalingStatus::consistent; ++j) {
      StringyVec xprod = stringy_mul(cache, sv_basis(sp, pairs[i].flat), sv_basis(sp, pairs[j].flat));
      Element rprod = el_mul(el_basis(res.alg, pairs[i].res), el_basis(res.alg, pairs[j].res));
      std::string where = "'" + pairs[i].orb_label + "' * '" + pairs[j].orb_label + "'";
      for (int f = 0; f < sp.dim(); ++f)
        if (xprod[static_cast<std::size_t>(f)] != 0 && !flat_to_pair.count(f)) {
          fail(where + " involves unmatched sector element '" + sp.label(f) + "'");
          break;
        }
      for (int m = 0; m < res.alg.size() && out.status == ScalingStatus::consistent; ++m) {
        Rat b = rprod.v[static_cast<std::size_t>(m)];
        auto it = res_to_pair.find(m);
        if (it == res_to_pair.end()) {
          if (b != 0) fail(where + " on the resolution side involves unmatched element '" + res.alg.basis[static_cast<std::size_t>(m)] + "'");
          continue;
        }
        int k = it->second;
        Rat a = xprod[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].flat)];
        if (a == 0 && b == 0) continue;
        if (a == 0 || b == 0) {
          fail(where + ": coefficient of '" + pairs[static_cast<std::size_t>(k)].res_name + "' is " + rat_str(b) +
               " on the resolution side but the matched sector coefficient is " + rat_str(a));
          continue;
        }
        Equation e;
        e.expo.assign(static_cast<std::size_t>(nvars), Rat(0));
        if (var_of[i] >= 0) e.expo[static_cast<std::size_t>(var_of[i])] += 1;
        if (var_of[j] >= 0) e.expo[static_cast<std::size_t>(var_of[j])] += 1;
        if (var_of[static_cast<std::size_t>(k)] >= 0) e.expo[static_cast<std::size_t>(var_of[static_cast<std::size_t>(k)])] -= 1;
        e.q = a / b;
        e.where = where;
        bool zero = std::all_of(e.expo.begin(), e.expo.end(), [](const Rat& c) { return c == 0; });
        if (zero) {
          if (e.q != 1) fail(where + ": forced scale-free coefficient ratio " + rat_str(e.q) + " instead of 1");
        } else {
          eqs.push_back(std::move(e));
        }
      }
    }
  if (out.status == ScalingStatus::inconsistent) return out;

  int neqs = static_cast<int>(eqs.size());
  if (neqs == 0) return out;

  // Multiplicative consistency: every vanishing integer combination of the
  // exponent rows must multiply the values to 1.
  Mat at(nvars, neqs);
  for (int r = 0; r < neqs; ++r)
    for (int v = 0; v < nvars; ++v) at.at(v, r) = eqs[static_cast<std::size_t>(r)].expo[static_cast<std::size_t>(v)];
  for (const auto& lam : kernel_basis(at)) {
    long d = lcm_of_denominators(lam);
    Rat val(1);
    for (int r = 0; r < neqs; ++r) {
      Rat c = lam[static_cast<std::size_t>(r)] * d;
      val *= rat_pow(eqs[static_cast<std::size_t>(r)].q, rat_long(c));
    }
    if (val != 1) {
      fail("equations from " + eqs[0].where + " onward combine to the contradiction 1 = " + rat_str(val));
      return out;
    }
  }

  // Determine each square by expressing 2*delta_v in the row span.
  for (int v = 0; v < nvars; ++v) {
    std::vector<Rat> target(static_cast<std::size_t>(nvars), Rat(0));
    target[static_cast<std::size_t>(v)] = 2;
    auto lam = mat_solve(at, target);
    if (!lam) continue; // square not determined by the system
    long d = lcm_of_denominators(*lam);
    Rat val(1);
    for (int r = 0; r < neqs; ++r) {
      Rat c = (*lam)[static_cast<std::size_t>(r)] * d;
      val *= rat_pow(eqs[static_cast<std::size_t>(r)].q, rat_long(c));
    }
    out.squares[var_label[static_cast<std::size_t>(v)]] = exact_root(val, d);
  }
  return out;
}

std::vector<CheckReport> check_iso(const StringySpace& sp, Theory t, const Resolution& res, const Skeleton& sk) {
  std::vector<CheckReport> out;
  auto guard = [&](const std::string& check, const std::function<void()>& body) {
    CheckReport r{check, "-", true, ""};
    try {
      body();
    } catch (const OrbError& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };

  std::vector<PairRef> pairs;
  bool resolved = false;
  guard("iso_labels", [&] {
    pairs = resolve_pairs(sp, res, sk);
    resolved = true;
    if (static_cast<int>(pairs.size()) != res.alg.size())
      throw OrbError("matching covers " + std::to_string(pairs.size()) + " elements but the resolution has " +
                     std::to_string(res.alg.size()));
  });
  if (!resolved) return out;

  guard("iso_invariance", [&] {
    const OrbifoldDatum& d = *sp.datum;
    for (const auto& p : pairs) {
      StringyVec e = sv_basis(sp, p.flat);
      for (int h = 0; h < d.group.order; ++h)
        if (stringy_act(sp, h, e) != e)
          throw OrbError("matched element '" + p.orb_label + "' is not invariant under the group action");
    }
    int rank = invariant_basis(sp).rows;
    if (rank != static_cast<int>(pairs.size()))
      throw OrbError("matching has " + std::to_string(pairs.size()) + " elements but the invariant subspace has dimension " +
                     std::to_string(rank));
  });

  guard("iso_unit", [&] {
    const Algebra& amb = sp.datum->single(0, 0).alg;
    std::string unit_label = component_label(0, 0) + ":" + amb.basis[static_cast<std::size_t>(amb.unit)];
    for (const auto& p : pairs)
      if (p.orb_label == unit_label) {
        if (p.res != res.alg.unit) throw OrbError("the unit is not matched to the resolution unit");
        if (p.scalable) throw OrbError("the unit matching must not be scalable");
        return;
      }
    throw OrbError("the unit '" + unit_label + "' is not matched");
  });

  guard("iso_scalings", [&] {
    ScalingResult r = solve_scalings(sp, t, res, sk);
    if (r.status == ScalingStatus::inconsistent) throw OrbError(r.witness);
  });

  out.push_back(compare_graded_dims(sp, res));
  return out;
}

} // namespace orb
