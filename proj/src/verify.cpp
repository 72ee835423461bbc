#include "verify.hpp"

#include "error.hpp"

#include <functional>

namespace orb {

namespace {

void guard(std::vector<CheckReport>& out, const std::string& check, const std::string& instance,
           const std::function<void()>& body) {
  CheckReport r{check, instance, true, ""};
  try {
    body();
  } catch (const OrbError& e) {
    r.pass = false;
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

void expect(bool cond, const std::string& msg) {
  if (!cond) throw OrbError(msg);
}

std::string tuple_str(const std::array<int, 3>& k) {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

} // namespace

std::vector<CheckReport> check_eq6(const OrbifoldDatum& d) {
  std::vector<CheckReport> out;
  for (int g = 0; g < d.group.order; ++g)
    for (const auto& s : d.singles[static_cast<std::size_t>(g)]) {
      std::string inst = "g=" + std::to_string(g) + " c=" + std::to_string(s.comp);
      guard(out, "eq6", inst, [&] {
        const SingleSector& other = d.single(d.group.inverse(g), s.sigma_comp);
        KClass lhs = kclass_add(age_class(s), kclass_pull(s.sigma, age_class(other)));
        expect(kclass_equal(lhs, s.normal),
               "age class plus reflected age class is " + kclass_str(lhs) + " but the normal class is " + kclass_str(s.normal));
      });
    }
  return out;
}

std::vector<CheckReport> check_eq1(const OrbifoldDatum& d) {
  std::vector<CheckReport> out;
  bool any = false;
  for (int g1 = 0; g1 < d.group.order; ++g1)
    for (int g2 = 0; g2 < d.group.order; ++g2)
      for (int g3 = 0; g3 < d.group.order; ++g3) {
        std::array<int, 3> key{g1, g2, g3};
        const auto* comps = d.triple_comps(g1, g2, g3);
        if (!comps) {
          if (!d.triple_declared(g1, g2, g3)) {
            out.push_back(CheckReport{"eq1", "g=" + tuple_str(key), false,
                                      "no triple-sector data and the tuple is not declared empty"});
          }
          continue;
        }
        any = true;
        int g12 = d.group.times(g1, g2);
        int g23 = d.group.times(g2, g3);
        int g123 = d.group.times(g12, g3);
        for (const auto& t : *comps) {
          std::string inst = "g=" + tuple_str(key) + " c=" + std::to_string(t.comp);
          guard(out, "eq1", inst, [&] {
            const DoubleSector& d12 = d.doubles.at({g1, g2})[static_cast<std::size_t>(t.e12_comp)];
            const DoubleSector& d23 = d.doubles.at({g2, g3})[static_cast<std::size_t>(t.e23_comp)];
            const DoubleSector& d123 = d.doubles.at({g12, g3})[static_cast<std::size_t>(t.m123_comp)];
            const DoubleSector& d1_23 = d.doubles.at({g1, g23})[static_cast<std::size_t>(t.m1_23_comp)];

            // First grouping: obstructions of (g1,g2) and (g1 g2, g3) plus
            // the excess of pulling the middle product sector two ways.
            KClass lhs = kclass_pull(t.e12, obstruction(d, d12));
            lhs = kclass_add(lhs, kclass_pull(t.m123, obstruction(d, d123)));
            lhs = kclass_add(lhs, kclass_pull(t.e12, d12.normal));
            lhs = kclass_add(lhs, kclass_pull(t.m123, d123.normal));
            const SingleSector& mid12 = d.single(g12, d123.e1_comp);
            lhs = kclass_add(lhs, kclass_negate(kclass_pull(compose(t.m123, d123.e1), mid12.normal)));
            lhs = kclass_add(lhs, kclass_negate(t.normal));

            // Second grouping, through (g2, g3) and (g1, g2 g3).
            KClass rhs = kclass_pull(t.e23, obstruction(d, d23));
            rhs = kclass_add(rhs, kclass_pull(t.m1_23, obstruction(d, d1_23)));
            rhs = kclass_add(rhs, kclass_pull(t.e23, d23.normal));
            rhs = kclass_add(rhs, kclass_pull(t.m1_23, d1_23.normal));
            const SingleSector& mid23 = d.single(g23, d1_23.e2_comp);
            rhs = kclass_add(rhs, kclass_negate(kclass_pull(compose(t.m1_23, d1_23.e2), mid23.normal)));
            rhs = kclass_add(rhs, kclass_negate(t.normal));

            // Closed form: the four corner age classes minus the normal class.
            KClass closed = kclass_empty(t.alg);
            for (int k = 0; k < 3; ++k)
              closed = kclass_add(closed,
                                  kclass_pull(t.j[static_cast<std::size_t>(k)], age_class(d.single(t.g[static_cast<std::size_t>(k)], t.j_comp[static_cast<std::size_t>(k)]))));
            const SingleSector& prod = d.single(g123, t.j_comp[3]);
            const SingleSector& prod_inv = d.single(d.group.inverse(g123), prod.sigma_comp);
            closed = kclass_add(closed, kclass_pull(compose(t.j[3], prod.sigma), age_class(prod_inv)));
            closed = kclass_add(closed, kclass_negate(t.normal));

            expect(kclass_equal(lhs, closed) && kclass_equal(rhs, closed),
                   "groupings disagree: (12)3 gives " + kclass_str(lhs) + ", 1(23) gives " + kclass_str(rhs) +
                       ", closed form is " + kclass_str(closed));
          });
        }
      }
  if (!any && out.empty())
    out.push_back(CheckReport{"eq1", "-", false, "document declares no triple sectors at all"});
  return out;
}

std::vector<CheckReport> check_assoc(const OrbifoldDatum& d, Theory t) {
  std::vector<CheckReport> out;
  guard(out, "assoc(" + theory_name(t) + ")", "all basis triples", [&] {
    StringySpace sp = stringy_space(d);
    ProductTable tab = product_table(sp, t, false);
    int n = sp.dim();
    long checked = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          StringyVec lhs = sv_zero(sp), rhs = sv_zero(sp);
          const auto& ij = tab.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          for (int k = 0; k < n; ++k) {
            const Rat& c = ij[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            const auto& kl = tab.coeffs[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            for (int m = 0; m < n; ++m) lhs[static_cast<std::size_t>(m)] += c * kl[static_cast<std::size_t>(m)];
          }
          const auto& jl = tab.coeffs[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
          for (int k = 0; k < n; ++k) {
            const Rat& c = jl[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            const auto& ik = tab.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            for (int m = 0; m < n; ++m) rhs[static_cast<std::size_t>(m)] += c * ik[static_cast<std::size_t>(m)];
          }
          expect(lhs == rhs, "(" + sp.label(i) + " * " + sp.label(j) + ") * " + sp.label(l) + " = " + sv_str(sp, lhs) +
                                 " but " + sp.label(i) + " * (" + sp.label(j) + " * " + sp.label(l) + ") = " +
                                 sv_str(sp, rhs));
          ++checked;
        }
    expect(checked == static_cast<long>(n) * n * n, "triple enumeration incomplete");
  });
  return out;
}

std::vector<CheckReport> check_comm(const OrbifoldDatum& d, Theory t) {
  std::vector<CheckReport> out;
  StringySpace sp = stringy_space(d);
  guard(out, "comm(" + theory_name(t) + ")", "all basis pairs", [&] {
    ProductTable tab = product_table(sp, t, false);
    int n = sp.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int g2 = sp.entries[static_cast<std::size_t>(j)].g;
        StringyVec xi = stringy_act(sp, d.group.inverse(g2), sv_basis(sp, i));
        StringyVec rhs = sv_zero(sp);
        for (int k = 0; k < n; ++k) {
          const Rat& c = xi[static_cast<std::size_t>(k)];
          if (c == 0) continue;
          const auto& jk = tab.coeffs[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
          for (int m = 0; m < n; ++m) rhs[static_cast<std::size_t>(m)] += c * jk[static_cast<std::size_t>(m)];
        }
        int sgn = (stringy_parity(sp, i) & stringy_parity(sp, j)) ? -1 : 1;
        if (sgn < 0)
          for (auto& c : rhs) c = -c;
        const auto& lhs = tab.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        expect(lhs == rhs, sp.label(i) + " * " + sp.label(j) + " = " + sv_str(sp, lhs) +
                               " but the twisted-commuted side is " + sv_str(sp, rhs));
      }
  });
  guard(out, "comm_inv(" + theory_name(t) + ")", "invariant basis pairs", [&] {
    ProductTable tab = product_table(sp, t, true);
    int k = static_cast<int>(tab.labels.size());
    std::vector<int> par(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      int p = -1;
      for (int c = 0; c < sp.dim(); ++c) {
        if (tab.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == 0) continue;
        int pc = stringy_parity(sp, c);
        expect(p < 0 || p == pc, "invariant basis vector " + std::to_string(i) + " mixes parities");
        p = pc;
      }
      par[static_cast<std::size_t>(i)] = p < 0 ? 0 : p;
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::vector<Rat> rhs = tab.coeffs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (par[static_cast<std::size_t>(i)] & par[static_cast<std::size_t>(j)])
          for (auto& c : rhs) c = -c;
        expect(tab.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == rhs,
               "invariant products of " + tab.labels[static_cast<std::size_t>(i)] + " and " +
                   tab.labels[static_cast<std::size_t>(j)] + " do not commute with the expected sign");
      }
  });
  return out;
}

std::vector<CheckReport> check_chern(const OrbifoldDatum& d) {
  std::vector<CheckReport> out;
  guard(out, "chern", "all basis pairs", [&] {
    StringySpace sp = stringy_space(d);
    ProductTable tk = product_table(sp, Theory::k, false);
    ProductTable tc = product_table(sp, Theory::chow, false);
    int n = sp.dim();
    std::vector<StringyVec> chb;
    chb.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) chb.push_back(stringy_chern(sp, sv_basis(sp, i)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        StringyVec lhs = stringy_chern(sp, tk.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        StringyVec rhs = sv_zero(sp);
        for (int k = 0; k < n; ++k) {
          const Rat& a = chb[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
          if (a == 0) continue;
          for (int l = 0; l < n; ++l) {
            const Rat& b = chb[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
            if (b == 0) continue;
            const auto& kl = tc.coeffs[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            Rat ab = a * b;
            for (int m = 0; m < n; ++m) rhs[static_cast<std::size_t>(m)] += ab * kl[static_cast<std::size_t>(m)];
          }
        }
        expect(lhs == rhs, "character of " + sp.label(i) + " * " + sp.label(j) + " is " + sv_str(sp, lhs) +
                               " but the characters multiply to " + sv_str(sp, rhs));
      }
  });
  return out;
}

std::vector<CheckReport> check_rank_grading(const OrbifoldDatum& d) {
  std::vector<CheckReport> out;
  for (const auto& [key, vec] : d.doubles)
    for (const auto& ds : vec) {
      std::string inst = "g=(" + std::to_string(key[0]) + "," + std::to_string(key[1]) + ") c=" + std::to_string(ds.comp);
      guard(out, "rank", inst, [&] {
        Rat r = obstruction(d, ds).rank();
        expect(is_integer(r) && r >= 0, "obstruction rank " + rat_str(r) + " is not a nonnegative integer");
      });
      guard(out, "grading", inst, [&] {
        int g12 = d.group.times(key[0], key[1]);
        Rat a1 = sector_age(d.single(key[0], ds.e1_comp));
        Rat a2 = sector_age(d.single(key[1], ds.e2_comp));
        Rat a12 = sector_age(d.single(g12, ds.mu_comp));
        Rat r = obstruction(d, ds).rank();
        Rat lhs = a1 + a2 - a12;
        Rat rhs = r + ds.mu_push.shift;
        expect(lhs == rhs, "age balance " + rat_str(lhs) + " but obstruction rank plus shift is " + rat_str(rhs));
      });
    }
  return out;
}

std::vector<CheckReport> run_suites(const OrbifoldDatum& d, bool do_chow, bool do_k, unsigned mask) {
  std::vector<CheckReport> out;
  auto append = [&](std::vector<CheckReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  if (mask & SUITE_EQ6) append(check_eq6(d));
  if (mask & SUITE_EQ1) append(check_eq1(d));
  if (mask & SUITE_RANK) append(check_rank_grading(d));
  if (mask & SUITE_ASSOC) {
    if (do_chow) append(check_assoc(d, Theory::chow));
    if (do_k) append(check_assoc(d, Theory::k));
  }
  if (mask & SUITE_COMM) {
    if (do_chow) append(check_comm(d, Theory::chow));
    if (do_k) append(check_comm(d, Theory::k));
  }
  if (mask & SUITE_CHERN) append(check_chern(d));
  return out;
}

} // namespace orb
