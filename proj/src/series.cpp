#include "series.hpp"

#include "error.hpp"

namespace orb {

static Rat coeff(const Series& a, int k) {
  return k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)] : Rat(0);
}

Series series_mul(const Series& a, const Series& b, int order) {
  Series r(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int i = 0; i <= order; ++i) {
    if (coeff(a, i) == 0) continue;
    for (int j = 0; i + j <= order; ++j) r[static_cast<std::size_t>(i + j)] += coeff(a, i) * coeff(b, j);
  }
  return r;
}

Series series_inv(const Series& a, int order) {
  if (coeff(a, 0) == 0) throw OrbError("series_inv: zero constant term");
  Series r(static_cast<std::size_t>(order) + 1, Rat(0));
  r[0] = 1 / coeff(a, 0);
  for (int k = 1; k <= order; ++k) {
    Rat s(0);
    for (int j = 1; j <= k; ++j) s += coeff(a, j) * r[static_cast<std::size_t>(k - j)];
    r[static_cast<std::size_t>(k)] = -s / coeff(a, 0);
  }
  return r;
}

Series series_log(const Series& a, int order) {
  if (coeff(a, 0) != 1) throw OrbError("series_log: constant term must be 1");
  // log(a)' = a'/a, integrate term by term.
  Series inv = series_inv(a, order);
  Series da(static_cast<std::size_t>(order) + 1, Rat(0)); // a' shifted: da[k] = (k+1) a[k+1]
  for (int k = 0; k < order; ++k) da[static_cast<std::size_t>(k)] = Rat(k + 1) * coeff(a, k + 1);
  Series prod = series_mul(da, inv, order);
  Series r(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int k = 1; k <= order; ++k) r[static_cast<std::size_t>(k)] = prod[static_cast<std::size_t>(k - 1)] / k;
  return r;
}

Series series_exp(const Series& a, int order) {
  if (coeff(a, 0) != 0) throw OrbError("series_exp: constant term must be 0");
  Series r(static_cast<std::size_t>(order) + 1, Rat(0));
  r[0] = 1;
  Series term = r; // a^k / k!
  for (int k = 1; k <= order; ++k) {
    term = series_mul(term, a, order);
    for (auto& c : term) c /= k;
    for (int j = 0; j <= order; ++j) r[static_cast<std::size_t>(j)] += term[static_cast<std::size_t>(j)];
  }
  return r;
}

Series series_expm1_over_x(int order) {
  Series r(static_cast<std::size_t>(order) + 1, Rat(0));
  Rat fact(1); // (k+1)!
  for (int k = 0; k <= order; ++k) {
    fact *= k + 1;
    r[static_cast<std::size_t>(k)] = Rat((k % 2 == 0) ? 1 : -1) / fact;
  }
  return r;
}

Series series_log_todd(int order) {
  Series d = series_expm1_over_x(order);
  Series l = series_log(d, order);
  for (auto& c : l) c = -c;
  return l;
}

Series series_log1p(int order) {
  Series r(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int k = 1; k <= order; ++k) r[static_cast<std::size_t>(k)] = Rat((k % 2 == 1) ? 1 : -1) / k;
  return r;
}

} // namespace orb
