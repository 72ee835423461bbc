#include "series.hpp"

#include <doctest.h>

using namespace orb;

namespace {

Series padded(std::initializer_list<Rat> c) { return Series(c); }

} // namespace

TEST_CASE("series_mul truncates") {
  Series a = padded({1, 1});       // 1 + x
  Series b = padded({1, -1, 1});   // 1 - x + x^2
  Series p = series_mul(a, b, 2);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p[2] == 0); // x^3 term dropped, x^2 terms cancel
}

TEST_CASE("series_inv inverts geometric series") {
  Series a = padded({1, 1}); // 1 + x
  Series inv = series_inv(a, 4);
  Series expect = padded({1, -1, 1, -1, 1});
  CHECK(inv == expect);
  CHECK(series_mul(a, inv, 4) == padded({1, 0, 0, 0, 0}));
}

TEST_CASE("exp and log are inverse") {
  Series l = series_log1p(5); // log(1+x)
  Series e = series_exp(l, 5);
  Series expect = padded({1, 1, 0, 0, 0, 0});
  CHECK(e == expect);
  CHECK(series_log(e, 5) == l);
}

TEST_CASE("euler factor series") {
  // (1 - e^{-x})/x = 1 - x/2 + x^2/6 - x^3/24
  Series s = series_expm1_over_x(3);
  CHECK(s == padded({1, Rat(-1, 2), Rat(1, 6), Rat(-1, 24)}));
}

TEST_CASE("todd series coefficients") {
  // x/(1-e^{-x}) = 1 + x/2 + x^2/12 + 0 x^3 - x^4/720 + 0 x^5 + x^6/30240
  Series td = series_exp(series_log_todd(6), 6);
  Series expect = padded({1, Rat(1, 2), Rat(1, 12), 0, Rat(-1, 720), 0, Rat(1, 30240)});
  CHECK(td == expect);
  // and it is the inverse of the euler factor
  CHECK(series_mul(td, series_expm1_over_x(6), 6) == padded({1, 0, 0, 0, 0, 0, 0}));
}
