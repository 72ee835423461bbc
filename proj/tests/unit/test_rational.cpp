#include "error.hpp"
#include "rational.hpp"

#include <doctest.h>

using namespace orb;

TEST_CASE("parse_rat canonical forms") {
  CHECK(parse_rat("7", "t") == Rat(7));
  CHECK(parse_rat("-3", "t") == Rat(-3));
  CHECK(parse_rat("+5", "t") == Rat(5));
  CHECK(parse_rat("3/6", "t") == Rat(1, 2));
  CHECK(parse_rat("-2/4", "t") == Rat(-1, 2));
  CHECK(parse_rat("0/9", "t") == Rat(0));
  CHECK(parse_rat("123456789012345678901234567890/3", "t") ==
        Rat(mpz_class("41152263004115226300411522630")));
}

TEST_CASE("parse_rat rejects malformed input") {
  CHECK_THROWS_AS(parse_rat("", "t"), OrbError);
  CHECK_THROWS_AS(parse_rat("1/0", "t"), OrbError);
  CHECK_THROWS_AS(parse_rat("a", "t"), OrbError);
  CHECK_THROWS_AS(parse_rat("1/-2", "t"), OrbError);
  CHECK_THROWS_AS(parse_rat("1/", "t"), OrbError);
  CHECK_THROWS_AS(parse_rat("/2", "t"), OrbError);
  CHECK_THROWS_AS(parse_rat("1.5", "t"), OrbError);
  CHECK_THROWS_AS(parse_rat("1 / 2", "t"), OrbError);
}

TEST_CASE("rat_str is canonical") {
  CHECK(rat_str(parse_rat("4/2", "t")) == "2");
  CHECK(rat_str(Rat(-1, 2)) == "-1/2");
  CHECK(rat_str(Rat(0)) == "0");
  for (const char* s : {"22/7", "-13", "0", "5/3"}) {
    Rat r = parse_rat(s, "t");
    CHECK(parse_rat(rat_str(r), "t") == r);
  }
}

TEST_CASE("integrality helpers") {
  CHECK(is_integer(parse_rat("6/3", "t")));
  CHECK(!is_integer(Rat(1, 2)));
  CHECK(rat_long(Rat(-42)) == -42);
  CHECK_THROWS_AS(rat_long(Rat(1, 2)), OrbError);
}
