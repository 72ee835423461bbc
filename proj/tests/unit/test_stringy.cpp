#include <doctest.h>

#include "error.hpp"
#include "stringy.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>

using namespace orb;
using nlohmann::json;

namespace {

Document load_corpus(const std::string& name) {
  return load_document(std::string(CORPUS_DIR) + "/" + name);
}

int idx(const StringySpace& sp, const std::string& label) {
  int i = sp.find_label(label);
  REQUIRE(i >= 0);
  return i;
}

StringyVec unit_vec(const StringySpace& sp, int i) { return sv_basis(sp, i); }

const DoubleSector& pair_sector(const OrbifoldDatum& d, int a, int b, int comp = 0) {
  const auto* v = d.double_comps(a, b);
  REQUIRE(v != nullptr);
  return (*v)[static_cast<std::size_t>(comp)];
}

} // namespace

TEST_CASE("flat space layout and labels") {
  Document doc = load_corpus("kummer.json");
  StringySpace sp = stringy_space(*doc.datum);
  CHECK(sp.dim() == 24);
  CHECK(sp.offset_of(0, 0) == 0);
  CHECK(sp.offset_of(1, 0) == 8);
  CHECK(sp.offset_of(1, 15) == 23);
  CHECK(sp.label(7) == "g0c0:v");
  CHECK(sp.label(8) == "g1c0:1");
  CHECK(sp.find_label("g0c0:v") == 7);
  CHECK(sp.find_label("g9c0:1") == -1);
}

TEST_CASE("ages and stringy bidegrees") {
  SUBCASE("half eigenvalues at sixteen points") {
    Document doc = load_corpus("kummer.json");
    const OrbifoldDatum& d = *doc.datum;
    CHECK(sector_age(d.single(0, 0)) == 0);
    CHECK(sector_age(d.single(1, 3)) == 1);
    StringySpace sp = stringy_space(d);
    CHECK(stringy_bidegree(sp, 0) == std::pair<Rat, int>{Rat(0), 0});
    CHECK(stringy_bidegree(sp, 7) == std::pair<Rat, int>{Rat(2), 0});
    CHECK(stringy_bidegree(sp, 8) == std::pair<Rat, int>{Rat(1), 0}); // pure age
  }
  SUBCASE("third eigenvalues") {
    Document doc = load_corpus("c2_z3.json");
    const OrbifoldDatum& d = *doc.datum;
    CHECK(sector_age(d.single(1, 0)) == 1);
    CHECK(age_class(d.single(1, 0)).rank() == 1);
  }
  SUBCASE("fractional age and odd parity") {
    Document doc = load_corpus("signs_z2.json");
    StringySpace sp = stringy_space(*doc.datum);
    CHECK(sector_age(doc.datum->single(1, 0)) == Rat(1, 2));
    int t1 = idx(sp, "g0c0:t1");
    CHECK(stringy_parity(sp, t1) == 1);
    CHECK(stringy_bidegree(sp, t1) == std::pair<Rat, int>{Rat(1), 1});
    int e = idx(sp, "g1c0:1");
    CHECK(stringy_parity(sp, e) == 0);
    CHECK(stringy_bidegree(sp, e) == std::pair<Rat, int>{Rat(1, 2), 0});
    int q = idx(sp, "g1c0:q");
    CHECK(stringy_bidegree(sp, q) == std::pair<Rat, int>{Rat(3, 2), 0});
  }
}

TEST_CASE("obstruction classes of pair sectors") {
  SUBCASE("rank zero with cancelling halves") {
    Document doc = load_corpus("kummer.json");
    const OrbifoldDatum& d = *doc.datum;
    KClass r = obstruction(d, pair_sector(d, 1, 1, 5));
    CHECK(r.rank() == 0);
    CHECK(r.lines.empty());
  }
  SUBCASE("rank one on the cyclic cone of order three") {
    Document doc = load_corpus("c2_z3.json");
    const OrbifoldDatum& d = *doc.datum;
    CHECK(obstruction(d, pair_sector(d, 1, 1)).rank() == 1);
    CHECK(obstruction(d, pair_sector(d, 2, 2)).rank() == 1);
    CHECK(obstruction(d, pair_sector(d, 1, 2)).rank() == 0);
  }
  SUBCASE("rank zero on the cone of order two") {
    Document doc = load_corpus("c2_z2.json");
    const OrbifoldDatum& d = *doc.datum;
    CHECK(obstruction(d, pair_sector(d, 1, 1)).rank() == 0);
  }
}

TEST_CASE("product values on the involution surface") {
  Document doc = load_corpus("kummer.json");
  StringySpace sp = stringy_space(*doc.datum);
  int v = idx(sp, "g0c0:v");
  int t0 = idx(sp, "g1c0:1");
  int t5 = idx(sp, "g1c5:1");

  for (Theory t : {Theory::chow, Theory::k}) {
    INFO(theory_name(t));
    MulCache cache = build_mul_cache(sp, t);
    // unit
    StringyVec unit = unit_vec(sp, 0);
    CHECK(stringy_mul(cache, unit, sv_basis(sp, t0)) == sv_basis(sp, t0));
    // each exceptional point multiplies back into the point class of the
    // ambient sector, distinct points multiply to zero
    StringyVec sq = stringy_mul(cache, sv_basis(sp, t0), sv_basis(sp, t0));
    CHECK(sq == sv_basis(sp, v));
    StringyVec cross = stringy_mul(cache, sv_basis(sp, t0), sv_basis(sp, t5));
    CHECK(cross == sv_zero(sp));
  }
}

TEST_CASE("vanishing products forced by a rank-one obstruction") {
  Document doc = load_corpus("c2_z3.json");
  StringySpace sp = stringy_space(*doc.datum);
  int x1 = idx(sp, "g1c0:1");
  int x2 = idx(sp, "g2c0:1");
  for (Theory t : {Theory::chow, Theory::k}) {
    INFO(theory_name(t));
    MulCache cache = build_mul_cache(sp, t);
    CHECK(stringy_mul(cache, sv_basis(sp, x1), sv_basis(sp, x1)) == sv_zero(sp));
    // the complementary pair is unobstructed but the pushforward to the
    // two-dimensional ambient sector kills the point in its degree
    CHECK(stringy_mul(cache, sv_basis(sp, x1), sv_basis(sp, x2)) == sv_zero(sp));
  }
}

TEST_CASE("normalization difference between the two theories") {
  Document doc = load_corpus("signs_z2.json");
  StringySpace sp = stringy_space(*doc.datum);
  int e = idx(sp, "g1c0:1");
  int h = idx(sp, "g0c0:h");
  int w = idx(sp, "g0c0:w");
  int q = idx(sp, "g1c0:q");

  MulCache chow = build_mul_cache(sp, Theory::chow);
  CHECK(stringy_mul(chow, sv_basis(sp, e), sv_basis(sp, e)) == sv_basis(sp, h));
  CHECK(stringy_mul(chow, sv_basis(sp, h), sv_basis(sp, e)) == sv_basis(sp, q));

  MulCache k = build_mul_cache(sp, Theory::k);
  StringyVec ee = stringy_mul(k, sv_basis(sp, e), sv_basis(sp, e));
  StringyVec expect = sv_basis(sp, h);
  expect[static_cast<std::size_t>(w)] = Rat(-1);
  CHECK(ee == expect);
}

TEST_CASE("odd classes anticommute") {
  Document doc = load_corpus("signs_z2.json");
  StringySpace sp = stringy_space(*doc.datum);
  int t1 = idx(sp, "g0c0:t1");
  int t2 = idx(sp, "g0c0:t2");
  int kk = idx(sp, "g0c0:k");
  MulCache cache = build_mul_cache(sp, Theory::chow);
  StringyVec a = stringy_mul(cache, sv_basis(sp, t1), sv_basis(sp, t2));
  StringyVec b = stringy_mul(cache, sv_basis(sp, t2), sv_basis(sp, t1));
  CHECK(a == sv_basis(sp, kk));
  StringyVec neg = sv_zero(sp);
  neg[static_cast<std::size_t>(kk)] = Rat(-1);
  CHECK(b == neg);
}

TEST_CASE("group action on the total space") {
  Document doc = load_corpus("signs_z2.json");
  StringySpace sp = stringy_space(*doc.datum);
  int t1 = idx(sp, "g0c0:t1");
  int t2 = idx(sp, "g0c0:t2");
  int kk = idx(sp, "g0c0:k");
  CHECK(stringy_act(sp, 1, sv_basis(sp, t1)) == sv_basis(sp, t2));
  CHECK(stringy_act(sp, 1, sv_basis(sp, t2)) == sv_basis(sp, t1));
  StringyVec negk = sv_zero(sp);
  negk[static_cast<std::size_t>(kk)] = Rat(-1);
  CHECK(stringy_act(sp, 1, sv_basis(sp, kk)) == negk);
  CHECK(stringy_act(sp, 1, stringy_act(sp, 1, sv_basis(sp, kk))) == sv_basis(sp, kk));
  CHECK(stringy_act(sp, 0, sv_basis(sp, t1)) == sv_basis(sp, t1));
}

TEST_CASE("sector-wise chern twist") {
  Document doc = load_corpus("signs_z2.json");
  StringySpace sp = stringy_space(*doc.datum);
  int e = idx(sp, "g1c0:1");
  int q = idx(sp, "g1c0:q");
  StringyVec tw = stringy_chern(sp, sv_basis(sp, e));
  StringyVec expect = sv_basis(sp, e);
  expect[static_cast<std::size_t>(q)] = Rat(-1, 2);
  CHECK(tw == expect);
  // untwisted classes have trivial age, the twist fixes them
  CHECK(stringy_chern(sp, sv_basis(sp, 0)) == sv_basis(sp, 0));
}

TEST_CASE("invariant subspace dimensions") {
  auto dim_of = [](const std::string& name) {
    Document doc = load_document(std::string(CORPUS_DIR) + "/" + name);
    StringySpace sp = stringy_space(*doc.datum);
    return invariant_basis(sp).rows;
  };
  CHECK(dim_of("kummer.json") == 24);
  CHECK(dim_of("signs_z2.json") == 6);
  CHECK(dim_of("bg_s3.json") == 3);
  CHECK(dim_of("bg_z2.json") == 2);
}

TEST_CASE("invariant product table of the symmetric group classes") {
  Document doc = load_corpus("bg_s3.json");
  StringySpace sp = stringy_space(*doc.datum);
  ProductTable tab = product_table(sp, Theory::chow, true);
  REQUIRE(tab.labels.size() == 3);
  CHECK(tab.labels[0] == "inv0");
  // basis: identity, the three transpositions, the two rotations
  auto coeff = [&](int i, int j, int k) { return tab.coeffs[i][j][k]; };
  // square of the transposition class
  CHECK(coeff(1, 1, 0) == 3);
  CHECK(coeff(1, 1, 1) == 0);
  CHECK(coeff(1, 1, 2) == 3);
  // square of the rotation class
  CHECK(coeff(2, 2, 0) == 2);
  CHECK(coeff(2, 2, 1) == 0);
  CHECK(coeff(2, 2, 2) == 1);
  // mixed product
  CHECK(coeff(1, 2, 0) == 0);
  CHECK(coeff(1, 2, 1) == 2);
  CHECK(coeff(1, 2, 2) == 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(coeff(i, j, k) == coeff(j, i, k));
}

TEST_CASE("full table of a group ring matches the group") {
  Document doc = load_corpus("bg_s3.json");
  const OrbifoldDatum& d = *doc.datum;
  StringySpace sp = stringy_space(d);
  ProductTable tab = product_table(sp, Theory::k, false);
  REQUIRE(static_cast<int>(tab.labels.size()) == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        CHECK(tab.coeffs[i][j][k] == (k == d.group.times(i, j) ? 1 : 0));
}

TEST_CASE("products over an undeclared pair are refused") {
  std::ifstream in(std::string(CORPUS_DIR) + "/bg_z2.json");
  REQUIRE(in.good());
  json doc = json::parse(in);
  auto drop_pair = [](json& arr) {
    for (auto it = arr.begin(); it != arr.end();) {
      const auto& g = (*it)["g"];
      if (g[0].get<int>() == 1 && g[1].get<int>() == 1)
        it = arr.erase(it);
      else
        ++it;
    }
  };
  drop_pair(doc["double_sectors"]);
  drop_pair(doc["correspondences"]["double"]);
  doc.erase("triple_sectors");
  doc["correspondences"].erase("triple");
  Document loaded = load_document_text(doc.dump(), "doctored");
  StringySpace sp = stringy_space(*loaded.datum);
  MulCache cache = build_mul_cache(sp, Theory::chow);
  int t = idx(sp, "g1c0:1");
  CHECK(stringy_mul(cache, sv_basis(sp, 0), sv_basis(sp, t)) == sv_basis(sp, t));
  CHECK_THROWS_AS(stringy_mul(cache, sv_basis(sp, t), sv_basis(sp, t)), OrbError);
}
