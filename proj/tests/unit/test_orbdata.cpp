#include <doctest.h>

#include "error.hpp"
#include "orbdata.hpp"
#include "report.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>

using namespace orb;
using nlohmann::json;

namespace {

std::string corpus_path(const std::string& name) {
  return std::string(CORPUS_DIR) + "/" + name;
}

json corpus_json(const std::string& name) {
  std::ifstream in(corpus_path(name));
  REQUIRE(in.good());
  return json::parse(in);
}

Document load_json(const json& j) { return load_document_text(j.dump(), "doctored"); }

bool has_failure(const std::vector<CheckReport>& reps, const std::string& check) {
  for (const auto& r : reps)
    if (!r.pass && r.check == check) return true;
  return false;
}

} // namespace

TEST_CASE("every corpus document loads and validates cleanly") {
  const char* names[] = {"bg_z2.json",  "bg_s3.json",           "c2_z2.json",
                         "c2_z3.json",  "kummer.json",          "signs_z2.json",
                         "kummer_resolution.json", "kummer_iso.json"};
  for (const char* n : names) {
    INFO(n);
    Document doc = load_document(corpus_path(n));
    auto reps = validate(doc);
    CHECK(count_failures(reps) == 0);
  }
}

TEST_CASE("document block inventory") {
  Document kum = load_document(corpus_path("kummer.json"));
  CHECK(kum.datum.has_value());
  CHECK_FALSE(kum.resolution.has_value());
  CHECK_FALSE(kum.skeleton.has_value());

  Document res = load_document(corpus_path("kummer_resolution.json"));
  CHECK_FALSE(res.datum.has_value());
  REQUIRE(res.resolution.has_value());
  CHECK(res.resolution->alg.basis.size() == 24);
  REQUIRE(res.resolution->integral.has_value());
  CHECK(res.resolution->integral->size() == 24);
  CHECK(res.resolution->integral->back() == 1);

  Document iso = load_document(corpus_path("kummer_iso.json"));
  CHECK_FALSE(iso.datum.has_value());
  REQUIRE(iso.skeleton.has_value());
  CHECK(iso.skeleton->pairs.size() == 24);
  int scalable = 0;
  for (const auto& p : iso.skeleton->pairs) scalable += p.scalable ? 1 : 0;
  CHECK(scalable == 16);
}

TEST_CASE("cyclic cone datum wiring") {
  Document doc = load_document(corpus_path("c2_z3.json"));
  REQUIRE(doc.datum.has_value());
  const OrbifoldDatum& d = *doc.datum;

  CHECK(d.group.order == 3);
  CHECK(d.group.times(1, 2) == 0);
  CHECK(d.group.inverse(1) == 2);
  CHECK(d.ambient_dim() == 2);

  const SingleSector& fix = d.single(1, 0);
  CHECK(fix.dim == 0);
  CHECK(fix.sigma_comp == 0);
  REQUIRE(fix.eigen.size() == 2);
  CHECK(fix.eigen[0].alpha == Rat(1, 3));
  CHECK(fix.eigen[1].alpha == Rat(2, 3));
  CHECK(fix.eigen[0].lines.rank() == 1);
  CHECK(fix.normal.rank() == 2);

  CHECK(d.double_declared(1, 2));
  const auto* pair = d.double_comps(1, 2);
  REQUIRE(pair != nullptr);
  REQUIRE(pair->size() == 1);
  const DoubleSector& ds = (*pair)[0];
  CHECK(ds.mu_push.kind == MapKind::pushforward);
  CHECK(ds.mu_push.shift == 2);
  CHECK(ds.e1.kind == MapKind::pullback);
  CHECK(ds.mu_comp == 0);

  CHECK(d.has_triple_block);
  CHECK(d.triple_declared(1, 1, 1));
  CHECK(d.action.size() == 3);

  CHECK(component_label(1, 0) == "g1c0");
  CHECK(component_label(0, 2) == "g0c2");
}

TEST_CASE("load errors carry their type") {
  CHECK_THROWS_AS(load_document(corpus_path("no_such_file.json")), OrbIoError);
  CHECK_THROWS_AS(load_document_text("not json at all", "t"), OrbParseError);
  CHECK_THROWS_AS(load_document_text("[1, 2]", "t"), OrbError);
  CHECK_THROWS_AS(load_document_text("{}", "t"), OrbError);
}

TEST_CASE("schema violations are rejected with a path") {
  json doc = corpus_json("c2_z2.json");

  SUBCASE("missing group block") {
    doc.erase("group");
    CHECK_THROWS_AS(load_json(doc), OrbError);
  }
  SUBCASE("sector references an unknown group element") {
    doc["sectors"][1]["g"] = 7;
    CHECK_THROWS_AS(load_json(doc), OrbError);
  }
  SUBCASE("malformed rational in an eigen exponent") {
    doc["eigen"][0]["entries"][0]["alpha"] = "1/0";
    CHECK_THROWS_AS(load_json(doc), OrbError);
  }
  SUBCASE("matrix with the wrong shape") {
    doc["correspondences"]["double"][0]["e1"]["matrix"] = json::array({json::array({"1", "0"})});
    CHECK_THROWS_AS(load_json(doc), OrbError);
  }
}

TEST_CASE("validate reports a dropped pair sector as a coverage failure") {
  json doc = corpus_json("bg_z2.json");
  auto drop_pair = [](json& arr, int a, int b) {
    for (auto it = arr.begin(); it != arr.end();) {
      const auto& g = (*it)["g"];
      if (g[0].get<int>() == a && g[1].get<int>() == b)
        it = arr.erase(it);
      else
        ++it;
    }
  };
  drop_pair(doc["double_sectors"], 1, 1);
  drop_pair(doc["correspondences"]["double"], 1, 1);
  // the triple level references pair sectors, so drop it along with the pair
  doc.erase("triple_sectors");
  doc["correspondences"].erase("triple");
  Document loaded = load_json(doc);
  auto reps = validate(loaded);
  CHECK(count_failures(reps) > 0);
  CHECK(has_failure(reps, "pair_coverage"));
}

TEST_CASE("validate catches broken wiring") {
  SUBCASE("non-involutive inversion map") {
    json doc = corpus_json("c2_z3.json");
    doc["correspondences"]["sigma"][1]["matrix"][0][0] = "2";
    Document loaded = load_json(doc);
    auto reps = validate(loaded);
    CHECK(has_failure(reps, "sigma"));
  }
  SUBCASE("eigen exponent outside the open unit interval") {
    json doc = corpus_json("c2_z3.json");
    doc["eigen"][0]["entries"][0]["alpha"] = "4/3";
    Document loaded = load_json(doc);
    auto reps = validate(loaded);
    CHECK(has_failure(reps, "eigen"));
  }
  SUBCASE("eigen multiplicities no longer exhaust the normal class") {
    json doc = corpus_json("c2_z3.json");
    doc["eigen"][0]["entries"][0]["lines"][0][1] = "2";
    Document loaded = load_json(doc);
    auto reps = validate(loaded);
    CHECK(has_failure(reps, "eigen"));
  }
  SUBCASE("normal-class rank away from the codimension") {
    json doc = corpus_json("c2_z3.json");
    doc["normal"][0]["lines"][0][1] = "3";
    Document loaded = load_json(doc);
    auto reps = validate(loaded);
    CHECK(has_failure(reps, "normal_rank"));
  }
  SUBCASE("group action map that is not an algebra map") {
    json doc = corpus_json("signs_z2.json");
    // action of the involution on the big sector: make it kill the unit
    for (auto& blk : doc["gaction"])
      for (auto& m : blk["maps"])
        if (m["g"].get<int>() == 0) m["matrix"][0][0] = "0";
    Document loaded = load_json(doc);
    auto reps = validate(loaded);
    CHECK(count_failures(reps) > 0);
  }
}

TEST_CASE("declared-empty bookkeeping survives a round trip") {
  Document doc = load_document(corpus_path("c2_z3.json"));
  const OrbifoldDatum& d = *doc.datum;
  // all nine pairs and twenty-seven triples of a |G| = 3 datum are accounted for
  int declared = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (d.double_declared(a, b)) ++declared;
  CHECK(declared == 9);
  int triples = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (d.triple_declared(a, b, c)) ++triples;
  CHECK(triples == 27);
}
