#include <doctest.h>

#include "verify.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <string>

using namespace orb;
using nlohmann::json;

namespace {

Document load_corpus(const std::string& name) {
  return load_document(std::string(CORPUS_DIR) + "/" + name);
}

json corpus_json(const std::string& name) {
  std::ifstream in(std::string(CORPUS_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

int failures_for(const std::vector<CheckReport>& reps, const std::string& check) {
  int n = 0;
  for (const auto& r : reps)
    if (!r.pass && r.check == check) ++n;
  return n;
}

} // namespace

TEST_CASE("every datum passes the full suite in both theories") {
  const char* names[] = {"bg_z2.json", "bg_s3.json", "c2_z2.json",
                         "c2_z3.json", "kummer.json", "signs_z2.json"};
  for (const char* n : names) {
    INFO(n);
    Document doc = load_corpus(n);
    auto reps = run_suites(*doc.datum, true, true, SUITE_ALL);
    CHECK(count_failures(reps) == 0);
    std::set<std::string> seen;
    for (const auto& r : reps) seen.insert(r.check);
    for (const char* c : {"eq6", "eq1", "assoc(chow)", "assoc(k)", "comm(chow)", "comm(k)",
                          "comm_inv(chow)", "comm_inv(k)", "chern", "rank", "grading"}) {
      INFO(c);
      CHECK(seen.count(c) == 1);
    }
  }
}

TEST_CASE("suite masking and theory selection") {
  Document doc = load_corpus("bg_z2.json");
  auto reps = run_suites(*doc.datum, true, false, SUITE_ASSOC);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].check == "assoc(chow)");
  CHECK(reps[0].pass);

  auto both = run_suites(*doc.datum, true, true, SUITE_ASSOC | SUITE_COMM);
  std::set<std::string> seen;
  for (const auto& r : both) seen.insert(r.check);
  CHECK(seen == std::set<std::string>{"assoc(chow)", "assoc(k)", "comm(chow)", "comm(k)",
                                      "comm_inv(chow)", "comm_inv(k)"});
}

TEST_CASE("reflection identity catches a rescaled eigenvalue the wiring checks miss") {
  json doc = corpus_json("c2_z2.json");
  doc["eigen"][0]["entries"][0]["alpha"] = "1/4";
  Document loaded = load_document_text(doc.dump(), "doctored");
  CHECK(count_failures(validate(loaded)) == 0);
  auto reps = run_suites(*loaded.datum, true, true, SUITE_EQ6 | SUITE_EQ1);
  CHECK(failures_for(reps, "eq6") > 0);
  CHECK(failures_for(reps, "eq1") > 0);
}

TEST_CASE("rank check catches a fractional obstruction") {
  json doc = corpus_json("c2_z3.json");
  doc["eigen"][0]["entries"][0]["alpha"] = "5/12";
  Document loaded = load_document_text(doc.dump(), "doctored");
  CHECK(count_failures(validate(loaded)) == 0);
  auto reps = run_suites(*loaded.datum, true, true, SUITE_RANK);
  CHECK(failures_for(reps, "rank") > 0);
}

TEST_CASE("a perturbed triple normal class is a wiring failure") {
  json doc = corpus_json("c2_z3.json");
  bool hit = false;
  for (auto& n : doc["normal"])
    if (!hit && n["sector"].size() == 3) {
      n["lines"][0][1] = "3";
      hit = true;
    }
  REQUIRE(hit);
  Document loaded = load_document_text(doc.dump(), "doctored");
  CHECK(failures_for(validate(loaded), "normal_rank") > 0);
  // the triple normal enters both sides of the excess identity, so it
  // cancels there; the rank check is the detector
  auto reps = run_suites(*loaded.datum, true, true, SUITE_EQ1);
  CHECK(failures_for(reps, "eq1") == 0);
}

TEST_CASE("missing triple data is a reported failure, not a silent skip") {
  SUBCASE("one tuple dropped") {
    json doc = corpus_json("bg_z2.json");
    auto drop = [](json& arr) {
      for (auto it = arr.begin(); it != arr.end();) {
        const auto& g = (*it)["g"];
        if (g[0].get<int>() == 1 && g[1].get<int>() == 1 && g[2].get<int>() == 1)
          it = arr.erase(it);
        else
          ++it;
      }
    };
    drop(doc["triple_sectors"]);
    drop(doc["correspondences"]["triple"]);
    Document loaded = load_document_text(doc.dump(), "doctored");
    auto reps = check_eq1(*loaded.datum);
    CHECK(failures_for(reps, "eq1") > 0);
  }
  SUBCASE("whole triple block dropped") {
    json doc = corpus_json("bg_z2.json");
    doc.erase("triple_sectors");
    doc["correspondences"].erase("triple");
    Document loaded = load_document_text(doc.dump(), "doctored");
    CHECK(count_failures(validate(loaded)) == 0);
    auto reps = run_suites(*loaded.datum, true, true, SUITE_EQ1);
    REQUIRE(reps.size() == 8); // one report per group-element triple
    for (const auto& r : reps) {
      CHECK_FALSE(r.pass);
      CHECK(r.detail.find("no triple-sector data") != std::string::npos);
    }
  }
}

TEST_CASE("associativity sees a rescaled pushforward") {
  json doc = corpus_json("bg_z2.json");
  for (auto& d : doc["correspondences"]["double"]) {
    const auto& g = d["g"];
    if (g[0].get<int>() == 0 && g[1].get<int>() == 0) d["mu"]["pushforward"] = json::array({json::array({"2"})});
  }
  Document loaded = load_document_text(doc.dump(), "doctored");
  CHECK(count_failures(validate(loaded)) == 0);
  auto reps = run_suites(*loaded.datum, true, false, SUITE_ASSOC);
  CHECK(failures_for(reps, "assoc(chow)") > 0);
}

TEST_CASE("commutation check sees a one-sided action twist") {
  json doc = corpus_json("signs_z2.json");
  // make the involution act by -1 on the twisted line so x * y and the
  // translated y * x disagree in sign
  for (auto& blk : doc["gaction"])
    for (auto& m : blk["maps"])
      if (m["g"].get<int>() == 1) m["matrix"] = json::array({json::array({"-1", "0"}), json::array({"0", "-1"})});
  Document loaded = load_document_text(doc.dump(), "doctored");
  auto reps = run_suites(*loaded.datum, true, false, SUITE_COMM);
  CHECK(count_failures(reps) > 0);
}
