#include <doctest.h>

#include "hkr.hpp"

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

} // namespace

TEST_CASE("graded dimensions of the invariant space") {
  SUBCASE("involution surface with sixteen points") {
    Document doc = load_corpus("kummer.json");
    StringySpace sp = stringy_space(*doc.datum);
    auto dims = stringy_graded_dims(sp);
    std::map<std::pair<Rat, int>, int> expect{
        {{Rat(0), 0}, 1}, {{Rat(1), 0}, 22}, {{Rat(2), 0}, 1}};
    CHECK(dims == expect);
  }
  SUBCASE("fractional degrees and an odd class") {
    Document doc = load_corpus("signs_z2.json");
    StringySpace sp = stringy_space(*doc.datum);
    auto dims = stringy_graded_dims(sp);
    std::map<std::pair<Rat, int>, int> expect{
        {{Rat(0), 0}, 1},     {{Rat(1, 2), 0}, 1}, {{Rat(1), 0}, 1},
        {{Rat(1), 1}, 1},     {{Rat(3, 2), 0}, 1}, {{Rat(2), 0}, 1}};
    CHECK(dims == expect);
  }
}

TEST_CASE("graded dimensions of a presented resolution") {
  Document doc = load_corpus("kummer_resolution.json");
  auto dims = resolution_graded_dims(*doc.resolution);
  std::map<std::pair<Rat, int>, int> expect{
      {{Rat(0), 0}, 1}, {{Rat(1), 0}, 22}, {{Rat(2), 0}, 1}};
  CHECK(dims == expect);
}

TEST_CASE("graded dimension comparison") {
  Document orb_doc = load_corpus("kummer.json");
  Document res_doc = load_corpus("kummer_resolution.json");
  StringySpace sp = stringy_space(*orb_doc.datum);

  CheckReport ok = compare_graded_dims(sp, *res_doc.resolution);
  CHECK(ok.pass);

  Document other = load_corpus("signs_z2.json");
  StringySpace other_sp = stringy_space(*other.datum);
  CheckReport bad = compare_graded_dims(other_sp, *res_doc.resolution);
  CHECK_FALSE(bad.pass);
  CHECK(!bad.detail.empty());
}

TEST_CASE("scaling squares of the exceptional matching") {
  Document orb_doc = load_corpus("kummer.json");
  Document res_doc = load_corpus("kummer_resolution.json");
  Document iso_doc = load_corpus("kummer_iso.json");
  StringySpace sp = stringy_space(*orb_doc.datum);

  for (Theory t : {Theory::k, Theory::chow}) {
    INFO(theory_name(t));
    ScalingResult r = solve_scalings(sp, t, *res_doc.resolution, *iso_doc.skeleton);
    CHECK(r.status == ScalingStatus::consistent);
    CHECK(r.witness.empty());
    REQUIRE(r.squares.size() == 16);
    for (const auto& [label, sq] : r.squares) {
      INFO(label);
      REQUIRE(sq.has_value());
      CHECK(*sq == Rat(-1, 2));
    }
  }
}

TEST_CASE("an unscalable exceptional pair is reported inconsistent") {
  Document orb_doc = load_corpus("kummer.json");
  Document res_doc = load_corpus("kummer_resolution.json");
  json iso = corpus_json("kummer_iso.json");
  // pin one exceptional matching to scale one; its square product then has
  // ratio -1/2 with no free unknown left
  for (auto& p : iso["iso_skeleton"]["pairs"])
    if (p["orb"] == "g1c3:1") p.erase("scalable");
  Document iso_doc = load_document_text(iso.dump(), "doctored");
  StringySpace sp = stringy_space(*orb_doc.datum);
  ScalingResult r = solve_scalings(sp, Theory::k, *res_doc.resolution, *iso_doc.skeleton);
  CHECK(r.status == ScalingStatus::inconsistent);
  CHECK(!r.witness.empty());
}

TEST_CASE("full matching check on the sixteen-point quotient") {
  Document orb_doc = load_corpus("kummer.json");
  Document res_doc = load_corpus("kummer_resolution.json");
  Document iso_doc = load_corpus("kummer_iso.json");
  StringySpace sp = stringy_space(*orb_doc.datum);
  auto reps = check_iso(sp, Theory::k, *res_doc.resolution, *iso_doc.skeleton);
  CHECK(count_failures(reps) == 0);
  std::set<std::string> seen;
  for (const auto& r : reps) seen.insert(r.check);
  for (const char* c : {"iso_labels", "iso_invariance", "iso_unit", "iso_scalings", "graded_dims"}) {
    INFO(c);
    CHECK(seen.count(c) == 1);
  }
}

TEST_CASE("matching structural failures") {
  Document orb_doc = load_corpus("kummer.json");
  Document res_doc = load_corpus("kummer_resolution.json");
  StringySpace sp = stringy_space(*orb_doc.datum);

  auto fails = [&](const json& iso, const std::string& check) {
    Document iso_doc = load_document_text(iso.dump(), "doctored");
    auto reps = check_iso(sp, Theory::k, *res_doc.resolution, *iso_doc.skeleton);
    for (const auto& r : reps)
      if (!r.pass && r.check == check) return true;
    return false;
  };

  SUBCASE("unknown label on the quotient side") {
    json iso = corpus_json("kummer_iso.json");
    iso["iso_skeleton"]["pairs"][1]["orb"] = "g0c0:zz";
    CHECK(fails(iso, "iso_labels"));
  }
  SUBCASE("unknown name on the resolution side") {
    json iso = corpus_json("kummer_iso.json");
    iso["iso_skeleton"]["pairs"][1]["res"] = "zz";
    CHECK(fails(iso, "iso_labels"));
  }
  SUBCASE("duplicate resolution target") {
    json iso = corpus_json("kummer_iso.json");
    iso["iso_skeleton"]["pairs"][1]["res"] = "1";
    CHECK(fails(iso, "iso_labels"));
  }
  SUBCASE("dropped pair breaks the spanning requirement") {
    json iso = corpus_json("kummer_iso.json");
    auto& pairs = iso["iso_skeleton"]["pairs"];
    pairs.erase(pairs.begin() + 2);
    Document iso_doc = load_document_text(iso.dump(), "doctored");
    auto reps = check_iso(sp, Theory::k, *res_doc.resolution, *iso_doc.skeleton);
    CHECK(count_failures(reps) > 0);
  }
}
