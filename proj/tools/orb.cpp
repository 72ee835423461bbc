// Command-line front end: check, table, ages, compare. Exit code 0 when all
// requested checks pass, 1 when a check fails, 2 when a document cannot be
// loaded or fails structural validation.
#include <orbifold.h>

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <memory>
#include <string>

namespace {

struct DatumDeleter {
  void operator()(orb_datum* d) const { orb_free(d); }
};
using DatumPtr = std::unique_ptr<orb_datum, DatumDeleter>;

struct StringDeleter {
  void operator()(char* s) const { orb_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

DatumPtr load_or_die(const std::string& path) {
  orb_datum* d = nullptr;
  if (orb_load(path.c_str(), &d) != ORB_OK) {
    std::fprintf(stderr, "error: %s\n", orb_last_error());
    std::exit(2);
  }
  return DatumPtr(d);
}

orb_theory parse_theory(const std::string& name) {
  if (name == "chow") return ORB_THEORY_CHOW;
  if (name == "k") return ORB_THEORY_K;
  return ORB_THEORY_BOTH;
}

unsigned parse_suite(const std::string& name) {
  static const std::map<std::string, unsigned> suites{
      {"all", ORB_SUITE_ALL},     {"eq6", ORB_SUITE_EQ6},   {"eq1", ORB_SUITE_EQ1},
      {"assoc", ORB_SUITE_ASSOC}, {"comm", ORB_SUITE_COMM}, {"chern", ORB_SUITE_CHERN},
      {"rank", ORB_SUITE_RANK},
  };
  return suites.at(name);
}

int die_on_status(orb_status) {
  std::fprintf(stderr, "error: %s\n", orb_last_error());
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twisted-sector product engine"};
  app.require_subcommand(1);

  std::string path, theory = "both", suite = "all";
  bool json = false, invariant_only = false;

  auto* check = app.add_subcommand("check", "validate a document and run the identity suites");
  check->add_option("path", path)->required();
  check->add_option("--theory", theory)->check(CLI::IsMember({"chow", "k", "both"}));
  check->add_option("--suite", suite)->check(CLI::IsMember({"all", "eq6", "eq1", "assoc", "comm", "chern", "rank"}));
  check->add_flag("--json", json);

  std::string table_theory = "chow";
  auto* table = app.add_subcommand("table", "print the multiplication table");
  table->add_option("path", path)->required();
  table->add_option("--theory", table_theory)->check(CLI::IsMember({"chow", "k"}));
  table->add_flag("--invariant-only", invariant_only);
  table->add_flag("--json", json);

  auto* ages = app.add_subcommand("ages", "print sector dimensions and ages");
  ages->add_option("path", path)->required();
  ages->add_flag("--json", json);

  std::string res_path, map_path, cmp_theory = "chow";
  auto* compare = app.add_subcommand("compare", "compare the invariant ring with a resolution presentation");
  compare->add_option("orbifold", path)->required();
  compare->add_option("resolution", res_path)->required();
  compare->add_option("--map", map_path);
  compare->add_option("--theory", cmp_theory)->check(CLI::IsMember({"chow", "k"}));
  compare->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  if (*check) {
    DatumPtr d = load_or_die(path);
    char* report = nullptr;
    int failures = 0;
    orb_status st = orb_validate(d.get(), json ? 1 : 0, &report, &failures);
    if (st != ORB_OK) return die_on_status(st);
    StringPtr vrep(report);
    if (failures > 0) {
      std::fputs(vrep.get(), stdout);
      std::fprintf(stderr, "error: document fails validation\n");
      return 2;
    }
    if (!json) std::printf("validation: ok\n");
    report = nullptr;
    st = orb_check(d.get(), parse_theory(theory), parse_suite(suite), json ? 1 : 0, &report, &failures);
    if (st != ORB_OK) return die_on_status(st);
    StringPtr crep(report);
    std::fputs(crep.get(), stdout);
    return failures > 0 ? 1 : 0;
  }

  if (*table) {
    DatumPtr d = load_or_die(path);
    char* out = nullptr;
    orb_status st = orb_table(d.get(), parse_theory(table_theory), invariant_only ? 1 : 0, json ? 1 : 0, &out);
    if (st != ORB_OK) return die_on_status(st);
    StringPtr rep(out);
    std::fputs(rep.get(), stdout);
    return 0;
  }

  if (*ages) {
    DatumPtr d = load_or_die(path);
    char* out = nullptr;
    orb_status st = orb_ages(d.get(), json ? 1 : 0, &out);
    if (st != ORB_OK) return die_on_status(st);
    StringPtr rep(out);
    std::fputs(rep.get(), stdout);
    return 0;
  }

  if (*compare) {
    DatumPtr d = load_or_die(path);
    DatumPtr r = load_or_die(res_path);
    DatumPtr m;
    if (!map_path.empty()) m = load_or_die(map_path);
    char* report = nullptr;
    int verdict = 0;
    orb_status st =
        orb_compare(d.get(), r.get(), m.get(), parse_theory(cmp_theory), json ? 1 : 0, &report, &verdict);
    if (st != ORB_OK) return die_on_status(st);
    StringPtr rep(report);
    std::fputs(rep.get(), stdout);
    return verdict ? 0 : 1;
  }

  return 0;
}
