#include "orbifold.h"

#include "error.hpp"
#include "hkr.hpp"
#include "orbdata.hpp"
#include "render.hpp"
#include "report.hpp"
#include "stringy.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct orb_datum {
  orb::Document doc;
};

namespace {

thread_local std::string g_last_error;

orb_status set_error(orb_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
orb_status wrap(F&& body) {
  try {
    return body();
  } catch (const orb::OrbIoError& e) {
    return set_error(ORB_ERR_IO, e.what());
  } catch (const orb::OrbParseError& e) {
    return set_error(ORB_ERR_PARSE, e.what());
  } catch (const orb::OrbError& e) {
    return set_error(ORB_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return set_error(ORB_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(ORB_ERR_INTERNAL, "unknown failure");
  }
}

orb_status need_datum(orb_datum* d, const orb::OrbifoldDatum** out) {
  if (!d) return set_error(ORB_ERR_ARG, "null document handle");
  if (!d->doc.datum) return set_error(ORB_ERR_ARG, "document carries no sector data");
  *out = &*d->doc.datum;
  return ORB_OK;
}

bool theory_flags(orb_theory t, bool allow_both, bool* chow, bool* k) {
  switch (t) {
    case ORB_THEORY_CHOW: *chow = true; *k = false; return true;
    case ORB_THEORY_K: *chow = false; *k = true; return true;
    case ORB_THEORY_BOTH:
      if (!allow_both) return false;
      *chow = true; *k = true; return true;
  }
  return false;
}

orb_status emit(char** slot, const std::string& text) {
  *slot = dup_string(text);
  if (!*slot) return set_error(ORB_ERR_INTERNAL, "out of memory");
  return ORB_OK;
}

} // namespace

extern "C" {

const char* orb_last_error(void) { return g_last_error.c_str(); }

orb_status orb_load(const char* path, orb_datum** out) {
  if (!path || !out) return set_error(ORB_ERR_ARG, "null argument");
  *out = nullptr;
  return wrap([&]() -> orb_status {
    auto* d = new orb_datum{orb::load_document(path)};
    *out = d;
    return ORB_OK;
  });
}

orb_status orb_load_string(const char* text, const char* label, orb_datum** out) {
  if (!text || !out) return set_error(ORB_ERR_ARG, "null argument");
  *out = nullptr;
  return wrap([&]() -> orb_status {
    auto* d = new orb_datum{orb::load_document_text(text, label ? label : "<string>")};
    *out = d;
    return ORB_OK;
  });
}

void orb_free(orb_datum* d) { delete d; }

void orb_string_free(char* s) { std::free(s); }

orb_status orb_validate(orb_datum* d, int json, char** report, int* failures) {
  if (!d || !report) return set_error(ORB_ERR_ARG, "null argument");
  return wrap([&]() -> orb_status {
    std::vector<orb::CheckReport> reports = orb::validate(d->doc);
    if (failures) *failures = orb::count_failures(reports);
    return emit(report, json ? orb::reports_json(reports) : orb::reports_text(reports));
  });
}

orb_status orb_check(orb_datum* d, orb_theory theory, unsigned suites, int json, char** report, int* failures) {
  if (!report) return set_error(ORB_ERR_ARG, "null argument");
  const orb::OrbifoldDatum* datum = nullptr;
  orb_status st = need_datum(d, &datum);
  if (st != ORB_OK) return st;
  bool chow = false, k = false;
  if (!theory_flags(theory, true, &chow, &k)) return set_error(ORB_ERR_ARG, "bad theory selector");
  if ((suites & ORB_SUITE_ALL) == 0) return set_error(ORB_ERR_ARG, "empty suite mask");
  return wrap([&]() -> orb_status {
    std::vector<orb::CheckReport> reports = orb::run_suites(*datum, chow, k, suites);
    if (failures) *failures = orb::count_failures(reports);
    return emit(report, json ? orb::reports_json(reports) : orb::reports_text(reports));
  });
}

orb_status orb_table(orb_datum* d, orb_theory theory, int invariant_only, int json, char** out) {
  if (!out) return set_error(ORB_ERR_ARG, "null argument");
  const orb::OrbifoldDatum* datum = nullptr;
  orb_status st = need_datum(d, &datum);
  if (st != ORB_OK) return st;
  bool chow = false, k = false;
  if (!theory_flags(theory, false, &chow, &k)) return set_error(ORB_ERR_ARG, "tables need a single theory");
  orb::Theory t = chow ? orb::Theory::chow : orb::Theory::k;
  return wrap([&]() -> orb_status {
    orb::StringySpace sp = orb::stringy_space(*datum);
    orb::ProductTable tab = orb::product_table(sp, t, invariant_only != 0);
    return emit(out, json ? orb::table_json(sp, tab, t) : orb::table_text(sp, tab, t));
  });
}

orb_status orb_ages(orb_datum* d, int json, char** out) {
  if (!out) return set_error(ORB_ERR_ARG, "null argument");
  const orb::OrbifoldDatum* datum = nullptr;
  orb_status st = need_datum(d, &datum);
  if (st != ORB_OK) return st;
  return wrap([&]() -> orb_status { return emit(out, json ? orb::ages_json(*datum) : orb::ages_text(*datum)); });
}

orb_status orb_compare(orb_datum* orbifold, orb_datum* resolution, orb_datum* matching, orb_theory theory, int json,
                       char** report, int* verdict) {
  if (!report) return set_error(ORB_ERR_ARG, "null argument");
  const orb::OrbifoldDatum* datum = nullptr;
  orb_status st = need_datum(orbifold, &datum);
  if (st != ORB_OK) return st;
  if (!resolution || !resolution->doc.resolution)
    return set_error(ORB_ERR_ARG, "second document carries no resolution presentation");
  if (matching && !matching->doc.skeleton) return set_error(ORB_ERR_ARG, "matching document carries no basis matching");
  bool chow = false, k = false;
  if (!theory_flags(theory, false, &chow, &k)) return set_error(ORB_ERR_ARG, "comparisons need a single theory");
  orb::Theory t = chow ? orb::Theory::chow : orb::Theory::k;
  return wrap([&]() -> orb_status {
    const orb::Resolution& res = *resolution->doc.resolution;
    orb::StringySpace sp = orb::stringy_space(*datum);
    std::vector<orb::CheckReport> reports;
    std::optional<orb::ScalingResult> scalings;
    if (matching) {
      reports = orb::check_iso(sp, t, res, matching->doc.skeleton.value());
      scalings = orb::solve_scalings(sp, t, res, matching->doc.skeleton.value());
    } else {
      reports.push_back(orb::compare_graded_dims(sp, res));
    }
    if (verdict) *verdict = orb::count_failures(reports) == 0 ? 1 : 0;
    return emit(report, json ? orb::compare_json(reports, scalings) : orb::compare_text(reports, scalings));
  });
}

orb_status orb_group_order(orb_datum* d, int* out) {
  if (!out) return set_error(ORB_ERR_ARG, "null argument");
  const orb::OrbifoldDatum* datum = nullptr;
  orb_status st = need_datum(d, &datum);
  if (st != ORB_OK) return st;
  *out = datum->group.order;
  return ORB_OK;
}

orb_status orb_age_of(orb_datum* d, int g, int comp, char** out) {
  if (!out) return set_error(ORB_ERR_ARG, "null argument");
  const orb::OrbifoldDatum* datum = nullptr;
  orb_status st = need_datum(d, &datum);
  if (st != ORB_OK) return st;
  return wrap([&]() -> orb_status {
    if (g < 0 || g >= datum->group.order ||
        comp < 0 || comp >= static_cast<int>(datum->singles[static_cast<std::size_t>(g)].size()))
      return set_error(ORB_ERR_ARG, "no such sector component");
    return emit(out, orb::rat_str(orb::sector_age(datum->single(g, comp))));
  });
}

orb_status orb_obstruction_rank(orb_datum* d, int g1, int g2, int comp, char** out) {
  if (!out) return set_error(ORB_ERR_ARG, "null argument");
  const orb::OrbifoldDatum* datum = nullptr;
  orb_status st = need_datum(d, &datum);
  if (st != ORB_OK) return st;
  return wrap([&]() -> orb_status {
    const auto* comps = datum->double_comps(g1, g2);
    if (!comps || comp < 0 || comp >= static_cast<int>(comps->size()))
      return set_error(ORB_ERR_ARG, "no such pair-sector component");
    return emit(out, orb::rat_str(orb::obstruction(*datum, (*comps)[static_cast<std::size_t>(comp)]).rank()));
  });
}

} // extern "C"
