#include "render.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace orb {

namespace {

using nlohmann::json;

std::string vec_str(const std::vector<std::string>& labels, const std::vector<Rat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rat_str(v[i]) + "*" + labels[i];
  }
  return out.empty() ? "0" : out;
}

json vec_json(const std::vector<std::string>& labels, const std::vector<Rat>& v) {
  json arr = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) arr.push_back(json::array({labels[i], rat_str(v[i])}));
  return arr;
}

json reports_json_array(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json o{{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}};
    if (!r.pass) o["detail"] = r.detail;
    arr.push_back(std::move(o));
  }
  return arr;
}

json scalings_json(const ScalingResult& s) {
  json o;
  o["status"] = s.status == ScalingStatus::consistent ? "consistent" : "inconsistent";
  if (s.status == ScalingStatus::inconsistent) o["witness"] = s.witness;
  json sq = json::object();
  for (const auto& [label, val] : s.squares) sq[label] = val ? json(rat_str(*val)) : json(nullptr);
  o["squares"] = std::move(sq);
  return o;
}

} // namespace

std::string table_text(const StringySpace& sp, const ProductTable& t, Theory theory) {
  std::ostringstream out;
  int n = static_cast<int>(t.labels.size());
  out << "theory: " << theory_name(theory) << "\n";
  if (t.vectors.empty()) {
    out << "basis (" << n << "):\n";
    for (int i = 0; i < n; ++i) {
      auto [p, nn] = stringy_bidegree(sp, i);
      out << "  " << t.labels[static_cast<std::size_t>(i)] << "  deg " << rat_str(p) << "  n " << nn << "\n";
    }
  } else {
    std::vector<std::string> flat;
    for (int i = 0; i < sp.dim(); ++i) flat.push_back(sp.label(i));
    out << "invariant basis (" << n << "):\n";
    for (int i = 0; i < n; ++i)
      out << "  " << t.labels[static_cast<std::size_t>(i)] << " = " << vec_str(flat, t.vectors[static_cast<std::size_t>(i)])
          << "\n";
  }
  int nonzero = 0;
  for (const auto& row : t.coeffs)
    for (const auto& v : row)
      for (const auto& c : v)
        if (c != 0) {
          ++nonzero;
          break;
        }
  out << "products (nonzero " << nonzero << " of " << n * n << "):\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& v = t.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      bool any = false;
      for (const auto& c : v)
        if (c != 0) any = true;
      if (!any) continue;
      out << "  " << t.labels[static_cast<std::size_t>(i)] << " * " << t.labels[static_cast<std::size_t>(j)] << " = "
          << vec_str(t.labels, v) << "\n";
    }
  return out.str();
}

std::string table_json(const StringySpace& sp, const ProductTable& t, Theory theory) {
  json doc;
  doc["theory"] = theory_name(theory);
  int n = static_cast<int>(t.labels.size());
  json basis = json::array();
  if (t.vectors.empty()) {
    for (int i = 0; i < n; ++i) {
      auto [p, nn] = stringy_bidegree(sp, i);
      basis.push_back(json{{"label", t.labels[static_cast<std::size_t>(i)]}, {"deg", rat_str(p)}, {"n", nn}});
    }
  } else {
    std::vector<std::string> flat;
    for (int i = 0; i < sp.dim(); ++i) flat.push_back(sp.label(i));
    for (int i = 0; i < n; ++i)
      basis.push_back(json{{"label", t.labels[static_cast<std::size_t>(i)]},
                           {"vector", vec_json(flat, t.vectors[static_cast<std::size_t>(i)])}});
  }
  doc["basis"] = std::move(basis);
  json products = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& v = t.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      bool any = false;
      for (const auto& c : v)
        if (c != 0) any = true;
      if (!any) continue;
      products.push_back(json{{"left", t.labels[static_cast<std::size_t>(i)]},
                              {"right", t.labels[static_cast<std::size_t>(j)]},
                              {"value", vec_json(t.labels, v)}});
    }
  doc["products"] = std::move(products);
  return doc.dump(2) + "\n";
}

std::string ages_text(const OrbifoldDatum& d) {
  std::ostringstream out;
  out << "ambient dim " << d.ambient_dim() << "\n";
  for (int g = 0; g < d.group.order; ++g)
    for (const auto& s : d.singles[static_cast<std::size_t>(g)])
      out << "g=" << g << " c=" << s.comp << "  dim " << s.dim << "  age " << rat_str(sector_age(s)) << "\n";
  return out.str();
}

std::string ages_json(const OrbifoldDatum& d) {
  json doc;
  doc["ambient_dim"] = d.ambient_dim();
  json arr = json::array();
  for (int g = 0; g < d.group.order; ++g)
    for (const auto& s : d.singles[static_cast<std::size_t>(g)])
      arr.push_back(json{{"g", g}, {"component", s.comp}, {"dim", s.dim}, {"age", rat_str(sector_age(s))}});
  doc["sectors"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string compare_text(const std::vector<CheckReport>& reports, const std::optional<ScalingResult>& scalings) {
  std::string out = reports_text(reports);
  if (scalings) {
    out += "scalings: ";
    out += scalings->status == ScalingStatus::consistent ? "consistent\n" : ("inconsistent: " + scalings->witness + "\n");
    for (const auto& [label, val] : scalings->squares)
      out += "  s^2(" + label + ") = " + (val ? rat_str(*val) : std::string("undetermined")) + "\n";
  }
  return out;
}

std::string compare_json(const std::vector<CheckReport>& reports, const std::optional<ScalingResult>& scalings) {
  json doc;
  doc["checks"] = reports_json_array(reports);
  doc["failures"] = count_failures(reports);
  doc["verdict"] = count_failures(reports) == 0 ? "pass" : "fail";
  if (scalings) doc["scalings"] = scalings_json(*scalings);
  return doc.dump(2) + "\n";
}

} // namespace orb
