#include "orbdata.hpp"

#include "error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <type_traits>

namespace orb {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw OrbError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw OrbError(where + ": missing key '" + key + "'");
  return *it;
}

int need_int(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer()) throw OrbError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

const json& need_array(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_array()) throw OrbError(where + "." + key + ": expected an array");
  return v;
}

Rat need_rat(const json& v, const std::string& where) {
  if (!v.is_string()) throw OrbError(where + ": rationals are written as strings");
  return parse_rat(v.get<std::string>(), where);
}

std::vector<int> int_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw OrbError(where + ": expected an array");
  std::vector<int> r;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw OrbError(where + ": expected integers");
    r.push_back(e.get<int>());
  }
  return r;
}

Mat parse_matrix(const json& v, int rows, int cols, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows)
    throw OrbError(where + ": expected " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = v[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw OrbError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = need_rat(row[static_cast<std::size_t>(c)], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Element parse_sparse_element(const json& v, const Algebra& a, const std::string& where) {
  if (!v.is_array()) throw OrbError(where + ": expected an array of [index, coeff] pairs");
  Element e = el_zero(a);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& pair = v[i];
    std::string pw = where + "[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) throw OrbError(pw + ": expected [index, coeff]");
    if (!pair[0].is_number_integer()) throw OrbError(pw + ": index must be an integer");
    int idx = pair[0].get<int>();
    if (idx < 0 || idx >= a.size()) throw OrbError(pw + ": basis index out of range");
    e.v[static_cast<std::size_t>(idx)] += need_rat(pair[1], pw);
  }
  return e;
}

KClass parse_lines(const json& v, const Algebra& a, const std::string& where) {
  if (!v.is_array()) throw OrbError(where + ": expected an array of [root, mult] pairs");
  KClass k = kclass_empty(a);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& pair = v[i];
    std::string pw = where + "[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) throw OrbError(pw + ": expected [root, mult]");
    k.lines.push_back(KLine{parse_sparse_element(pair[0], a, pw + ".root"), need_rat(pair[1], pw + ".mult")});
  }
  return k;
}

Algebra parse_algebra(const json& v, int dim, const std::string& where) {
  Algebra a;
  a.name = where;
  a.dim = dim;
  const json& basis = need_array(v, "basis", where);
  for (const auto& b : basis) {
    if (!b.is_string()) throw OrbError(where + ".basis: expected strings");
    a.basis.push_back(b.get<std::string>());
  }
  int n = a.size();
  const json& bidegree = need_array(v, "bidegree", where);
  if (static_cast<int>(bidegree.size()) != n) throw OrbError(where + ".bidegree: wrong length");
  for (const auto& d : bidegree) {
    std::vector<int> pn = int_vector(d, where + ".bidegree");
    if (pn.size() != 2) throw OrbError(where + ".bidegree: entries are [p, n]");
    a.bidegree.emplace_back(pn[0], pn[1]);
  }
  if (v.contains("parity")) {
    std::vector<int> par = int_vector(v["parity"], where + ".parity");
    if (static_cast<int>(par.size()) != n) throw OrbError(where + ".parity: wrong length");
    a.parity = par;
  } else {
    for (int i = 0; i < n; ++i) a.parity.push_back(a.bidegree[static_cast<std::size_t>(i)].second % 2);
  }
  a.unit = need_int(v, "unit", where);
  if (a.unit < 0 || a.unit >= n) throw OrbError(where + ".unit: out of range");
  a.init_table();

  const json& products = need_array(v, "products", where);
  std::vector<bool> given(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
  auto mark = [&](int i, int j) -> bool {
    bool was = given[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    given[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = true;
    return was;
  };
  auto was_given = [&](int i, int j) {
    return given[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  for (std::size_t e = 0; e < products.size(); ++e) {
    const json& entry = products[e];
    std::string ew = where + ".products[" + std::to_string(e) + "]";
    if (!entry.is_array() || entry.size() != 3) throw OrbError(ew + ": expected [i, j, targets]");
    if (!entry[0].is_number_integer() || !entry[1].is_number_integer()) throw OrbError(ew + ": indices must be integers");
    int i = entry[0].get<int>(), j = entry[1].get<int>();
    if (i < 0 || i >= n || j < 0 || j >= n) throw OrbError(ew + ": basis index out of range");
    if (mark(i, j)) throw OrbError(ew + ": duplicate product entry");
    const json& targets = entry[2];
    if (!targets.is_array()) throw OrbError(ew + ": targets must be an array");
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const json& tgt = targets[t];
      std::string tw = ew + "[" + std::to_string(t) + "]";
      if (!tgt.is_array() || tgt.size() != 2 || !tgt[0].is_number_integer()) throw OrbError(tw + ": expected [k, coeff]");
      int k = tgt[0].get<int>();
      if (k < 0 || k >= n) throw OrbError(tw + ": basis index out of range");
      a.cijk_mut(i, j, k) = need_rat(tgt[1], tw);
    }
  }
  // The unlisted orientation of a pair follows from the sign rule, and the
  // unit row and column from unitality; only genuinely new products need
  // spelling out.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!was_given(i, j) || was_given(j, i)) continue;
      int sgn = (a.parity[static_cast<std::size_t>(i)] & a.parity[static_cast<std::size_t>(j)]) ? -1 : 1;
      for (int k = 0; k < n; ++k) a.cijk_mut(j, i, k) = Rat(sgn) * a.cijk(i, j, k);
      mark(j, i);
    }
  for (int j = 0; j < n; ++j) {
    if (!was_given(a.unit, j)) {
      a.cijk_mut(a.unit, j, j) = 1;
      mark(a.unit, j);
    }
    if (!was_given(j, a.unit)) {
      a.cijk_mut(j, a.unit, j) = 1;
      mark(j, a.unit);
    }
  }
  a.check_axioms();
  return a;
}

struct SectorEntryRef {
  int g1 = -1, g2 = -1, g3 = -1; // unused slots stay -1
  int comp = 0;
  const json* entry = nullptr;
};

std::string gkey_str(const std::vector<int>& gs) {
  std::string s = "(";
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gs[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

} // namespace

int OrbifoldDatum::ambient_dim() const { return singles[0][0].dim; }

const SingleSector& OrbifoldDatum::single(int g, int comp) const {
  return singles.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(comp));
}

bool OrbifoldDatum::double_declared(int g1, int g2) const {
  if (doubles.count({g1, g2})) return true;
  return std::find(doubles_declared_empty.begin(), doubles_declared_empty.end(), std::array<int, 2>{g1, g2}) !=
         doubles_declared_empty.end();
}

bool OrbifoldDatum::triple_declared(int g1, int g2, int g3) const {
  if (triples.count({g1, g2, g3})) return true;
  return std::find(triples_declared_empty.begin(), triples_declared_empty.end(), std::array<int, 3>{g1, g2, g3}) !=
         triples_declared_empty.end();
}

const std::vector<DoubleSector>* OrbifoldDatum::double_comps(int g1, int g2) const {
  auto it = doubles.find({g1, g2});
  return it == doubles.end() ? nullptr : &it->second;
}

const std::vector<TripleSector>* OrbifoldDatum::triple_comps(int g1, int g2, int g3) const {
  auto it = triples.find({g1, g2, g3});
  return it == triples.end() ? nullptr : &it->second;
}

std::string component_label(int g, int comp) { return "g" + std::to_string(g) + "c" + std::to_string(comp); }

namespace {

// Group the list entries of a sector block by group key, check the component
// indices are dense, and return them ordered.
std::map<std::vector<int>, std::vector<SectorEntryRef>> group_sector_entries(const json& block, int tuple_len,
                                                                             int order, const std::string& where) {
  std::map<std::vector<int>, std::vector<SectorEntryRef>> out;
  if (!block.is_array()) throw OrbError(where + ": expected an array");
  for (std::size_t i = 0; i < block.size(); ++i) {
    const json& entry = block[i];
    std::string ew = where + "[" + std::to_string(i) + "]";
    std::vector<int> gs;
    if (tuple_len == 1) {
      gs = {need_int(entry, "g", ew)};
    } else {
      gs = int_vector(need(entry, "g", ew), ew + ".g");
      if (static_cast<int>(gs.size()) != tuple_len) throw OrbError(ew + ".g: expected " + std::to_string(tuple_len) + " elements");
    }
    for (int g : gs)
      if (g < 0 || g >= order) throw OrbError(ew + ".g: group element out of range");
    SectorEntryRef ref;
    ref.g1 = gs[0];
    if (tuple_len > 1) ref.g2 = gs[1];
    if (tuple_len > 2) ref.g3 = gs[2];
    ref.comp = need_int(entry, "component", ew);
    ref.entry = &entry;
    out[gs].push_back(ref);
  }
  for (auto& [gs, refs] : out) {
    std::sort(refs.begin(), refs.end(), [](const SectorEntryRef& a, const SectorEntryRef& b) { return a.comp < b.comp; });
    for (std::size_t c = 0; c < refs.size(); ++c)
      if (refs[c].comp != static_cast<int>(c))
        throw OrbError(where + ": components of " + gkey_str(gs) + " are not numbered 0..k-1");
  }
  return out;
}

Document load_json(const json& doc, const std::string& label) {
  if (!doc.is_object()) throw OrbError(label + ": document root must be an object");
  Document out;

  if (doc.contains("resolution")) {
    const json& res = doc["resolution"];
    std::string rw = label + ".resolution";
    int dim = need_int(res, "dim", rw);
    Resolution r;
    r.alg = parse_algebra(need(res, "algebra", rw), dim, rw + ".algebra");
    if (res.contains("integral")) {
      const json& intg = res["integral"];
      if (!intg.is_array() || static_cast<int>(intg.size()) != r.alg.size())
        throw OrbError(rw + ".integral: expected one coefficient per basis element");
      std::vector<Rat> v;
      for (std::size_t i = 0; i < intg.size(); ++i)
        v.push_back(need_rat(intg[i], rw + ".integral[" + std::to_string(i) + "]"));
      r.integral = std::move(v);
    }
    out.resolution = std::move(r);
  }

  if (doc.contains("iso_skeleton")) {
    const json& sk = doc["iso_skeleton"];
    std::string sw = label + ".iso_skeleton";
    Skeleton s;
    const json& pairs = need_array(sk, "pairs", sw);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const json& p = pairs[i];
      std::string pw = sw + ".pairs[" + std::to_string(i) + "]";
      SkeletonPair sp;
      sp.orb = need(p, "orb", pw).get<std::string>();
      sp.res = need(p, "res", pw).get<std::string>();
      sp.scalable = p.value("scalable", false);
      s.pairs.push_back(std::move(sp));
    }
    out.skeleton = std::move(s);
  }

  if (!doc.contains("group")) {
    if (!out.resolution && !out.skeleton) throw OrbError(label + ": document has none of the known blocks");
    return out;
  }

  OrbifoldDatum d;
  const json& grp = doc["group"];
  std::string gw = label + ".group";
  if (grp.contains("table")) {
    const json& tbl = grp["table"];
    if (!tbl.is_array()) throw OrbError(gw + ".table: expected an array");
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < tbl.size(); ++i) rows.push_back(int_vector(tbl[i], gw + ".table[" + std::to_string(i) + "]"));
    d.group = Group::from_table(std::move(rows));
  } else if (grp.contains("permutation_generators")) {
    const json& pg = grp["permutation_generators"];
    std::string pw = gw + ".permutation_generators";
    int degree = need_int(pg, "degree", pw);
    const json& perms = need_array(pg, "perms", pw);
    std::vector<std::vector<int>> gens;
    for (std::size_t i = 0; i < perms.size(); ++i) gens.push_back(int_vector(perms[i], pw + ".perms[" + std::to_string(i) + "]"));
    d.group = Group::from_permutations(degree, gens);
  } else {
    throw OrbError(gw + ": need 'table' or 'permutation_generators'");
  }
  int order = d.group.order;

  // Pass A: build every sector presentation in its final slot, so that the
  // maps wired in pass B can hold stable pointers.
  auto single_entries = group_sector_entries(need_array(doc, "sectors", label), 1, order, label + ".sectors");
  d.singles.resize(static_cast<std::size_t>(order));
  for (const auto& [gs, refs] : single_entries) {
    int g = gs[0];
    auto& vec = d.singles[static_cast<std::size_t>(g)];
    vec.resize(refs.size());
    for (const auto& ref : refs) {
      SingleSector& s = vec[static_cast<std::size_t>(ref.comp)];
      s.g = g;
      s.comp = ref.comp;
      std::string sw = label + ".sectors[g=" + std::to_string(g) + ",c=" + std::to_string(ref.comp) + "]";
      s.dim = need_int(*ref.entry, "dim", sw);
      s.alg = parse_algebra(need(*ref.entry, "algebra", sw), s.dim, sw + ".algebra");
      s.normal = kclass_empty(s.alg);
    }
  }
  if (d.singles[0].size() != 1)
    throw OrbError(label + ": the identity sector must have exactly one component (the ambient variety)");

  auto double_entries = doc.contains("double_sectors")
                            ? group_sector_entries(doc["double_sectors"], 2, order, label + ".double_sectors")
                            : std::map<std::vector<int>, std::vector<SectorEntryRef>>{};
  for (const auto& [gs, refs] : double_entries) {
    auto& vec = d.doubles[{gs[0], gs[1]}];
    vec.resize(refs.size());
    for (const auto& ref : refs) {
      DoubleSector& s = vec[static_cast<std::size_t>(ref.comp)];
      s.g = {gs[0], gs[1]};
      s.comp = ref.comp;
      std::string sw = label + ".double_sectors[g=" + gkey_str(gs) + ",c=" + std::to_string(ref.comp) + "]";
      s.dim = need_int(*ref.entry, "dim", sw);
      s.alg = parse_algebra(need(*ref.entry, "algebra", sw), s.dim, sw + ".algebra");
      s.normal = kclass_empty(s.alg);
    }
  }

  auto triple_entries = doc.contains("triple_sectors")
                            ? group_sector_entries(doc["triple_sectors"], 3, order, label + ".triple_sectors")
                            : std::map<std::vector<int>, std::vector<SectorEntryRef>>{};
  d.has_triple_block = doc.contains("triple_sectors");
  for (const auto& [gs, refs] : triple_entries) {
    auto& vec = d.triples[{gs[0], gs[1], gs[2]}];
    vec.resize(refs.size());
    for (const auto& ref : refs) {
      TripleSector& s = vec[static_cast<std::size_t>(ref.comp)];
      s.g = {gs[0], gs[1], gs[2]};
      s.comp = ref.comp;
      std::string sw = label + ".triple_sectors[g=" + gkey_str(gs) + ",c=" + std::to_string(ref.comp) + "]";
      s.dim = need_int(*ref.entry, "dim", sw);
      s.alg = parse_algebra(need(*ref.entry, "algebra", sw), s.dim, sw + ".algebra");
      s.normal = kclass_empty(s.alg);
    }
  }

  auto parse_empty_list = [&](const char* key, int tuple_len, auto& target) {
    if (!doc.contains(key)) return;
    const json& lst = doc[key];
    std::string lw = label + "." + key;
    if (!lst.is_array()) throw OrbError(lw + ": expected an array");
    for (std::size_t i = 0; i < lst.size(); ++i) {
      std::vector<int> gs = int_vector(lst[i], lw + "[" + std::to_string(i) + "]");
      if (static_cast<int>(gs.size()) != tuple_len) throw OrbError(lw + "[" + std::to_string(i) + "]: wrong tuple length");
      for (int g : gs)
        if (g < 0 || g >= order) throw OrbError(lw + "[" + std::to_string(i) + "]: group element out of range");
      typename std::remove_reference_t<decltype(target)>::value_type key_arr{};
      std::copy(gs.begin(), gs.end(), key_arr.begin());
      target.push_back(key_arr);
    }
  };
  parse_empty_list("double_sectors_empty", 2, d.doubles_declared_empty);
  parse_empty_list("triple_sectors_empty", 3, d.triples_declared_empty);

  // Pass B: normals, eigen data, correspondences, group action.
  auto find_single = [&](int g, int comp, const std::string& where) -> SingleSector& {
    if (g < 0 || g >= order) throw OrbError(where + ": group element out of range");
    auto& vec = d.singles[static_cast<std::size_t>(g)];
    if (comp < 0 || comp >= static_cast<int>(vec.size()))
      throw OrbError(where + ": no component " + std::to_string(comp) + " in sector g=" + std::to_string(g));
    return vec[static_cast<std::size_t>(comp)];
  };
  auto find_double = [&](int g1, int g2, int comp, const std::string& where) -> DoubleSector& {
    auto it = d.doubles.find({g1, g2});
    if (it == d.doubles.end() || comp < 0 || comp >= static_cast<int>(it->second.size()))
      throw OrbError(where + ": no pair-sector component (" + std::to_string(g1) + "," + std::to_string(g2) + ") c=" +
                     std::to_string(comp));
    return it->second[static_cast<std::size_t>(comp)];
  };
  auto find_triple = [&](int g1, int g2, int g3, int comp, const std::string& where) -> TripleSector& {
    auto it = d.triples.find({g1, g2, g3});
    if (it == d.triples.end() || comp < 0 || comp >= static_cast<int>(it->second.size()))
      throw OrbError(where + ": no triple-sector component (" + std::to_string(g1) + "," + std::to_string(g2) + "," +
                     std::to_string(g3) + ") c=" + std::to_string(comp));
    return it->second[static_cast<std::size_t>(comp)];
  };

  if (doc.contains("normal")) {
    const json& block = doc["normal"];
    std::string bw = label + ".normal";
    if (!block.is_array()) throw OrbError(bw + ": expected an array");
    for (std::size_t i = 0; i < block.size(); ++i) {
      const json& entry = block[i];
      std::string ew = bw + "[" + std::to_string(i) + "]";
      std::vector<int> gs = int_vector(need(entry, "sector", ew), ew + ".sector");
      int comp = need_int(entry, "component", ew);
      const json& lines = need(entry, "lines", ew);
      if (gs.size() == 1) {
        SingleSector& s = find_single(gs[0], comp, ew);
        s.normal = parse_lines(lines, s.alg, ew + ".lines");
        kclass_check_roots(s.normal, ew);
      } else if (gs.size() == 2) {
        DoubleSector& s = find_double(gs[0], gs[1], comp, ew);
        s.normal = parse_lines(lines, s.alg, ew + ".lines");
        kclass_check_roots(s.normal, ew);
      } else if (gs.size() == 3) {
        TripleSector& s = find_triple(gs[0], gs[1], gs[2], comp, ew);
        s.normal = parse_lines(lines, s.alg, ew + ".lines");
        kclass_check_roots(s.normal, ew);
      } else {
        throw OrbError(ew + ".sector: expected 1, 2 or 3 elements");
      }
    }
  }

  if (doc.contains("eigen")) {
    const json& block = doc["eigen"];
    std::string bw = label + ".eigen";
    if (!block.is_array()) throw OrbError(bw + ": expected an array");
    for (std::size_t i = 0; i < block.size(); ++i) {
      const json& entry = block[i];
      std::string ew = bw + "[" + std::to_string(i) + "]";
      std::vector<int> gs = int_vector(need(entry, "sector", ew), ew + ".sector");
      if (gs.size() != 1) throw OrbError(ew + ".sector: eigen data lives on single sectors");
      SingleSector& s = find_single(gs[0], need_int(entry, "component", ew), ew);
      const json& entries = need_array(entry, "entries", ew);
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const json& ee = entries[k];
        std::string eew = ew + ".entries[" + std::to_string(k) + "]";
        EigenEntry out_entry;
        out_entry.alpha = need_rat(need(ee, "alpha", eew), eew + ".alpha");
        out_entry.lines = parse_lines(need(ee, "lines", eew), s.alg, eew + ".lines");
        kclass_check_roots(out_entry.lines, eew);
        s.eigen.push_back(std::move(out_entry));
      }
    }
  }

  const json& corr = need(doc, "correspondences", label);
  std::string cw = label + ".correspondences";

  auto parse_pullback_into = [&](const json& spec, const Algebra& src, const Algebra& tgt, const std::string& where)
      -> std::pair<int, LinearMap> {
    int comp = need_int(spec, "component", where);
    LinearMap m;
    m.source = &src;
    m.target = &tgt;
    m.kind = MapKind::pullback;
    m.m = parse_matrix(need(spec, "matrix", where), tgt.size(), src.size(), where + ".matrix");
    return {comp, std::move(m)};
  };

  {
    const json& sig = need_array(corr, "sigma", cw);
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const json& entry = sig[i];
      std::string ew = cw + ".sigma[" + std::to_string(i) + "]";
      SingleSector& s = find_single(need_int(entry, "g", ew), need_int(entry, "component", ew), ew);
      int to = need_int(entry, "to_component", ew);
      SingleSector& src = find_single(d.group.inverse(s.g), to, ew);
      if (s.sigma_comp >= 0) throw OrbError(ew + ": duplicate inversion entry");
      s.sigma_comp = to;
      s.sigma.source = &src.alg;
      s.sigma.target = &s.alg;
      s.sigma.kind = MapKind::pullback;
      s.sigma.m = parse_matrix(need(entry, "matrix", ew), s.alg.size(), src.alg.size(), ew + ".matrix");
    }
  }
  for (int g = 0; g < order; ++g)
    for (const auto& s : d.singles[static_cast<std::size_t>(g)])
      if (s.sigma_comp < 0)
        throw OrbError(cw + ".sigma: missing entry for g=" + std::to_string(g) + " c=" + std::to_string(s.comp));

  {
    const json& blk = need_array(corr, "double", cw);
    for (std::size_t i = 0; i < blk.size(); ++i) {
      const json& entry = blk[i];
      std::string ew = cw + ".double[" + std::to_string(i) + "]";
      std::vector<int> gs = int_vector(need(entry, "g", ew), ew + ".g");
      if (gs.size() != 2) throw OrbError(ew + ".g: expected a pair");
      DoubleSector& s = find_double(gs[0], gs[1], need_int(entry, "component", ew), ew);
      if (s.e1_comp >= 0) throw OrbError(ew + ": duplicate entry for this component");
      int g12 = d.group.times(gs[0], gs[1]);

      const json& e1 = need(entry, "e1", ew);
      std::tie(s.e1_comp, s.e1) =
          parse_pullback_into(e1, find_single(gs[0], need_int(e1, "component", ew + ".e1"), ew + ".e1").alg, s.alg, ew + ".e1");
      const json& e2 = need(entry, "e2", ew);
      std::tie(s.e2_comp, s.e2) =
          parse_pullback_into(e2, find_single(gs[1], need_int(e2, "component", ew + ".e2"), ew + ".e2").alg, s.alg, ew + ".e2");

      const json& mu = need(entry, "mu", ew);
      std::string mw = ew + ".mu";
      s.mu_comp = need_int(mu, "component", mw);
      SingleSector& tgt = find_single(g12, s.mu_comp, mw);
      s.mu_pull.source = &tgt.alg;
      s.mu_pull.target = &s.alg;
      s.mu_pull.kind = MapKind::pullback;
      s.mu_pull.m = parse_matrix(need(mu, "pullback", mw), s.alg.size(), tgt.alg.size(), mw + ".pullback");
      s.mu_push.source = &s.alg;
      s.mu_push.target = &tgt.alg;
      s.mu_push.kind = MapKind::pushforward;
      s.mu_push.shift = tgt.dim - s.dim;
      s.mu_push.m = parse_matrix(need(mu, "pushforward", mw), tgt.alg.size(), s.alg.size(), mw + ".pushforward");

      const json& smu = need(entry, "sigma_mu", ew);
      std::tie(s.smu_comp, s.smu) = parse_pullback_into(
          smu, find_single(d.group.inverse(g12), need_int(smu, "component", ew + ".sigma_mu"), ew + ".sigma_mu").alg, s.alg,
          ew + ".sigma_mu");
    }
  }
  for (const auto& [key, vec] : d.doubles)
    for (const auto& s : vec)
      if (s.e1_comp < 0)
        throw OrbError(cw + ".double: missing maps for (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + ") c=" +
                       std::to_string(s.comp));

  if (corr.contains("triple")) {
    const json& blk = corr["triple"];
    if (!blk.is_array()) throw OrbError(cw + ".triple: expected an array");
    for (std::size_t i = 0; i < blk.size(); ++i) {
      const json& entry = blk[i];
      std::string ew = cw + ".triple[" + std::to_string(i) + "]";
      std::vector<int> gs = int_vector(need(entry, "g", ew), ew + ".g");
      if (gs.size() != 3) throw OrbError(ew + ".g: expected a triple");
      TripleSector& s = find_triple(gs[0], gs[1], gs[2], need_int(entry, "component", ew), ew);
      if (s.e12_comp >= 0) throw OrbError(ew + ": duplicate entry for this component");
      int g12 = d.group.times(gs[0], gs[1]);
      int g23 = d.group.times(gs[1], gs[2]);
      int g123 = d.group.times(g12, gs[2]);

      auto wire_double_pull = [&](const char* key, int a, int b) -> std::pair<int, LinearMap> {
        const json& spec = need(entry, key, ew);
        std::string kw = ew + "." + key;
        int comp = need_int(spec, "component", kw);
        const DoubleSector& src = find_double(a, b, comp, kw);
        LinearMap m;
        m.source = &src.alg;
        m.target = &s.alg;
        m.kind = MapKind::pullback;
        m.m = parse_matrix(need(spec, "matrix", kw), s.alg.size(), src.alg.size(), kw + ".matrix");
        return {comp, std::move(m)};
      };
      std::tie(s.e12_comp, s.e12) = wire_double_pull("e12", gs[0], gs[1]);
      std::tie(s.e23_comp, s.e23) = wire_double_pull("e23", gs[1], gs[2]);
      std::tie(s.m123_comp, s.m123) = wire_double_pull("mu12_3", g12, gs[2]);
      std::tie(s.m1_23_comp, s.m1_23) = wire_double_pull("mu1_23", gs[0], g23);

      int jg[4] = {gs[0], gs[1], gs[2], g123};
      const char* jk[4] = {"j1", "j2", "j3", "j4"};
      for (int t = 0; t < 4; ++t) {
        const json& spec = need(entry, jk[t], ew);
        std::string kw = ew + "." + jk[t];
        int comp = need_int(spec, "component", kw);
        const SingleSector& src = find_single(jg[t], comp, kw);
        s.j_comp[static_cast<std::size_t>(t)] = comp;
        LinearMap& m = s.j[static_cast<std::size_t>(t)];
        m.source = &src.alg;
        m.target = &s.alg;
        m.kind = MapKind::pullback;
        m.m = parse_matrix(need(spec, "matrix", kw), s.alg.size(), src.alg.size(), kw + ".matrix");
      }
    }
  }
  for (const auto& [key, vec] : d.triples)
    for (const auto& s : vec)
      if (s.e12_comp < 0)
        throw OrbError(cw + ".triple: missing maps for (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                       std::to_string(key[2]) + ") c=" + std::to_string(s.comp));

  // Group action; h = 0 is synthesized as the identity.
  d.action.resize(static_cast<std::size_t>(order));
  for (int h = 0; h < order; ++h) d.action[static_cast<std::size_t>(h)].resize(static_cast<std::size_t>(order));
  for (int g = 0; g < order; ++g) {
    auto& maps = d.action[0][static_cast<std::size_t>(g)];
    for (const auto& s : d.singles[static_cast<std::size_t>(g)]) {
      ActionMap am;
      am.to_comp = s.comp;
      am.map.source = &s.alg;
      am.map.target = &s.alg;
      am.map.kind = MapKind::pullback;
      am.map.m = mat_identity(s.alg.size());
      maps.push_back(std::move(am));
    }
  }
  if (doc.contains("gaction")) {
    const json& blk = doc["gaction"];
    std::string bw = label + ".gaction";
    if (!blk.is_array()) throw OrbError(bw + ": expected an array");
    for (std::size_t i = 0; i < blk.size(); ++i) {
      const json& entry = blk[i];
      std::string ew = bw + "[" + std::to_string(i) + "]";
      int h = need_int(entry, "h", ew);
      if (h <= 0 || h >= order) throw OrbError(ew + ".h: expected a non-identity group element index");
      const json& maps = need_array(entry, "maps", ew);
      for (std::size_t k = 0; k < maps.size(); ++k) {
        const json& mspec = maps[k];
        std::string mw = ew + ".maps[" + std::to_string(k) + "]";
        int g = need_int(mspec, "g", mw);
        SingleSector& src = find_single(g, need_int(mspec, "component", mw), mw);
        int to = need_int(mspec, "to_component", mw);
        SingleSector& tgt = find_single(d.group.conj(h, g), to, mw);
        auto& row = d.action[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)];
        if (row.size() < d.singles[static_cast<std::size_t>(g)].size())
          row.resize(d.singles[static_cast<std::size_t>(g)].size());
        ActionMap& am = row[static_cast<std::size_t>(src.comp)];
        if (am.to_comp >= 0) throw OrbError(mw + ": duplicate action entry");
        am.to_comp = to;
        am.map.source = &src.alg;
        am.map.target = &tgt.alg;
        am.map.kind = MapKind::pullback;
        am.map.m = parse_matrix(need(mspec, "matrix", mw), tgt.alg.size(), src.alg.size(), mw + ".matrix");
      }
    }
  }
  for (int h = 1; h < order; ++h)
    for (int g = 0; g < order; ++g) {
      const auto& row = d.action[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)];
      std::size_t want = d.singles[static_cast<std::size_t>(g)].size();
      if (row.size() != want)
        throw OrbError(label + ".gaction: missing maps for h=" + std::to_string(h) + " on sector g=" + std::to_string(g));
      for (std::size_t c = 0; c < want; ++c)
        if (row[c].to_comp < 0)
          throw OrbError(label + ".gaction: missing map for h=" + std::to_string(h) + " at g=" + std::to_string(g) + " c=" +
                         std::to_string(c));
    }

  out.datum = std::move(d);
  return out;
}

} // namespace

Document load_document_text(const std::string& text, const std::string& label) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw OrbParseError(label + ": JSON parse failure: " + e.what());
  }
  return load_json(doc, label);
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OrbIoError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_document_text(buf.str(), path);
}

// ---------------------------------------------------------------------------
// validate

namespace {

void run_guarded(std::vector<CheckReport>& out, const std::string& check, const std::string& instance,
                 const std::function<void()>& body) {
  CheckReport r{check, instance, true, ""};
  try {
    body();
  } catch (const OrbError& e) {
    r.pass = false;
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

void expect(bool cond, const std::string& msg) {
  if (!cond) throw OrbError(msg);
}

} // namespace

std::vector<CheckReport> validate(const Document& doc) {
  std::vector<CheckReport> out;
  if (doc.resolution) {
    run_guarded(out, "resolution_algebra", "-", [&] { doc.resolution->alg.check_axioms(); });
  }
  if (!doc.datum) return out;
  const OrbifoldDatum& d = *doc.datum;
  int order = d.group.order;
  int ambient = d.ambient_dim();

  for (int g = 0; g < order; ++g) {
    for (const auto& s : d.singles[static_cast<std::size_t>(g)]) {
      std::string inst = "g=" + std::to_string(g) + " c=" + std::to_string(s.comp);
      run_guarded(out, "algebra", inst, [&] { s.alg.check_axioms(); });
      run_guarded(out, "roots", inst, [&] {
        kclass_check_roots(s.normal, inst);
        for (const auto& e : s.eigen) kclass_check_roots(e.lines, inst);
      });
      run_guarded(out, "normal_rank", inst, [&] {
        Rat r = s.normal.rank();
        expect(is_integer(r) && r == ambient - s.dim,
               "normal rank " + rat_str(r) + " but ambient dim - sector dim = " + std::to_string(ambient - s.dim));
      });
      run_guarded(out, "eigen", inst, [&] {
        Rat prev(-1);
        KClass total = kclass_empty(s.alg);
        for (const auto& e : s.eigen) {
          expect(e.alpha > 0 && e.alpha < 1, "eigenvalue exponent " + rat_str(e.alpha) + " outside (0,1)");
          expect(e.alpha > prev, "eigenvalue exponents not strictly increasing");
          prev = e.alpha;
          for (const auto& l : e.lines.lines)
            expect(is_integer(l.mult) && l.mult >= 0, "eigenline multiplicity " + rat_str(l.mult) + " not a nonnegative integer");
          total = kclass_add(total, e.lines);
        }
        expect(kclass_equal(total, s.normal),
               "eigenlines sum to " + kclass_str(total) + " but the normal class is " + kclass_str(s.normal));
      });
      run_guarded(out, "sigma", inst, [&] {
        s.sigma.check("sigma at " + inst);
        const SingleSector& other = d.single(d.group.inverse(g), s.sigma_comp);
        expect(other.sigma_comp == s.comp, "inversion does not return to component " + std::to_string(s.comp));
        Mat round = mat_mul(s.sigma.m, other.sigma.m);
        expect(round == mat_identity(s.alg.size()), "inversion pullbacks do not compose to the identity");
      });
    }
  }

  for (const auto& [key, vec] : d.doubles) {
    for (const auto& s : vec) {
      std::string inst = "g=(" + std::to_string(key[0]) + "," + std::to_string(key[1]) + ") c=" + std::to_string(s.comp);
      run_guarded(out, "algebra", inst, [&] { s.alg.check_axioms(); });
      run_guarded(out, "roots", inst, [&] { kclass_check_roots(s.normal, inst); });
      run_guarded(out, "normal_rank", inst, [&] {
        Rat r = s.normal.rank();
        expect(is_integer(r) && r == ambient - s.dim,
               "normal rank " + rat_str(r) + " but ambient dim - sector dim = " + std::to_string(ambient - s.dim));
      });
      run_guarded(out, "maps", inst, [&] {
        s.e1.check("e1 at " + inst);
        s.e2.check("e2 at " + inst);
        s.mu_pull.check("mu pullback at " + inst);
        s.mu_push.check("mu pushforward at " + inst);
        s.smu.check("sigma_mu at " + inst);
      });
      run_guarded(out, "proj_formula", inst, [&] {
        for (int i = 0; i < s.alg.size(); ++i)
          for (int j = 0; j < s.mu_push.target->size(); ++j) {
            Element x = el_basis(s.alg, i);
            Element y = el_basis(*s.mu_push.target, j);
            Element lhs = s.mu_push.apply(el_mul(x, s.mu_pull.apply(y)));
            Element rhs = el_mul(s.mu_push.apply(x), y);
            expect(lhs == rhs, "projection formula fails on (" + s.alg.basis[static_cast<std::size_t>(i)] + ", " +
                                   s.mu_push.target->basis[static_cast<std::size_t>(j)] + "): " + el_str(lhs) + " vs " +
                                   el_str(rhs));
          }
      });
      run_guarded(out, "smu_factors", inst, [&] {
        int g12 = d.group.times(key[0], key[1]);
        const SingleSector& tgt = d.single(g12, s.mu_comp);
        expect(s.smu_comp == tgt.sigma_comp, "sigma_mu component disagrees with the inversion of the product sector");
        Mat composite = mat_mul(s.mu_pull.m, tgt.sigma.m);
        expect(composite == s.smu.m, "sigma_mu is not (inclusion pullback) composed with (inversion pullback)");
      });
    }
  }

  for (const auto& [key, vec] : d.triples) {
    int g1 = key[0], g2 = key[1], g3 = key[2];
    int g12 = d.group.times(g1, g2);
    int g23 = d.group.times(g2, g3);
    for (const auto& s : vec) {
      std::string inst = "g=(" + std::to_string(g1) + "," + std::to_string(g2) + "," + std::to_string(g3) + ") c=" +
                         std::to_string(s.comp);
      run_guarded(out, "algebra", inst, [&] { s.alg.check_axioms(); });
      run_guarded(out, "roots", inst, [&] { kclass_check_roots(s.normal, inst); });
      run_guarded(out, "normal_rank", inst, [&] {
        Rat r = s.normal.rank();
        expect(is_integer(r) && r == ambient - s.dim,
               "normal rank " + rat_str(r) + " but ambient dim - sector dim = " + std::to_string(ambient - s.dim));
      });
      run_guarded(out, "maps", inst, [&] {
        s.e12.check("e12 at " + inst);
        s.e23.check("e23 at " + inst);
        s.m123.check("mu12_3 at " + inst);
        s.m1_23.check("mu1_23 at " + inst);
        for (int t = 0; t < 4; ++t) s.j[static_cast<std::size_t>(t)].check("j" + std::to_string(t + 1) + " at " + inst);
      });
      run_guarded(out, "corner_factorizations", inst, [&] {
        const DoubleSector& d12 = d.doubles.at({g1, g2})[static_cast<std::size_t>(s.e12_comp)];
        const DoubleSector& d23 = d.doubles.at({g2, g3})[static_cast<std::size_t>(s.e23_comp)];
        const DoubleSector& d123 = d.doubles.at({g12, g3})[static_cast<std::size_t>(s.m123_comp)];
        const DoubleSector& d1_23 = d.doubles.at({g1, g23})[static_cast<std::size_t>(s.m1_23_comp)];
        struct Case {
          const char* name;
          int lhs_comp;
          const LinearMap* lhs;
          const LinearMap* outer;
          const LinearMap* inner;
          int inner_comp;
        };
        const Case cases[] = {
            {"j1 = e12.e1", s.j_comp[0], &s.j[0], &s.e12, &d12.e1, d12.e1_comp},
            {"j1 = mu1_23.e1", s.j_comp[0], &s.j[0], &s.m1_23, &d1_23.e1, d1_23.e1_comp},
            {"j2 = e12.e2", s.j_comp[1], &s.j[1], &s.e12, &d12.e2, d12.e2_comp},
            {"j2 = e23.e1", s.j_comp[1], &s.j[1], &s.e23, &d23.e1, d23.e1_comp},
            {"j3 = e23.e2", s.j_comp[2], &s.j[2], &s.e23, &d23.e2, d23.e2_comp},
            {"j3 = mu12_3.e2", s.j_comp[2], &s.j[2], &s.m123, &d123.e2, d123.e2_comp},
            {"j4 = mu12_3.mu", s.j_comp[3], &s.j[3], &s.m123, &d123.mu_pull, d123.mu_comp},
            {"j4 = mu1_23.mu", s.j_comp[3], &s.j[3], &s.m1_23, &d1_23.mu_pull, d1_23.mu_comp},
        };
        for (const auto& c : cases) {
          expect(c.lhs_comp == c.inner_comp,
                 std::string(c.name) + ": corner lands in component " + std::to_string(c.lhs_comp) +
                     " but the factorization goes through component " + std::to_string(c.inner_comp));
          Mat composite = mat_mul(c.outer->m, c.inner->m);
          expect(composite == c.lhs->m, std::string(c.name) + ": matrices do not compose");
        }
        // The two routes into each middle product sector must also agree.
        expect(d12.mu_comp == d123.e1_comp, "routes into the (g1 g2) sector go through different components");
        expect(mat_mul(s.e12.m, d12.mu_pull.m) == mat_mul(s.m123.m, d123.e1.m),
               "e12.mu and mu12_3.e1 do not agree");
        expect(d23.mu_comp == d1_23.e2_comp, "routes into the (g2 g3) sector go through different components");
        expect(mat_mul(s.e23.m, d23.mu_pull.m) == mat_mul(s.m1_23.m, d1_23.e2.m),
               "e23.mu and mu1_23.e2 do not agree");
      });
    }
  }

  for (int h = 1; h < order; ++h) {
    std::string inst = "h=" + std::to_string(h);
    run_guarded(out, "action_maps", inst, [&] {
      for (int g = 0; g < order; ++g)
        for (const auto& am : d.action[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)])
          am.map.check("action of h=" + std::to_string(h) + " on g=" + std::to_string(g));
    });
  }
  for (int h1 = 0; h1 < order; ++h1)
    for (int h2 = 0; h2 < order; ++h2) {
      if (h1 == 0 && h2 == 0) continue;
      std::string inst = "h1=" + std::to_string(h1) + " h2=" + std::to_string(h2);
      run_guarded(out, "action_functorial", inst, [&] {
        int h12 = d.group.times(h1, h2);
        for (int g = 0; g < order; ++g) {
          const auto& row2 = d.action[static_cast<std::size_t>(h2)][static_cast<std::size_t>(g)];
          for (std::size_t c = 0; c < row2.size(); ++c) {
            const ActionMap& m2 = row2[c];
            int g2 = d.group.conj(h2, g);
            const ActionMap& m1 = d.action[static_cast<std::size_t>(h1)][static_cast<std::size_t>(g2)][static_cast<std::size_t>(m2.to_comp)];
            const ActionMap& m12 = d.action[static_cast<std::size_t>(h12)][static_cast<std::size_t>(g)][c];
            expect(m1.to_comp == m12.to_comp, "component tracks disagree at g=" + std::to_string(g) + " c=" + std::to_string(c));
            expect(mat_mul(m1.map.m, m2.map.m) == m12.map.m,
                   "action matrices do not compose at g=" + std::to_string(g) + " c=" + std::to_string(c));
          }
        }
      });
    }

  run_guarded(out, "pair_coverage", "-", [&] {
    for (int g1 = 0; g1 < order; ++g1)
      for (int g2 = 0; g2 < order; ++g2)
        expect(d.double_declared(g1, g2), "pair (" + std::to_string(g1) + "," + std::to_string(g2) +
                                              ") has no sector data and is not declared empty");
  });

  return out;
}

} // namespace orb
