#include "ogm/json_io.hpp"

#include <string>

#include "ogm/common.hpp"

namespace ogm {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) throw parse_error("expected a JSON object", 0);
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error(std::string("missing key '") + key + "'", 0);
  return *it;
}

std::string need_string(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string())
    throw parse_error(std::string("key '") + key + "' must be a string", 0);
  return v.get<std::string>();
}

long need_long(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer())
    throw parse_error(std::string("key '") + key + "' must be an integer", 0);
  return v.get<long>();
}

long parse_long(const std::string& text) {
  try {
    std::size_t used = 0;
    long n = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return n;
  } catch (const std::exception&) {
    throw parse_error("bad integer '" + text + "'", 0);
  }
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

Json backend_to_json(const BackendConfig& cfg) {
  Json j;
  j["backend"] = cfg.name();
  if (cfg.kind == BackendKind::RationalPadic) j["p"] = cfg.p;
  if (cfg.kind == BackendKind::RatFuncFq) j["q"] = cfg.q;
  j["k"] = cfg.k;
  return j;
}

BackendConfig backend_from_json(const Json& j) {
  BackendConfig cfg;
  std::string name = need_string(j, "backend");
  if (name == "rational-padic") cfg.kind = BackendKind::RationalPadic;
  else if (name == "ratfunc-char0") cfg.kind = BackendKind::RatFuncChar0;
  else if (name == "ratfunc-fq") cfg.kind = BackendKind::RatFuncFq;
  else throw parse_error("unknown backend '" + name + "'", 0);
  if (j.contains("p")) cfg.p = need_long(j, "p");
  if (j.contains("q")) cfg.q = need_long(j, "q");
  if (j.contains("k")) cfg.k = need_long(j, "k");
  cfg.validate();
  return cfg;
}

Json laurent_to_json(const LaurentPoly& g) {
  Json coeffs = Json::object();
  for (const auto& [d, c] : g.terms()) coeffs[std::to_string(d)] = c.str();
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

LaurentPoly laurent_from_json(const Json& j, const BackendConfig& cfg) {
  const Json& coeffs = need(j, "coeffs");
  if (!coeffs.is_object()) throw parse_error("'coeffs' must be an object", 0);
  LaurentPoly g(cfg);
  for (const auto& [key, val] : coeffs.items()) {
    if (!val.is_string()) throw parse_error("coefficients must be strings", 0);
    g.set(parse_long(key), parse_scalar(val.get<std::string>(), cfg));
  }
  return g;
}

Json laurent2_to_json(const LaurentPoly2& g) {
  Json coeffs = Json::object();
  for (const auto& [key, c] : g.terms())
    coeffs[std::to_string(key.first) + "," + std::to_string(key.second)] = c.str();
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

LaurentPoly2 laurent2_from_json(const Json& j, const BackendConfig& cfg) {
  const Json& coeffs = need(j, "coeffs");
  if (!coeffs.is_object()) throw parse_error("'coeffs' must be an object", 0);
  LaurentPoly2 g(cfg);
  for (const auto& [key, val] : coeffs.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw parse_error("two-variable keys look like \"i,j\"", 0);
    if (!val.is_string()) throw parse_error("coefficients must be strings", 0);
    g.set(parse_long(key.substr(0, comma)), parse_long(key.substr(comma + 1)),
          parse_scalar(val.get<std::string>(), cfg));
  }
  return g;
}

Json expression_to_json(const GeneratorExpression& ex) {
  Json j;
  j["m"] = ex.m;
  Json cs = Json::array();
  for (const Scalar& c : ex.coeffs) cs.push_back(c.str());
  j["coeffs"] = std::move(cs);
  return j;
}

GeneratorExpression expression_from_json(const Json& j, const BackendConfig& cfg) {
  GeneratorExpression ex;
  ex.m = need_long(j, "m");
  const Json& cs = need(j, "coeffs");
  if (!cs.is_array()) throw parse_error("'coeffs' must be an array", 0);
  for (const Json& c : cs) {
    if (!c.is_string()) throw parse_error("coefficients must be strings", 0);
    ex.coeffs.push_back(parse_scalar(c.get<std::string>(), cfg));
  }
  return ex;
}

Json membership_to_json(const MembershipVerdict& v) {
  Json j;
  j["member"] = v.member;
  if (v.witness) {
    Json w;
    w["n"] = v.witness->n;
    w["value"] = v.witness->value.str();
    j["witness"] = std::move(w);
  }
  if (v.expression) j["expression"] = expression_to_json(*v.expression);
  return j;
}

Json point_to_json(const GPoint& pt) {
  Json j;
  j["t"] = pt.t.str();
  j["x"] = pt.x.str();
  j["ring"] = pt.ring.str();
  return j;
}

GPoint point_from_json(const Json& j, const BackendConfig& cfg) {
  Scalar t = parse_scalar(need_string(j, "t"), cfg);
  Scalar x = parse_scalar(need_string(j, "x"), cfg);
  RingTag ring = parse_ring_tag(need_string(j, "ring"));
  return make_point(t, x, ring, cfg);
}

Json matrix_to_json(const Matrix& m) {
  Json cols = Json::array();
  for (std::size_t jcol = 0; jcol < m.cols(); ++jcol) {
    Json col = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.at(i, jcol).str());
    cols.push_back(std::move(col));
  }
  return cols;
}

Matrix matrix_from_json(const Json& j, const BackendConfig& cfg) {
  if (!j.is_array() || j.empty())
    throw parse_error("matrix must be a non-empty array of columns", 0);
  std::size_t rows = 0;
  for (const Json& col : j) {
    if (!col.is_array() || col.empty())
      throw parse_error("matrix columns must be non-empty arrays", 0);
    if (rows == 0) rows = col.size();
    if (col.size() != rows) throw parse_error("matrix columns have mixed sizes", 0);
  }
  Matrix m(cfg, rows, j.size());
  for (std::size_t jcol = 0; jcol < j.size(); ++jcol)
    for (std::size_t i = 0; i < rows; ++i) {
      const Json& cell = j[jcol][i];
      if (!cell.is_string()) throw parse_error("matrix entries must be strings", 0);
      m.at(i, jcol) = parse_scalar(cell.get<std::string>(), cfg);
    }
  return m;
}

Json pair_to_json(const GradedSpace& v, const Lattice& m) {
  Json j;
  j["degrees"] = v.degrees;
  j["basis"] = matrix_to_json(m.basis());
  return j;
}

std::pair<GradedSpace, Lattice> pair_from_json(const Json& j,
                                               const BackendConfig& cfg) {
  const Json& degs = need(j, "degrees");
  if (!degs.is_array() || degs.empty())
    throw parse_error("'degrees' must be a non-empty array", 0);
  GradedSpace v;
  for (const Json& d : degs) {
    if (!d.is_number_integer()) throw parse_error("degrees must be integers", 0);
    v.degrees.push_back(d.get<long>());
  }
  Matrix b = matrix_from_json(need(j, "basis"), cfg);
  if (b.rows() != v.degrees.size())
    throw parse_error("basis size does not match the degree list", 0);
  return {std::move(v), Lattice::from_basis(b)};
}

Json admissibility_to_json(const AdmissibilityVerdict& v) {
  Json j;
  j["admissible"] = v.admissible;
  j["bound"] = v.bound;
  if (v.witness) {
    Json w;
    w["n"] = v.witness->n;
    Json vec = Json::array();
    for (const Scalar& c : v.witness->vec) vec.push_back(c.str());
    w["vec"] = std::move(vec);
    j["witness"] = std::move(w);
  }
  return j;
}

Json hopf_report_to_json(const HopfReport& r) {
  Json j;
  j["all_pass"] = r.all_pass;
  j["elements_checked"] = r.elements_checked;
  Json checks = Json::array();
  for (const HopfAxiomCheck& c : r.checks) {
    Json cj;
    cj["axiom"] = c.axiom;
    cj["pass"] = c.pass;
    if (!c.pass) cj["witness"] = c.witness;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

namespace {

Json entries_to_json(const std::vector<std::vector<LaurentPoly>>& entries) {
  Json rows = Json::array();
  for (const auto& row : entries) {
    Json rj = Json::array();
    for (const LaurentPoly& e : row) rj.push_back(laurent_to_json(e));
    rows.push_back(std::move(rj));
  }
  return rows;
}

}  // namespace

Json comodule_to_json(const ComoduleMatrix& cm, const ComoduleReport& rep) {
  Json j;
  j["admissible"] = true;
  Json ax;
  ax["coassoc"] = pass_fail(rep.coassoc);
  ax["counit"] = pass_fail(rep.counit);
  ax["integrality"] = pass_fail(rep.integrality);
  j["axioms"] = std::move(ax);
  if (!rep.failures.empty()) j["failures"] = rep.failures;
  j["degrees"] = cm.space.degrees;
  j["basis"] = matrix_to_json(cm.lattice.basis());
  j["entries"] = entries_to_json(cm.entries);
  return j;
}

Json non_admissible_to_json(const NonAdmissibleDetail& d) {
  Json j;
  j["admissible"] = false;
  Json w;
  w["n"] = d.verdict.witness ? d.verdict.witness->n : 0;
  if (d.verdict.witness) {
    Json vec = Json::array();
    for (const Scalar& c : d.verdict.witness->vec) vec.push_back(c.str());
    w["vec"] = std::move(vec);
  }
  j["witness"] = std::move(w);
  Json e;
  e["l"] = d.entry.l;
  e["j"] = d.entry.j;
  e["n"] = d.entry.witness.n;
  e["value"] = d.entry.witness.value.str();
  j["entry"] = std::move(e);
  return j;
}

Json morphism_to_json(const MorphismVerdict& v) {
  Json j;
  j["accepted"] = v.accepted;
  j["graded"] = v.graded;
  j["maps_lattice"] = v.maps_lattice;
  if (v.bad_entry) j["bad_entry"] = {v.bad_entry->first, v.bad_entry->second};
  if (v.bad_column) j["bad_column"] = *v.bad_column;
  return j;
}

Json torsion_to_json(const TorsionComodule& tc, const TorsionReport& rep) {
  Json j;
  j["accepted"] = true;
  j["moduli"] = tc.moduli;
  j["length"] = tc.length();
  Json ax;
  ax["integrality"] = pass_fail(rep.integrality);
  ax["divisibility"] = pass_fail(rep.divisibility);
  ax["counit"] = pass_fail(rep.counit);
  ax["coassoc"] = pass_fail(rep.coassoc);
  j["axioms"] = std::move(ax);
  if (!rep.failures.empty()) j["failures"] = rep.failures;
  j["basis"] = matrix_to_json(tc.basis);
  j["entries"] = entries_to_json(tc.entries);
  return j;
}

Json grading_to_json(const GradingReport& rep) {
  Json j;
  j["all_pass"] = rep.all_pass();
  Json ax;
  ax["s_infinity"] = pass_fail(rep.s_infinity);
  ax["counit"] = pass_fail(rep.counit);
  ax["coassoc"] = pass_fail(rep.coassoc);
  j["axioms"] = std::move(ax);
  if (!rep.failures.empty()) j["failures"] = rep.failures;
  return j;
}

Json window_to_json(const WindowSpec& spec) {
  Json j;
  j["degrees"] = spec.degrees;
  j["k"] = spec.k;
  j["a"] = spec.a;
  j["q"] = spec.q;
  if (spec.index_constraint) j["index"] = *spec.index_constraint;
  j["ceiling"] = spec.ceiling;
  return j;
}

WindowSpec window_from_json(const Json& j) {
  WindowSpec spec;
  const Json& degs = need(j, "degrees");
  if (!degs.is_array() || degs.empty())
    throw parse_error("'degrees' must be a non-empty array", 0);
  for (const Json& d : degs) {
    if (!d.is_number_integer()) throw parse_error("degrees must be integers", 0);
    spec.degrees.push_back(d.get<long>());
  }
  spec.k = need_long(j, "k");
  spec.a = need_long(j, "a");
  spec.q = need_long(j, "q");
  if (j.contains("index")) spec.index_constraint = need_long(j, "index");
  if (j.contains("ceiling")) spec.ceiling = need_long(j, "ceiling");
  spec.validate();
  return spec;
}

Json strata_to_json(const std::map<long, long>& strata) {
  Json arr = Json::array();
  for (const auto& [idx, cnt] : strata) {
    Json s;
    s["index"] = idx;
    s["count"] = cnt;
    arr.push_back(std::move(s));
  }
  return arr;
}

Json stable_set_to_json(const StableLatticeSet& set) {
  Json j;
  j["strata"] = strata_to_json(set.strata);
  Json ls = Json::array();
  for (const Lattice& m : set.lattices) {
    Json lj;
    long idx = 0;
    for (long e : m.pivot_exponents()) idx += e;
    lj["index"] = idx;
    lj["basis"] = matrix_to_json(m.basis());
    ls.push_back(std::move(lj));
  }
  j["lattices"] = std::move(ls);
  return j;
}

Json polyfit_to_json(const PolyFitReport& rep) {
  Json j;
  j["qs"] = rep.qs;
  Json strata = Json::array();
  for (const StratumFit& sf : rep.strata) {
    Json s;
    s["index"] = sf.index;
    Json counts = Json::array();
    for (const mpz_class& c : sf.counts) counts.push_back(c.get_si());
    s["counts"] = std::move(counts);
    s["polynomial"] = format_polynomial(sf.poly);
    s["matched"] = sf.matched;
    s["cell_like"] = sf.affine_cell_shape;
    strata.push_back(std::move(s));
  }
  j["strata"] = std::move(strata);
  j["polynomial"] = rep.polynomial;
  return j;
}

}  // namespace ogm
