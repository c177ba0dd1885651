#include "atc/problem_io.hpp"

#include <fstream>
#include <sstream>

namespace atc {

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema_fail(where, "missing key '" + key + "'");
  return j.at(key);
}

std::string need_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_fail(where, "expected a string");
  return j.get<std::string>();
}

long need_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_fail(where, "expected an integer");
  return j.get<long>();
}

Polynomial parse_or_fail(const std::string& text, const RingPtr& ring, const std::string& where) {
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    schema_fail(where, std::string(e.what()) + " in \"" + text + "\"");
  }
}

LocalFraction fraction_from_json(const Json& j, const ChartSet& cs, const RingPtr& ring,
                                 const std::string& where) {
  const std::string num = need_string(need(j, "num", where), where + ".num");
  const long pow = need_int(need(j, "pow", where), where + ".pow");
  if (pow < 0) schema_fail(where, "pow must be non-negative");
  return frac_of(cs, parse_or_fail(num, ring, where + ".num"), static_cast<unsigned>(pow));
}

FractionMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                                const ChartSet& cs, const RingPtr& ring,
                                const std::string& where) {
  if (!j.is_array() || j.size() != rows) schema_fail(where, "expected " + std::to_string(rows) + " rows");
  FractionMatrix m(rows, cols, cs, ring);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || row.size() != cols)
      schema_fail(where, "row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = fraction_from_json(row.at(c), cs, ring,
                                      where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Json fraction_to_json(const LocalFraction& f) {
  return Json{{"num", f.num.str()}, {"pow", f.pow}};
}

Json matrix_to_json(const FractionMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(fraction_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json form_matrix_to_json(const FormMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Json coeffs = Json::array();
      for (std::size_t v = 0; v < m.nvars(); ++v)
        coeffs.push_back(fraction_to_json(m.slice(v).at(r, c)));
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FormMatrix form_matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                                 const ChartSet& cs, const RingPtr& ring,
                                 const std::string& where) {
  FormMatrix m(rows, cols, cs, ring);
  if (!j.is_array() || j.size() != rows) schema_fail(where, "bad form matrix row count");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j.at(r).is_array() || j.at(r).size() != cols) schema_fail(where, "bad form matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& coeffs = j.at(r).at(c);
      if (!coeffs.is_array() || coeffs.size() != ring->nvars())
        schema_fail(where, "form entry needs one coefficient per variable");
      for (std::size_t v = 0; v < ring->nvars(); ++v)
        m.slice(v).at(r, c) = fraction_from_json(coeffs.at(v), cs, ring, where);
    }
  }
  return m;
}

// "U0->U1@-1" and "U0@2" style keys.
std::pair<std::string, int> split_at_key(const std::string& key, const std::string& where) {
  const auto at = key.rfind('@');
  if (at == std::string::npos) schema_fail(where, "key '" + key + "' lacks '@degree'");
  try {
    return {key.substr(0, at), std::stoi(key.substr(at + 1))};
  } catch (const std::exception&) {
    schema_fail(where, "bad degree in key '" + key + "'");
  }
}

}  // namespace

Problem parse_problem_json(const Json& root) {
  if (!root.is_object()) schema_fail("$", "problem file must be a JSON object");

  const Json& jvars = need(root, "variables", "$");
  if (!jvars.is_array() || jvars.empty()) schema_fail("$.variables", "expected a non-empty array");
  std::vector<std::string> vars;
  for (const auto& v : jvars) vars.push_back(need_string(v, "$.variables[]"));
  RingPtr ring;
  try {
    ring = make_ring(std::move(vars));
  } catch (const std::invalid_argument& e) {
    schema_fail("$.variables", e.what());
  }

  std::vector<Polynomial> ideal;
  const Json& jideal = need(root, "ideal", "$");
  if (!jideal.is_array()) schema_fail("$.ideal", "expected an array");
  for (const auto& g : jideal)
    ideal.push_back(parse_or_fail(need_string(g, "$.ideal[]"), ring, "$.ideal[]"));

  const Json& jcharts = need(root, "charts", "$");
  if (!jcharts.is_array() || jcharts.empty()) schema_fail("$.charts", "expected a non-empty array");
  std::vector<Chart> charts;
  std::map<std::string, std::size_t> chart_index;
  for (const auto& c : jcharts) {
    const std::string name = need_string(need(c, "name", "$.charts[]"), "$.charts[].name");
    const std::string f = need_string(need(c, "f", "$.charts[]"), "$.charts[].f");
    if (!chart_index.emplace(name, charts.size()).second)
      schema_fail("$.charts", "duplicate chart name '" + name + "'");
    charts.push_back(Chart{name, parse_or_fail(f, ring, "$.charts[].f")});
  }

  SchemePtr scheme;
  try {
    scheme = std::make_shared<const ChartedScheme>(ring, std::move(ideal), Cover(std::move(charts)));
  } catch (const std::invalid_argument& e) {
    schema_fail("$.charts", e.what());
  }

  Problem problem{scheme, {}};
  const Json& jcomplexes = need(root, "complexes", "$");
  if (!jcomplexes.is_object()) schema_fail("$.complexes", "expected an object");
  for (const auto& [name, jc] : jcomplexes.items()) {
    const std::string where = "$.complexes." + name;
    const Json& jdeg = need(jc, "degrees", where);
    if (!jdeg.is_array() || jdeg.size() != 2) schema_fail(where + ".degrees", "expected [s_min, s_max]");
    const int s_min = static_cast<int>(need_int(jdeg.at(0), where + ".degrees[0]"));
    const int s_max = static_cast<int>(need_int(jdeg.at(1), where + ".degrees[1]"));
    if (s_min > s_max) schema_fail(where + ".degrees", "s_min exceeds s_max");

    const Json& jranks = need(jc, "ranks", where);
    std::vector<std::vector<std::size_t>> ranks(
        scheme->cover().size(), std::vector<std::size_t>(static_cast<std::size_t>(s_max - s_min + 1), 0));
    for (const auto& [cname, degmap] : jranks.items()) {
      const auto it = chart_index.find(cname);
      if (it == chart_index.end()) schema_fail(where + ".ranks", "unknown chart '" + cname + "'");
      if (!degmap.is_object()) schema_fail(where + ".ranks", "expected degree->rank object");
      for (const auto& [dstr, rv] : degmap.items()) {
        int s = 0;
        try {
          s = std::stoi(dstr);
        } catch (const std::exception&) {
          schema_fail(where + ".ranks", "bad degree key '" + dstr + "'");
        }
        if (s < s_min || s > s_max) schema_fail(where + ".ranks", "degree out of range: " + dstr);
        const long r = need_int(rv, where + ".ranks");
        if (r < 0) schema_fail(where + ".ranks", "negative rank");
        ranks[it->second][static_cast<std::size_t>(s - s_min)] = static_cast<std::size_t>(r);
      }
    }
    for (std::size_t i = 0; i < scheme->cover().size(); ++i)
      if (jranks.find(scheme->cover().chart(i).name) == jranks.end())
        schema_fail(where + ".ranks", "chart '" + scheme->cover().chart(i).name + "' missing");

    BundleComplex E(scheme, s_min, s_max, std::move(ranks));

    const Json& jtrans = need(jc, "transitions", where);
    if (!jtrans.is_object()) schema_fail(where + ".transitions", "expected an object");
    for (const auto& [key, jm] : jtrans.items()) {
      const auto [pair_part, s] = split_at_key(key, where + ".transitions");
      const auto arrow = pair_part.find("->");
      if (arrow == std::string::npos)
        schema_fail(where + ".transitions", "key '" + key + "' lacks 'i->j'");
      const std::string iname = pair_part.substr(0, arrow);
      const std::string jname = pair_part.substr(arrow + 2);
      const auto iit = chart_index.find(iname);
      const auto jit = chart_index.find(jname);
      if (iit == chart_index.end() || jit == chart_index.end())
        schema_fail(where + ".transitions", "unknown chart in key '" + key + "'");
      if (s < E.s_min() || s > E.s_max())
        schema_fail(where + ".transitions", "degree out of range in key '" + key + "'");
      const ChartSet cs = scheme->pair(iit->second, jit->second);
      try {
        E.set_transition(iit->second, jit->second, s,
                         matrix_from_json(jm, E.rank(iit->second, s), E.rank(jit->second, s), cs,
                                          ring, where + ".transitions." + key));
      } catch (const std::invalid_argument& e) {
        schema_fail(where + ".transitions." + key, e.what());
      }
    }
    if (!E.transitions_complete())
      schema_fail(where + ".transitions", "a transition lift is missing for an ordered pair");

    if (jc.contains("differentials")) {
      const Json& jdiff = jc.at("differentials");
      if (!jdiff.is_object()) schema_fail(where + ".differentials", "expected an object");
      for (const auto& [key, jm] : jdiff.items()) {
        const auto [cname, s] = split_at_key(key, where + ".differentials");
        const auto it = chart_index.find(cname);
        if (it == chart_index.end())
          schema_fail(where + ".differentials", "unknown chart in key '" + key + "'");
        try {
          E.set_differential(it->second, s,
                             matrix_from_json(jm, E.rank(it->second, s + 1), E.rank(it->second, s),
                                              scheme->single(it->second), ring,
                                              where + ".differentials." + key));
        } catch (const std::invalid_argument& e) {
          schema_fail(where + ".differentials." + key, e.what());
        }
      }
    }
    problem.complexes.emplace(name, std::move(E));
  }
  return problem;
}

Problem parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_problem_json(j);
}

Json problem_to_json(const Problem& p) {
  const ChartedScheme& X = *p.scheme;
  Json root;
  root["variables"] = X.ring()->variables();
  Json ideal = Json::array();
  for (const auto& g : X.ideal()) ideal.push_back(g.str());
  root["ideal"] = std::move(ideal);
  Json charts = Json::array();
  for (const auto& c : X.cover().charts()) charts.push_back(Json{{"name", c.name}, {"f", c.f.str()}});
  root["charts"] = std::move(charts);

  Json complexes = Json::object();
  for (const auto& [name, E] : p.complexes) {
    Json jc;
    jc["degrees"] = Json::array({E.s_min(), E.s_max()});
    Json ranks = Json::object();
    for (std::size_t i = 0; i < X.cover().size(); ++i) {
      Json degmap = Json::object();
      for (int s = E.s_min(); s <= E.s_max(); ++s)
        degmap[std::to_string(s)] = E.rank(i, s);
      ranks[X.cover().chart(i).name] = std::move(degmap);
    }
    jc["ranks"] = std::move(ranks);
    Json trans = Json::object();
    for (std::size_t i = 0; i < X.cover().size(); ++i)
      for (std::size_t j = 0; j < X.cover().size(); ++j) {
        if (i == j) continue;
        for (int s = E.s_min(); s <= E.s_max(); ++s) {
          if (E.rank(i, s) == 0 || E.rank(j, s) == 0) continue;
          const std::string key = X.cover().chart(i).name + "->" + X.cover().chart(j).name + "@" +
                                  std::to_string(s);
          trans[key] = matrix_to_json(E.transition(i, j, s));
        }
      }
    jc["transitions"] = std::move(trans);
    Json diff = Json::object();
    for (std::size_t i = 0; i < X.cover().size(); ++i)
      for (int s = E.s_min(); s < E.s_max(); ++s) {
        if (E.differential_is_zero(i, s)) continue;
        diff[X.cover().chart(i).name + "@" + std::to_string(s)] = matrix_to_json(E.differential(i, s));
      }
    jc["differentials"] = std::move(diff);
    complexes[name] = std::move(jc);
  }
  root["complexes"] = std::move(complexes);
  return root;
}

namespace {

Json conormal_cochain_to_json(const ConormalCochain& c) {
  Json out = Json::array();
  for (const auto& [indices, m] : c.entries) {
    Json e;
    e["charts"] = indices;
    e["matrix"] = matrix_to_json(m);
    out.push_back(std::move(e));
  }
  return out;
}

Json form_cochain_to_json(const FormCochain& c) {
  Json out = Json::array();
  for (const auto& [indices, m] : c.entries) {
    Json e;
    e["charts"] = indices;
    e["matrix"] = form_matrix_to_json(m);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Json to_json(const ChartedScheme& X, const TruncatedAtiyahRep& rep) {
  (void)X;
  Json root;
  root["kind"] = "truncated-atiyah";
  Json degrees = Json::object();
  for (int s = rep.s_min; s <= rep.s_max; ++s) {
    Json fam;
    fam["T1"] = conormal_cochain_to_json(rep.t1.at(s));
    fam["T2"] = form_cochain_to_json(rep.t2.at(s));
    fam["T3"] = conormal_cochain_to_json(rep.t3.at(s));
    fam["T4"] = form_cochain_to_json(rep.t4.at(s));
    fam["T5"] = conormal_cochain_to_json(rep.t5.at(s));
    degrees[std::to_string(s)] = std::move(fam);
  }
  root["degrees"] = std::move(degrees);
  return root;
}

Json to_json(const ChartedScheme& X, const ClassicalAtiyahRep& rep) {
  (void)X;
  Json root;
  root["kind"] = "classical-atiyah";
  Json degrees = Json::object();
  for (int s = rep.s_min; s <= rep.s_max; ++s) {
    Json fam;
    fam["P1"] = form_cochain_to_json(rep.p1.at(s));
    fam["P2"] = form_cochain_to_json(rep.p2.at(s));
    degrees[std::to_string(s)] = std::move(fam);
  }
  root["degrees"] = std::move(degrees);
  return root;
}

Json to_json(const ChartedScheme& X, const TruncChernRep& rep) {
  (void)X;
  Json root;
  root["kind"] = "truncated-chern";
  root["c2"] = conormal_cochain_to_json(rep.c2);
  root["c1w"] = form_cochain_to_json(rep.c1w);
  return root;
}

Json to_json(const ChartedScheme& X, const ClassChernRep& rep) {
  (void)X;
  Json root;
  root["kind"] = "classical-chern";
  root["c1w"] = form_cochain_to_json(rep.c1w);
  return root;
}

namespace {

std::vector<std::size_t> charts_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_fail(where, "expected a chart index array");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    const long i = need_int(v, where);
    if (i < 0) schema_fail(where, "negative chart index");
    out.push_back(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

TruncatedAtiyahRep truncated_atiyah_from_json(const BundleComplex& E, const Json& j) {
  const ChartedScheme& X = *E.scheme();
  if (need_string(need(j, "kind", "$"), "$.kind") != "truncated-atiyah")
    schema_fail("$.kind", "expected truncated-atiyah");
  TruncatedAtiyahRep rep{E.s_min(), E.s_max(), {}, {}, {}, {}, {}};
  const Json& degrees = need(j, "degrees", "$");
  for (const auto& [dstr, fam] : degrees.items()) {
    const int s = std::stoi(dstr);
    auto load_conormal = [&](const char* key, int r, int tgt_off) {
      ConormalCochain c{r, s, s + tgt_off, {}};
      for (const auto& e : need(fam, key, "$.degrees")) {
        const auto indices = charts_from_json(need(e, "charts", key), key);
        const ChartSet cs = X.chart_set(indices);
        const std::size_t min = indices.front();
        c.entries.emplace(indices,
                          matrix_from_json(need(e, "matrix", key), E.rank(min, s + tgt_off),
                                           E.rank(min, s), cs, E.ring(), key));
      }
      return c;
    };
    auto load_form = [&](const char* key, int r, int tgt_off) {
      FormCochain c{r, s, s + tgt_off, {}};
      for (const auto& e : need(fam, key, "$.degrees")) {
        const auto indices = charts_from_json(need(e, "charts", key), key);
        const ChartSet cs = X.chart_set(indices);
        const std::size_t min = indices.front();
        c.entries.emplace(indices,
                          form_matrix_from_json(need(e, "matrix", key), E.rank(min, s + tgt_off),
                                                E.rank(min, s), cs, E.ring(), key));
      }
      return c;
    };
    rep.t1.emplace(s, load_conormal("T1", 2, 0));
    rep.t2.emplace(s, load_form("T2", 1, 0));
    rep.t3.emplace(s, load_conormal("T3", 1, 1));
    rep.t4.emplace(s, load_form("T4", 0, 1));
    rep.t5.emplace(s, load_conormal("T5", 0, 2));
  }
  return rep;
}

TruncChernRep trunc_chern_from_json(const SchemePtr& X, const Json& j) {
  if (need_string(need(j, "kind", "$"), "$.kind") != "truncated-chern")
    schema_fail("$.kind", "expected truncated-chern");
  TruncChernRep rep{ConormalCochain{2, 0, 0, {}}, FormCochain{1, 0, 0, {}}};
  for (const auto& e : need(j, "c2", "$")) {
    const auto indices = charts_from_json(need(e, "charts", "$.c2"), "$.c2");
    const ChartSet cs = X->chart_set(indices);
    rep.c2.entries.emplace(indices,
                           matrix_from_json(need(e, "matrix", "$.c2"), 1, 1, cs, X->ring(), "$.c2"));
  }
  for (const auto& e : need(j, "c1w", "$")) {
    const auto indices = charts_from_json(need(e, "charts", "$.c1w"), "$.c1w");
    const ChartSet cs = X->chart_set(indices);
    rep.c1w.entries.emplace(
        indices, form_matrix_from_json(need(e, "matrix", "$.c1w"), 1, 1, cs, X->ring(), "$.c1w"));
  }
  return rep;
}

}  // namespace atc
