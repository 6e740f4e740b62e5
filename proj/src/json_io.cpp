#include "qhs/json_io.hpp"

#include <sstream>

namespace qhs {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json sparse_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) entries.push_back(Json::array({i, j, m(i, j).str()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return Json{{"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

Json to_json(const LieAlgebra& l) {
  Json triples = Json::array();
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i + 1; j < l.dim(); ++j)
      for (int k = 0; k < l.dim(); ++k)
        if (!l.c(i, j, k).is_zero()) triples.push_back(Json::array({i, j, k, l.c(i, j, k).str()}));
  return Json{{"dim", l.dim()}, {"basis_names", l.basis_names()}, {"structure", std::move(triples)}};
}

Json to_json(const Representation& r) {
  Json action = Json::array();
  for (const auto& m : r.action) action.push_back(sparse_to_json(m));
  return Json{{"algebra", to_json(r.algebra)},
              {"module_dim", r.module_dim},
              {"action", std::move(action)}};
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::object();
  for (const auto& [e, c] : p.terms()) {
    std::ostringstream key;
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) key << ",";
      key << e[i];
    }
    terms[key.str()] = c.str();
  }
  return Json{{"variables", p.variables()}, {"terms", std::move(terms)}, {"text", p.str()}};
}

Json to_json(const FourForm& f) {
  Json obj = Json::object();
  for (const auto& [idx, c] : f.coeff) {
    std::ostringstream key;
    key << "[" << idx[0] << "," << idx[1] << "," << idx[2] << "," << idx[3] << "]";
    obj[key.str()] = c.str();
  }
  return obj;
}

Json to_json(const GoursatQuintuple& q) {
  Json chartA = Json::array(), chartB = Json::array();
  for (const auto& v : q.chartA) chartA.push_back(to_json(v));
  for (const auto& v : q.chartB) chartB.push_back(to_json(v));
  return Json{{"A", to_json(q.A)},       {"A0", to_json(q.A0)},   {"B", to_json(q.B)},
              {"B0", to_json(q.B0)},     {"chartA", std::move(chartA)},
              {"chartB", std::move(chartB)}, {"theta", to_json(q.theta)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational(j.get<std::string>());
  throw std::invalid_argument("rational_from_json: expected string or integer");
}

std::array<Rational, 7> params_from_json(const Json& j, bool* was_full_seven) {
  bool full = j.contains("a") || j.contains("b") || j.contains("c") || j.contains("d");
  if (was_full_seven) *was_full_seven = full;
  if (full) {
    std::array<Rational, 7> out;
    for (int i = 0; i < 7; ++i) {
      const char* name = family::kParamNames[i];
      if (!j.contains(name))
        throw std::invalid_argument(std::string("params: missing '") + name + "'");
      out[i] = rational_from_json(j.at(name));
    }
    return out;
  }
  for (const char* name : {"a1", "a2", "a3"})
    if (!j.contains(name))
      throw std::invalid_argument(std::string("params: missing '") + name + "'");
  return family::complete_params(rational_from_json(j.at("a1")), rational_from_json(j.at("a2")),
                                 rational_from_json(j.at("a3")));
}

}  // namespace qhs
