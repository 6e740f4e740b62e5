#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhs/commands.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const qhs::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object report_to_py(const qhs::cmd::Report& rep) { return json_to_py(rep.to_json()); }

qhs::Rational rat(const std::string& s) { return qhs::Rational(s); }

std::array<qhs::Rational, 7> params_from_triple(const std::string& a1, const std::string& a2,
                                                const std::string& a3) {
  return qhs::family::complete_params(rat(a1), rat(a2), rat(a3));
}

}  // namespace

PYBIND11_MODULE(_qhs, m) {
  m.doc() = "exact verification toolkit for the 12-dimensional quaternionic bracket family";

  m.def(
      "complete_params",
      [](const std::string& a1, const std::string& a2, const std::string& a3) {
        auto p = params_from_triple(a1, a2, a3);
        py::dict d;
        for (int i = 0; i < 7; ++i) d[qhs::family::kParamNames[i]] = p[i].str();
        return d;
      },
      py::arg("a1"), py::arg("a2"), py::arg("a3"),
      "Complete free coefficients (a1, a2, a3) to a full solution of the constraint system.");

  m.def("paper_system", [] {
    std::vector<std::string> out;
    for (const auto& p : qhs::family::paper_system()) out.push_back(p.str());
    return out;
  });

  m.def("jacobi_constraint_ideal", [] {
    std::vector<std::string> out;
    for (const auto& p : qhs::family::jacobi_constraint_ideal()) out.push_back(p.str());
    return out;
  });

  m.def(
      "jacobi_defect",
      [](const std::string& a1, const std::string& a2, const std::string& a3) {
        auto fam = qhs::family::build(params_from_triple(a1, a2, a3));
        return qhs::jacobi_defect(fam.algebra).max_defect.str();
      },
      py::arg("a1"), py::arg("a2"), py::arg("a3"));

  m.def(
      "family_verify",
      [](const std::string& a1, const std::string& a2, const std::string& a3) {
        qhs::cmd::FamilyVerifyOptions opt;
        opt.params = params_from_triple(a1, a2, a3);
        return report_to_py(qhs::cmd::family_verify(opt));
      },
      py::arg("a1"), py::arg("a2"), py::arg("a3"));

  m.def(
      "family_verify_full",
      [](const std::vector<std::string>& seven) {
        if (seven.size() != 7) throw std::invalid_argument("expected seven coefficients");
        qhs::cmd::FamilyVerifyOptions opt;
        opt.full_seven = true;
        for (int i = 0; i < 7; ++i) opt.params[i] = rat(seven[i]);
        return report_to_py(qhs::cmd::family_verify(opt));
      },
      py::arg("coefficients"));

  m.def(
      "derive_constraints",
      [](int samples, std::uint64_t seed) {
        return report_to_py(qhs::cmd::derive_constraints({samples, seed}));
      },
      py::arg("samples") = 1000, py::arg("seed") = 1);

  m.def(
      "lemma31",
      [](int n, bool exact) { return report_to_py(qhs::cmd::lemma31({n, exact})); },
      py::arg("n"), py::arg("exact") = false);

  m.def(
      "goursat",
      [](bool demo, int random_count, std::uint64_t seed, const std::string& ambient) {
        return report_to_py(qhs::cmd::goursat_cmd({demo, random_count, seed, ambient}));
      },
      py::arg("demo") = true, py::arg("random_count") = 0, py::arg("seed") = 1,
      py::arg("ambient") = "so3+so3");

  m.def(
      "fourform", [](int n) { return report_to_py(qhs::cmd::fourform({n})); }, py::arg("n") = 2);

  m.def(
      "sweep",
      [](const std::string& grid_spec) {
        std::vector<qhs::Json> rows;
        qhs::cmd::Report rep = qhs::cmd::sweep({qhs::cmd::parse_grid_spec(grid_spec)}, &rows);
        py::list out;
        for (const auto& r : rows) out.append(json_to_py(r));
        py::dict d;
        d["report"] = report_to_py(rep);
        d["rows"] = out;
        return d;
      },
      py::arg("grid_spec"));

  m.def(
      "symmetry_status",
      [](const std::string& a1, const std::string& a2, const std::string& a3) {
        auto v = qhs::family::symmetry_status(params_from_triple(a1, a2, a3));
        py::dict d;
        switch (v.status) {
          case qhs::family::SymmetryVerdict::Status::Symmetric:
            d["status"] = "symmetric";
            d["closing_parameter"] = v.closing_parameter->str();
            break;
          case qhs::family::SymmetryVerdict::Status::NonSymmetric:
            d["status"] = "non-symmetric";
            break;
          case qhs::family::SymmetryVerdict::Status::UndecidedOverQ:
            d["status"] = "undecided-over-Q";
            break;
        }
        d["complement_family_dim"] = v.complement_family_dim;
        d["imaginary_block_in_every_complement"] = v.imaginary_block_in_every_complement;
        py::list ws;
        for (const auto& br : v.witnesses) {
          py::dict w;
          w["i"] = br.i;
          w["j"] = br.j;
          w["coord"] = br.coord;
          w["residual"] = br.poly.str();
          ws.append(w);
        }
        d["witnesses"] = ws;
        return d;
      },
      py::arg("a1"), py::arg("a2"), py::arg("a3"));
}
