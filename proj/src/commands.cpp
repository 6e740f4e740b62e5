#include "qhs/commands.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "qhs/fourform.hpp"
#include "qhs/geo.hpp"
#include "qhs/goursat.hpp"

namespace qhs::cmd {

namespace {

constexpr const char* kAnchorGoursat = "Lemma 2.1";
constexpr const char* kAnchorInventory = "Proposition 2.5(i)";
constexpr const char* kAnchorLemma31 = "Lemma 3.1";
constexpr const char* kAnchorBilinear = "Remark 3.2";
constexpr const char* kAnchorFourForm = "§3.1 fundamental 4-form";
constexpr const char* kAnchorBracket = "§3.2 bracket family";
constexpr const char* kAnchorSystem = "§3.2 constraint system (1)-(4)";
constexpr const char* kAnchorNonSym = "§3.2 non-symmetry";
constexpr const char* kAnchorClass = "Proposition 3.4";
constexpr const char* kAnchorPlumbing = "plumbing";

Json params_json(const std::array<Rational, 7>& p) {
  Json j = Json::object();
  for (int i = 0; i < 7; ++i) j[family::kParamNames[i]] = p[i].str();
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
  }
};

}  // namespace

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

Json Report::to_json(bool with_timing) const {
  Json rows = Json::array();
  for (const auto& c : checks)
    rows.push_back(Json{{"name", c.name},
                        {"paper_anchor", c.paper_anchor},
                        {"status", c.status},
                        {"details", c.details}});
  Json j{{"schema", 1}, {"command", command}, {"inputs", inputs}, {"checks", std::move(rows)},
         {"ok", all_pass()}};
  if (with_timing) j["runtime_ms"] = runtime_ms;
  return j;
}

Report family_verify(const FamilyVerifyOptions& opt) {
  Timer timer;
  Report rep;
  rep.command = "family-verify";
  rep.inputs = Json{{"params", params_json(opt.params)}, {"full_seven", opt.full_seven}};

  std::map<std::string, Rational> assign;
  for (int i = 0; i < 7; ++i) assign[family::kParamNames[i]] = opt.params[i];
  Json violated = Json::array();
  for (const auto& p : family::paper_system())
    if (!p.eval(assign).is_zero()) violated.push_back(p.str());
  bool member = violated.empty();
  rep.checks.push_back({"constraint-membership", kAnchorSystem, member ? "pass" : "fail",
                        Json{{"violated", violated}}});

  family::FamilyAlgebra fam = family::build(opt.params);
  JacobiReport jac = jacobi_defect(fam.algebra);
  rep.checks.push_back({"jacobi-defect", kAnchorBracket, jac.holds() ? "pass" : "fail",
                        Json{{"max_defect", jac.max_defect.str()},
                             {"violating_triples", jac.violations.size()}}});

  Rational ad_defect = family::ad_equivariance_defect(fam);
  rep.checks.push_back({"ad-equivariance", kAnchorBracket, ad_defect.is_zero() ? "pass" : "fail",
                        Json{{"max_defect", ad_defect.str()}}});

  if (!member) {
    rep.checks.push_back(
        {"symmetry", kAnchorNonSym, "fail", Json{{"error", "not a Lie algebra"}}});
  } else {
    family::SymmetryVerdict v = family::symmetry_status(opt.params);
    Json details{{"complement_family_dim", v.complement_family_dim},
                 {"imaginary_block_in_every_complement", v.imaginary_block_in_every_complement},
                 {"note", v.note}};
    std::string status = "pass";
    switch (v.status) {
      case family::SymmetryVerdict::Status::Symmetric:
        details["verdict"] = "symmetric";
        details["closing_parameter"] = v.closing_parameter->str();
        break;
      case family::SymmetryVerdict::Status::NonSymmetric: {
        details["verdict"] = "non-symmetric";
        details["universal_single_pair"] = v.universal_single_pair;
        Json ws = Json::array();
        for (size_t w = 0; w < v.witnesses.size() && w < 4; ++w) {
          const auto& br = v.witnesses[w];
          ws.push_back(Json{{"i", br.i}, {"j", br.j}, {"coord", br.coord},
                            {"residual", br.poly.str()}});
        }
        details["witnesses"] = ws;
        break;
      }
      case family::SymmetryVerdict::Status::UndecidedOverQ:
        details["verdict"] = "undecided-over-Q";
        status = "undecided";
        break;
    }
    rep.checks.push_back({"symmetry", kAnchorNonSym, status, details});
  }
  rep.runtime_ms = timer.ms();
  return rep;
}

Report derive_constraints(const DeriveConstraintsOptions& opt) {
  Timer timer;
  Report rep;
  rep.command = "derive-constraints";
  rep.inputs = Json{{"samples", opt.samples}, {"seed", opt.seed}};

  std::vector<MultiPoly> ideal = family::jacobi_constraint_ideal();
  std::vector<MultiPoly> displayed = family::paper_system();

  Json ideal_json = Json::array();
  for (const auto& p : ideal) ideal_json.push_back(p.str());
  Json displayed_json = Json::array();
  for (const auto& p : displayed) displayed_json.push_back(p.str());
  rep.checks.push_back({"derived-ideal", kAnchorSystem, "pass",
                        Json{{"generators", ideal_json}, {"count", ideal.size()}}});

  family::EquivalenceReport eq =
      family::constraints_equivalent(ideal, displayed, opt.samples, opt.seed);
  Json eqd{{"verdict", eq.verdict},
           {"forward_exact", eq.forward_exact},
           {"backward_exact", eq.backward_exact},
           {"samples", eq.samples},
           {"mismatches", eq.mismatches},
           {"displayed_system", displayed_json}};
  if (eq.counterexample) {
    Json pt = Json::object();
    for (const auto& [k2, v2] : *eq.counterexample) pt[k2] = v2.str();
    eqd["counterexample"] = pt;
  }
  rep.checks.push_back({"equivalence", kAnchorSystem,
                        eq.verdict == "equivalent (exact+sampled)" ? "pass" : "fail", eqd});

  family::Parametrization par = family::solve_paper_system();
  bool eq4_redundant = par.substituted.size() == 5 && par.substituted[4].is_zero();
  Json par_json = Json::object();
  for (const auto& [k2, v2] : par.assignment) par_json[k2] = v2.str();
  rep.checks.push_back({"eq4-redundancy", kAnchorClass, eq4_redundant ? "pass" : "fail",
                        Json{{"substituted_eq4", par.substituted.empty()
                                                     ? std::string("-")
                                                     : par.substituted.back().str()},
                             {"parametrization", par_json},
                             {"exhaustive", par.exhaustive},
                             {"residuals_vanish", par.residuals_vanish}}});
  rep.runtime_ms = timer.ms();
  return rep;
}

Report lemma31(const Lemma31Options& opt) {
  Timer timer;
  Report rep;
  rep.command = "lemma31";
  rep.inputs = Json{{"n", opt.n}, {"exact", opt.exact}};
  if (opt.n != 2 && opt.n != 3)
    throw std::invalid_argument("lemma31: n must be 2 or 3 (size budget)");

  geo::AlgebraRep ar = geo::so1n_on_quaternionic(opt.n);
  if (opt.n == 3) {
    TensorSolveOptions topt;
    topt.modp_certificate = !opt.exact;
    topt.force_exact = opt.exact;
    TensorSolveResult res = invariant_tensors(ar.rep, TensorShape::TensorCubeDual, topt);
    rep.checks.push_back({"invariant-cube-dimension", kAnchorLemma31,
                          res.dimension == 0 ? "pass" : "fail",
                          Json{{"dimension", res.dimension},
                               {"columns", res.columns},
                               {"path", res.certificate_only ? "mod-p certificate" : "exact"}}});
  } else {
    TensorSolveOptions topt;
    topt.force_exact = true;
    TensorSolveResult res = invariant_tensors(ar.rep, TensorShape::AltSquareDualTimesV, topt);
    rep.checks.push_back({"equivariant-alternating-maps", kAnchorBilinear,
                          res.dimension > 0 ? "pass" : "fail",
                          Json{{"dimension", res.dimension}, {"columns", res.columns},
                               {"path", "exact"}}});
  }
  rep.runtime_ms = timer.ms();
  return rep;
}

namespace {

SumAlgebra make_ambient(const std::string& name) {
  if (name == "so3+so3") return direct_sum(geo::so_pq(0, 3).algebra, geo::so_pq(0, 3).algebra);
  if (name == "sp1+sp1") return direct_sum(geo::sp1_algebra(), geo::sp1_algebra());
  if (name == "so12+so3") return direct_sum(geo::so_pq(1, 2).algebra, geo::so_pq(0, 3).algebra);
  throw std::invalid_argument("goursat: unknown ambient '" + name + "'");
}

bool roundtrip_ok(const SumAlgebra& s, const Subspace& h, Json& details) {
  GoursatQuintuple q = extract(s, h);
  validate(s, q);
  Subspace back = reconstruct(s, q);
  bool ok = back == h;
  details = Json{{"dim_h", h.dim()},
                 {"dim_A", q.A.dim()},
                 {"dim_A0", q.A0.dim()},
                 {"dim_B", q.B.dim()},
                 {"dim_B0", q.B0.dim()},
                 {"quotient_dim", q.chartA.size()},
                 {"roundtrip_equal", ok}};
  return ok;
}

}  // namespace

Report goursat_cmd(const GoursatOptions& opt) {
  Timer timer;
  Report rep;
  rep.command = "goursat";
  rep.inputs = Json{{"demo", opt.demo},
                    {"random", opt.random_count},
                    {"seed", opt.seed},
                    {"ambient", opt.ambient}};

  if (opt.demo) {
    // Diagonal sp(1) inside sp(1) ⊕ sp(1).
    {
      SumAlgebra s = direct_sum(geo::sp1_algebra(), geo::sp1_algebra());
      std::vector<Vec> gens;
      for (int m = 0; m < 3; ++m) {
        Vec v(6);
        v[m] = 1;
        v[3 + m] = 1;
        gens.push_back(std::move(v));
      }
      Json d;
      bool ok = roundtrip_ok(s, Subspace::span(6, gens), d);
      rep.checks.push_back({"demo-diagonal", kAnchorGoursat, ok ? "pass" : "fail", d});
    }
    // The diagonal algebra c inside sp(1)·1 ⊕ sp(1).
    {
      SumAlgebra s = direct_sum(geo::sp1_scalar(2).algebra, geo::sp1_algebra());
      std::vector<Vec> gens;
      for (int m = 0; m < 3; ++m) {
        Vec v(6);
        v[m] = 1;
        v[3 + m] = 1;
        gens.push_back(std::move(v));
      }
      Subspace h = Subspace::span(6, gens);
      Json d;
      bool ok = roundtrip_ok(s, h, d);
      GoursatQuintuple q = extract(s, h);
      bool projections_full = q.A.dim() == 3 && q.B.dim() == 3 && q.A0.dim() == 0 &&
                              q.B0.dim() == 0;
      d["projections_full_slices_zero"] = projections_full;
      rep.checks.push_back(
          {"demo-diagonal-scalar-algebra", kAnchorInventory,
           ok && projections_full ? "pass" : "fail", d});
    }
    // The full direct sum.
    {
      SumAlgebra s = make_ambient("so3+so3");
      Json d;
      bool ok = roundtrip_ok(s, Subspace::full(6), d);
      rep.checks.push_back({"demo-full-sum", kAnchorGoursat, ok ? "pass" : "fail", d});
    }
  }

  if (opt.random_count > 0) {
    SumAlgebra s = make_ambient(opt.ambient);
    int pass = 0;
    Json failures = Json::array();
    for (int k = 0; k < opt.random_count; ++k) {
      Subspace h = random_subalgebra(s, k % 4, opt.seed + static_cast<std::uint64_t>(k));
      Json d;
      if (roundtrip_ok(s, h, d))
        ++pass;
      else
        failures.push_back(Json{{"case", k}, {"details", d}});
    }
    rep.checks.push_back({"random-roundtrips", kAnchorGoursat,
                          pass == opt.random_count ? "pass" : "fail",
                          Json{{"requested", opt.random_count},
                               {"passed", pass},
                               {"failures", failures}}});
  }
  rep.runtime_ms = timer.ms();
  return rep;
}

Report fourform(const FourformOptions& opt) {
  Timer timer;
  Report rep;
  rep.command = "fourform";
  rep.inputs = Json{{"n", opt.n}};
  if (opt.n < 1 || opt.n > 3) throw std::invalid_argument("fourform: n must be in 1..3");

  geo::QuaternionicModule q = geo::quaternionic_module(opt.n);
  FourForm omega = fundamental_4form(q);

  geo::AlgebraRep sp = geo::sp1n(opt.n);
  std::vector<std::pair<std::string, const Matrix*>> gens;
  for (size_t i = 0; i < sp.rep.action.size(); ++i)
    gens.emplace_back("sp1n:" + sp.algebra.basis_names()[i], &sp.rep.action[i]);
  std::vector<Matrix> right = geo::right_sp1_matrices(opt.n);
  const char* rn[] = {"right:I", "right:J", "right:K"};
  for (int i = 0; i < 3; ++i) gens.emplace_back(rn[i], &right[i]);

  int checked = 0, zero = 0;
  Json nonzero = Json::array();
  for (const auto& [name, m] : gens) {
    Rational d = four_form_invariance_defect(omega, *m);
    ++checked;
    if (d.is_zero())
      ++zero;
    else
      nonzero.push_back(Json{{"generator", name}, {"defect", d.str()}});
  }
  rep.checks.push_back({"generator-invariance", kAnchorFourForm,
                        zero == checked ? "pass" : "fail",
                        Json{{"generators_checked", checked},
                             {"zero_defects", zero},
                             {"nonzero", nonzero}}});

  // Negative control: an elementary matrix outside the algebra.
  {
    Matrix e01(q.dim, q.dim);
    e01(0, 1) = 1;
    Rational d = four_form_invariance_defect(omega, e01);
    rep.checks.push_back({"control-perturbed-generator", kAnchorPlumbing,
                          d.is_zero() ? "fail" : "control",
                          Json{{"generator", "E01 (not in the algebra)"}, {"defect", d.str()}}});
  }

  if (opt.n == 2) {
    // The isotropy algebra of the 12-dimensional family preserves the
    // quaternionic span: [rho(A), I] lies in span{I,J,K}.
    family::FamilyAlgebra fam = family::build({0, 0, 0, 0, 0, 0, 0});
    std::vector<Vec> span_ijk;
    for (const Matrix* s2 : {&q.I, &q.J, &q.K}) {
      Vec flat;
      for (int i = 0; i < q.dim; ++i)
        for (int j = 0; j < q.dim; ++j) flat.push_back((*s2)(i, j));
      span_ijk.push_back(std::move(flat));
    }
    bool all_in = true;
    for (const auto& a : fam.h_on_m.action)
      for (const Matrix* s2 : {&q.I, &q.J, &q.K}) {
        Matrix comm = Matrix::commutator(a, *s2);
        Vec flat;
        for (int i = 0; i < q.dim; ++i)
          for (int j = 0; j < q.dim; ++j) flat.push_back(comm(i, j));
        if (!coordinates_in_span(span_ijk, flat)) all_in = false;
      }
    rep.checks.push_back({"quaternionic-span-preserved", kAnchorFourForm,
                          all_in ? "pass" : "fail",
                          Json{{"generators", fam.h_on_m.action.size()}}});
  }
  rep.runtime_ms = timer.ms();
  return rep;
}

Report sweep(const SweepOptions& opt, std::vector<Json>* rows_out) {
  Timer timer;
  Report rep;
  rep.command = "sweep";
  rep.inputs = Json{{"points", opt.grid.size()}};

  std::vector<family::SweepRow> rows = family::classify_sweep(opt.grid);
  int symmetric = 0, nonsymmetric = 0, undecided = 0, jacobi_bad = 0;
  for (const auto& r : rows) {
    if (!r.jacobi_zero) ++jacobi_bad;
    if (r.verdict == "symmetric")
      ++symmetric;
    else if (r.verdict == "non-symmetric")
      ++nonsymmetric;
    else
      ++undecided;
    if (rows_out) {
      Json j{{"a1", r.free_values[0].str()},
             {"a2", r.free_values[1].str()},
             {"a3", r.free_values[2].str()},
             {"params", params_json(r.params)},
             {"jacobi_zero", r.jacobi_zero},
             {"verdict", r.verdict},
             {"witness", r.witness_summary}};
      rows_out->push_back(std::move(j));
    }
  }
  rep.checks.push_back({"sweep-classification", kAnchorClass, jacobi_bad == 0 ? "pass" : "fail",
                        Json{{"rows", rows.size()},
                             {"symmetric", symmetric},
                             {"non_symmetric", nonsymmetric},
                             {"undecided", undecided},
                             {"jacobi_failures", jacobi_bad}}});
  rep.runtime_ms = timer.ms();
  return rep;
}

std::vector<std::array<Rational, 3>> parse_grid_spec(const std::string& spec) {
  // "a1=-1..1;a2=-1..1;a3=0;step=1"
  std::array<std::pair<Rational, Rational>, 3> ranges = {
      std::pair<Rational, Rational>{0, 0}, {0, 0}, {0, 0}};
  std::array<bool, 3> seen = {false, false, false};
  Rational step(1);
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("grid: malformed '" + part + "'");
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    auto parse_range = [&](const std::string& v) {
      auto dots = v.find("..");
      if (dots == std::string::npos) {
        Rational x{v};
        return std::pair<Rational, Rational>{x, x};
      }
      return std::pair<Rational, Rational>{Rational(v.substr(0, dots)),
                                           Rational(v.substr(dots + 2))};
    };
    if (key == "step") {
      step = Rational(val);
      if (step.sign() <= 0) throw std::invalid_argument("grid: step must be positive");
    } else if (key == "a1" || key == "a2" || key == "a3") {
      int idx = key[1] - '1';
      ranges[idx] = parse_range(val);
      seen[idx] = true;
    } else {
      throw std::invalid_argument("grid: unknown key '" + key + "'");
    }
  }
  for (int i = 0; i < 3; ++i)
    if (!seen[i]) throw std::invalid_argument("grid: missing a1/a2/a3 range");
  std::vector<std::array<Rational, 3>> grid;
  for (Rational x = ranges[0].first; x <= ranges[0].second; x += step)
    for (Rational y = ranges[1].first; y <= ranges[1].second; y += step)
      for (Rational z = ranges[2].first; z <= ranges[2].second; z += step)
        grid.push_back({x, y, z});
  return grid;
}

}  // namespace qhs::cmd
