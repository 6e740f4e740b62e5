#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qhs/commands.hpp"

namespace {

using qhs::Rational;
using qhs::cmd::Report;

void emit(const Report& rep, const std::string& out_path, bool timing) {
  std::string text = rep.to_json(timing).dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for the 12-dimensional quaternionic bracket family"};
  app.require_subcommand(1);

  std::string out_path;
  bool timing = false;
  app.add_option("--out", out_path, "write the JSON report to a file instead of stdout");
  app.add_flag("--timing", timing, "include runtime_ms in the report");

  // family-verify
  auto* fv = app.add_subcommand("family-verify", "check one parameter tuple");
  std::string fv_params_file, fv_a1, fv_a2, fv_a3, fv_a, fv_b, fv_c, fv_d;
  bool fv_full = false;
  fv->add_option("--params-file", fv_params_file, "JSON file with a1,a2,a3 or all seven");
  fv->add_option("--a1", fv_a1);
  fv->add_option("--a2", fv_a2);
  fv->add_option("--a3", fv_a3);
  fv->add_option("--a", fv_a);
  fv->add_option("--b", fv_b);
  fv->add_option("--c", fv_c);
  fv->add_option("--d", fv_d);
  fv->add_flag("--full-seven", fv_full, "take all seven coefficients literally");

  // derive-constraints
  auto* dc = app.add_subcommand("derive-constraints",
                                "derive the Jacobi constraint system and compare");
  int dc_samples = 1000;
  std::uint64_t dc_seed = 1;
  dc->add_option("--samples", dc_samples, "sampling certificate size");
  dc->add_option("--seed", dc_seed, "sampling seed");

  // lemma31
  auto* lm = app.add_subcommand("lemma31", "invariant tensor dimensions");
  int lm_n = 3;
  bool lm_exact = false;
  lm->add_option("--n", lm_n, "2 or 3");
  lm->add_flag("--exact", lm_exact, "full rational elimination (slow path)");

  // goursat
  auto* go = app.add_subcommand("goursat", "subalgebra quintuple round-trips");
  bool go_demo = false;
  int go_random = 0;
  std::uint64_t go_seed = 1;
  std::string go_ambient = "so3+so3";
  go->add_flag("--demo", go_demo, "run the three golden quintuples");
  go->add_option("--random", go_random, "number of random subalgebras");
  go->add_option("--seed", go_seed);
  go->add_option("--ambient", go_ambient, "so3+so3 | sp1+sp1 | so12+so3");

  // fourform
  auto* ff = app.add_subcommand("fourform", "fundamental 4-form invariance");
  int ff_n = 2;
  ff->add_option("--n", ff_n, "1, 2 or 3");

  // sweep
  auto* sw = app.add_subcommand("sweep", "classify a parameter grid");
  std::string sw_grid, sw_out;
  sw->add_option("--grid", sw_grid, "e.g. a1=-1..1;a2=-1..1;a3=-1..1;step=1")->required();
  sw->add_option("--rows-out", sw_out, "write the JSON-lines table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help; anything else is a usage error
  }

  try {
    Report rep;
    if (fv->parsed()) {
      qhs::cmd::FamilyVerifyOptions opt;
      if (!fv_params_file.empty()) {
        std::ifstream f(fv_params_file);
        if (!f) throw std::invalid_argument("cannot open '" + fv_params_file + "'");
        qhs::Json j = qhs::Json::parse(f);
        opt.params = qhs::params_from_json(j, &opt.full_seven);
      } else if (fv_full) {
        opt.full_seven = true;
        opt.params = {Rational(fv_a), Rational(fv_b), Rational(fv_c), Rational(fv_d),
                      Rational(fv_a1), Rational(fv_a2), Rational(fv_a3)};
      } else {
        if (fv_a1.empty() || fv_a2.empty() || fv_a3.empty())
          throw std::invalid_argument("family-verify needs --a1 --a2 --a3 or --params-file");
        opt.params =
            qhs::family::complete_params(Rational(fv_a1), Rational(fv_a2), Rational(fv_a3));
      }
      rep = qhs::cmd::family_verify(opt);
    } else if (dc->parsed()) {
      rep = qhs::cmd::derive_constraints({dc_samples, dc_seed});
    } else if (lm->parsed()) {
      rep = qhs::cmd::lemma31({lm_n, lm_exact});
    } else if (go->parsed()) {
      if (!go_demo && go_random == 0) go_demo = true;
      rep = qhs::cmd::goursat_cmd({go_demo, go_random, go_seed, go_ambient});
    } else if (ff->parsed()) {
      rep = qhs::cmd::fourform({ff_n});
    } else if (sw->parsed()) {
      std::vector<qhs::Json> rows;
      rep = qhs::cmd::sweep({qhs::cmd::parse_grid_spec(sw_grid)}, &rows);
      if (!sw_out.empty()) {
        std::ofstream f(sw_out);
        if (!f) throw std::invalid_argument("cannot open '" + sw_out + "'");
        for (const auto& r : rows) f << r.dump() << "\n";
      } else {
        for (const auto& r : rows) std::cout << r.dump() << "\n";
      }
    }
    emit(rep, out_path, timing);
    return rep.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
