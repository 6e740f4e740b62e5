#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhs/json_io.hpp"

namespace qhs::cmd {

struct CheckRow {
  std::string name;
  std::string paper_anchor;  // statement label the check certifies, or "plumbing"
  std::string status;        // pass | fail | undecided | control
  Json details;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<CheckRow> checks;
  long runtime_ms = 0;

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
  /// schema-versioned JSON; timing is emitted only on request so that
  /// reports are byte-identical across runs.
  Json to_json(bool with_timing = false) const;
};

struct FamilyVerifyOptions {
  std::array<Rational, 7> params;
  bool full_seven = false;
};
Report family_verify(const FamilyVerifyOptions& opt);

struct DeriveConstraintsOptions {
  int samples = 1000;
  std::uint64_t seed = 1;
};
Report derive_constraints(const DeriveConstraintsOptions& opt);

struct Lemma31Options {
  int n = 3;
  bool exact = false;  // full rational elimination instead of the mod-p path
};
Report lemma31(const Lemma31Options& opt);

struct GoursatOptions {
  bool demo = true;
  int random_count = 0;
  std::uint64_t seed = 1;
  std::string ambient = "so3+so3";  // so3+so3 | sp1+sp1 | so12+so3
};
Report goursat_cmd(const GoursatOptions& opt);

struct FourformOptions {
  int n = 2;
};
Report fourform(const FourformOptions& opt);

struct SweepOptions {
  std::vector<std::array<Rational, 3>> grid;
};
Report sweep(const SweepOptions& opt, std::vector<Json>* rows_out);

/// "a1=-1..1;a2=-1..1;a3=-1..1;step=1" -> grid points, row-major in (a1,a2,a3).
std::vector<std::array<Rational, 3>> parse_grid_spec(const std::string& spec);

}  // namespace qhs::cmd
