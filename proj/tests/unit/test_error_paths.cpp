#include <doctest.h>

#include "qhs/commands.hpp"
#include "qhs/geo.hpp"
#include "qhs/modp.hpp"
#include "qhs/tensors.hpp"

using namespace qhs;

TEST_CASE("decompose reports non-rational splitting instead of guessing") {
  // so(2) acting on R^2: the commutant is a field of degree 2 over Q, so no
  // commutant element has a rational eigenvalue although the commutant is
  // not scalars.
  LieAlgebra so2({"J"});
  Matrix j{{0, -1}, {1, 0}};
  Representation r{so2, 2, {j}};
  CHECK_THROWS_WITH_AS(decompose(r), doctest::Contains("non-rational splitting"),
                       std::runtime_error);
  // and the irreducibility guard turns that into an explicit undecided
  Matrix i2 = Matrix::identity(2);
  auto rep = h_irreducibility_report(r, i2, i2, i2);
  CHECK(rep.verdict == IrreducibilityReport::Verdict::Undecided);
}

TEST_CASE("mod-p shortcut refuses positive-dimensional claims") {
  // The n = 2 alternating system has a 40-dimensional kernel; the mod-p
  // certificate can only ever prove dimension zero.
  auto ar = geo::so1n_on_quaternionic(2);
  TensorSolveOptions opt;
  opt.max_columns = 10;
  opt.modp_certificate = true;
  CHECK_THROWS_WITH_AS(invariant_tensors(ar.rep, TensorShape::AltSquareDualTimesV, opt),
                       doctest::Contains("mod-p kernel is nonzero"), std::runtime_error);
}

TEST_CASE("mod-p stacked fallback when every combination is singular") {
  // B1 = E11, B2 = E12: any combination has a zero second row, but the
  // joint kernel is trivial and the stacked elimination certifies it.
  modp::SparseRow r11{{{0, 1}}};
  modp::SparseRow r12{{{1, 1}}};
  modp::SparseRow zero{};
  std::vector<std::vector<modp::SparseRow>> blocks = {{r11, zero}, {r12, zero}};
  CHECK(modp::zero_kernel_certificate(blocks, 2, modp::kPrimes[0], 1));
  // a genuinely nonzero joint kernel is never certified
  std::vector<std::vector<modp::SparseRow>> degenerate = {{r11, zero}, {r11, zero}};
  CHECK(!modp::zero_kernel_certificate(degenerate, 2, modp::kPrimes[0], 1));
}

TEST_CASE("rational mod p rejects denominators divisible by p") {
  CHECK(Rational(7, 3).mod_p(5) == 4);   // 7 * inv(3) = 2 * 2 = 4 (mod 5)
  CHECK(Rational(-7, 3).mod_p(5) == 1);  // negative numerators normalize
  CHECK(Rational(0).mod_p(5) == 0);
  CHECK_THROWS_AS(Rational(1, 5).mod_p(5), std::domain_error);
}

TEST_CASE("restrict_to rejects non-invariant subspaces") {
  auto so3 = geo::so_pq(0, 3);
  Subspace line = Subspace::span(3, {basis_vec(3, 0)});
  CHECK_THROWS_AS(restrict_to(so3.rep, line), std::invalid_argument);
}

TEST_CASE("equivariant_homs rejects mismatched algebras") {
  auto so3 = geo::so_pq(0, 3);
  auto so12 = geo::so_pq(1, 2);
  Representation r1 = so3.rep;
  Representation r2{direct_sum(so3.algebra, so12.algebra).sum, 3, {}};
  for (int i = 0; i < 6; ++i) r2.action.push_back(Matrix::zero(3, 3));
  CHECK_THROWS_AS(equivariant_homs(r1, r2), std::invalid_argument);
}

TEST_CASE("sweep rows are deterministic across runs") {
  auto grid = cmd::parse_grid_spec("a1=-1..1;a2=-1;a3=0..1;step=1/2");
  std::vector<Json> rows1, rows2;
  cmd::sweep({grid}, &rows1);
  cmd::sweep({grid}, &rows2);
  REQUIRE(rows1.size() == rows2.size());
  for (size_t i = 0; i < rows1.size(); ++i) CHECK(rows1[i].dump() == rows2[i].dump());
}
