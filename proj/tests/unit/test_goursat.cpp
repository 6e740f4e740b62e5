#include <doctest.h>

#include "qhs/geo.hpp"
#include "qhs/goursat.hpp"
#include "qhs/json_io.hpp"

using namespace qhs;

namespace {

Subspace diagonal_h(int d) {
  std::vector<Vec> gens;
  for (int m = 0; m < d; ++m) {
    Vec v(2 * d);
    v[m] = 1;
    v[d + m] = 1;
    gens.push_back(std::move(v));
  }
  return Subspace::span(2 * d, gens);
}

}  // namespace

TEST_CASE("extract on the diagonal subalgebra") {
  SumAlgebra s = direct_sum(geo::sp1_algebra(), geo::sp1_algebra());
  GoursatQuintuple q = extract(s, diagonal_h(3));
  CHECK(q.A == Subspace::full(3));
  CHECK(q.B == Subspace::full(3));
  CHECK(q.A0.dim() == 0);
  CHECK(q.B0.dim() == 0);
  CHECK(q.theta == Matrix::identity(3));
}

TEST_CASE("extract on the diagonal algebra inside sp(1)·1 ⊕ sp(1)") {
  SumAlgebra s = direct_sum(geo::sp1_scalar(2).algebra, geo::sp1_algebra());
  Subspace h = diagonal_h(3);
  GoursatQuintuple q = extract(s, h);
  CHECK(q.A.dim() == 3);
  CHECK(q.B.dim() == 3);
  CHECK(q.A0.dim() == 0);
  CHECK(q.B0.dim() == 0);
  CHECK(reconstruct(s, q) == h);
}

TEST_CASE("extract on the full direct sum") {
  SumAlgebra s = direct_sum(geo::so_pq(0, 3).algebra, geo::so_pq(0, 3).algebra);
  Subspace h = Subspace::full(6);
  GoursatQuintuple q = extract(s, h);
  CHECK(q.A0 == q.A);
  CHECK(q.B0 == q.B);
  CHECK(q.A.dim() == 3);
  CHECK(q.chartA.empty());
  CHECK(q.theta.rows() == 0);
  CHECK(reconstruct(s, q) == h);
}

TEST_CASE("extract rejects non-subalgebras") {
  SumAlgebra s = direct_sum(geo::so_pq(0, 3).algebra, geo::so_pq(0, 3).algebra);
  Subspace bad = Subspace::span(6, {basis_vec(6, 0), basis_vec(6, 1)});
  CHECK_THROWS_AS(extract(s, bad), std::invalid_argument);
}

TEST_CASE("reconstruct simple quintuples") {
  SumAlgebra s = direct_sum(geo::sp1_algebra(), geo::sp1_algebra());
  // theta = identity on matched charts, A0 = B0 = 0 gives the diagonal
  GoursatQuintuple q{Subspace::full(3), Subspace(3), Subspace::full(3), Subspace(3),
                     {basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 2)},
                     {basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 2)},
                     Matrix::identity(3)};
  CHECK(reconstruct(s, q) == diagonal_h(3));

  // (A, A, B, B, trivial) reconstructs the direct sum A ⊕ B
  GoursatQuintuple q2{Subspace::full(3), Subspace::full(3), Subspace::full(3), Subspace::full(3),
                      {}, {}, Matrix(0, 0)};
  CHECK(reconstruct(s, q2) == Subspace::full(6));
}

TEST_CASE("validate names broken invariants") {
  SumAlgebra s = direct_sum(geo::sp1_algebra(), geo::sp1_algebra());
  // theta not a homomorphism: swap of two chart directions with a sign
  Matrix bad_theta(3, 3);
  bad_theta(0, 0) = 1;
  bad_theta(1, 2) = 1;
  bad_theta(2, 1) = 1;
  GoursatQuintuple q{Subspace::full(3), Subspace(3), Subspace::full(3), Subspace(3),
                     {basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 2)},
                     {basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 2)},
                     bad_theta};
  CHECK_THROWS_WITH_AS(validate(s, q), doctest::Contains("homomorphism"), std::invalid_argument);

  // singular theta
  GoursatQuintuple q2 = q;
  q2.theta = Matrix(3, 3);
  CHECK_THROWS_WITH_AS(validate(s, q2), doctest::Contains("singular"), std::invalid_argument);
}

TEST_CASE("quintuple serialization carries the five parts and theta") {
  SumAlgebra s = direct_sum(geo::sp1_algebra(), geo::sp1_algebra());
  GoursatQuintuple q = extract(s, diagonal_h(3));
  Json j = to_json(q);
  CHECK(j.at("A").at("basis").size() == 3);
  CHECK(j.at("A0").at("basis").empty());
  CHECK(j.at("theta") == to_json(Matrix::identity(3)));
}

TEST_CASE("random_subalgebra determinism and closure") {
  SumAlgebra s = direct_sum(geo::so_pq(0, 3).algebra, geo::so_pq(0, 3).algebra);
  CHECK(random_subalgebra(s, 0, 42).dim() == 0);
  Subspace h1 = random_subalgebra(s, 2, 42);
  Subspace h2 = random_subalgebra(s, 2, 42);
  CHECK(h1 == h2);
  CHECK(is_subalgebra(h1, s.sum));
  // generic seeds fill the whole algebra
  CHECK(random_subalgebra(s, 6, 1).dim() == 6);
}

TEST_CASE("round-trip over golden and random subalgebras in three ambients") {
  for (const char* which : {"so3+so3", "sp1+sp1", "so12+so3"}) {
    SumAlgebra s = std::string(which) == "so3+so3"
                       ? direct_sum(geo::so_pq(0, 3).algebra, geo::so_pq(0, 3).algebra)
                   : std::string(which) == "sp1+sp1"
                       ? direct_sum(geo::sp1_algebra(), geo::sp1_algebra())
                       : direct_sum(geo::so_pq(1, 2).algebra, geo::so_pq(0, 3).algebra);
    for (int k = 0; k < 20; ++k) {
      Subspace h = random_subalgebra(s, k % 4, 1000 + k);
      GoursatQuintuple q = extract(s, h);
      validate(s, q);
      CHECK(is_ideal_in(q.A0, q.A, s.g1));
      CHECK(is_ideal_in(q.B0, q.B, s.g2));
      CHECK(h.dim() == q.A0.dim() + q.B0.dim() + static_cast<int>(q.chartA.size()));
      CHECK(reconstruct(s, q) == h);
    }
  }
}
