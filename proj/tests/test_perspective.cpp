#include <doctest.h>

#include <cmath>

#include "qrf/errors.hpp"
#include "qrf/perspective.hpp"
#include "test_util.hpp"

using namespace qrf;

namespace {

FramePerspective bundled_perspective(const std::string& group,
                                     const std::string& rep) {
  FiniteGroup g = qrf::test::bundled_group(group);
  IrrepTable table = qrf::test::bundled_irreps(group);
  UnitaryRep u = qrf::test::bundled_rep(group, rep);
  return build_perspective(g, table, u);
}

}  // namespace

TEST_CASE("build_perspective produces a unitary block structure") {
  FramePerspective p = bundled_perspective("s3", "s3_std");
  const int d = p.frame_dim() * p.system_dim();
  CHECK((p.V * p.V.adjoint() - Matrix::Identity(d, d)).norm() < 1e-12);

  SUBCASE("trivial system gives the identity") {
    FramePerspective t = bundled_perspective("z3", "z3_trivial");
    CHECK(t.V.isIdentity(1e-14));
  }

  SUBCASE("Z2 flip gives diag(I, X)") {
    FramePerspective f = bundled_perspective("z2", "z2_flip");
    Matrix expect = Matrix::Zero(4, 4);
    expect(0, 0) = 1;
    expect(1, 1) = 1;
    expect(2, 3) = 1;
    expect(3, 2) = 1;
    CHECK((f.V - expect).norm() < 1e-14);
  }
}

TEST_CASE("conditioned operators become bare system operators") {
  std::mt19937_64 rng(31);
  const std::pair<const char*, const char*> pairs[] = {
      {"z2", "z2_flip"}, {"z3", "z3_sum12"}, {"s3", "s3_std"},
      {"z6", "z6_sum15"}};
  for (const auto& [group, rep] : pairs) {
    INFO(group << " with " << rep);
    FramePerspective p = bundled_perspective(group, rep);
    const int n = p.frame_dim();
    const int ds = p.system_dim();
    for (int trial = 0; trial < 20; ++trial) {
      Matrix t_s = qrf::test::random_matrix(ds, rng);
      LabeledOperator rel = relative_operator(t_s, p);
      Matrix lhs = p.V * rel.mat * p.V.adjoint();
      Matrix rhs = kron(Matrix::Identity(n, n), t_s);
      CHECK((lhs - rhs).norm() < 1e-9);
    }
  }
  FramePerspective p = bundled_perspective("z2", "z2_flip");
  CHECK_THROWS_AS(relative_operator(Matrix::Identity(3, 3), p),
                  SpaceMismatch);
}

TEST_CASE("relative operator of the trivial system is I (x) T") {
  FramePerspective p = bundled_perspective("s3", "s3_trivial");
  Matrix t(1, 1);
  t << Complex(0.3, 0.7);
  Matrix expect = kron(Matrix::Identity(6, 6), t);
  CHECK((relative_operator(t, p).mat - expect).norm() < 1e-14);
}

TEST_CASE("transversal action maps to a pure frame translation") {
  const std::pair<const char*, const char*> pairs[] = {
      {"z2", "z2_flip"}, {"z3", "z3_sum12"}, {"s3", "s3_std"},
      {"z6", "z6_sum15"}, {"heis3", "heis3_weyl1"}};
  for (const auto& [group, rep] : pairs) {
    INFO(group << " with " << rep);
    FramePerspective p = bundled_perspective(group, rep);
    const int n = p.frame_dim();
    const int ds = p.system_dim();
    for (int a = 0; a < n; ++a) {
      Matrix lhs = p.V *
                   kron(regular_left_matrix(p.group, a),
                        p.system_rep.matrices[a]) *
                   p.V.adjoint();
      Matrix rhs =
          kron(regular_left_matrix(p.group, a), Matrix::Identity(ds, ds));
      // entries land on integers up to rounding
      for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j) {
          Complex d = lhs(i, j) - rhs(i, j);
          CHECK(std::abs(d.real() - std::round(d.real())) < 1e-12);
          CHECK(std::abs(d.imag() - std::round(d.imag())) < 1e-12);
          CHECK(std::abs(d) < 1e-12);
        }
    }
  }
}

TEST_CASE("invariant map agrees with twirl on either side of V") {
  std::mt19937_64 rng(37);
  const std::pair<const char*, const char*> pairs[] = {
      {"z2", "z2_flip"}, {"z3", "z3_sum12"}, {"s3", "s3_std"}};
  for (const auto& [group, rep] : pairs) {
    INFO(group << " with " << rep);
    FramePerspective p = bundled_perspective(group, rep);
    const int n = p.frame_dim();
    const int ds = p.system_dim();
    TwirlSpec std_action = transversal_action(p.group, p.system_rep);
    TwirlSpec gauge_action;
    gauge_action.group = p.group;
    gauge_action.space = p.perspective_space;
    for (int a = 0; a < n; ++a)
      gauge_action.action.push_back(
          kron(regular_left_matrix(p.group, a), Matrix::Identity(ds, ds)));

    for (int trial = 0; trial < 15; ++trial) {
      Matrix t = qrf::test::random_matrix(n * ds, rng);
      LabeledOperator t_std(p.standard_space, t);
      Matrix via_e = e_map(t_std, p).mat;
      Matrix twirl_first =
          p.V * g_twirl(t_std, std_action).mat * p.V.adjoint();
      Matrix refactor_first =
          g_twirl({p.perspective_space, p.V * t * p.V.adjoint()},
                  gauge_action)
              .mat;
      CHECK((via_e - twirl_first).norm() < 1e-9);
      CHECK((via_e - refactor_first).norm() < 1e-9);
    }
  }
}

TEST_CASE("invariant map is linear and idempotent through V") {
  std::mt19937_64 rng(41);
  FramePerspective p = bundled_perspective("s3", "s3_std");
  const int d = p.frame_dim() * p.system_dim();
  Matrix a = qrf::test::random_matrix(d, rng);
  Matrix b = qrf::test::random_matrix(d, rng);
  Matrix lhs =
      e_map({p.standard_space, 2.0 * a + Complex(0, 1.5) * b}, p).mat;
  Matrix rhs = 2.0 * e_map({p.standard_space, a}, p).mat +
               Complex(0, 1.5) * e_map({p.standard_space, b}, p).mat;
  CHECK((lhs - rhs).norm() < 1e-10);

  // pushing an already-invariant operator back through V is a fixed point
  Matrix inv = e_map({p.standard_space, a}, p).mat;
  Matrix back = p.V.adjoint() * inv * p.V;
  Matrix again = e_map({p.standard_space, back}, p).mat;
  CHECK((again - inv).norm() < 1e-9);
}

TEST_CASE("extra particle algebra") {
  FramePerspective p = bundled_perspective("s3", "s3_std");
  const FiniteGroup& g = p.group;
  const int n = g.order;
  const int ds = p.system_dim();
  OperatorSubspace extra = extra_particle_basis(p);

  SUBCASE("dimension is the group order") { CHECK(extra.dim() == n); }

  SUBCASE("commutes with the conditioned system algebra") {
    std::mt19937_64 rng(43);
    Matrix t_s = qrf::test::random_matrix(ds, rng);
    Matrix sys = kron(Matrix::Identity(n, n), t_s);
    for (const auto& x : extra.basis)
      CHECK((x * sys - sys * x).norm() < 1e-12);
  }

  SUBCASE("standard form matches conjugation by V") {
    for (int f = 0; f < n; ++f) {
      Matrix persp_op =
          kron(regular_right_matrix(g, f), Matrix::Identity(ds, ds));
      Matrix lhs = p.V.adjoint() * persp_op * p.V;
      CHECK((lhs - extra_particle_standard_form(p, f)).norm() < 1e-12);
    }
  }

  SUBCASE("standard form is closed under the group product") {
    for (int f1 = 0; f1 < n; ++f1)
      for (int f2 = 0; f2 < n; ++f2) {
        Matrix prod = extra_particle_standard_form(p, f1) *
                      extra_particle_standard_form(p, f2);
        // R(f1) R(f2) = R(f1 f2)
        CHECK((prod - extra_particle_standard_form(p, g.op(f1, f2)))
                  .norm() < 1e-12);
      }
  }
}

TEST_CASE("classical frame reduction") {
  std::mt19937_64 rng(47);
  const std::pair<const char*, const char*> pairs[] = {
      {"z2", "z2_flip"}, {"z3", "z3_sum12"}, {"s3", "s3_std"}};
  for (const auto& [group, rep] : pairs) {
    INFO(group << " with " << rep);
    FramePerspective p = bundled_perspective(group, rep);
    Matrix rho = qrf::test::random_density(p.system_dim(), rng);
    ClassicalReduction red = classical_frame_reduction(1, rho, p);
    CHECK(red.product_residual < 1e-10);
    CHECK(red.sector_mixedness_residual < 1e-9);
    const int n = p.frame_dim();
    CHECK((red.frame_part - Matrix::Identity(n, n) / n).norm() < 1e-10);
    // closed form: the system part is U(g0)^dag rho U(g0)
    const Matrix& u = p.system_rep.matrices[1];
    CHECK((red.system_part - u.adjoint() * rho * u).norm() < 1e-10);
  }
}

TEST_CASE("classical frame reduction rejects bad inputs") {
  FramePerspective p = bundled_perspective("z2", "z2_flip");
  std::mt19937_64 rng(53);
  Matrix rho = qrf::test::random_density(2, rng);
  CHECK_THROWS_AS(classical_frame_reduction(5, rho, p), IndexOutOfRange);
  CHECK_THROWS_AS(classical_frame_reduction(0, 2.0 * rho, p), NotAState);
  Matrix nonherm = qrf::test::random_matrix(2, rng);
  nonherm /= nonherm.trace();
  CHECK_THROWS_AS(classical_frame_reduction(0, nonherm, p), NotAState);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 2.0;
  neg(1, 1) = -1.0;
  CHECK_THROWS_AS(classical_frame_reduction(0, neg, p), NotAState);
}
