#include "qrf/two_frame.hpp"

#include "qrf/errors.hpp"

namespace qrf {

namespace {

// index into [first(n), second(n), third(ds)]
inline int idx3(int i, int j, int k, int n, int ds) {
  return (i * n + j) * ds + k;
}

}  // namespace

TwoFrameSetup build_two_frame(const FiniteGroup& g, const IrrepTable& table,
                              const UnitaryRep& system_rep, int dim_budget) {
  const int n = g.order;
  const int ds = system_rep.dim;
  const int total = n * n * ds;
  if (total > dim_budget)
    throw DimBudgetExceeded("two-frame dimension " + std::to_string(total) +
                            " exceeds budget " + std::to_string(dim_budget));
  TwoFrameSetup s;
  s.group = g;
  s.table = table;
  s.system_rep = system_rep;
  s.standard_space = ProductSpace({{"A", n}, {"B", n}, {"S", ds}});
  s.persp_a = ProductSpace({{"C", n}, {"B|A", n}, {"S|A", ds}});
  s.persp_b = ProductSpace({{"A|B", n}, {"D", n}, {"S|B", ds}});

  s.V_A = Matrix::Zero(total, total);
  for (int a = 0; a < n; ++a) {
    Matrix bs = kron(regular_left_matrix(g, g.inverse(a)),
                     system_rep.matrices[a].adjoint());
    s.V_A.block(a * n * ds, a * n * ds, n * ds, n * ds) = bs;
  }

  s.V_B = Matrix::Zero(total, total);
  for (int b = 0; b < n; ++b) {
    // acts as L_A(b)^dag on A and U(b)^dag on S, conditioned on |b>_B
    Matrix la = regular_left_matrix(g, g.inverse(b));
    const Matrix us = system_rep.matrices[b].adjoint();
    for (int a = 0; a < n; ++a)
      for (int a2 = 0; a2 < n; ++a2) {
        if (la(a, a2) == 0.0) continue;
        s.V_B.block(idx3(a, b, 0, n, ds), idx3(a2, b, 0, n, ds), ds, ds) = us;
      }
  }

  s.S_AB = s.V_B * s.V_A.adjoint();
  return s;
}

LabeledOperator transform_operator(const LabeledOperator& t,
                                   const TwoFrameSetup& setup) {
  if (!(t.space == setup.persp_a))
    throw SpaceMismatch("operator does not live on the A-perspective space");
  return {setup.persp_b, setup.S_AB * t.mat * setup.S_AB.adjoint()};
}

Matrix class1_closed_form(const TwoFrameSetup& setup, const Matrix& t_s) {
  const int n = setup.frame_dim();
  const int ds = setup.system_dim();
  if (t_s.rows() != ds || t_s.cols() != ds)
    throw SpaceMismatch("system operator has wrong dimension");
  Matrix out = Matrix::Zero(setup.total_dim(), setup.total_dim());
  for (int a = 0; a < n; ++a) {
    const Matrix& u = setup.system_rep.matrices[a];
    Matrix blk = u * t_s * u.adjoint();
    for (int d = 0; d < n; ++d)
      out.block(idx3(a, d, 0, n, ds), idx3(a, d, 0, n, ds), ds, ds) = blk;
  }
  return out;
}

Matrix class2_closed_form(const TwoFrameSetup& setup, const Matrix& t_ba) {
  const FiniteGroup& g = setup.group;
  const int n = g.order;
  const int ds = setup.system_dim();
  if (t_ba.rows() != n || t_ba.cols() != n)
    throw SpaceMismatch("frame operator has wrong dimension");
  Matrix out = Matrix::Zero(setup.total_dim(), setup.total_dim());
  for (int h = 0; h < n; ++h)
    for (int a = 0; a < n; ++a) {
      const Complex coeff = t_ba(h, a);
      if (coeff == Complex(0.0, 0.0)) continue;
      const int k = g.op(g.inverse(h), a);
      Matrix tail = coeff * kron(regular_right_matrix(g, k),
                                 setup.system_rep.matrices[k]);
      out.block(g.inverse(h) * n * ds, g.inverse(a) * n * ds, n * ds,
                n * ds) += tail;
    }
  return out;
}

double left_invariance_residual(const TwoFrameSetup& setup,
                                const Matrix& t_r) {
  const FiniteGroup& g = setup.group;
  const int n = g.order;
  Matrix proj = Matrix::Zero(n, n);
  for (int f = 0; f < n; ++f) {
    Matrix r = regular_right_matrix(g, f);
    proj += (frobenius_inner(r, t_r) / static_cast<double>(n)) * r;
  }
  double norm = t_r.norm();
  return norm == 0.0 ? 0.0 : (t_r - proj).norm() / norm;
}

Matrix class3_closed_form(const TwoFrameSetup& setup, const Matrix& t_r) {
  const FiniteGroup& g = setup.group;
  const int n = g.order;
  const int ds = setup.system_dim();
  if (t_r.rows() != n || t_r.cols() != n)
    throw SpaceMismatch("frame operator has wrong dimension");
  if (left_invariance_residual(setup, t_r) > 1e-9)
    throw NotLeftInvariant("operator is outside span{R(g)}");
  Matrix out = Matrix::Zero(setup.total_dim(), setup.total_dim());
  const Matrix id_s = Matrix::Identity(ds, ds);
  for (int a = 0; a < n; ++a) {
    Matrix r = regular_right_matrix(g, a);
    Matrix blk = kron(r * t_r * r.adjoint(), id_s);
    out.block(a * n * ds, a * n * ds, n * ds, n * ds) = blk;
  }
  return out;
}

Matrix parity_swap(const TwoFrameSetup& setup) {
  const FiniteGroup& g = setup.group;
  const int n = g.order;
  const int ds = setup.system_dim();
  Matrix p = Matrix::Zero(setup.total_dim(), setup.total_dim());
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b)
      for (int s = 0; s < ds; ++s)
        p(idx3(g.inverse(b), c, s, n, ds), idx3(c, b, s, n, ds)) = 1.0;
  return p;
}

Matrix factored_form(const TwoFrameSetup& setup) {
  const FiniteGroup& g = setup.group;
  const int n = g.order;
  const int ds = setup.system_dim();
  // sum_f |f><f|_B|A (x) R_C(f)^dag (x) U(f)^dag on [C, B|A, S|A]
  Matrix w = Matrix::Zero(setup.total_dim(), setup.total_dim());
  for (int f = 0; f < n; ++f) {
    const Matrix u = setup.system_rep.matrices[f].adjoint();
    for (int c = 0; c < n; ++c) {
      // R(f)^dag |c> = |c f>
      w.block(idx3(g.op(c, f), f, 0, n, ds), idx3(c, f, 0, n, ds), ds, ds) =
          u;
    }
  }
  return parity_swap(setup) * w;
}

VerificationReport zero_charge_check(const TwoFrameSetup& setup, int trials,
                                     std::uint64_t seed) {
  const FiniteGroup& g = setup.group;
  const int n = g.order;
  const int ds = setup.system_dim();
  const int total = setup.total_dim();

  // group action on the standard partition
  std::vector<Matrix> action;
  for (int a = 0; a < n; ++a)
    action.push_back(kron(regular_left_matrix(g, a),
                          kron(regular_left_matrix(g, a),
                               setup.system_rep.matrices[a])));

  // swap-based transfer operator on A-perspective coordinates:
  // SWAP_AB . (1_C (x) sum_h |h^-1><h|_B|A (x) U(h)^dag)
  Matrix dhat = Matrix::Zero(total, total);
  for (int c = 0; c < n; ++c)
    for (int h = 0; h < n; ++h) {
      const Matrix u = setup.system_rep.matrices[h].adjoint();
      // after the swap, factor order is [former B|A, former C, S]
      dhat.block(idx3(g.inverse(h), c, 0, n, ds), idx3(c, h, 0, n, ds), ds,
                 ds) = u;
    }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  VerificationReport report;
  report.suite = "zero_charge:" + g.name + ":" + setup.system_rep.name;
  double worst_inv = 0.0, worst_dhat = 0.0;
  for (int t = 0; t < trials; ++t) {
    Vector phi(total);
    for (int i = 0; i < total; ++i) phi(i) = Complex(gauss(rng), gauss(rng));
    Vector psi = Vector::Zero(total);
    for (const auto& u : action) psi += u * phi;
    double norm = psi.norm();
    if (norm < 1e-12) continue;  // projected to zero, skip
    psi /= norm;
    for (const auto& u : action)
      worst_inv = std::max(worst_inv, (u * psi - psi).norm());
    Vector lhs = dhat * (setup.V_A * psi);
    Vector rhs = setup.V_B * psi;
    worst_dhat = std::max(worst_dhat, (lhs - rhs).norm());
  }
  report.add("invariance", "L(g) (x) L(g) (x) U(g) Psi = Psi", worst_inv,
             1e-9);
  report.add("swap_transfer_agreement", "D V_A Psi = V_B Psi", worst_dhat,
             1e-9);
  return report;
}

FrameRotationResult frame_rotation_demo(const TwoFrameSetup& setup,
                                        const Vector& phi,
                                        const Vector& psi) {
  const FiniteGroup& g = setup.group;
  const int n = g.order;
  const int ds = setup.system_dim();
  if (phi.size() != n)
    throw SpaceMismatch("frame amplitude table has wrong length");
  if (psi.size() != ds)
    throw SpaceMismatch("system state has wrong dimension");
  if (std::abs(phi.squaredNorm() - 1.0) > 1e-10)
    throw NotNormalized("frame amplitudes are not normalized");
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-10)
    throw NotNormalized("system state is not normalized");

  // standard-partition pure state |e>_A (x) |phi>_B (x) |psi>_S
  Vector state = Vector::Zero(setup.total_dim());
  for (int b = 0; b < n; ++b)
    for (int s = 0; s < ds; ++s)
      state(idx3(g.identity, b, s, n, ds)) = phi(b) * psi(s);

  Vector in_b = setup.V_B * state;
  LabeledOperator global(setup.persp_b, in_b * in_b.adjoint());

  FrameRotationResult out;
  out.global_purity = (global.mat * global.mat).trace().real();
  LabeledOperator reduced = partial_trace(global, {"D"});
  out.rho_asb = reduced.mat;
  out.reduced_purity = (reduced.mat * reduced.mat).trace().real();

  // closed form on [A|B, S|B]
  Matrix expect = Matrix::Zero(n * ds, n * ds);
  for (int b = 0; b < n; ++b) {
    double p = std::norm(phi(b));
    if (p == 0.0) continue;
    Vector v = setup.system_rep.matrices[b].adjoint() * psi;
    expect.block(g.inverse(b) * ds, g.inverse(b) * ds, ds, ds) +=
        p * (v * v.adjoint());
  }
  out.closed_form_residual = (reduced.mat - expect).norm();

  // Gram check on the combined frame-and-orbit states
  // w_b = |b^-1> (x) U(b)^dag |psi| over the support of phi
  std::vector<Vector> orbit;
  for (int b = 0; b < n; ++b) {
    if (std::abs(phi(b)) < 1e-12) continue;
    Vector w = Vector::Zero(n * ds);
    w.segment(g.inverse(b) * ds, ds) =
        setup.system_rep.matrices[b].adjoint() * psi;
    orbit.push_back(std::move(w));
  }
  double overlap = 0.0;
  double p4 = 0.0;
  for (int b = 0; b < n; ++b) p4 += std::norm(phi(b)) * std::norm(phi(b));
  for (size_t i = 0; i < orbit.size(); ++i)
    for (size_t j = i + 1; j < orbit.size(); ++j)
      overlap = std::max(overlap, std::abs(orbit[i].dot(orbit[j])));
  out.orbit_orthogonal = overlap < 1e-10;
  out.purity_formula_residual = std::abs(out.reduced_purity - p4);
  return out;
}

}  // namespace qrf
