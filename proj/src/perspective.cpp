#include "qrf/perspective.hpp"

#include "qrf/errors.hpp"

namespace qrf {

FramePerspective build_perspective(const FiniteGroup& g,
                                   const IrrepTable& table,
                                   const UnitaryRep& system_rep) {
  if (system_rep.group.order != g.order)
    throw ValidationFailure("system rep indexed over a different group");
  FramePerspective p;
  p.group = g;
  p.table = table;
  p.system_rep = system_rep;
  const int n = g.order;
  const int ds = system_rep.dim;
  p.standard_space = ProductSpace({{"A", n}, {"S", ds}});
  p.perspective_space = ProductSpace({{"C", n}, {"S|A", ds}});
  p.V = Matrix::Zero(n * ds, n * ds);
  for (int a = 0; a < n; ++a)
    p.V.block(a * ds, a * ds, ds, ds) = system_rep.matrices[a].adjoint();
  return p;
}

LabeledOperator relative_operator(const Matrix& t_s,
                                  const FramePerspective& persp) {
  const int n = persp.frame_dim();
  const int ds = persp.system_dim();
  if (t_s.rows() != ds || t_s.cols() != ds)
    throw SpaceMismatch("system operator has wrong dimension");
  Matrix out = Matrix::Zero(n * ds, n * ds);
  for (int a = 0; a < n; ++a) {
    const Matrix& u = persp.system_rep.matrices[a];
    out.block(a * ds, a * ds, ds, ds) = u * t_s * u.adjoint();
  }
  return {persp.standard_space, std::move(out)};
}

LabeledOperator e_map(const LabeledOperator& t,
                      const FramePerspective& persp) {
  if (!(t.space == persp.standard_space))
    throw SpaceMismatch("operator does not live on the standard space");
  const FiniteGroup& g = persp.group;
  const int n = g.order;
  const int ds = persp.system_dim();
  Matrix out = Matrix::Zero(n * ds, n * ds);
  for (int gp = 0; gp < n; ++gp) {
    const Matrix up = persp.system_rep.matrices[gp].adjoint();
    for (int gg = 0; gg < n; ++gg) {
      Matrix sys = up * t.mat.block(gp * ds, gg * ds, ds, ds) *
                   persp.system_rep.matrices[gg];
      // R(g')^dag R(g) = R(g'^-1 g)
      const int r = g.op(g.inverse(gp), gg);
      for (int h = 0; h < n; ++h)
        out.block(g.op(h, g.inverse(r)) * ds, h * ds, ds, ds) += sys;
    }
  }
  out /= static_cast<double>(n);
  return {persp.perspective_space, std::move(out)};
}

OperatorSubspace extra_particle_basis(const FramePerspective& persp) {
  const FiniteGroup& g = persp.group;
  const int ds = persp.system_dim();
  std::vector<Matrix> ops;
  for (int f = 0; f < g.order; ++f)
    ops.push_back(
        kron(regular_right_matrix(g, f), Matrix::Identity(ds, ds)));
  return span_of(persp.perspective_space, ops);
}

Matrix extra_particle_standard_form(const FramePerspective& persp, int f) {
  const FiniteGroup& g = persp.group;
  const int n = g.order;
  const int ds = persp.system_dim();
  Matrix out = Matrix::Zero(n * ds, n * ds);
  for (int a = 0; a < n; ++a) {
    const int row = g.op(a, g.inverse(f));
    out.block(row * ds, a * ds, ds, ds) = persp.system_rep.matrices[row] *
                                          persp.system_rep.matrices[a]
                                              .adjoint();
  }
  return out;
}

ClassicalReduction classical_frame_reduction(int g0, const Matrix& rho_s,
                                             const FramePerspective& persp) {
  const int n = persp.frame_dim();
  const int ds = persp.system_dim();
  if (g0 < 0 || g0 >= n) throw IndexOutOfRange("frame element out of range");
  if (rho_s.rows() != ds || rho_s.cols() != ds)
    throw NotAState("system state has wrong dimension");
  if ((rho_s - rho_s.adjoint()).norm() > 1e-10)
    throw NotAState("system state is not hermitian");
  if (std::abs(rho_s.trace() - Complex(1.0, 0.0)) > 1e-10)
    throw NotAState("system state does not have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_s);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw NotAState("system state is not positive semidefinite");

  Matrix standard = Matrix::Zero(n * ds, n * ds);
  standard.block(g0 * ds, g0 * ds, ds, ds) = rho_s;
  LabeledOperator inv =
      e_map(LabeledOperator(persp.standard_space, standard), persp);

  ClassicalReduction out;
  out.state = inv.mat;
  out.frame_part = partial_trace(inv, {"S|A"}).mat;
  out.system_part = partial_trace(inv, {"C"}).mat;
  out.product_residual =
      (inv.mat - kron(out.frame_part, out.system_part)).norm();

  // per charge sector: the right-regular factor must be maximally mixed
  Matrix f = fourier_unitary(persp.table);
  Matrix rho_c = f * out.frame_part * f.adjoint();
  double worst = 0.0;
  int off = 0;
  for (const auto& ir : persp.table.irreps) {
    const int d = ir.dim;
    Matrix block = rho_c.block(off, off, d * d, d * d);
    double w = block.trace().real();
    if (w > 1e-12) {
      Matrix sigma = Matrix::Zero(d, d);
      for (int x = 0; x < d; ++x)
        sigma += block.block(x * d, x * d, d, d);
      sigma /= w;
      worst = std::max(
          worst, (sigma - Matrix::Identity(d, d) / d).norm());
    }
    off += d * d;
  }
  out.sector_mixedness_residual = worst;
  return out;
}

}  // namespace qrf
