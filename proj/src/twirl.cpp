#include "qrf/twirl.hpp"

#include <Eigen/SVD>

#include "qrf/errors.hpp"

namespace qrf {

TwirlSpec transversal_action(const FiniteGroup& g, const UnitaryRep& system,
                             const std::string& frame_label,
                             const std::string& system_label) {
  if (system.group.order != g.order)
    throw DimMismatch("system rep is indexed over a different group order");
  TwirlSpec spec;
  spec.group = g;
  spec.space = ProductSpace({{frame_label, g.order},
                             {system_label, system.dim}});
  for (int e = 0; e < g.order; ++e)
    spec.action.push_back(
        kron(regular_left_matrix(g, e), system.matrices[e]));
  return spec;
}

TwirlSpec rep_action(const UnitaryRep& rep, const std::string& label) {
  TwirlSpec spec;
  spec.group = rep.group;
  spec.space = ProductSpace::single(label, rep.dim);
  spec.action = rep.matrices;
  return spec;
}

LabeledOperator g_twirl(const LabeledOperator& op, const TwirlSpec& spec) {
  if (!(op.space == spec.space))
    throw SpaceMismatch("operator does not live on the action's space");
  const int n = spec.space.total_dim();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& v : spec.action) out += v * op.mat * v.adjoint();
  out /= static_cast<double>(spec.group.order);
  return {spec.space, std::move(out)};
}

OperatorSubspace invariant_algebra(const TwirlSpec& spec) {
  const int n = spec.space.total_dim();
  std::vector<Matrix> images;
  images.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix unit = Matrix::Zero(n, n);
      unit(i, j) = 1.0;
      images.push_back(
          g_twirl(LabeledOperator(spec.space, std::move(unit)), spec).mat);
    }
  return span_of(spec.space, images);
}

std::vector<LabeledOperator> charge_projectors(const IrrepTable& table,
                                               const UnitaryRep& rep,
                                               const std::string& label) {
  if (table.irreps.empty())
    throw IncompleteIrrepTable("irrep table is empty");
  int dimsum = 0;
  for (const auto& ir : table.irreps) dimsum += ir.dim * ir.dim;
  if (dimsum != table.group.order)
    throw IncompleteIrrepTable("irrep table does not cover the group");
  const FiniteGroup& g = rep.group;
  std::vector<LabeledOperator> out;
  ProductSpace space = ProductSpace::single(label, rep.dim);
  for (const auto& ir : table.irreps) {
    Matrix p = Matrix::Zero(rep.dim, rep.dim);
    for (int a = 0; a < g.order; ++a)
      p += std::conj(ir.matrices[a].trace()) * rep.matrices[a];
    p *= static_cast<double>(ir.dim) / g.order;
    out.emplace_back(space, std::move(p));
  }
  return out;
}

VerificationReport common_subalgebra_check(const FiniteGroup& g,
                                           const UnitaryRep& system_q,
                                           int dim_cap) {
  const int n = g.order;
  const int dq = system_q.dim;
  const int total = n * n * dq;
  if (total > dim_cap)
    throw DimBudgetExceeded("E-F-Q space dimension " + std::to_string(total) +
                            " exceeds cap " + std::to_string(dim_cap));
  ProductSpace space({{"E", n}, {"F", n}, {"Q", dq}});

  auto relative_basis = [&](bool on_e) {
    std::vector<Matrix> ops;
    for (int i = 0; i < dq; ++i)
      for (int j = 0; j < dq; ++j) {
        Matrix t = Matrix::Zero(total, total);
        for (int a = 0; a < n; ++a) {
          Matrix proj = Matrix::Zero(n, n);
          proj(a, a) = 1.0;
          Matrix unit = Matrix::Zero(dq, dq);
          unit(i, j) = 1.0;
          Matrix uq = system_q.matrices[a] * unit *
                      system_q.matrices[a].adjoint();
          t += on_e ? kron(proj, kron(Matrix::Identity(n, n), uq))
                    : kron(Matrix::Identity(n, n), kron(proj, uq));
        }
        ops.push_back(std::move(t));
      }
    return span_of(space, ops);
  };

  OperatorSubspace rel_e = relative_basis(true);
  OperatorSubspace rel_f = relative_basis(false);

  // intersection: nullspace of [B_E | -B_F] over vectorized operators
  const int ne = rel_e.dim(), nf = rel_f.dim();
  Matrix stacked(total * total, ne + nf);
  for (int i = 0; i < ne; ++i)
    stacked.col(i) =
        Eigen::Map<const Vector>(rel_e.basis[i].data(), total * total);
  for (int i = 0; i < nf; ++i)
    stacked.col(ne + i) =
        -Eigen::Map<const Vector>(rel_f.basis[i].data(), total * total);
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cut = sv.size() ? sv(0) * 1e-9 : 0.0;
  std::vector<Matrix> inter;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= cut) {
      Matrix x = Matrix::Zero(total, total);
      for (int j = 0; j < ne; ++j)
        x += svd.matrixV()(j, i) * rel_e.basis[j];
      inter.push_back(std::move(x));
    }
  OperatorSubspace intersection = span_of(space, inter);

  // reference: 1_E (x) 1_F (x) T for T in the invariant algebra of Q
  OperatorSubspace q_inv = commutant([&] {
    std::vector<LabeledOperator> gens;
    ProductSpace qs = ProductSpace::single("Q", dq);
    for (int a = 0; a < n; ++a)
      gens.emplace_back(qs, system_q.matrices[a]);
    return gens;
  }());
  std::vector<Matrix> embedded;
  for (const auto& t : q_inv.basis)
    embedded.push_back(kron(Matrix::Identity(n * n, n * n), t));
  OperatorSubspace reference = span_of(space, embedded);

  VerificationReport report;
  report.suite = "common_subalgebra:" + g.name + ":" + system_q.name;
  auto cmp = subspace_equal(intersection, reference);
  report.add("intersection_dim",
             "dim(Q|E meet Q|F) = dim(invariant algebra of Q)",
             std::abs(static_cast<double>(intersection.dim() -
                                          reference.dim())),
             0.5);
  report.add("intersection_equals_invariant",
             "Q|E meet Q|F = 1 (x) 1 (x) inv(Q)", cmp.residual, 1e-8);
  return report;
}

}  // namespace qrf
