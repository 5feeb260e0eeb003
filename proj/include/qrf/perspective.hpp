#ifndef QRF_PERSPECTIVE_HPP
#define QRF_PERSPECTIVE_HPP

#include "qrf/repr.hpp"
#include "qrf/tensor.hpp"
#include "qrf/twirl.hpp"

namespace qrf {

/// One frame A carrying the regular representation plus a system S.
/// standard_space is [A(|G|), S(d_S)]; perspective_space is the
/// refactorisation [C(|G|), S|A(d_S)] reached by the unitary V, which
/// conditions the system on the frame's group-element basis:
///   V = relabel . sum_g |g><g|_A (x) U_S(g)^dag.
struct FramePerspective {
  FiniteGroup group;
  IrrepTable table;
  UnitaryRep system_rep;
  ProductSpace standard_space;
  ProductSpace perspective_space;
  Matrix V;

  int frame_dim() const { return group.order; }
  int system_dim() const { return system_rep.dim; }
};

FramePerspective build_perspective(const FiniteGroup& g,
                                   const IrrepTable& table,
                                   const UnitaryRep& system_rep);

/// sum_g |g><g|_A (x) U_S(g) T_S U_S(g)^dag on the standard space.
LabeledOperator relative_operator(const Matrix& t_s,
                                  const FramePerspective& persp);

/// The invariant image of T in the perspective partition:
///   (1/|G|) sum_{g',g} R_C(g')^dag R_C(g) (x) U(g')^dag T_S(g',g) U(g),
/// equal to both twirl-then-refactor and refactor-then-twirl.
LabeledOperator e_map(const LabeledOperator& t,
                      const FramePerspective& persp);

/// Orthonormal basis of the extra-particle algebra in the perspective
/// partition: span{ R_C(g) (x) 1_{S|A} }.
OperatorSubspace extra_particle_basis(const FramePerspective& persp);

/// Image of R(f) (x) 1 under V^dag, i.e. the extra-particle algebra in the
/// standard partition: sum_g |g f^-1><g| (x) U(g f^-1) U(g)^dag.
Matrix extra_particle_standard_form(const FramePerspective& persp, int f);

struct ClassicalReduction {
  /// invariant state in the perspective partition
  Matrix state;
  /// reduced state on C after tracing the S|A factor
  Matrix frame_part;
  /// reduced state on S|A
  Matrix system_part;
  /// || state - frame_part (x) system_part ||_F
  double product_residual = 0.0;
  /// max over charge sectors of || sigma_q/tr - 1/d_q ||_F on the
  /// right-regular factor
  double sector_mixedness_residual = 0.0;
};

/// Pushes |g0><g0|_A (x) rho_S through the invariant map and verifies that
/// the extra particle ends up maximally mixed within each charge sector.
ClassicalReduction classical_frame_reduction(int g0, const Matrix& rho_s,
                                             const FramePerspective& persp);

}  // namespace qrf

#endif
