#ifndef QRF_TWO_FRAME_HPP
#define QRF_TWO_FRAME_HPP

#include <random>

#include "qrf/repr.hpp"
#include "qrf/report.hpp"
#include "qrf/tensor.hpp"

namespace qrf {

/// Two regular-rep frames A, B plus a system S. The frame-change unitary
/// S_AB = V_B V_A^dag maps A's perspective partition [C, B|A, S|A] to B's
/// [A|B, D, S|B], where
///   V_A = relabel . sum_g |g><g|_A (x) L_B(g)^dag (x) U_S(g)^dag
///   V_B = relabel . sum_g L_A(g)^dag (x) |g><g|_B (x) U_S(g)^dag.
struct TwoFrameSetup {
  FiniteGroup group;
  IrrepTable table;
  UnitaryRep system_rep;
  ProductSpace standard_space;  // [A, B, S]
  ProductSpace persp_a;         // [C, B|A, S|A]
  ProductSpace persp_b;         // [A|B, D, S|B]
  Matrix V_A, V_B, S_AB;

  int frame_dim() const { return group.order; }
  int system_dim() const { return system_rep.dim; }
  int total_dim() const { return group.order * group.order * system_rep.dim; }
};

TwoFrameSetup build_two_frame(const FiniteGroup& g, const IrrepTable& table,
                              const UnitaryRep& system_rep,
                              int dim_budget = 4096);

/// Conjugation by S_AB, relabeled from A's to B's perspective space.
LabeledOperator transform_operator(const LabeledOperator& t,
                                   const TwoFrameSetup& setup);

/// Closed form for 1_C (x) 1_B|A (x) T:
///   sum_g |g><g|_A|B (x) 1_D (x) U(g) T U(g)^dag.
Matrix class1_closed_form(const TwoFrameSetup& setup, const Matrix& t_s);

/// Closed form for 1_C (x) T (x) 1_S|A:
///   sum_{h,g} <h|T|g> |h^-1><g^-1|_A|B (x) R_D(h^-1 g) (x) U(h^-1 g).
Matrix class2_closed_form(const TwoFrameSetup& setup, const Matrix& t_ba);

/// Closed form for T^R (x) 1 (x) 1 with T^R in span{R_C(g)}:
///   sum_g |g><g|_A|B (x) R_D(g) T^R R_D(g)^dag (x) 1.
/// Throws NotLeftInvariant when t_r is outside span{R(g)}.
Matrix class3_closed_form(const TwoFrameSetup& setup, const Matrix& t_r);

/// Left-invariance test: projection residual of t_r onto span{R(g)}.
double left_invariance_residual(const TwoFrameSetup& setup,
                                const Matrix& t_r);

/// Parity swap |g>_B|A -> |g^-1>_A|B times the conditional unwinding
/// sum_f |f><f|_B|A (x) R_C(f)^dag (x) U(f)^dag; equals S_AB.
Matrix factored_form(const TwoFrameSetup& setup);

/// The parity-swap factor alone, as a map from persp_a to persp_b.
Matrix parity_swap(const TwoFrameSetup& setup);

/// Coherent group averaging check: projects random states onto the
/// zero-charge sector and verifies that the swap-based transfer operator
/// agrees with the frame-change unitary there.
VerificationReport zero_charge_check(const TwoFrameSetup& setup, int trials,
                                     std::uint64_t seed);

struct FrameRotationResult {
  /// Bob's reduced state on [A|B, S|B]
  Matrix rho_asb;
  /// residual against sum_g |phi(g)|^2 |g^-1><g^-1| (x) U(g)^dag psi psi U(g)
  double closed_form_residual = 0.0;
  double reduced_purity = 0.0;
  double global_purity = 0.0;
  /// whether the orbit states {|g^-1> (x) U(g)^dag |psi>} are mutually
  /// orthogonal across the support of phi
  bool orbit_orthogonal = false;
  /// |reduced_purity - sum |phi(g)|^4| (meaningful when orbit_orthogonal)
  double purity_formula_residual = 0.0;
};

/// Frame A classical and aligned, frame B in sum_g phi(g)|g>, system in
/// psi; computes Bob's view and the purity bookkeeping.
FrameRotationResult frame_rotation_demo(const TwoFrameSetup& setup,
                                        const Vector& phi, const Vector& psi);

}  // namespace qrf

#endif
