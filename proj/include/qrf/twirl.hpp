#ifndef QRF_TWIRL_HPP
#define QRF_TWIRL_HPP

#include "qrf/repr.hpp"
#include "qrf/report.hpp"
#include "qrf/tensor.hpp"

namespace qrf {

/// A unitary group action on a product space, one operator per element.
struct TwirlSpec {
  FiniteGroup group;
  ProductSpace space;
  std::vector<Matrix> action;
};

/// L_frame(g) (x) U_S(g) on [frame(|G|), system(d_S)].
TwirlSpec transversal_action(const FiniteGroup& g, const UnitaryRep& system,
                             const std::string& frame_label = "A",
                             const std::string& system_label = "S");

/// Action of a bare UnitaryRep on its own single-factor space.
TwirlSpec rep_action(const UnitaryRep& rep, const std::string& label);

/// (1/|G|) sum_g V(g) T V(g)^dag.
LabeledOperator g_twirl(const LabeledOperator& op, const TwirlSpec& spec);

/// Image of the twirl over a full operator basis, orthonormalized. Equals
/// the commutant of the action.
OperatorSubspace invariant_algebra(const TwirlSpec& spec);

/// Central projectors P_q = (d_q/|G|) sum_g conj(chi_q(g)) U(g); hermitian,
/// mutually orthogonal idempotents summing to the identity.
std::vector<LabeledOperator> charge_projectors(const IrrepTable& table,
                                               const UnitaryRep& rep,
                                               const std::string& label);

/// Builds the relative algebras of Q conditioned on two regular-rep frames
/// E and F on H_E (x) H_F (x) H_Q, intersects them as linear subspaces, and
/// compares the intersection with 1_E (x) 1_F (x) (invariant algebra of Q).
VerificationReport common_subalgebra_check(const FiniteGroup& g,
                                           const UnitaryRep& system_q,
                                           int dim_cap = 4096);

}  // namespace qrf

#endif
