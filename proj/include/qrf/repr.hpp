#ifndef QRF_REPR_HPP
#define QRF_REPR_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qrf/group.hpp"
#include "qrf/report.hpp"
#include "qrf/tensor.hpp"

namespace qrf {

/// Unitary irreducible representation: one d x d matrix per group element.
struct Irrep {
  std::string label;
  int dim = 0;
  std::vector<Matrix> matrices;
};

/// A complete set of unitary irreps of a group (sum of dim^2 = |G|).
struct IrrepTable {
  FiniteGroup group;
  std::vector<Irrep> irreps;

  const Irrep& by_label(const std::string& label) const;
  /// row offset of the (q) block in the Fourier basis
  int block_offset(int q) const;
};

/// Any unitary representation; irreducibility not required.
struct UnitaryRep {
  std::string name;
  FiniteGroup group;
  int dim = 0;
  std::vector<Matrix> matrices;
};

IrrepTable load_irrep_table(const nlohmann::json& doc, const FiniteGroup& g);
IrrepTable load_irrep_table_file(const std::string& path,
                                 const FiniteGroup& g);
UnitaryRep load_rep(const nlohmann::json& doc, const FiniteGroup& g);
UnitaryRep load_rep_file(const std::string& path, const FiniteGroup& g);

UnitaryRep trivial_rep(const FiniteGroup& g);
UnitaryRep left_regular_rep(const FiniteGroup& g);
/// Direct sum of the listed irreps as a UnitaryRep.
UnitaryRep direct_sum_rep(const IrrepTable& table,
                          const std::vector<std::string>& labels);

/// Unitarity + homomorphism checks for an arbitrary rep.
VerificationReport validate_rep(const UnitaryRep& rep);

/// Per-irrep unitarity, homomorphism and irreducibility, plus table-level
/// completeness and Schur orthogonality.
VerificationReport validate_irrep_table(const IrrepTable& table);

/// L(g)|h> = |gh> as a permutation matrix.
Matrix regular_left_matrix(const FiniteGroup& g, int elem);
/// R(g)|h> = |h g^-1> as a permutation matrix.
Matrix regular_right_matrix(const FiniteGroup& g, int elem);

LabeledOperator regular_left(const FiniteGroup& g, int elem,
                             const std::string& label = "A");
LabeledOperator regular_right(const FiniteGroup& g, int elem,
                              const std::string& label = "A");

/// The |G| x |G| unitary F with <q;x,y|F|g> = sqrt(d_q/|G|) D^q_xy(g).
/// Rows are ordered by irrep list order, then (x,y) lexicographic.
Matrix fourier_unitary(const IrrepTable& table);

/// Direct sum over q of D^q(g) (x) I_dq  (the Fourier image of L(g)).
Matrix left_block_diagonal(const IrrepTable& table, int elem);
/// Direct sum over q of I_dq (x) conj(D^q(g))  (the Fourier image of R(g)).
Matrix right_block_diagonal(const IrrepTable& table, int elem);

/// Multiplicity of irrep q in rep, by character inner product. The result
/// is rounded to the nearest integer; a residual above 1e-6 throws.
int multiplicity(const IrrepTable& table, const UnitaryRep& rep, int q);

}  // namespace qrf

#endif
