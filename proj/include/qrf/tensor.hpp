#ifndef QRF_TENSOR_HPP
#define QRF_TENSOR_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qrf {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Factor {
  std::string label;
  int dim = 0;
};

/// Ordered list of named tensor factors. Labels are unique.
struct ProductSpace {
  std::vector<Factor> factors;

  ProductSpace() = default;
  explicit ProductSpace(std::vector<Factor> f);

  int total_dim() const;
  int factor_index(const std::string& label) const;  // throws UnknownLabel
  bool has_factor(const std::string& label) const;
  int dim_of(const std::string& label) const;

  static ProductSpace single(const std::string& label, int dim);
};

bool operator==(const ProductSpace& a, const ProductSpace& b);

/// A complex square matrix on a ProductSpace, row-major over the ordered
/// factor indices.
struct LabeledOperator {
  ProductSpace space;
  Matrix mat;

  LabeledOperator() = default;
  LabeledOperator(ProductSpace s, Matrix m);
};

/// Kronecker-embeds op into target, identity on factors op does not carry,
/// in target's factor order.
LabeledOperator embed(const LabeledOperator& op, const ProductSpace& target);

/// Trace over the named factors. Preserves the total trace.
LabeledOperator partial_trace(const LabeledOperator& op,
                              const std::vector<std::string>& labels);

Matrix kron(const Matrix& a, const Matrix& b);

inline Complex frobenius_inner(const Matrix& a, const Matrix& b) {
  return (a.adjoint() * b).trace();
}

/// Linear span of operators on a common space, held as an orthonormal
/// basis under the Frobenius inner product.
struct OperatorSubspace {
  ProductSpace space;
  std::vector<Matrix> basis;
  double gram_condition = 1.0;

  int dim() const { return static_cast<int>(basis.size()); }
  /// Frobenius projection of x onto the span.
  Matrix project(const Matrix& x) const;
  /// Distance from x to the span, relative to ||x||.
  double projection_residual(const Matrix& x) const;
};

/// Orthonormalizes the given operators, dropping linear dependencies at the
/// scale-free singular value threshold 1e-9 * s_max.
OperatorSubspace span_of(const ProductSpace& space,
                         const std::vector<Matrix>& ops);

/// {T : [T, X] = 0 for every generator X}, as the nullspace of the stacked
/// commutator map.
OperatorSubspace commutant(const std::vector<LabeledOperator>& gens);

struct SubspaceComparison {
  bool equal = false;
  double residual = 0.0;
};

/// Mutual-projection test: equal iff dimensions agree and every basis
/// element of each side lies in the other span within tol.
SubspaceComparison subspace_equal(const OperatorSubspace& a,
                                  const OperatorSubspace& b,
                                  double tol = 1e-8);

}  // namespace qrf

#endif
