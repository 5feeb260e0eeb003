#include "qrf/tensor.hpp"

#include <algorithm>
#include <set>

#include <Eigen/SVD>

#include "qrf/errors.hpp"

namespace qrf {

ProductSpace::ProductSpace(std::vector<Factor> f) : factors(std::move(f)) {
  std::set<std::string> seen;
  for (const auto& fac : factors) {
    if (fac.dim <= 0)
      throw DimMismatch("factor " + fac.label + " has nonpositive dimension");
    if (!seen.insert(fac.label).second)
      throw DimMismatch("duplicate factor label " + fac.label);
  }
}

int ProductSpace::total_dim() const {
  int d = 1;
  for (const auto& f : factors) d *= f.dim;
  return d;
}

int ProductSpace::factor_index(const std::string& label) const {
  for (size_t i = 0; i < factors.size(); ++i)
    if (factors[i].label == label) return static_cast<int>(i);
  throw UnknownLabel("no factor named " + label);
}

bool ProductSpace::has_factor(const std::string& label) const {
  return std::any_of(factors.begin(), factors.end(),
                     [&](const Factor& f) { return f.label == label; });
}

int ProductSpace::dim_of(const std::string& label) const {
  return factors[factor_index(label)].dim;
}

ProductSpace ProductSpace::single(const std::string& label, int dim) {
  return ProductSpace({{label, dim}});
}

bool operator==(const ProductSpace& a, const ProductSpace& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (size_t i = 0; i < a.factors.size(); ++i)
    if (a.factors[i].label != b.factors[i].label ||
        a.factors[i].dim != b.factors[i].dim)
      return false;
  return true;
}

LabeledOperator::LabeledOperator(ProductSpace s, Matrix m)
    : space(std::move(s)), mat(std::move(m)) {
  if (mat.rows() != space.total_dim() || mat.cols() != space.total_dim())
    throw DimMismatch("matrix dimension does not match space");
}

namespace {

// row-major strides: factor 0 is the slowest index
std::vector<int> strides(const ProductSpace& s) {
  std::vector<int> st(s.factors.size());
  int acc = 1;
  for (int i = static_cast<int>(s.factors.size()) - 1; i >= 0; --i) {
    st[i] = acc;
    acc *= s.factors[i].dim;
  }
  return st;
}

void decode(int idx, const ProductSpace& s, std::vector<int>& out) {
  out.resize(s.factors.size());
  for (int i = static_cast<int>(s.factors.size()) - 1; i >= 0; --i) {
    out[i] = idx % s.factors[i].dim;
    idx /= s.factors[i].dim;
  }
}

}  // namespace

LabeledOperator embed(const LabeledOperator& op, const ProductSpace& target) {
  // map each op factor to its position in target
  std::vector<int> pos(op.space.factors.size());
  for (size_t i = 0; i < op.space.factors.size(); ++i) {
    const auto& f = op.space.factors[i];
    int j = target.factor_index(f.label);  // throws UnknownLabel
    if (target.factors[j].dim != f.dim)
      throw DimMismatch("factor " + f.label + " has dim " +
                        std::to_string(target.factors[j].dim) +
                        " in target, expected " + std::to_string(f.dim));
    pos[i] = j;
  }
  std::vector<bool> covered(target.factors.size(), false);
  for (int j : pos) covered[j] = true;

  const auto op_st = strides(op.space);
  const int n = target.total_dim();
  Matrix out = Matrix::Zero(n, n);
  std::vector<int> ri, ci;
  for (int r = 0; r < n; ++r) {
    decode(r, target, ri);
    for (int c = 0; c < n; ++c) {
      decode(c, target, ci);
      bool diag = true;
      for (size_t j = 0; j < covered.size(); ++j)
        if (!covered[j] && ri[j] != ci[j]) {
          diag = false;
          break;
        }
      if (!diag) continue;
      int orow = 0, ocol = 0;
      for (size_t i = 0; i < pos.size(); ++i) {
        orow += ri[pos[i]] * op_st[i];
        ocol += ci[pos[i]] * op_st[i];
      }
      out(r, c) = op.mat(orow, ocol);
    }
  }
  return {target, std::move(out)};
}

LabeledOperator partial_trace(const LabeledOperator& op,
                              const std::vector<std::string>& labels) {
  std::vector<bool> traced(op.space.factors.size(), false);
  for (const auto& l : labels) traced[op.space.factor_index(l)] = true;

  std::vector<Factor> kept;
  for (size_t i = 0; i < op.space.factors.size(); ++i)
    if (!traced[i]) kept.push_back(op.space.factors[i]);
  ProductSpace out_space(kept);

  const auto st = strides(op.space);
  int traced_dim = 1;
  std::vector<int> traced_idx;
  for (size_t i = 0; i < traced.size(); ++i)
    if (traced[i]) {
      traced_dim *= op.space.factors[i].dim;
      traced_idx.push_back(static_cast<int>(i));
    }
  std::vector<int> kept_idx;
  for (size_t i = 0; i < traced.size(); ++i)
    if (!traced[i]) kept_idx.push_back(static_cast<int>(i));

  const int m = out_space.total_dim();
  Matrix out = Matrix::Zero(std::max(m, 1), std::max(m, 1));
  std::vector<int> ki, kj;
  for (int r = 0; r < m; ++r) {
    decode(r, out_space, ki);
    for (int c = 0; c < m; ++c) {
      decode(c, out_space, kj);
      Complex sum = 0.0;
      for (int t = 0; t < traced_dim; ++t) {
        int row = 0, col = 0, tt = t;
        for (int i = static_cast<int>(traced_idx.size()) - 1; i >= 0; --i) {
          int d = op.space.factors[traced_idx[i]].dim;
          int v = tt % d;
          tt /= d;
          row += v * st[traced_idx[i]];
          col += v * st[traced_idx[i]];
        }
        for (size_t i = 0; i < kept_idx.size(); ++i) {
          row += ki[i] * st[kept_idx[i]];
          col += kj[i] * st[kept_idx[i]];
        }
        sum += op.mat(row, col);
      }
      out(r, c) = sum;
    }
  }
  if (m == 0) out(0, 0) = op.mat.trace();
  return {out_space.factors.empty() ? ProductSpace::single("scalar", 1)
                                    : out_space,
          std::move(out)};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix OperatorSubspace::project(const Matrix& x) const {
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (const auto& b : basis) out += frobenius_inner(b, x) * b;
  return out;
}

double OperatorSubspace::projection_residual(const Matrix& x) const {
  double nx = x.norm();
  if (nx == 0.0) return 0.0;
  return (x - project(x)).norm() / nx;
}

namespace {

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int n) {
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

}  // namespace

OperatorSubspace span_of(const ProductSpace& space,
                         const std::vector<Matrix>& ops) {
  const int n = space.total_dim();
  OperatorSubspace out;
  out.space = space;
  if (ops.empty()) return out;
  Matrix stacked(n * n, static_cast<int>(ops.size()));
  for (size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != n || ops[i].cols() != n)
      throw DimMismatch("span_of: operator dimension mismatch");
    stacked.col(static_cast<int>(i)) = vec(ops[i]);
  }
  // JacobiSVD: BDCSVD misplaces small singular values on complex input
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cut = sv.size() ? sv(0) * 1e-9 : 0.0;
  double smin = 0.0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) {
      out.basis.push_back(unvec(svd.matrixU().col(i), n));
      smin = sv(i);
    }
  out.gram_condition = (smin > 0.0) ? sv(0) / smin : 1.0;
  return out;
}

OperatorSubspace commutant(const std::vector<LabeledOperator>& gens) {
  if (gens.empty()) throw EmptyGenerators("commutant needs generators");
  const ProductSpace& space = gens.front().space;
  for (const auto& g : gens)
    if (!(g.space == space))
      throw SpaceMismatch("commutant generators live on different spaces");
  const int n = space.total_dim();
  const int k = static_cast<int>(gens.size());
  const Matrix id = Matrix::Identity(n, n);
  // vec(XT - TX) = (I (x) X - X^T (x) I) vec(T), column-major vec
  Matrix stacked(k * n * n, n * n);
  for (int i = 0; i < k; ++i)
    stacked.middleRows(i * n * n, n * n) =
        kron(id, gens[i].mat) - kron(gens[i].mat.transpose(), id);
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cut = sv.size() ? sv(0) * 1e-9 : 0.0;
  OperatorSubspace out;
  out.space = space;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= cut)
      out.basis.push_back(unvec(svd.matrixV().col(i), n));
  // the commutator map can be rank-deficient without the V basis covering
  // the whole nullspace when n*n exceeds the number of rows; never happens
  // here since k >= 1
  return out;
}

SubspaceComparison subspace_equal(const OperatorSubspace& a,
                                  const OperatorSubspace& b, double tol) {
  if (!(a.space == b.space))
    throw SpaceMismatch("subspace_equal: different underlying spaces");
  SubspaceComparison cmp;
  for (const auto& x : a.basis)
    cmp.residual = std::max(cmp.residual, b.projection_residual(x));
  for (const auto& x : b.basis)
    cmp.residual = std::max(cmp.residual, a.projection_residual(x));
  cmp.equal = a.dim() == b.dim() && cmp.residual < tol;
  return cmp;
}

}  // namespace qrf
