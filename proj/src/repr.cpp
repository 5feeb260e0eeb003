#include "qrf/repr.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "qrf/errors.hpp"

namespace qrf {

const Irrep& IrrepTable::by_label(const std::string& label) const {
  for (const auto& ir : irreps)
    if (ir.label == label) return ir;
  throw UnknownLabel("no irrep labeled " + label);
}

int IrrepTable::block_offset(int q) const {
  int off = 0;
  for (int i = 0; i < q; ++i) off += irreps[i].dim * irreps[i].dim;
  return off;
}

namespace {

Matrix parse_matrix(const nlohmann::json& jm, int dim) {
  if (!jm.is_array() || static_cast<int>(jm.size()) != dim)
    throw MalformedDocument("matrix has wrong row count");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = jm.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw MalformedDocument("matrix row has wrong length");
    for (int j = 0; j < dim; ++j) {
      const auto& e = row.at(j);
      if (!e.is_array() || e.size() != 2)
        throw MalformedDocument("matrix entry is not a [re, im] pair");
      m(i, j) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

std::vector<Matrix> parse_matrices(const nlohmann::json& jms, int dim,
                                   int order) {
  if (!jms.is_array() || static_cast<int>(jms.size()) != order)
    throw MalformedDocument("expected one matrix per group element");
  std::vector<Matrix> out;
  out.reserve(order);
  for (const auto& jm : jms) out.push_back(parse_matrix(jm, dim));
  return out;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedDocument("cannot open file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedDocument(std::string("bad JSON in ") + path + ": " +
                            e.what());
  }
  return doc;
}

}  // namespace

IrrepTable load_irrep_table(const nlohmann::json& doc, const FiniteGroup& g) {
  if (!doc.is_object() || !doc.contains("irreps"))
    throw MalformedDocument("irrep document needs an 'irreps' array");
  IrrepTable table;
  table.group = g;
  for (const auto& ji : doc.at("irreps")) {
    Irrep ir;
    ir.label = ji.value("label", std::string("q") +
                                     std::to_string(table.irreps.size()));
    ir.dim = ji.at("dim").get<int>();
    if (ir.dim <= 0) throw MalformedDocument("irrep dim must be positive");
    ir.matrices = parse_matrices(ji.at("matrices"), ir.dim, g.order);
    table.irreps.push_back(std::move(ir));
  }
  return table;
}

IrrepTable load_irrep_table_file(const std::string& path,
                                 const FiniteGroup& g) {
  return load_irrep_table(read_json(path), g);
}

UnitaryRep load_rep(const nlohmann::json& doc, const FiniteGroup& g) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrices"))
    throw MalformedDocument("rep document needs 'dim' and 'matrices'");
  UnitaryRep rep;
  rep.name = doc.value("name", std::string("rep"));
  rep.group = g;
  rep.dim = doc.at("dim").get<int>();
  if (rep.dim <= 0) throw MalformedDocument("rep dim must be positive");
  rep.matrices = parse_matrices(doc.at("matrices"), rep.dim, g.order);
  return rep;
}

UnitaryRep load_rep_file(const std::string& path, const FiniteGroup& g) {
  return load_rep(read_json(path), g);
}

UnitaryRep trivial_rep(const FiniteGroup& g) {
  UnitaryRep rep;
  rep.name = "trivial";
  rep.group = g;
  rep.dim = 1;
  rep.matrices.assign(g.order, Matrix::Identity(1, 1));
  return rep;
}

UnitaryRep left_regular_rep(const FiniteGroup& g) {
  UnitaryRep rep;
  rep.name = "left_regular";
  rep.group = g;
  rep.dim = g.order;
  for (int e = 0; e < g.order; ++e)
    rep.matrices.push_back(regular_left_matrix(g, e));
  return rep;
}

UnitaryRep direct_sum_rep(const IrrepTable& table,
                          const std::vector<std::string>& labels) {
  UnitaryRep rep;
  rep.group = table.group;
  int total = 0;
  for (const auto& l : labels) {
    total += table.by_label(l).dim;
    rep.name += (rep.name.empty() ? "" : "+") + l;
  }
  rep.dim = total;
  for (int g = 0; g < table.group.order; ++g) {
    Matrix m = Matrix::Zero(total, total);
    int off = 0;
    for (const auto& l : labels) {
      const Irrep& ir = table.by_label(l);
      m.block(off, off, ir.dim, ir.dim) = ir.matrices[g];
      off += ir.dim;
    }
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

VerificationReport validate_rep(const UnitaryRep& rep) {
  VerificationReport report;
  report.suite = "rep:" + rep.name;
  const FiniteGroup& g = rep.group;
  const Matrix id = Matrix::Identity(rep.dim, rep.dim);
  double uni = 0.0;
  for (int a = 0; a < g.order; ++a)
    uni = std::max(uni,
                   (rep.matrices[a] * rep.matrices[a].adjoint() - id).norm());
  report.add("unitarity", "U(g) U(g)^dag = 1", uni, 1e-10);
  double hom = 0.0;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      hom = std::max(hom, (rep.matrices[a] * rep.matrices[b] -
                           rep.matrices[g.op(a, b)])
                              .norm());
  report.add("homomorphism", "U(g) U(h) = U(gh)", hom, 1e-10);
  return report;
}

VerificationReport validate_irrep_table(const IrrepTable& table) {
  VerificationReport report;
  report.suite = "irreps:" + table.group.name;
  const FiniteGroup& g = table.group;
  const int n = g.order;

  int dimsum = 0;
  for (const auto& ir : table.irreps) {
    const Matrix id = Matrix::Identity(ir.dim, ir.dim);
    double uni = 0.0, hom = 0.0;
    for (int a = 0; a < n; ++a)
      uni = std::max(uni,
                     (ir.matrices[a] * ir.matrices[a].adjoint() - id).norm());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        hom = std::max(
            hom, (ir.matrices[a] * ir.matrices[b] - ir.matrices[g.op(a, b)])
                     .norm());
    double char2 = 0.0;
    for (int a = 0; a < n; ++a)
      char2 += std::norm(ir.matrices[a].trace());
    report.add(ir.label + ".unitarity", "D(g) D(g)^dag = 1", uni, 1e-10);
    report.add(ir.label + ".homomorphism", "D(g) D(h) = D(gh)", hom, 1e-10);
    report.add(ir.label + ".irreducibility",
               "(1/|G|) sum_g |tr D(g)|^2 = 1",
               std::abs(char2 / n - 1.0), 1e-8);
    dimsum += ir.dim * ir.dim;
  }
  report.add("completeness", "sum_q d_q^2 = |G|",
             std::abs(static_cast<double>(dimsum - n)), 0.5);

  // Schur orthogonality across all matrix-element pairs
  double schur = 0.0;
  for (size_t p = 0; p < table.irreps.size(); ++p) {
    for (size_t r = p; r < table.irreps.size(); ++r) {
      const Irrep& ip = table.irreps[p];
      const Irrep& iq = table.irreps[r];
      for (int x = 0; x < ip.dim; ++x)
        for (int y = 0; y < ip.dim; ++y)
          for (int x2 = 0; x2 < iq.dim; ++x2)
            for (int y2 = 0; y2 < iq.dim; ++y2) {
              Complex s = 0.0;
              for (int a = 0; a < n; ++a)
                s += ip.matrices[a](x, y) * std::conj(iq.matrices[a](x2, y2));
              s /= static_cast<double>(n);
              Complex expect = (p == r && x == x2 && y == y2)
                                   ? Complex(1.0 / ip.dim, 0.0)
                                   : Complex(0.0, 0.0);
              schur = std::max(schur, std::abs(s - expect));
            }
    }
  }
  report.add("schur_orthogonality",
             "(1/|G|) sum_g D^q_xy conj(D^q'_x'y') = delta/d_q", schur, 1e-8);
  return report;
}

Matrix regular_left_matrix(const FiniteGroup& g, int elem) {
  if (elem < 0 || elem >= g.order)
    throw IndexOutOfRange("element index " + std::to_string(elem));
  Matrix m = Matrix::Zero(g.order, g.order);
  for (int h = 0; h < g.order; ++h) m(g.op(elem, h), h) = 1.0;
  return m;
}

Matrix regular_right_matrix(const FiniteGroup& g, int elem) {
  if (elem < 0 || elem >= g.order)
    throw IndexOutOfRange("element index " + std::to_string(elem));
  Matrix m = Matrix::Zero(g.order, g.order);
  for (int h = 0; h < g.order; ++h) m(g.op(h, g.inverse(elem)), h) = 1.0;
  return m;
}

LabeledOperator regular_left(const FiniteGroup& g, int elem,
                             const std::string& label) {
  return {ProductSpace::single(label, g.order), regular_left_matrix(g, elem)};
}

LabeledOperator regular_right(const FiniteGroup& g, int elem,
                              const std::string& label) {
  return {ProductSpace::single(label, g.order),
          regular_right_matrix(g, elem)};
}

Matrix fourier_unitary(const IrrepTable& table) {
  const int n = table.group.order;
  int dimsum = 0;
  for (const auto& ir : table.irreps) dimsum += ir.dim * ir.dim;
  if (dimsum != n)
    throw InvalidTable("irrep table is incomplete: sum d_q^2 = " +
                       std::to_string(dimsum) + " != " + std::to_string(n));
  Matrix f(n, n);
  int row = 0;
  for (const auto& ir : table.irreps) {
    const double scale = std::sqrt(static_cast<double>(ir.dim) / n);
    for (int x = 0; x < ir.dim; ++x)
      for (int y = 0; y < ir.dim; ++y, ++row)
        for (int g = 0; g < n; ++g)
          f(row, g) = scale * ir.matrices[g](x, y);
  }
  return f;
}

Matrix left_block_diagonal(const IrrepTable& table, int elem) {
  const int n = table.group.order;
  Matrix m = Matrix::Zero(n, n);
  int off = 0;
  for (const auto& ir : table.irreps) {
    m.block(off, off, ir.dim * ir.dim, ir.dim * ir.dim) =
        kron(ir.matrices[elem], Matrix::Identity(ir.dim, ir.dim));
    off += ir.dim * ir.dim;
  }
  return m;
}

Matrix right_block_diagonal(const IrrepTable& table, int elem) {
  const int n = table.group.order;
  Matrix m = Matrix::Zero(n, n);
  int off = 0;
  for (const auto& ir : table.irreps) {
    m.block(off, off, ir.dim * ir.dim, ir.dim * ir.dim) =
        kron(Matrix::Identity(ir.dim, ir.dim), ir.matrices[elem].conjugate());
    off += ir.dim * ir.dim;
  }
  return m;
}

int multiplicity(const IrrepTable& table, const UnitaryRep& rep, int q) {
  const FiniteGroup& g = table.group;
  Complex s = 0.0;
  for (int a = 0; a < g.order; ++a)
    s += rep.matrices[a].trace() *
         std::conj(table.irreps[q].matrices[a].trace());
  s /= static_cast<double>(g.order);
  double m = std::round(s.real());
  if (std::abs(s - Complex(m, 0.0)) > 1e-6)
    throw ValidationFailure("non-integer multiplicity for irrep " +
                            table.irreps[q].label);
  return static_cast<int>(m);
}

}  // namespace qrf
