#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrf/errors.hpp"
#include "qrf/perspective.hpp"
#include "qrf/twirl.hpp"
#include "qrf/two_frame.hpp"

using namespace qrf;

namespace {

constexpr int kExitValidationFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDimBudget = 3;

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot open output file " + out_path);
  f << text;
}

Matrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int cmd_validate(const std::string& group_file, const std::string& irreps_file,
                 const std::string& out_path) {
  FiniteGroup g = load_group_file(group_file);
  IrrepTable table = load_irrep_table_file(irreps_file, g);
  VerificationReport report = validate_irrep_table(table);
  report.suite = "validate:" + g.name;
  write_text(out_path, report.to_json().dump(2) + "\n");
  return report.passed() ? 0 : kExitValidationFailure;
}

VerificationReport run_suite(const FiniteGroup& g, const IrrepTable& table,
                             const UnitaryRep& rep, std::uint64_t seed,
                             int trials, long dim_budget, double tol_scale) {
  const int n = g.order;
  const int ds = rep.dim;
  if (static_cast<long>(n) * ds > dim_budget)
    throw DimBudgetExceeded("single-frame dimension " +
                            std::to_string(n * ds) + " exceeds budget " +
                            std::to_string(dim_budget));
  std::mt19937_64 rng(seed);
  VerificationReport report;
  report.suite = "suite:" + g.name + ":" + rep.name;
  auto add = [&](const std::string& name, const std::string& anchor,
                 double residual, double tol, const Timer& timer) {
    report.add(name, anchor, residual, tol * tol_scale).wall_time_ms =
        timer.ms();
  };

  {
    Timer t;
    VerificationReport irreps = validate_irrep_table(table);
    double worst = 0.0;
    for (auto& e : irreps.entries) worst = std::max(worst, e.residual);
    add("irrep_table", "D(g) D(h) = D(gh), sum d_q^2 = |G|, orthogonality",
        irreps.passed() ? worst : 1.0, 1e-8, t);
  }
  {
    Timer t;
    VerificationReport repv = validate_rep(rep);
    double worst = 0.0;
    for (auto& e : repv.entries) worst = std::max(worst, e.residual);
    add("system_rep", "U(g) U(h) = U(gh), U unitary",
        repv.passed() ? worst : 1.0, 1e-10, t);
  }
  {
    Timer t;
    Matrix f = fourier_unitary(table);
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
      worst = std::max(worst, (f * regular_left_matrix(g, a) * f.adjoint() -
                               left_block_diagonal(table, a))
                                  .norm());
      worst = std::max(worst, (f * regular_right_matrix(g, a) * f.adjoint() -
                               right_block_diagonal(table, a))
                                  .norm());
    }
    add("fourier_intertwining",
        "F L(g) F^dag = sum_q D_q(g) (x) 1, F R(g) F^dag = sum_q 1 (x) "
        "conj D_q(g)",
        worst, 1e-9, t);
  }

  TwirlSpec action = transversal_action(g, rep);
  {
    Timer t;
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      LabeledOperator once =
          g_twirl({action.space, random_matrix(n * ds, rng)}, action);
      worst = std::max(worst, (g_twirl(once, action).mat - once.mat).norm());
    }
    add("twirl_idempotent", "T[T[X]] = T[X]", worst, 1e-9, t);
  }
  if (n * ds <= 32) {
    Timer t;
    std::vector<LabeledOperator> gens;
    for (const auto& v : action.action) gens.emplace_back(action.space, v);
    auto cmp = subspace_equal(invariant_algebra(action), commutant(gens));
    add("twirl_image_equals_commutant",
        "im T = {X : [X, L(g) (x) U(g)] = 0}",
        cmp.equal ? cmp.residual : 1.0, 1e-8, t);
  } else {
    report.add_skipped("twirl_image_equals_commutant",
                       "im T = {X : [X, L(g) (x) U(g)] = 0}");
  }

  FramePerspective persp = build_perspective(g, table, rep);
  {
    Timer t;
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      Matrix t_s = random_matrix(ds, rng);
      Matrix lhs = persp.V * relative_operator(t_s, persp).mat *
                   persp.V.adjoint();
      worst = std::max(
          worst, (lhs - kron(Matrix::Identity(n, n), t_s)).norm());
    }
    add("relative_transport", "V T_rel V^dag = 1 (x) T", worst, 1e-9, t);
  }
  {
    Timer t;
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
      Matrix lhs = persp.V *
                   kron(regular_left_matrix(g, a), rep.matrices[a]) *
                   persp.V.adjoint();
      Matrix rhs =
          kron(regular_left_matrix(g, a), Matrix::Identity(ds, ds));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    add("gauge_image", "V (L(g) (x) U(g)) V^dag = L(g) (x) 1", worst, 1e-12,
        t);
  }
  {
    Timer t;
    TwirlSpec gauge;
    gauge.group = g;
    gauge.space = persp.perspective_space;
    for (int a = 0; a < n; ++a)
      gauge.action.push_back(
          kron(regular_left_matrix(g, a), Matrix::Identity(ds, ds)));
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      Matrix x = random_matrix(n * ds, rng);
      Matrix via_e = e_map({persp.standard_space, x}, persp).mat;
      Matrix twirl_first =
          persp.V * g_twirl({persp.standard_space, x}, action).mat *
          persp.V.adjoint();
      Matrix refactor_first =
          g_twirl({persp.perspective_space, persp.V * x * persp.V.adjoint()},
                  gauge)
              .mat;
      worst = std::max(worst, (via_e - twirl_first).norm());
      worst = std::max(worst, (via_e - refactor_first).norm());
    }
    add("invariant_map", "E[T] = V T_twirl V^dag = twirl of V T V^dag",
        worst, 1e-9, t);

    Timer t2;
    std::vector<Matrix> product;
    for (int f = 0; f < n; ++f)
      for (int i = 0; i < ds; ++i)
        for (int j = 0; j < ds; ++j) {
          Matrix unit = Matrix::Zero(ds, ds);
          unit(i, j) = 1.0;
          product.push_back(kron(regular_right_matrix(g, f), unit));
        }
    OperatorSubspace product_span = span_of(gauge.space, product);
    UnitaryRep big;
    big.group = g;
    big.dim = n * ds;
    big.matrices = action.action;
    int oracle = 0;
    for (size_t q = 0; q < table.irreps.size(); ++q) {
      int m = multiplicity(table, big, static_cast<int>(q));
      oracle += m * m;
    }
    add("factorization_dimension",
        "dim span{R(f) (x) E_ij} = sum_q m_q^2",
        std::abs(static_cast<double>(product_span.dim() - oracle)), 0.5, t2);

    Timer t3;
    double span_res = 0.0;
    if (n * ds <= 32) {
      auto cmp = subspace_equal(invariant_algebra(gauge), product_span);
      span_res = cmp.equal ? cmp.residual : 1.0;
    } else {
      for (const auto& x : product) {
        LabeledOperator fixed = g_twirl({gauge.space, x}, gauge);
        span_res = std::max(span_res, (fixed.mat - x).norm() / x.norm());
      }
    }
    add("factorization_span", "invariant algebra = span{R(f)} (x) B(S)",
        span_res, 1e-8, t3);
  }
  {
    Timer t;
    double worst = 0.0;
    for (int f = 0; f < n; ++f) {
      Matrix persp_op =
          kron(regular_right_matrix(g, f), Matrix::Identity(ds, ds));
      worst = std::max(worst,
                       (persp.V.adjoint() * persp_op * persp.V -
                        extra_particle_standard_form(persp, f))
                           .norm());
    }
    add("extra_particle_standard_form",
        "V^dag (R(f) (x) 1) V = sum_a |a f^-1><a| (x) U(a f^-1) U(a)^dag",
        worst, 1e-10, t);
  }
  {
    Timer t;
    Matrix raw = random_matrix(ds, rng);
    Matrix rho = raw * raw.adjoint();
    rho /= rho.trace().real();
    ClassicalReduction red = classical_frame_reduction(0, rho, persp);
    add("classical_reduction_product",
        "E[|g0><g0| (x) rho] = (1/|G|) 1 (x) U(g0)^dag rho U(g0)",
        red.product_residual, 1e-10, t);
    add("classical_reduction_mixedness",
        "extra particle maximally mixed per charge sector",
        red.sector_mixedness_residual, 1e-9, t);
  }

  // two-frame section; conjugation workload grows with n^2 d_S^2
  if (static_cast<long>(n) * n * ds * ds > dim_budget) {
    for (const char* name :
         {"two_frame_unitarity", "class1_closed_form", "class2_closed_form",
          "class3_closed_form", "factored_form", "zero_charge_invariance",
          "zero_charge_transfer", "common_subalgebra", "frame_rotation"})
      report.add_skipped(name, "two-frame checks over dimension budget");
    return report;
  }

  TwoFrameSetup setup =
      build_two_frame(g, table, rep, static_cast<int>(dim_budget));
  const int total = setup.total_dim();
  {
    Timer t;
    Matrix id = Matrix::Identity(total, total);
    double worst =
        std::max({(setup.V_A * setup.V_A.adjoint() - id).norm(),
                  (setup.V_B * setup.V_B.adjoint() - id).norm(),
                  (setup.S_AB * setup.S_AB.adjoint() - id).norm()});
    add("two_frame_unitarity", "V_A, V_B, S_AB unitary", worst, 1e-10, t);
  }
  {
    Matrix id_n = Matrix::Identity(n, n);
    Matrix id_s = Matrix::Identity(ds, ds);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Timer t1;
    double w1 = 0.0, w2 = 0.0, w3 = 0.0;
    for (int i = 0; i < trials; ++i) {
      Matrix t_s = random_matrix(ds, rng);
      w1 = std::max(
          w1, (transform_operator(
                   {setup.persp_a, kron(id_n, kron(id_n, t_s))}, setup)
                   .mat -
               class1_closed_form(setup, t_s))
                  .norm());
      Matrix t_ba = random_matrix(n, rng);
      w2 = std::max(
          w2, (transform_operator(
                   {setup.persp_a, kron(id_n, kron(t_ba, id_s))}, setup)
                   .mat -
               class2_closed_form(setup, t_ba))
                  .norm());
      Matrix t_r = Matrix::Zero(n, n);
      for (int f = 0; f < n; ++f)
        t_r += Complex(gauss(rng), gauss(rng)) * regular_right_matrix(g, f);
      w3 = std::max(
          w3, (transform_operator(
                   {setup.persp_a, kron(t_r, kron(id_n, id_s))}, setup)
                   .mat -
               class3_closed_form(setup, t_r))
                  .norm());
    }
    add("class1_closed_form",
        "S[1 (x) 1 (x) T] = sum_g |g><g| (x) 1 (x) U(g) T U(g)^dag", w1,
        1e-9, t1);
    add("class2_closed_form",
        "S[1 (x) T (x) 1] = sum_{h,g} <h|T|g> |h^-1><g^-1| (x) R(h^-1 g) "
        "(x) U(h^-1 g)",
        w2, 1e-9, t1);
    add("class3_closed_form",
        "S[T_R (x) 1 (x) 1] = sum_g |g><g| (x) R(g) T_R R(g)^dag (x) 1", w3,
        1e-9, t1);
  }
  {
    Timer t;
    add("factored_form",
        "S_AB = parity swap . sum_f |f><f| (x) R(f)^dag (x) U(f)^dag",
        (factored_form(setup) - setup.S_AB).norm(), 1e-10, t);
  }
  {
    Timer t;
    VerificationReport zc = zero_charge_check(setup, trials, seed);
    double inv = 0.0, transfer = 0.0;
    for (const auto& e : zc.entries) {
      if (e.name == "invariance") inv = e.residual;
      if (e.name == "swap_transfer_agreement") transfer = e.residual;
    }
    add("zero_charge_invariance", "L(g) (x) L(g) (x) U(g) Psi = Psi", inv,
        1e-9, t);
    add("zero_charge_transfer", "D V_A Psi = V_B Psi", transfer, 1e-9, t);
  }
  {
    Timer t;
    VerificationReport cs = common_subalgebra_check(
        g, rep, static_cast<int>(dim_budget));
    double worst = 0.0;
    for (const auto& e : cs.entries)
      if (e.name == "intersection_equals_invariant") worst = e.residual;
    add("common_subalgebra",
        "Q|E meet Q|F = 1 (x) 1 (x) invariant algebra of Q",
        cs.passed() ? worst : 1.0, 1e-8, t);
  }
  {
    Timer t;
    Vector phi = Vector::Constant(n, 1.0 / std::sqrt(double(n)));
    Vector psi = Vector::Zero(ds);
    psi(0) = 1.0;
    FrameRotationResult r = frame_rotation_demo(setup, phi, psi);
    double worst = std::max(r.closed_form_residual,
                            std::abs(r.global_purity - 1.0));
    add("frame_rotation",
        "rho = sum_g |phi(g)|^2 |g^-1><g^-1| (x) U(g)^dag psi psi U(g); "
        "global state pure",
        worst, 1e-9, t);
  }
  return report;
}

int cmd_suite(const std::string& group_file, const std::string& irreps_file,
              const std::string& rep_file, std::uint64_t seed, int trials,
              long dim_budget, double tol_scale, const std::string& out_path) {
  FiniteGroup g = load_group_file(group_file);
  IrrepTable table = load_irrep_table_file(irreps_file, g);
  UnitaryRep rep = load_rep_file(rep_file, g);
  VerificationReport report =
      run_suite(g, table, rep, seed, trials, dim_budget, tol_scale);
  write_text(out_path, report.to_json().dump(2) + "\n");
  return report.passed() ? 0 : kExitValidationFailure;
}

int cmd_demo(const std::string& name, const std::string& group_file,
             const std::string& irreps_file, const std::string& rep_file,
             const std::vector<double>& phi_in, std::uint64_t seed,
             int trials, const std::string& out_path) {
  if (name != "frame-rotation" && name != "zero-charge")
    throw UnknownDemo("no demo named " + name);
  FiniteGroup g = load_group_file(group_file);
  IrrepTable table = load_irrep_table_file(irreps_file, g);
  UnitaryRep rep = load_rep_file(rep_file, g);
  TwoFrameSetup setup = build_two_frame(g, table, rep);
  std::ostringstream csv;
  csv.precision(12);

  if (name == "frame-rotation") {
    Vector phi;
    if (phi_in.empty()) {
      phi = Vector::Constant(g.order, 1.0 / std::sqrt(double(g.order)));
    } else {
      if (static_cast<int>(phi_in.size()) != g.order)
        throw SpaceMismatch("need one amplitude per group element");
      phi = Vector::Zero(g.order);
      for (int i = 0; i < g.order; ++i) phi(i) = phi_in[i];
      phi /= phi.norm();
    }
    Vector psi = Vector::Zero(rep.dim);
    psi(0) = 1.0;
    FrameRotationResult r = frame_rotation_demo(setup, phi, psi);
    csv << "metric,value\n";
    csv << "reduced_purity," << r.reduced_purity << "\n";
    csv << "global_purity," << r.global_purity << "\n";
    csv << "closed_form_residual," << r.closed_form_residual << "\n";
    csv << "orbit_orthogonal," << (r.orbit_orthogonal ? 1 : 0) << "\n";
    csv << "purity_formula_residual," << r.purity_formula_residual << "\n";
    csv << "row,col,re,im\n";
    for (int i = 0; i < r.rho_asb.rows(); ++i)
      for (int j = 0; j < r.rho_asb.cols(); ++j)
        csv << i << "," << j << "," << r.rho_asb(i, j).real() << ","
            << r.rho_asb(i, j).imag() << "\n";
  } else {
    csv << "trial,invariance_residual,transfer_residual\n";
    for (int t = 0; t < trials; ++t) {
      VerificationReport r = zero_charge_check(setup, 1, seed + t);
      double inv = 0.0, transfer = 0.0;
      for (const auto& e : r.entries) {
        if (e.name == "invariance") inv = e.residual;
        if (e.name == "swap_transfer_agreement") transfer = e.residual;
      }
      csv << t << "," << inv << "," << transfer << "\n";
    }
  }
  write_text(out_path, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for finite-group reference frames"};
  app.require_subcommand(1);

  std::string group_file, irreps_file, rep_file, out_path, demo_name;
  std::uint64_t seed = 0;
  int trials = 50;
  long dim_budget = 4096;
  double tol_scale = 1.0;
  std::vector<double> phi;

  auto* validate = app.add_subcommand(
      "validate", "check a group table and its irrep table");
  validate->add_option("group", group_file, "group table file")->required();
  validate->add_option("irreps", irreps_file, "irrep table file")->required();
  validate->add_option("--out", out_path, "write the report here");

  auto* suite = app.add_subcommand(
      "suite", "run the full identity suite for one group and system");
  suite->add_option("group", group_file, "group table file")->required();
  suite->add_option("irreps", irreps_file, "irrep table file")->required();
  suite->add_option("rep", rep_file, "system representation file")
      ->required();
  suite->add_option("--seed", seed, "random seed");
  suite->add_option("--trials", trials, "random trials per check");
  suite->add_option("--out", out_path, "write the report here");
  suite->add_option("--dim-budget", dim_budget, "largest dense dimension");
  suite->add_option("--tolerance-scale", tol_scale,
                    "multiply every tolerance");

  auto* demo = app.add_subcommand(
      "demo", "run a scenario (frame-rotation or zero-charge), CSV output");
  demo->add_option("name", demo_name, "demo name")->required();
  demo->add_option("--group", group_file, "group table file")->required();
  demo->add_option("--irreps", irreps_file, "irrep table file")->required();
  demo->add_option("--rep", rep_file, "system representation file")
      ->required();
  demo->add_option("--phi", phi, "frame amplitudes, one per group element");
  demo->add_option("--seed", seed, "random seed");
  demo->add_option("--trials", trials, "trial count");
  demo->add_option("--out", out_path, "write the CSV here");

  try {
    app.parse(argc, argv);
    if (validate->parsed())
      return cmd_validate(group_file, irreps_file, out_path);
    if (suite->parsed())
      return cmd_suite(group_file, irreps_file, rep_file, seed, trials,
                       dim_budget, tol_scale, out_path);
    return cmd_demo(demo_name, group_file, irreps_file, rep_file, phi, seed,
                    trials, out_path);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  } catch (const DimBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimBudget;
  } catch (const NotAGroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
