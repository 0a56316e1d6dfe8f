#include "guplab/fock_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "guplab/exact_algebra.hpp"

namespace guplab {

LadderPair build_ladder(Eigen::Index dim) {
  if (dim < 2) {
    throw ValidationError("build_ladder: dim must be >= 2");
  }
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  ComplexMatrix a_dag = a.adjoint();
  return LadderPair{DenseOperator(std::move(a), "a"),
                    DenseOperator(std::move(a_dag), "a^dag")};
}

CanonicalPair build_qP(const OscillatorParams& params, Eigen::Index dim) {
  params.validate();
  const LadderPair ladder = build_ladder(dim);
  const double q_scale = std::sqrt(params.hbar / (2.0 * params.mass * params.omega));
  const double P_scale = std::sqrt(params.mass * params.hbar * params.omega / 2.0);
  ComplexMatrix q = q_scale * (ladder.a.matrix() + ladder.a_dag.matrix());
  ComplexMatrix P = Complex(0.0, 1.0) * P_scale * (ladder.a_dag.matrix() - ladder.a.matrix());
  return CanonicalPair{DenseOperator(std::move(q), "q"), DenseOperator(std::move(P), "P")};
}

DenseOperator build_number_operator(Eigen::Index dim) {
  if (dim < 2) {
    throw ValidationError("build_number_operator: dim must be >= 2");
  }
  ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    n(k, k) = static_cast<double>(k);
  }
  return DenseOperator(std::move(n), "N");
}

DenseOperator map_eigenvalues(const DenseOperator& op,
                              const std::function<double(double)>& f,
                              const std::string& label) {
  if (!op.is_hermitian(1e-10)) {
    throw ValidationError("map_eigenvalues: '" + op.label() + "' is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("map_eigenvalues: eigendecomposition failed for '" + op.label() + "'");
  }
  RealVector mapped = solver.eigenvalues().unaryExpr(f);
  ComplexMatrix result = solver.eigenvectors() * mapped.asDiagonal() *
                         solver.eigenvectors().adjoint();
  return DenseOperator(std::move(result), label);
}

RealVector hermitian_spectrum(const DenseOperator& op) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_spectrum: eigendecomposition failed for '" + op.label() + "'");
  }
  return solver.eigenvalues();
}

DenseOperator build_p_operator(const OscillatorParams& params, Eigen::Index dim, double guard) {
  params.validate();
  const CanonicalPair pair = build_qP(params, dim);
  if (!params.deformed()) {
    return DenseOperator(pair.P.matrix(), "p");
  }
  const double sqrt_beta = std::sqrt(params.beta);
  const double limit = 0.5 * M_PI * (1.0 - guard);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(pair.P.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("build_p_operator: eigendecomposition of P failed");
  }
  const RealVector& evals = solver.eigenvalues();
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (!(std::abs(evals(i)) * sqrt_beta < limit)) {
      std::ostringstream msg;
      msg << "build_p_operator: eigenvalue " << evals(i) << " of P has |lambda| sqrt(beta) = "
          << std::abs(evals(i)) * sqrt_beta << " >= " << limit
          << "; at dim = " << dim << ", beta = " << params.beta
          << " the truncated Fock space cannot represent p";
      throw DomainExceeded(msg.str());
    }
  }
  RealVector mapped = evals.unaryExpr(
      [sqrt_beta](double lambda) { return std::tan(sqrt_beta * lambda) / sqrt_beta; });
  ComplexMatrix p = solver.eigenvectors() * mapped.asDiagonal() * solver.eigenvectors().adjoint();
  return DenseOperator(std::move(p), "p");
}

DenseOperator build_hamiltonian(const OscillatorParams& params, Eigen::Index dim,
                                HamiltonianForm form) {
  params.validate();
  if (dim < 2) {
    throw ValidationError("build_hamiltonian: dim must be >= 2");
  }
  if (form == HamiltonianForm::kLadder) {
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
      h(n, n) = params.hbar * params.omega * (static_cast<double>(n) + 0.5);
    }
    return DenseOperator(std::move(h), "H");
  }
  const CanonicalPair pair = build_qP(params, dim);
  ComplexMatrix h = 0.5 * params.mass * params.omega * params.omega *
                        (pair.q.matrix() * pair.q.matrix()) +
                    (pair.P.matrix() * pair.P.matrix()) / (2.0 * params.mass);
  return DenseOperator(std::move(h), "H");
}

RealVector ground_state_wavefunction(const OscillatorParams& params,
                                     std::span<const double> q_grid) {
  params.validate();
  if (q_grid.empty()) {
    throw ValidationError("ground_state_wavefunction: empty grid");
  }
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    if (!std::isfinite(q_grid[i])) {
      throw ValidationError("ground_state_wavefunction: grid contains non-finite value");
    }
    if (i > 0 && !(q_grid[i] > q_grid[i - 1])) {
      throw ValidationError("ground_state_wavefunction: grid must be strictly increasing");
    }
  }
  const double m_omega_over_hbar = params.mass * params.omega / params.hbar;
  const double prefactor = std::pow(m_omega_over_hbar / M_PI, 0.25);
  RealVector psi(static_cast<Eigen::Index>(q_grid.size()));
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    psi(static_cast<Eigen::Index>(i)) =
        prefactor * std::exp(-0.5 * m_omega_over_hbar * q_grid[i] * q_grid[i]);
  }
  return psi;
}

std::vector<double> default_wavefunction_grid(const OscillatorParams& params,
                                              std::size_t n_points) {
  params.validate();
  if (n_points < 2) {
    throw ValidationError("default_wavefunction_grid: need at least 2 points");
  }
  const double half_width = 8.0 * params.length_scale();
  std::vector<double> grid(n_points);
  const double step = 2.0 * half_width / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    grid[i] = -half_width + step * static_cast<double>(i);
  }
  return grid;
}

double canonical_commutator_residual(const OscillatorParams& params, Eigen::Index dim,
                                     Eigen::Index block) {
  const CanonicalPair pair = build_qP(params, dim);
  const ComplexMatrix comm = commutator(pair.q, pair.P);
  const ComplexMatrix target =
      Complex(0.0, params.hbar) * ComplexMatrix::Identity(dim, dim);
  return (comm - target).topLeftCorner(block, block).cwiseAbs().maxCoeff();
}

double deformed_commutator_residual(const OscillatorParams& params, Eigen::Index dim,
                                    Eigen::Index block, double guard) {
  const CanonicalPair pair = build_qP(params, dim);
  const DenseOperator p = build_p_operator(params, dim, guard);
  const ComplexMatrix comm = commutator(pair.q, p);
  const ComplexMatrix target =
      Complex(0.0, params.hbar) *
      (ComplexMatrix::Identity(dim, dim) + params.beta * p.matrix() * p.matrix());
  const double target_norm = target.topLeftCorner(block, block).norm();
  return (comm - target).topLeftCorner(block, block).norm() / target_norm;
}

namespace {

// Max-abs entry as a double; the matrix itself is exact.
double exact_max_abs(const exact::ExactMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.dim(); ++i) {
    for (Eigen::Index j = 0; j < m.dim(); ++j) {
      worst = std::max(worst, std::abs(m.at(i, j).to_double()));
    }
  }
  return worst;
}

double exact_block_max_abs(const exact::ExactMatrix& m, Eigen::Index block) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < block; ++i) {
    for (Eigen::Index j = 0; j < block; ++j) {
      worst = std::max(worst, std::abs(m.at(i, j).to_double()));
    }
  }
  return worst;
}

}  // namespace

std::vector<CommuteCheck> run_commute_checks(const OscillatorParams& params, Eigen::Index dim,
                                             double guard) {
  params.validate();
  if (dim < 2) {
    throw ValidationError("run_commute_checks: dim must be >= 2");
  }
  std::vector<CommuteCheck> checks;

  const exact::ExactMatrix a = exact::ladder_a(dim);
  const exact::ExactMatrix a_dag = exact::ladder_a_dag(dim);
  const exact::ExactMatrix n_op = exact::number_operator(dim);

  {  // [a, a^dag] = I on the leading dim-1 block, exact
    const exact::ExactMatrix comm = exact::commutator(a, a_dag);
    const exact::ExactMatrix residual = comm - exact::identity(dim);
    const double res = exact_block_max_abs(residual, dim - 1);
    checks.push_back({"a_adag_commutator_identity", dim, dim - 1, res, 0.0, res == 0.0});

    // truncation corner: [a, a^dag]_{dim-1,dim-1} = -(dim-1), exact
    const exact::Radical corner = comm.at(dim - 1, dim - 1);
    const bool corner_ok = corner.is_integer(-(dim - 1));
    checks.push_back({"a_adag_commutator_corner", dim, 1,
                      corner_ok ? 0.0 : std::abs(corner.to_double() + static_cast<double>(dim - 1)),
                      0.0, corner_ok});
  }
  {  // [N, a] = -a at full dim, exact; residual = [N,a] + a
    const exact::ExactMatrix residual = exact::commutator(n_op, a) + a;
    const double res = exact_max_abs(residual);
    checks.push_back({"number_a_commutator", dim, dim, res, 0.0, res == 0.0});
  }
  {  // [N, a^dag] = a^dag at full dim, exact
    exact::ExactMatrix residual = exact::commutator(n_op, a_dag) - a_dag;
    const double res = exact_max_abs(residual);
    checks.push_back({"number_adag_commutator", dim, dim, res, 0.0, res == 0.0});
  }
  {  // N = a^dag a with diagonal 0..dim-1, exact
    exact::ExactMatrix residual = a_dag * a - n_op;
    const double res = exact_max_abs(residual);
    checks.push_back({"number_is_adag_a", dim, dim, res, 0.0, res == 0.0});
  }
  {  // [q, P] = i hbar I on the leading dim-1 block
    const double res = canonical_commutator_residual(params, dim, dim - 1);
    const double tol = 1e-12 * params.hbar;
    checks.push_back({"q_P_commutator", dim, dim - 1, res, tol, res <= tol});
  }
  if (dim > 4) {  // [q, p] = i hbar (I + beta p^2) on the leading dim-4 block
    const double res = deformed_commutator_residual(params, dim, dim - 4, guard);
    checks.push_back({"q_p_deformed_commutator", dim, dim - 4, res, 5e-3, res <= 5e-3});
  }
  return checks;
}

UncertaintyReport uncertainty_check(const FockState& state, const OscillatorParams& params,
                                    double guard) {
  params.validate();
  const Eigen::Index dim = state.dim();
  if (std::abs(state.norm() - 1.0) > 1e-9) {
    throw ValidationError("uncertainty_check: state must be normalized");
  }
  const CanonicalPair pair = build_qP(params, dim);
  const DenseOperator p = build_p_operator(params, dim, guard);

  const auto variance = [&state](const DenseOperator& op) {
    const double mean = expectation(op, state);
    const DenseOperator squared(op.matrix() * op.matrix(), op.label() + "^2");
    const double second = expectation(squared, state);
    return std::max(second - mean * mean, 0.0);
  };

  UncertaintyReport report;
  report.dq = std::sqrt(variance(pair.q));
  report.dp = std::sqrt(variance(p));
  report.rhs_bound = 0.5 * params.hbar * (1.0 + params.beta * report.dp * report.dp);
  report.satisfied = report.dq * report.dp >= report.rhs_bound - 1e-9;
  return report;
}

}  // namespace guplab
