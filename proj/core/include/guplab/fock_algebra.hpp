#pragma once

#include <functional>
#include <span>
#include <vector>

#include "guplab/dense_operator.hpp"
#include "guplab/momentum_map.hpp"
#include "guplab/params.hpp"

namespace guplab {

struct LadderPair {
  DenseOperator a;
  DenseOperator a_dag;
};

struct CanonicalPair {
  DenseOperator q;
  DenseOperator P;
};

enum class HamiltonianForm { kLadder, kQuadratic };

// a|n> = sqrt(n)|n-1>, a^dag|n> = sqrt(n+1)|n+1>, truncated at dim.
// a_dag is exactly the conjugate transpose of a.
LadderPair build_ladder(Eigen::Index dim);

// q = sqrt(hbar/2m omega)(a + a^dag), P = i sqrt(m hbar omega/2)(a^dag - a).
CanonicalPair build_qP(const OscillatorParams& params, Eigen::Index dim);

// Number operator a^dag a: exactly diagonal 0 .. dim-1.
DenseOperator build_number_operator(Eigen::Index dim);

// p = tan(sqrt(beta) P)/sqrt(beta) by functional calculus on the Hermitian P
// matrix. Returns P unchanged when beta = 0. Throws DomainExceeded when an
// eigenvalue of P leaves the guarded arctan range, which means the Fock
// truncation at this (dim, beta) cannot represent p.
DenseOperator build_p_operator(const OscillatorParams& params, Eigen::Index dim,
                               double guard = kDefaultDomainGuard);

// kLadder: hbar omega (a^dag a + 1/2), exactly diagonal.
// kQuadratic: (1/2) m omega^2 q^2 + P^2 / 2m built from the q, P matrices.
// The two agree on the leading dim-2 diagonal block; beta never enters.
DenseOperator build_hamiltonian(const OscillatorParams& params, Eigen::Index dim,
                                HamiltonianForm form);

// Apply a scalar map to the eigenvalues of a Hermitian operator and
// reassemble. Degenerate eigenvalues need no special casing since each is
// mapped independently.
DenseOperator map_eigenvalues(const DenseOperator& op,
                              const std::function<double(double)>& f,
                              const std::string& label);

// Eigenvalues of a Hermitian operator, ascending.
RealVector hermitian_spectrum(const DenseOperator& op);

// psi_0(q) = (m omega / pi hbar)^{1/4} exp(-m omega q^2 / 2 hbar) sampled on
// the grid. The grid must be non-empty, finite and sorted ascending.
RealVector ground_state_wavefunction(const OscillatorParams& params,
                                     std::span<const double> q_grid);

// Uniform grid of n points spanning +-8 sqrt(hbar/m omega), wide enough that
// the trapezoid norm of psi_0 reaches 1 within 1e-6.
std::vector<double> default_wavefunction_grid(const OscillatorParams& params,
                                              std::size_t n_points = 2001);

// max |[q, P] - i hbar I| over the leading block x block corner.
double canonical_commutator_residual(const OscillatorParams& params, Eigen::Index dim,
                                     Eigen::Index block);

// Relative Frobenius residual of [q, p] against i hbar (I + beta p^2) on the
// leading block x block corner.
double deformed_commutator_residual(const OscillatorParams& params, Eigen::Index dim,
                                    Eigen::Index block, double guard = kDefaultDomainGuard);

// One row of the ladder-algebra verification report. Identities that hold
// exactly (tolerance 0) are evaluated in exact radical arithmetic, not in
// doubles.
struct CommuteCheck {
  std::string name;
  Eigen::Index dim = 0;
  Eigen::Index block = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<CommuteCheck> run_commute_checks(const OscillatorParams& params, Eigen::Index dim,
                                             double guard = kDefaultDomainGuard);

struct UncertaintyReport {
  double dq = 0.0;
  double dp = 0.0;
  double rhs_bound = 0.0;
  bool satisfied = false;

  double product() const { return dq * dp; }
};

// Standard deviations of q and p in the given state, against the bound
// (hbar/2)(1 + beta dp^2). satisfied allows a -1e-9 margin for truncation
// noise. Propagates DomainExceeded from build_p_operator.
UncertaintyReport uncertainty_check(const FockState& state, const OscillatorParams& params,
                                    double guard = kDefaultDomainGuard);

}  // namespace guplab
