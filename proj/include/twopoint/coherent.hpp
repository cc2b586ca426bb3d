#pragma once

#include <utility>

#include "twopoint/fock.hpp"
#include "twopoint/sector.hpp"

namespace twopoint {

/// Coherent-state label (alpha, beta) = (q_a + i p_a, q_b + i p_b).
struct CoherentLabel {
  cplx alpha;
  cplx beta;

  /// |alpha|^2 + |beta|^2
  double weight() const { return std::norm(alpha) + std::norm(beta); }
  bool is_zero() const { return alpha == cplx{} && beta == cplx{}; }
};

/// Classical ellipse q_a = A sin(tau + phi_a), q_b = B sin(tau + phi_b) on the
/// constraint surface A^2 + B^2 = 2M.
class TrajectoryParams {
 public:
  /// Throws DomainError unless A, B >= 0 and A^2 + B^2 = 2M to 1e-12 (relative to 2M).
  TrajectoryParams(double a, double b, double phi_a, double phi_b, int mass);

  /// B is derived as sqrt(2M - A^2); A^2 must lie in [0, 2M].
  static TrajectoryParams on_shell(int mass, double a_squared, double phi_a, double phi_b);

  double a() const { return a_; }
  double b() const { return b_; }
  double phi_a() const { return phi_a_; }
  double phi_b() const { return phi_b_; }
  double delta_phi() const { return phi_a_ - phi_b_; }
  int mass() const { return mass_; }

 private:
  double a_, b_, phi_a_, phi_b_;
  int mass_;
};

struct PhasePoint {
  double tau = 0.0;
};

/// (A sin(tau + phi_a), B sin(tau + phi_b))
std::pair<double, double> classical_trajectory(const TrajectoryParams& traj, PhasePoint tau);

/// alpha = A exp(-i(tau + phi_a)), beta = B exp(-i(tau + phi_b)).
CoherentLabel label_from_trajectory(const TrajectoryParams& traj, PhasePoint tau);

/// Per-mode cutoff keeping the Poisson tail of |label> below 1e-12:
/// ceil(|z|^2 + 10|z| + 20), maximized over both components.
Truncation kinematical_truncation(const CoherentLabel& label);

/// Probability mass of |label> beyond the truncation.
double kinematical_tail_mass(const CoherentLabel& label, Truncation trunc);

/// exp(-(|alpha|^2 + |beta|^2)/2) alpha^n_a beta^n_b / sqrt(n_a! n_b!).
/// Throws TruncationError when the discarded tail mass exceeds 1e-12.
TwoModeState kinematical_coherent(const CoherentLabel& label, Truncation trunc);

/// P|alpha, beta>, evaluated directly on the sector (unnormalized).
PhysicalState physical_coherent(const CoherentLabel& label, const SectorLabel& sector);

/// Throws DomainError on the zero state.
PhysicalState normalize_physical(const PhysicalState& state);

/// Closed form of the normalized physical coherent state:
/// sqrt((2j)!) / sqrt((j-m)!(j+m)!) alpha^(j-m) beta^(j+m) / (|alpha|^2 + |beta|^2)^j.
PhysicalState normalized_coherent(const CoherentLabel& label, const SectorLabel& sector);

/// <label2|label1> of normalized physical coherent states:
/// (conj(a2) a1 + conj(b2) b1)^(2j) / ((|a2|^2+|b2|^2)^j (|a1|^2+|b1|^2)^j).
/// The bra label is the first argument.
cplx overlap(const CoherentLabel& label2, const CoherentLabel& label1, const SectorLabel& sector);

/// (alpha, beta) -> (alpha e^{i theta}, beta e^{i theta}).
CoherentLabel gauge_transform(const CoherentLabel& label, double theta);

/// -log|overlap|^2 between labels with ratio parameters xi = alpha/beta equal to
/// reference -/+ offset/2 (beta = 1 for both). Grows linearly in 2j at fixed offset.
double suppression_exponent(double xi_offset, const SectorLabel& sector, double reference = 1.0);

namespace detail {
/// z^n for integer n >= 0 in log-polar form; 0^0 = 1.
cplx int_power(cplx z, int n);
/// log(n!) via lgamma.
double log_factorial(int n);
}  // namespace detail

}  // namespace twopoint
