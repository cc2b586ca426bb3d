#pragma once

#include <Eigen/Dense>

#include "twopoint/fock.hpp"
#include "twopoint/sector_label.hpp"

namespace twopoint {

/// Rejects M < 1 with DomainError.
SectorLabel sector_from_mass(int mass);
/// Rejects non-integer M: the constraint kernel is empty there.
SectorLabel sector_from_mass(double mass);

/// m in {-j, ..., j}, stored doubled. |m> = |n_a, n_b> = |j - m, j + m>.
class MQuantumNumber {
 public:
  /// Throws DomainError unless |two_m| <= two_j and two_m has the parity of two_j.
  MQuantumNumber(const SectorLabel& sector, int two_m);

  /// The m whose occupation of mode b is `n_b` (0 <= n_b <= 2j).
  static MQuantumNumber from_index(const SectorLabel& sector, int n_b);

  const SectorLabel& sector() const { return sector_; }
  int two_m() const { return two_m_; }
  double m() const { return 0.5 * two_m_; }
  int n_a() const { return (sector_.two_j() - two_m_) / 2; }
  int n_b() const { return (sector_.two_j() + two_m_) / 2; }
  /// Position in PhysicalState::amplitudes(); equals n_b.
  int index() const { return n_b(); }

 private:
  SectorLabel sector_;
  int two_m_;
};

/// Amplitudes over m = -j..j, indexed by n_b = j + m.
class PhysicalState {
 public:
  explicit PhysicalState(const SectorLabel& sector);
  PhysicalState(const SectorLabel& sector, Eigen::VectorXcd amplitudes);

  const SectorLabel& sector() const { return sector_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  cplx at(const MQuantumNumber& m) const { return amps_[m.index()]; }

  double norm2() const { return amps_.squaredNorm(); }
  /// <this|other>.
  cplx inner(const PhysicalState& other) const;

 private:
  SectorLabel sector_;
  Eigen::VectorXcd amps_;
};

TwoModeState basis_embedding(const MQuantumNumber& m, Truncation trunc);

/// Embeds a physical state into the two-mode space (requires n_max >= 2j).
TwoModeState embed(const PhysicalState& state, Truncation trunc);

/// P = sum_m |m><m|.
OperatorMatrix projector_spectral(const SectorLabel& sector, Truncation trunc);

/// Smallest step count for which the equally spaced group average over
/// tau in [0, 2pi) resolves every eigenvalue of the constraint on `trunc`.
int min_group_average_steps(const SectorLabel& sector, Truncation trunc);

/// (1/2pi) int_0^{2pi} exp(-i tau H) dtau by the equally spaced rule.
/// Exact for the integer spectrum of H once steps >= min_group_average_steps;
/// throws AliasingError below that.
OperatorMatrix projector_group_average(const SectorLabel& sector, Truncation trunc, int steps);

/// c_m = <j - m, j + m | state>.
PhysicalState project(const TwoModeState& state, const SectorLabel& sector);

namespace detail {
/// Equally spaced average of exp(-i tau H) for a hermitian H, without the
/// aliasing guard. Evaluated through the eigendecomposition of H.
Eigen::MatrixXcd group_average(const Eigen::MatrixXcd& constraint, int steps);
}  // namespace detail

}  // namespace twopoint
