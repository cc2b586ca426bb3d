#include "twopoint/sector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <utility>

#include "twopoint/errors.hpp"

namespace twopoint {

namespace {

void require_fits(const SectorLabel& sector, Truncation trunc) {
  if (trunc.n_max() < sector.two_j()) {
    throw TruncationError("physical sector with 2j=" + std::to_string(sector.two_j()) +
                          " needs n_max >= 2j, got " + std::to_string(trunc.n_max()));
  }
}

}  // namespace

SectorLabel sector_from_mass(int mass) { return SectorLabel(mass); }

SectorLabel sector_from_mass(double mass) {
  if (!std::isfinite(mass) || mass != std::floor(mass)) {
    throw DomainError("constraint constant M must be an integer for a non-empty physical sector");
  }
  if (mass < 1.0 || mass > 1e9) {
    throw DomainError("constraint constant M out of range");
  }
  return SectorLabel(static_cast<int>(mass));
}

MQuantumNumber::MQuantumNumber(const SectorLabel& sector, int two_m)
    : sector_(sector), two_m_(two_m) {
  if (std::abs(two_m) > sector.two_j() || (sector.two_j() - two_m) % 2 != 0) {
    throw DomainError("m=" + std::to_string(two_m) + "/2 not in sector with 2j=" +
                      std::to_string(sector.two_j()));
  }
}

MQuantumNumber MQuantumNumber::from_index(const SectorLabel& sector, int n_b) {
  return MQuantumNumber(sector, 2 * n_b - sector.two_j());
}

PhysicalState::PhysicalState(const SectorLabel& sector)
    : sector_(sector), amps_(Eigen::VectorXcd::Zero(sector.dim())) {}

PhysicalState::PhysicalState(const SectorLabel& sector, Eigen::VectorXcd amplitudes)
    : sector_(sector), amps_(std::move(amplitudes)) {
  if (amps_.size() != sector_.dim()) {
    throw DomainError("physical state needs exactly 2j+1 amplitudes");
  }
}

cplx PhysicalState::inner(const PhysicalState& other) const {
  if (!(sector_ == other.sector_)) throw DomainError("inner product across sectors");
  return amps_.dot(other.amps_);
}

TwoModeState basis_embedding(const MQuantumNumber& m, Truncation trunc) {
  require_fits(m.sector(), trunc);
  return TwoModeState::basis(trunc, m.n_a(), m.n_b());
}

TwoModeState embed(const PhysicalState& state, Truncation trunc) {
  const auto& sector = state.sector();
  require_fits(sector, trunc);
  TwoModeState out(trunc);
  for (int nb = 0; nb <= sector.two_j(); ++nb) {
    out.set(sector.two_j() - nb, nb, state.amplitudes()[nb]);
  }
  return out;
}

OperatorMatrix projector_spectral(const SectorLabel& sector, Truncation trunc) {
  require_fits(sector, trunc);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(trunc.dim(), trunc.dim());
  for (int nb = 0; nb <= sector.two_j(); ++nb) {
    const auto i = trunc.index(sector.two_j() - nb, nb);
    p(i, i) = 1.0;
  }
  return OperatorMatrix(trunc, std::move(p), true);
}

int min_group_average_steps(const SectorLabel& sector, Truncation trunc) {
  // Eigenvalues n_a + n_b + 1 - M range over [1 - M, 2 n_max + 1 - M].
  const int low = 1 - sector.mass();
  const int high = 2 * trunc.n_max() + 1 - sector.mass();
  return 2 * std::max(std::abs(low), std::abs(high)) + 1;
}

OperatorMatrix projector_group_average(const SectorLabel& sector, Truncation trunc, int steps) {
  require_fits(sector, trunc);
  const int needed = min_group_average_steps(sector, trunc);
  if (steps < needed) {
    throw AliasingError("group average with " + std::to_string(steps) +
                        " steps aliases the constraint spectrum; need >= " +
                        std::to_string(needed));
  }
  // Built on a truncation wide enough for the constraint operator, then restricted.
  const Truncation wide(std::max(trunc.n_max(), sector.mass()));
  const auto h = hamiltonian_constraint(sector, wide);
  const Eigen::MatrixXcd avg = detail::group_average(h.entries(), steps);
  Eigen::MatrixXcd p(trunc.dim(), trunc.dim());
  for (int na = 0; na <= trunc.n_max(); ++na) {
    for (int nb = 0; nb <= trunc.n_max(); ++nb) {
      for (int ma = 0; ma <= trunc.n_max(); ++ma) {
        for (int mb = 0; mb <= trunc.n_max(); ++mb) {
          p(trunc.index(na, nb), trunc.index(ma, mb)) = avg(wide.index(na, nb), wide.index(ma, mb));
        }
      }
    }
  }
  return OperatorMatrix(trunc, std::move(p));
}

PhysicalState project(const TwoModeState& state, const SectorLabel& sector) {
  const auto& trunc = state.truncation();
  PhysicalState out(sector);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(sector.dim());
  for (int nb = 0; nb <= sector.two_j(); ++nb) {
    const int na = sector.two_j() - nb;
    if (trunc.contains(na, nb)) amps[nb] = state.at(na, nb);
  }
  return PhysicalState(sector, std::move(amps));
}

namespace detail {

Eigen::MatrixXcd group_average(const Eigen::MatrixXcd& constraint, int steps) {
  if (steps < 1) throw AliasingError("group average needs at least one step");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(constraint);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Eigen::VectorXcd avg = Eigen::VectorXcd::Zero(lambda.size());
  for (int k = 0; k < steps; ++k) {
    const double tau = 2.0 * std::numbers::pi * k / steps;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      avg[i] += std::polar(1.0, -tau * lambda[i]);
    }
  }
  avg /= double(steps);
  const auto& v = eig.eigenvectors();
  return v * avg.asDiagonal() * v.adjoint();
}

}  // namespace detail

}  // namespace twopoint
