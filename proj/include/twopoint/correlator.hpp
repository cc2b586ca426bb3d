#pragma once

#include <string_view>
#include <vector>

#include "twopoint/coherent.hpp"
#include "twopoint/fock.hpp"
#include "twopoint/sector.hpp"

namespace twopoint {

enum class Method { BruteForce, ClosedForm, Trajectory, Semiclassical, Quadrature };

/// CLI spelling: bruteforce, closed, trajectory, semiclassical, quadrature.
std::string_view method_name(Method method);
/// Throws DomainError for unknown names.
Method method_from_name(std::string_view name);

struct CorrelatorResult {
  cplx value;
  Method method;
  SectorLabel sector;
};

/// Two points tau1, tau2 on one classical trajectory; delta_tau = tau1 - tau2.
class TrajectoryPair {
 public:
  TrajectoryPair(TrajectoryParams traj, PhasePoint tau1, PhasePoint tau2);

  const TrajectoryParams& traj() const { return traj_; }
  PhasePoint tau1() const { return tau1_; }
  PhasePoint tau2() const { return tau2_; }
  double delta_tau() const { return tau1_.tau - tau2_.tau; }

  CoherentLabel label1() const { return label_from_trajectory(traj_, tau1_); }
  CoherentLabel label2() const { return label_from_trajectory(traj_, tau2_); }

 private:
  TrajectoryParams traj_;
  PhasePoint tau1_, tau2_;
};

/// Single harmonic oscillator of mass m and frequency omega, probed at t1, t2.
struct ShoParams {
  double mass = 1.0;
  double omega = 1.0;
  double t1 = 0.0;
  double t2 = 0.0;
};

/// lambda^2 (a b^dagger + a^dagger b): the part of the insertion commuting with the constraint.
OperatorMatrix gauge_invariant_part(double scale, Truncation trunc);

/// <label2| Q P Q |label1> on normalized physical coherent states, with
/// Q = insertion_operator(scale). Evaluated by explicit matrices at n_max = M + 2.
CorrelatorResult two_point_bruteforce(const CoherentLabel& label1, const CoherentLabel& label2,
                                      const SectorLabel& sector, double scale = 1.0);

/// Same sandwich with the projector replaced by the identity (no gauge selection).
cplx two_point_unprojected(const CoherentLabel& label1, const CoherentLabel& label2,
                           const SectorLabel& sector, double scale = 1.0);

/// Closed-form label expression; the (2j-1) prefactor is distributed so that
/// j = 1/2 is regular.
CorrelatorResult two_point_closed_form(const CoherentLabel& label1, const CoherentLabel& label2,
                                       const SectorLabel& sector);

/// (2j(2j-1)/M^2)(A^2 B^2 cos^2 dphi + M^2/(2j-1)) exp(-i 2j dtau).
/// Throws DomainError when the trajectory's M differs from the sector's.
CorrelatorResult two_point_trajectory(const TrajectoryPair& pair, const SectorLabel& sector);

/// (A^2 B^2 cos^2 dphi + M) exp(-i M dtau).
CorrelatorResult two_point_semiclassical(const TrajectoryPair& pair, int mass);

/// (1/(2 m omega)) exp(-i (3/2) omega (t1 - t2)).
cplx sho_two_point(const ShoParams& params);

struct GaugeReport {
  cplx reference;                    // theta = 0
  std::vector<double> thetas;
  std::vector<cplx> values;
  double max_deviation = 0.0;        // max |G(theta) - G(0)|
};

/// Brute-force two-point function with both labels rotated by each theta.
GaugeReport gauge_invariance_report(const TrajectoryPair& pair, const SectorLabel& sector,
                                    const std::vector<double>& thetas, double scale = 1.0);

}  // namespace twopoint
