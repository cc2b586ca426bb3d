#include "twopoint/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twopoint/errors.hpp"

namespace twopoint {

namespace {

constexpr double kTailTolerance = 1e-12;

// Poisson(mean) mass strictly above `top`.
double poisson_tail(double mean, int top) {
  if (mean == 0.0) return 0.0;
  const double log_mean = std::log(mean);
  double tail = 0.0;
  for (int n = top + 1;; ++n) {
    const double term = std::exp(-mean + n * log_mean - detail::log_factorial(n));
    tail += term;
    if (n > mean && term <= 1e-30 * tail) break;
    if (n > mean && term == 0.0) break;
  }
  return tail;
}

}  // namespace

namespace detail {

cplx int_power(cplx z, int n) {
  if (n == 0) return 1.0;
  if (z == cplx{}) return 0.0;
  return std::polar(std::exp(n * std::log(std::abs(z))), n * std::arg(z));
}

double log_factorial(int n) { return std::lgamma(double(n) + 1.0); }

}  // namespace detail

TrajectoryParams::TrajectoryParams(double a, double b, double phi_a, double phi_b, int mass)
    : a_(a), b_(b), phi_a_(phi_a), phi_b_(phi_b), mass_(mass) {
  if (mass < 1) throw DomainError("trajectory needs M >= 1");
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("ellipse radii must be finite and non-negative");
  }
  if (!std::isfinite(phi_a) || !std::isfinite(phi_b)) throw DomainError("phases must be finite");
  const double two_m = 2.0 * mass;
  if (std::abs(a * a + b * b - two_m) > 1e-12 * two_m) {
    throw DomainError("trajectory off shell: A^2 + B^2 must equal 2M");
  }
}

TrajectoryParams TrajectoryParams::on_shell(int mass, double a_squared, double phi_a,
                                            double phi_b) {
  if (mass < 1) throw DomainError("trajectory needs M >= 1");
  if (!(a_squared >= 0.0) || a_squared > 2.0 * mass) {
    throw DomainError("A^2 must lie in [0, 2M]");
  }
  return TrajectoryParams(std::sqrt(a_squared), std::sqrt(2.0 * mass - a_squared), phi_a, phi_b,
                          mass);
}

std::pair<double, double> classical_trajectory(const TrajectoryParams& traj, PhasePoint tau) {
  return {traj.a() * std::sin(tau.tau + traj.phi_a()), traj.b() * std::sin(tau.tau + traj.phi_b())};
}

CoherentLabel label_from_trajectory(const TrajectoryParams& traj, PhasePoint tau) {
  return {std::polar(traj.a(), -(tau.tau + traj.phi_a())),
          std::polar(traj.b(), -(tau.tau + traj.phi_b()))};
}

Truncation kinematical_truncation(const CoherentLabel& label) {
  const auto cutoff = [](cplx z) {
    const double r = std::abs(z);
    return static_cast<int>(std::ceil(r * r + 10.0 * r + 20.0));
  };
  return Truncation(std::max(cutoff(label.alpha), cutoff(label.beta)));
}

double kinematical_tail_mass(const CoherentLabel& label, Truncation trunc) {
  const double ta = poisson_tail(std::norm(label.alpha), trunc.n_max());
  const double tb = poisson_tail(std::norm(label.beta), trunc.n_max());
  return ta + tb - ta * tb;
}

TwoModeState kinematical_coherent(const CoherentLabel& label, Truncation trunc) {
  const double tail = kinematical_tail_mass(label, trunc);
  if (tail > kTailTolerance) {
    throw TruncationError("coherent state tail mass " + std::to_string(tail) +
                          " exceeds 1e-12 at n_max=" + std::to_string(trunc.n_max()));
  }
  const double gauss = -0.5 * label.weight();
  TwoModeState out(trunc);
  for (int na = 0; na <= trunc.n_max(); ++na) {
    for (int nb = 0; nb <= trunc.n_max(); ++nb) {
      const double scale = std::exp(
          gauss - 0.5 * (detail::log_factorial(na) + detail::log_factorial(nb)));
      out.set(na, nb, scale * detail::int_power(label.alpha, na) *
                          detail::int_power(label.beta, nb));
    }
  }
  return out;
}

PhysicalState physical_coherent(const CoherentLabel& label, const SectorLabel& sector) {
  const double gauss = -0.5 * label.weight();
  Eigen::VectorXcd amps(sector.dim());
  for (int nb = 0; nb <= sector.two_j(); ++nb) {
    const int na = sector.two_j() - nb;
    const double scale =
        std::exp(gauss - 0.5 * (detail::log_factorial(na) + detail::log_factorial(nb)));
    amps[nb] = scale * detail::int_power(label.alpha, na) * detail::int_power(label.beta, nb);
  }
  return PhysicalState(sector, std::move(amps));
}

PhysicalState normalize_physical(const PhysicalState& state) {
  const double n = state.amplitudes().norm();
  if (n == 0.0) throw DomainError("cannot normalize the zero physical state");
  return PhysicalState(state.sector(), state.amplitudes() / n);
}

PhysicalState normalized_coherent(const CoherentLabel& label, const SectorLabel& sector) {
  if (label.is_zero()) throw DomainError("normalized coherent state needs a nonzero label");
  const int two_j = sector.two_j();
  const double log_weight = std::log(label.weight());
  Eigen::VectorXcd amps(sector.dim());
  for (int nb = 0; nb <= two_j; ++nb) {
    const int na = two_j - nb;
    if ((na > 0 && label.alpha == cplx{}) || (nb > 0 && label.beta == cplx{})) {
      amps[nb] = 0.0;
      continue;
    }
    double log_mod = 0.5 * (detail::log_factorial(two_j) - detail::log_factorial(na) -
                            detail::log_factorial(nb)) -
                     0.5 * two_j * log_weight;
    double phase = 0.0;
    if (na > 0) {
      log_mod += na * std::log(std::abs(label.alpha));
      phase += na * std::arg(label.alpha);
    }
    if (nb > 0) {
      log_mod += nb * std::log(std::abs(label.beta));
      phase += nb * std::arg(label.beta);
    }
    amps[nb] = std::polar(std::exp(log_mod), phase);
  }
  return PhysicalState(sector, std::move(amps));
}

cplx overlap(const CoherentLabel& label2, const CoherentLabel& label1, const SectorLabel& sector) {
  if (label1.is_zero() || label2.is_zero()) throw DomainError("overlap needs nonzero labels");
  const int two_j = sector.two_j();
  if (two_j == 0) return 1.0;
  const cplx s = std::conj(label2.alpha) * label1.alpha + std::conj(label2.beta) * label1.beta;
  if (s == cplx{}) return 0.0;
  const double log_mod =
      two_j * std::log(std::abs(s)) -
      0.5 * two_j * (std::log(label2.weight()) + std::log(label1.weight()));
  return std::polar(std::exp(log_mod), two_j * std::arg(s));
}

CoherentLabel gauge_transform(const CoherentLabel& label, double theta) {
  const cplx phase = std::polar(1.0, theta);
  return {label.alpha * phase, label.beta * phase};
}

double suppression_exponent(double xi_offset, const SectorLabel& sector, double reference) {
  const CoherentLabel lower{reference - 0.5 * xi_offset, 1.0};
  const CoherentLabel upper{reference + 0.5 * xi_offset, 1.0};
  const double p = std::norm(overlap(upper, lower, sector));
  return p == 1.0 ? 0.0 : -std::log(p);
}

}  // namespace twopoint
