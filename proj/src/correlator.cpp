#include "twopoint/correlator.hpp"

#include <cmath>
#include <string>

#include "twopoint/errors.hpp"

namespace twopoint {

namespace {

void require_labels(const CoherentLabel& l1, const CoherentLabel& l2) {
  if (l1.is_zero() || l2.is_zero()) throw DomainError("two-point function needs nonzero labels");
}

// Every intermediate of Q P Q on the sector has occupation <= M + 1 per mode.
Truncation sandwich_truncation(const SectorLabel& sector) { return Truncation(sector.mass() + 2); }

cplx sandwich(const CoherentLabel& label1, const CoherentLabel& label2, const SectorLabel& sector,
              double scale, bool projected) {
  require_labels(label1, label2);
  const auto trunc = sandwich_truncation(sector);
  const auto ket = embed(normalize_physical(physical_coherent(label1, sector)), trunc);
  const auto bra = embed(normalize_physical(physical_coherent(label2, sector)), trunc);
  const auto q = insertion_operator(scale, trunc);
  auto v = apply(q, ket);
  if (projected) v = apply(projector_spectral(sector, trunc), v);
  v = apply(q, v);
  return bra.inner(v);
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::BruteForce: return "bruteforce";
    case Method::ClosedForm: return "closed";
    case Method::Trajectory: return "trajectory";
    case Method::Semiclassical: return "semiclassical";
    case Method::Quadrature: return "quadrature";
  }
  return "unknown";
}

Method method_from_name(std::string_view name) {
  for (auto m : {Method::BruteForce, Method::ClosedForm, Method::Trajectory, Method::Semiclassical,
                 Method::Quadrature}) {
    if (method_name(m) == name) return m;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

TrajectoryPair::TrajectoryPair(TrajectoryParams traj, PhasePoint tau1, PhasePoint tau2)
    : traj_(traj), tau1_(tau1), tau2_(tau2) {}

OperatorMatrix gauge_invariant_part(double scale, Truncation trunc) {
  const auto a = lowering_operator(Mode::A, trunc);
  const auto b = lowering_operator(Mode::B, trunc);
  const auto x = a * b.adjoint() + a.adjoint() * b;
  return OperatorMatrix(trunc, (scale * scale) * x.entries(), true);
}

CorrelatorResult two_point_bruteforce(const CoherentLabel& label1, const CoherentLabel& label2,
                                      const SectorLabel& sector, double scale) {
  return {sandwich(label1, label2, sector, scale, true), Method::BruteForce, sector};
}

cplx two_point_unprojected(const CoherentLabel& label1, const CoherentLabel& label2,
                           const SectorLabel& sector, double scale) {
  return sandwich(label1, label2, sector, scale, false);
}

CorrelatorResult two_point_closed_form(const CoherentLabel& label1, const CoherentLabel& label2,
                                       const SectorLabel& sector) {
  require_labels(label1, label2);
  const int two_j = sector.two_j();
  if (two_j == 0) return {0.0, Method::ClosedForm, sector};

  const cplx a1 = label1.alpha, b1 = label1.beta;
  const cplx a2c = std::conj(label2.alpha), b2c = std::conj(label2.beta);
  const cplx s = a2c * a1 + b2c * b1;
  const cplx bracket = (b2c * a1) * (b2c * a1) + (a2c * b1) * (a2c * b1) + 2.0 * a2c * a1 * b2c * b1;
  const double log_norms = 0.5 * two_j * (std::log(label1.weight()) + std::log(label2.weight()));

  // 2j (2j-1) s^(2j-2) [bracket + s^2/(2j-1)] = 2j s^(2j-2) [(2j-1) bracket + s^2]
  if (two_j == 1) {
    // s^(-1) [0 * bracket + s^2] = s
    return {s * std::exp(-log_norms), Method::ClosedForm, sector};
  }
  const cplx inner = double(two_j - 1) * bracket + s * s;
  cplx power;
  if (s == cplx{}) {
    power = two_j == 2 ? cplx(std::exp(-log_norms)) : cplx{};
  } else {
    power = std::polar(std::exp((two_j - 2) * std::log(std::abs(s)) - log_norms),
                       (two_j - 2) * std::arg(s));
  }
  return {double(two_j) * power * inner, Method::ClosedForm, sector};
}

CorrelatorResult two_point_trajectory(const TrajectoryPair& pair, const SectorLabel& sector) {
  const auto& t = pair.traj();
  if (t.mass() != sector.mass()) {
    throw DomainError("trajectory M=" + std::to_string(t.mass()) + " does not match sector M=" +
                      std::to_string(sector.mass()));
  }
  const double two_j = sector.two_j();
  const double mass = sector.mass();
  const double c = std::cos(t.delta_phi());
  const double ab2 = t.a() * t.a() * t.b() * t.b();
  // (2j(2j-1)/M^2)(A^2B^2 cos^2 + M^2/(2j-1)) with the (2j-1) distributed.
  const double modulus = two_j * (two_j - 1.0) * ab2 * c * c / (mass * mass) + two_j;
  return {std::polar(modulus, -two_j * pair.delta_tau()), Method::Trajectory, sector};
}

CorrelatorResult two_point_semiclassical(const TrajectoryPair& pair, int mass) {
  const auto& t = pair.traj();
  const double c = std::cos(t.delta_phi());
  const double modulus = t.a() * t.a() * t.b() * t.b() * c * c + mass;
  return {std::polar(modulus, -double(mass) * pair.delta_tau()), Method::Semiclassical,
          SectorLabel(mass)};
}

cplx sho_two_point(const ShoParams& p) {
  if (!(p.mass > 0.0) || !(p.omega > 0.0)) throw DomainError("SHO needs mass > 0 and omega > 0");
  return std::polar(1.0 / (2.0 * p.mass * p.omega), -1.5 * p.omega * (p.t1 - p.t2));
}

GaugeReport gauge_invariance_report(const TrajectoryPair& pair, const SectorLabel& sector,
                                    const std::vector<double>& thetas, double scale) {
  GaugeReport report;
  const auto l1 = pair.label1();
  const auto l2 = pair.label2();
  report.reference = two_point_bruteforce(l1, l2, sector, scale).value;
  report.thetas = thetas;
  for (double theta : thetas) {
    const cplx g =
        two_point_bruteforce(gauge_transform(l1, theta), gauge_transform(l2, theta), sector, scale)
            .value;
    report.values.push_back(g);
    report.max_deviation = std::max(report.max_deviation, std::abs(g - report.reference));
  }
  return report;
}

}  // namespace twopoint
