#include "twopoint/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "twopoint/errors.hpp"
#include "twopoint/position.hpp"
#include "twopoint/sector.hpp"

namespace twopoint {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<int>(&c)) return std::to_string(*i);
  const auto& text = std::get<std::string>(c);
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) throw std::runtime_error("refusing to emit non-finite value in JSON");
    return *d == 0.0 ? 0.0 : *d;
  }
  if (const auto* i = std::get_if<int>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string join_methods(const std::vector<Method>& methods) {
  std::string out;
  for (auto m : methods) {
    if (!out.empty()) out += ',';
    out += method_name(m);
  }
  return out;
}

std::string range_text(const Range& r) {
  return format_double(r.start) + ":" + format_double(r.stop) + ":" + std::to_string(r.steps);
}

int quadrature_order_for(const SweepSpec& spec) {
  return spec.order.value_or(quadrature_order_threshold(SectorLabel(spec.mass)));
}

void spec_metadata(RunReport& report, const SweepSpec& spec, const std::string& command) {
  const auto traj = spec.trajectory();
  report.metadata = {
      {"tool", std::string("twopoint")},
      {"version", std::string(kToolVersion)},
      {"command", command},
      {"mass", spec.mass},
      {"two_j", spec.mass - 1},
      {"a_squared", spec.a_squared},
      {"b_squared", traj.b() * traj.b()},
      {"delta_phi", spec.delta_phi},
      {"tau", range_text(spec.tau)},
  };
}

}  // namespace

Range Range::parse(const std::string& text, const std::string& field) {
  Range r;
  std::istringstream in(text);
  std::string a, b, c;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c) ||
      a.empty() || b.empty() || c.empty()) {
    throw SpecError(field, "expected start:stop:steps, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    r.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    r.stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    r.steps = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::logic_error&) {
    throw SpecError(field, "malformed number in '" + text + "'");
  }
  if (!std::isfinite(r.start) || !std::isfinite(r.stop)) throw SpecError(field, "non-finite bound");
  if (r.steps < 1) throw SpecError(field, "steps must be >= 1");
  return r;
}

std::vector<double> Range::points() const {
  if (steps == 1) return {start};
  std::vector<double> out(steps);
  for (int k = 0; k < steps; ++k) out[k] = start + (stop - start) * k / (steps - 1);
  return out;
}

void SweepSpec::validate() const {
  if (mass < 1) throw SpecError("mass", "M must be >= 1");
  if (!std::isfinite(a_squared) || a_squared < 0.0 || a_squared > 2.0 * mass) {
    throw SpecError("a-squared", "A^2 must lie in [0, 2M]");
  }
  if (!std::isfinite(delta_phi)) throw SpecError("delta-phi", "must be finite");
  if (tau.steps < 1) throw SpecError("tau", "steps must be >= 1");
  if (methods.empty()) throw SpecError("methods", "at least one method is required");
  if (order && *order < quadrature_order_threshold(SectorLabel(mass))) {
    throw SpecError("order", "quadrature order must be >= 2j+3 = " +
                                 std::to_string(quadrature_order_threshold(SectorLabel(mass))));
  }
}

TrajectoryParams SweepSpec::trajectory() const {
  return TrajectoryParams::on_shell(mass, a_squared, delta_phi, 0.0);
}

void write_csv(const RunReport& report, std::ostream& out) {
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << report.columns[i];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(const RunReport& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.metadata) doc["metadata"][key] = cell_json(value);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

double principal_arg(cplx z) {
  const double a = std::arg(z);
  return a <= -std::numbers::pi ? std::numbers::pi : a;
}

double relative_difference(cplx x, cplx y, double floor) {
  const double scale = std::max({std::abs(x), std::abs(y), floor});
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

RunReport correlator_sweep(const SweepSpec& spec, double scale) {
  spec.validate();
  const SectorLabel sector(spec.mass);
  const auto traj = spec.trajectory();
  const int order = quadrature_order_for(spec);
  const auto rule = gauss_hermite_rule(order);

  auto methods = spec.methods;
  std::sort(methods.begin(), methods.end(),
            [](Method x, Method y) { return method_name(x) < method_name(y); });
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

  auto taus = spec.tau.points();
  std::stable_sort(taus.begin(), taus.end());

  RunReport report;
  spec_metadata(report, spec, "correlator");
  report.metadata.emplace_back("methods", join_methods(methods));
  report.metadata.emplace_back("order", order);
  report.columns = {"delta_tau", "method", "re", "im", "abs", "arg"};

  for (double dtau : taus) {
    const TrajectoryPair pair(traj, PhasePoint{dtau}, PhasePoint{0.0});
    const auto l1 = pair.label1();
    const auto l2 = pair.label2();
    for (auto method : methods) {
      cplx g;
      switch (method) {
        case Method::BruteForce: g = two_point_bruteforce(l1, l2, sector, scale).value; break;
        case Method::ClosedForm: g = two_point_closed_form(l1, l2, sector).value; break;
        case Method::Trajectory: g = two_point_trajectory(pair, sector).value; break;
        case Method::Semiclassical: g = two_point_semiclassical(pair, spec.mass).value; break;
        case Method::Quadrature: g = two_point_quadrature(l1, l2, sector, rule, scale).value; break;
      }
      report.rows.push_back({dtau, std::string(method_name(method)), g.real(), g.imag(),
                             std::abs(g), principal_arg(g)});
    }
  }
  return report;
}

RunReport overlap_tau_sweep(const SweepSpec& spec) {
  spec.validate();
  const SectorLabel sector(spec.mass);
  const auto traj = spec.trajectory();
  auto taus = spec.tau.points();
  std::stable_sort(taus.begin(), taus.end());

  RunReport report;
  spec_metadata(report, spec, "overlap");
  report.metadata.emplace_back("sweep", std::string("tau"));
  report.columns = {"delta_tau", "re", "im", "abs2", "phase"};
  for (double dtau : taus) {
    const auto l1 = label_from_trajectory(traj, PhasePoint{dtau});
    const auto l2 = label_from_trajectory(traj, PhasePoint{0.0});
    const cplx o = overlap(l2, l1, sector);
    report.rows.push_back({dtau, o.real(), o.imag(), std::norm(o), principal_arg(o)});
  }
  return report;
}

RunReport overlap_suppression_sweep(const Range& two_j, double offset, double reference) {
  if (!std::isfinite(offset)) throw SpecError("offset", "must be finite");
  if (!std::isfinite(reference)) throw SpecError("reference", "must be finite");
  RunReport report;
  report.columns = {"two_j", "offset", "abs2", "exponent"};
  std::vector<double> xs, ys;
  for (double v : two_j.points()) {
    const int tj = static_cast<int>(std::lround(v));
    if (tj < 0 || std::abs(v - tj) > 1e-9) throw SpecError("two-j", "values must be integers >= 0");
    const SectorLabel sector(tj + 1);
    const double e = suppression_exponent(offset, sector, reference);
    report.rows.push_back({tj, offset, std::exp(-e), e});
    xs.push_back(tj);
    ys.push_back(e);
  }
  const auto fit = fit_line(xs, ys);
  report.metadata = {{"tool", std::string("twopoint")},
                     {"version", std::string(kToolVersion)},
                     {"command", std::string("overlap")},
                     {"sweep", std::string("offset")},
                     {"offset", offset},
                     {"reference", reference},
                     {"two_j", range_text(two_j)},
                     {"slope", fit.slope},
                     {"intercept", fit.intercept},
                     {"r_squared", fit.r_squared}};
  return report;
}

RunReport kernel_table(const SweepSpec& spec, const KernelGrid& grid) {
  spec.validate();
  if (grid.axis.steps < 2 || !(grid.axis.stop > grid.axis.start)) {
    throw SpecError("grid", "need min < max and at least 2 points");
  }
  const SectorLabel sector(spec.mass);
  const auto traj = spec.trajectory();
  const auto psi = normalized_coherent(label_from_trajectory(traj, PhasePoint{0.0}), sector);
  const auto axis = grid.axis.points();
  const double h = (grid.axis.stop - grid.axis.start) / (grid.axis.steps - 1);

  RunReport report;
  spec_metadata(report, spec, "kernel");
  report.columns = {"q_a", "q_b", "kernel_diag", "kernel_ref", "kernel_ref_swapped", "density"};
  double trace = 0.0;
  double best = -1.0, best_a = 0.0, best_b = 0.0;
  for (double qa : axis) {
    for (double qb : axis) {
      const double diag = kernel(sector, qa, qb, qa, qb);
      const double to_ref = kernel(sector, qa, qb, grid.ref_a, grid.ref_b);
      const double from_ref = kernel(sector, grid.ref_a, grid.ref_b, qa, qb);
      const double density = std::norm(evaluate_physical_state(psi, qa, qb));
      trace += diag;
      if (density > best) {
        best = density;
        best_a = qa;
        best_b = qb;
      }
      report.rows.push_back({qa, qb, diag, to_ref, from_ref, density});
    }
  }
  report.metadata.emplace_back("grid", range_text(grid.axis));
  report.metadata.emplace_back("ref_a", grid.ref_a);
  report.metadata.emplace_back("ref_b", grid.ref_b);
  report.metadata.emplace_back("cell_area", h * h);
  report.metadata.emplace_back("trace_estimate", trace * h * h);
  report.metadata.emplace_back("density_max_q_a", best_a);
  report.metadata.emplace_back("density_max_q_b", best_b);
  return report;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = double(x.size());
  if (x.size() < 2 || x.size() != y.size()) throw DomainError("fit_line needs >= 2 paired points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : (ss_res == 0 ? 1.0 : 0.0);
  return fit;
}

TrajectoryParams random_trajectory(std::mt19937_64& rng, int mass) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a2 = 2.0 * mass * unit(rng);
  const double phi_a = kTwoPi * unit(rng);
  const double phi_b = kTwoPi * unit(rng);
  return TrajectoryParams::on_shell(mass, a2, phi_a, phi_b);
}

CoherentLabel random_on_shell_label(std::mt19937_64& rng, int mass) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto traj = random_trajectory(rng, mass);
  return label_from_trajectory(traj, PhasePoint{kTwoPi * unit(rng)});
}

namespace {

SuiteResult make_result(std::string name, double observed, double tolerance, std::string detail) {
  return {std::move(name), observed <= tolerance, observed, tolerance, std::move(detail)};
}

SuiteResult projector_suite(int max_mass) {
  double worst = 0.0;
  std::string where = "none";
  const auto track = [&](double d, const std::string& what, int mass) {
    if (d > worst) {
      worst = d;
      where = what + " at M=" + std::to_string(mass);
    }
  };
  for (int mass = 1; mass <= max_mass; ++mass) {
    const SectorLabel sector(mass);
    const Truncation trunc(mass + 3);
    const auto p = projector_spectral(sector, trunc).entries();
    const auto g = projector_group_average(sector, trunc, min_group_average_steps(sector, trunc))
                       .entries();
    const auto h = hamiltonian_constraint(sector, trunc).entries();
    track((p * p - p).cwiseAbs().maxCoeff(), "spectral P^2 - P", mass);
    track((g * g - g).cwiseAbs().maxCoeff(), "group-average P^2 - P", mass);
    track((p * h).cwiseAbs().maxCoeff(), "PH", mass);
    track((h * p).cwiseAbs().maxCoeff(), "HP", mass);
    track((g - p).cwiseAbs().maxCoeff(), "group-average vs spectral", mass);
  }
  return make_result("projector", worst, 1e-12, "largest entrywise defect: " + where);
}

SuiteResult overlap_suite(int max_mass, std::mt19937_64& rng, int samples) {
  double worst = 0.0;
  for (int mass = 1; mass <= max_mass; ++mass) {
    const SectorLabel sector(mass);
    for (int s = 0; s < samples; ++s) {
      const auto l1 = random_on_shell_label(rng, mass);
      const auto l2 = random_on_shell_label(rng, mass);
      const auto v1 = normalize_physical(physical_coherent(l1, sector));
      const auto v2 = normalize_physical(physical_coherent(l2, sector));
      worst = std::max(worst, std::abs(overlap(l2, l1, sector) - v2.inner(v1)));
    }
  }
  return make_result("overlap_oracle", worst, 1e-12, "closed-form overlap vs state inner product");
}

SuiteResult triangle_suite(int max_mass, std::mt19937_64& rng, int samples, double scale) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double worst = 0.0;
  double worst_ratio = 1.0;
  std::string where = "none";
  const auto check = [&](const CoherentLabel& l1, const CoherentLabel& l2,
                         const SectorLabel& sector, const QuadratureRule& rule, double floor,
                         const char* kind) {
    const cplx brute = two_point_bruteforce(l1, l2, sector, scale).value;
    const cplx closed = two_point_closed_form(l1, l2, sector).value;
    const cplx quad = two_point_quadrature(l1, l2, sector, rule, scale).value;
    const double d = std::max({relative_difference(brute, closed, floor),
                               relative_difference(brute, quad, floor),
                               relative_difference(closed, quad, floor)});
    if (d > worst) {
      worst = d;
      worst_ratio = std::abs(brute) > 0 ? std::abs(closed) / std::abs(brute) : 0.0;
      where = std::string(kind) + " labels at M=" + std::to_string(sector.mass());
    }
  };
  for (int mass = 2; mass <= max_mass; ++mass) {
    const SectorLabel sector(mass);
    const auto rule = gauss_hermite_rule(quadrature_order_threshold(sector));
    for (int s = 0; s < samples; ++s) {
      const TrajectoryPair pair(random_trajectory(rng, mass), PhasePoint{angle(rng)},
                                PhasePoint{angle(rng)});
      check(pair.label1(), pair.label2(), sector, rule, 0.0, "common-trajectory");
      // Independent labels can be nearly orthogonal; compare on the unit scale there.
      check(random_on_shell_label(rng, mass), random_on_shell_label(rng, mass), sector, rule, 1.0,
            "independent");
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "largest relative spread for %s; |closed/bruteforce| there = %.6g",
                where.c_str(), worst_ratio);
  return make_result("method_triangle", worst, 1e-9, buf);
}

SuiteResult trajectory_suite(int max_mass, std::mt19937_64& rng, int samples) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double worst = 0.0;
  for (int mass = 2; mass <= max_mass; ++mass) {
    const SectorLabel sector(mass);
    for (int s = 0; s < samples; ++s) {
      const TrajectoryPair pair(random_trajectory(rng, mass), PhasePoint{angle(rng)},
                                PhasePoint{angle(rng)});
      const cplx closed = two_point_closed_form(pair.label1(), pair.label2(), sector).value;
      worst = std::max(worst,
                       relative_difference(closed, two_point_trajectory(pair, sector).value));
    }
  }
  return make_result("trajectory_form", worst, 1e-12, "closed form vs trajectory substitution");
}

SuiteResult gauge_suite(int max_mass, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<double> thetas;
  for (int k = 0; k < 16; ++k) thetas.push_back(kTwoPi * k / 16.0);
  double worst = 0.0;
  for (int mass = 2; mass <= max_mass; ++mass) {
    const SectorLabel sector(mass);
    const TrajectoryPair pair(random_trajectory(rng, mass), PhasePoint{angle(rng)},
                              PhasePoint{angle(rng)});
    worst = std::max(worst, gauge_invariance_report(pair, sector, thetas, scale).max_deviation);
  }
  return make_result("gauge_invariance", worst, 1e-12, "max |G(theta) - G(0)| over 16 angles");
}

SuiteResult quadrature_suite(int max_mass, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int mass = 2; mass <= max_mass; ++mass) {
    const SectorLabel sector(mass);
    const auto l1 = random_on_shell_label(rng, mass);
    const auto l2 = random_on_shell_label(rng, mass);
    const int base = quadrature_order_threshold(sector);
    const cplx g0 = two_point_quadrature(l1, l2, sector, gauss_hermite_rule(base)).value;
    for (int extra : {1, 2, 5, 10}) {
      const cplx g = two_point_quadrature(l1, l2, sector, gauss_hermite_rule(base + extra)).value;
      worst = std::max(worst, std::abs(g - g0));
    }
  }
  return make_result("quadrature_exactness", worst, 1e-12,
                     "change of quadrature value when raising the order past 2j+3");
}

}  // namespace

std::vector<SuiteResult> run_validation(const ValidationOptions& options) {
  if (options.max_mass < 2) throw SpecError("max-mass", "validation requires max M >= 2");
  if (options.samples < 1) throw SpecError("samples", "need at least one sample");
  std::mt19937_64 rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(projector_suite(options.max_mass));
  out.push_back(overlap_suite(options.max_mass, rng, options.samples));
  out.push_back(triangle_suite(options.max_mass, rng, options.samples, options.scale));
  out.push_back(trajectory_suite(options.max_mass, rng, options.samples));
  out.push_back(gauge_suite(options.max_mass, rng, options.scale));
  out.push_back(quadrature_suite(options.max_mass, rng));
  return out;
}

}  // namespace twopoint
