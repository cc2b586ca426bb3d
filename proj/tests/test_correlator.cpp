#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "twopoint/correlator.hpp"
#include "twopoint/errors.hpp"
#include "twopoint/harness.hpp"

using namespace twopoint;

namespace {

constexpr double kPi = std::numbers::pi;

double interior_max(const OperatorMatrix& x, int top) {
  const auto& t = x.truncation();
  double worst = 0.0;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (int c = 0; c <= top; ++c)
        for (int d = 0; d <= top; ++d)
          worst = std::max(worst, std::abs(x.entries()(t.index(a, b), t.index(c, d))));
  return worst;
}

TrajectoryPair pair_at(int mass, double a2, double dphi, double dtau) {
  return TrajectoryPair(TrajectoryParams::on_shell(mass, a2, dphi, 0.0), {dtau}, {0.0});
}

}  // namespace

TEST_CASE("method names round-trip") {
  for (auto m : {Method::BruteForce, Method::ClosedForm, Method::Trajectory, Method::Semiclassical,
                 Method::Quadrature}) {
    CHECK(method_from_name(method_name(m)) == m);
  }
  CHECK_THROWS_AS(method_from_name("exact"), DomainError);
}

TEST_CASE("gauge-invariant part of the insertion") {
  const Truncation t(6);
  const auto x = gauge_invariant_part(1.0, t);
  CHECK(apply(x, TwoModeState::basis(t, 1, 0)).at(0, 1) == cplx(1.0));
  const auto h = hamiltonian_constraint(SectorLabel(4), t);
  CHECK(interior_max(commutator(x, h), 5) <= 1e-13);
  for (int mass = 1; mass <= 4; ++mass) {
    const auto p = projector_spectral(SectorLabel(mass), t);
    const auto full = p * insertion_operator(1.0, t) * p;
    const auto kept = p * x * p;
    CHECK((full.entries() - kept.entries()).cwiseAbs().maxCoeff() <= 1e-13);
  }
  // The insertion itself does not commute with the constraint.
  CHECK(interior_max(commutator(insertion_operator(1.0, t), h), 5) > 1.0);
}

TEST_CASE("M = 2: G = exp(-i dtau) for any on-shell trajectory") {
  const SectorLabel s(2);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 25; ++k) {
    const auto pair = pair_at(2, 4.0 * u(rng), 2 * kPi * u(rng), 6 * u(rng) - 3);
    const cplx expected = std::polar(1.0, -pair.delta_tau());
    CHECK(std::abs(two_point_bruteforce(pair.label1(), pair.label2(), s).value - expected) <= 1e-12);
    CHECK(std::abs(two_point_closed_form(pair.label1(), pair.label2(), s).value - expected) <=
          1e-12);
    CHECK(std::abs(two_point_trajectory(pair, s).value - expected) <= 1e-12);
    // The closed form reduces to the overlap at j = 1/2.
    CHECK(std::abs(two_point_closed_form(pair.label1(), pair.label2(), s).value -
                   overlap(pair.label2(), pair.label1(), s)) <= 1e-12);
  }
}

TEST_CASE("M = 3 on the circle") {
  const SectorLabel s(3);
  const auto aligned = pair_at(3, 3.0, 0.0, 0.0);
  CHECK(std::abs(two_point_bruteforce(aligned.label1(), aligned.label2(), s).value - 4.0) <= 1e-12);
  CHECK(std::abs(two_point_trajectory(aligned, s).value - 4.0) <= 1e-12);
  const auto orthogonal = pair_at(3, 3.0, kPi / 2, 0.0);
  CHECK(std::abs(two_point_trajectory(orthogonal, s).value - 2.0) <= 1e-12);
  CHECK(std::abs(two_point_bruteforce(orthogonal.label1(), orthogonal.label2(), s).value - 2.0) <=
        1e-12);
}

TEST_CASE("M = 1 has no correlator") {
  const SectorLabel s(1);
  const CoherentLabel l{cplx(1.0), cplx(0.5)};
  CHECK(std::abs(two_point_bruteforce(l, l, s).value) <= 1e-15);
  CHECK(two_point_closed_form(l, l, s).value == cplx(0.0));
}

TEST_CASE("brute force equals closed form on random label pairs") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    const int mass = 2 + k % 9;
    const SectorLabel s(mass);
    const auto l1 = random_on_shell_label(rng, mass);
    const auto l2 = random_on_shell_label(rng, mass);
    const cplx b = two_point_bruteforce(l1, l2, s).value;
    const cplx c = two_point_closed_form(l1, l2, s).value;
    // Independent labels may be nearly orthogonal: compare on the unit scale.
    CHECK(relative_difference(b, c, 1.0) <= 1e-10);
  }
}

TEST_CASE("closed form is homogeneous of degree zero in the labels") {
  const SectorLabel s(6);
  const CoherentLabel l1{cplx(0.4, 1.1), cplx(-0.9, 0.2)};
  const CoherentLabel l2{cplx(1.3, -0.5), cplx(0.1, 0.8)};
  const cplx g = two_point_closed_form(l1, l2, s).value;
  for (double c : {0.01, 0.5, 3.0, 250.0}) {
    const cplx gc =
        two_point_closed_form({l1.alpha * c, l1.beta * c}, {l2.alpha * c, l2.beta * c}, s).value;
    CHECK(std::abs(gc - g) <= 1e-13 * std::max(1.0, std::abs(g)));
  }
}

TEST_CASE("closed form equals trajectory form after substitution") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int k = 0; k < 100; ++k) {
    const int mass = 2 + k % 11;
    const SectorLabel s(mass);
    const TrajectoryPair pair(random_trajectory(rng, mass), {angle(rng)}, {angle(rng)});
    const cplx c = two_point_closed_form(pair.label1(), pair.label2(), s).value;
    CHECK(relative_difference(c, two_point_trajectory(pair, s).value) <= 1e-12);
  }
  CHECK_THROWS_AS(two_point_trajectory(pair_at(3, 1.0, 0, 0), SectorLabel(4)), DomainError);
}

TEST_CASE("trajectory form: modulus fixed, phase rotates at 2j") {
  const SectorLabel s(6);
  const auto g0 = two_point_trajectory(pair_at(6, 5.0, 0.4, 0.0), s).value;
  for (double dtau = -2; dtau <= 2; dtau += 0.1) {
    const auto g = two_point_trajectory(pair_at(6, 5.0, 0.4, dtau), s).value;
    CHECK(std::abs(std::abs(g) - std::abs(g0)) <= 1e-12);
    CHECK(std::abs(g - g0 * std::polar(1.0, -5.0 * dtau)) <= 1e-12);
  }
  // M = 2 is independent of A, B and delta phi.
  for (double a2 : {0.0, 1.0, 3.3, 4.0}) {
    CHECK(std::abs(two_point_trajectory(pair_at(2, a2, 1.2, 0.0), SectorLabel(2)).value - 1.0) <=
          1e-15);
  }
}

TEST_CASE("phase law and overlap proportionality from the brute force") {
  const SectorLabel s(5);
  const auto ref = pair_at(5, 3.7, 0.9, 0.0);
  const cplx g0 = two_point_bruteforce(ref.label1(), ref.label2(), s).value;
  for (double dtau = -1.5; dtau <= 1.5; dtau += 0.3) {
    const auto p = pair_at(5, 3.7, 0.9, dtau);
    const cplx g = two_point_bruteforce(p.label1(), p.label2(), s).value;
    CHECK(std::abs(g - g0 * std::polar(1.0, -4.0 * dtau)) <= 1e-12);
    CHECK(std::abs(g / g0 - overlap(p.label2(), p.label1(), s)) <= 1e-12);
  }
}

TEST_CASE("projector is necessary") {
  const SectorLabel s(4);
  const auto p = pair_at(4, 2.5, 0.6, 0.4);
  const cplx with = two_point_bruteforce(p.label1(), p.label2(), s).value;
  const cplx without = two_point_unprojected(p.label1(), p.label2(), s);
  CHECK(std::abs(with - without) > 1e-3);
}

TEST_CASE("insertion calibration") {
  std::mt19937_64 rng(12);
  for (int mass = 2; mass <= 6; ++mass) {
    const SectorLabel s(mass);
    const TrajectoryPair pair(random_trajectory(rng, mass), {0.3}, {-0.2});
    const cplx t = two_point_trajectory(pair, s).value;
    CHECK(relative_difference(two_point_bruteforce(pair.label1(), pair.label2(), s, 1.0).value, t) <=
          1e-12);
    const cplx quarter =
        two_point_bruteforce(pair.label1(), pair.label2(), s, 1.0 / std::sqrt(2.0)).value;
    CHECK(relative_difference(4.0 * quarter, t) <= 1e-12);
  }
}

TEST_CASE("semiclassical limit") {
  const auto p = pair_at(7, 7.0, kPi / 2, 0.8);
  CHECK(std::abs(two_point_semiclassical(p, 7).value - 7.0 * std::polar(1.0, -7.0 * 0.8)) <= 1e-12);

  std::vector<double> dev;
  for (int mass : {10, 20, 40, 80}) {
    const auto q = pair_at(mass, mass, 0.0, 0.0);
    const cplx exact = two_point_trajectory(q, SectorLabel(mass)).value;
    const cplx semi = two_point_semiclassical(q, mass).value;
    dev.push_back(std::abs(exact - semi) / std::abs(exact));
    // Exact value (M - 1)^2 and semiclassical M^2 + M on this orbit.
    CHECK(exact.real() == doctest::Approx(double(mass - 1) * (mass - 1)).epsilon(1e-13));
    CHECK(semi.real() == doctest::Approx(double(mass) * mass + mass).epsilon(1e-13));
  }
  for (std::size_t i = 1; i < dev.size(); ++i) CHECK(std::abs(dev[i] / dev[i - 1] - 0.5) <= 0.1);
}

TEST_CASE("single oscillator reference correlator") {
  CHECK(sho_two_point({1.0, 1.0, 0.0, 0.0}) == cplx(0.5));
  const ShoParams p{1.7, 0.6, 2.0, 0.5};
  const cplx g = sho_two_point(p);
  const cplx g2 = sho_two_point({1.7, 0.6, 3.0, 0.5});
  CHECK(std::abs(std::arg(g2 / g) - (-1.5 * 0.6)) <= 1e-12);
  CHECK(std::abs(g - oracle::sho_matrix(p.mass, p.omega, p.t1, p.t2)) <= 1e-14);
  CHECK_THROWS_AS(sho_two_point({0.0, 1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("gauge invariance report") {
  std::vector<double> thetas;
  for (int k = 0; k < 16; ++k) thetas.push_back(2 * kPi * k / 16);
  const auto pair = pair_at(4, 3.1, 0.7, 0.9);
  const auto r = gauge_invariance_report(pair, SectorLabel(4), thetas);
  CHECK(r.values.size() == thetas.size());
  CHECK(r.max_deviation <= 1e-12);

  // Shifting both phases leaves G unchanged; shifting one does not.
  const SectorLabel s(4);
  const auto base = TrajectoryParams(pair.traj().a(), pair.traj().b(), 0.7, 0.0, 4);
  const auto both = TrajectoryParams(pair.traj().a(), pair.traj().b(), 0.7 + 1.3, 1.3, 4);
  const auto one = TrajectoryParams(pair.traj().a(), pair.traj().b(), 0.7 + 0.5, 0.0, 4);
  const auto g = [&](const TrajectoryParams& t) {
    const TrajectoryPair p(t, {0.9}, {0.0});
    return two_point_bruteforce(p.label1(), p.label2(), s).value;
  };
  CHECK(std::abs(g(both) - g(base)) <= 1e-12);
  CHECK(std::abs(g(one) - g(base)) > 1e-3);
}
