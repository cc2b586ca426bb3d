#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twopoint/errors.hpp"
#include "twopoint/sector.hpp"

using namespace twopoint;

TEST_CASE("sector_from_mass") {
  const auto s1 = sector_from_mass(1);
  CHECK(s1.j() == 0.0);
  CHECK(s1.dim() == 1);
  const auto s6 = sector_from_mass(6);
  CHECK(s6.two_j() == 5);
  CHECK(s6.j() == 2.5);
  CHECK(s6.dim() == 6);
  CHECK_THROWS_AS(sector_from_mass(0), DomainError);
  CHECK_THROWS_AS(sector_from_mass(-3), DomainError);
  CHECK_THROWS_AS(sector_from_mass(2.5), DomainError);
  CHECK(sector_from_mass(4.0).mass() == 4);
}

TEST_CASE("m quantum numbers pair with occupations") {
  const SectorLabel half(2);
  const MQuantumNumber up(half, +1);
  CHECK(up.n_a() == 0);
  CHECK(up.n_b() == 1);
  CHECK_THROWS_AS(MQuantumNumber(half, 0), DomainError);
  CHECK_THROWS_AS(MQuantumNumber(half, 3), DomainError);
  for (int k = 0; k < 6; ++k) {
    const auto m = MQuantumNumber::from_index(SectorLabel(6), k);
    CHECK(m.n_a() + m.n_b() + 1 == 6);
  }
}

TEST_CASE("basis_embedding") {
  const Truncation t(4);
  const auto s = basis_embedding(MQuantumNumber(SectorLabel(2), 1), t);
  CHECK(s.at(0, 1) == cplx(1.0));
  CHECK(basis_embedding(MQuantumNumber(SectorLabel(3), 0), t).at(1, 1) == cplx(1.0));
  const SectorLabel j2(5);
  for (int x = -4; x <= 4; x += 2) {
    for (int y = -4; y <= 4; y += 2) {
      const auto ip = basis_embedding(MQuantumNumber(j2, x), t)
                          .inner(basis_embedding(MQuantumNumber(j2, y), t));
      CHECK(ip == cplx(x == y ? 1.0 : 0.0));
    }
  }
  CHECK_THROWS_AS(basis_embedding(MQuantumNumber(SectorLabel(6), 1), t), TruncationError);
}

TEST_CASE("spectral projector") {
  const Truncation t(5);
  const auto p = projector_spectral(SectorLabel(2), t);
  CHECK(apply(p, TwoModeState::basis(t, 0, 0)).norm2() == 0.0);
  const auto on = TwoModeState::basis(t, 1, 0);
  CHECK(apply(p, on).amplitudes() == on.amplitudes());
  for (int mass = 1; mass <= 6; ++mass) {
    CHECK(projector_spectral(SectorLabel(mass), t).entries().trace() == cplx(mass));
  }
}

TEST_CASE("group-averaged projector") {
  const SectorLabel s(2);
  const Truncation t(4);
  const auto spectral = projector_spectral(s, t).entries();
  const auto g = projector_group_average(s, t, 32).entries();
  CHECK((g - spectral).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((g * g - g).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(hermiticity_defect(g) <= 1e-12);
  CHECK_THROWS_AS(projector_group_average(s, t, 1), AliasingError);
  CHECK_THROWS_AS(projector_group_average(s, t, min_group_average_steps(s, t) - 1), AliasingError);
  // Undersampled averages fold nonzero eigenvalues onto zero.
  const Truncation wide(4);
  const auto aliased = detail::group_average(hamiltonian_constraint(s, wide).entries(), 1);
  CHECK((aliased - projector_spectral(s, wide).entries()).cwiseAbs().maxCoeff() > 0.5);
}

TEST_CASE("projector invariants for M <= 8") {
  for (int mass = 1; mass <= 8; ++mass) {
    CAPTURE(mass);
    const SectorLabel s(mass);
    const Truncation t(mass + 3);
    const auto h = hamiltonian_constraint(s, t).entries();
    const auto p = projector_spectral(s, t).entries();
    const auto g = projector_group_average(s, t, min_group_average_steps(s, t)).entries();
    CHECK((p * p - p).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((g * g - g).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(hermiticity_defect(p) == 0.0);
    CHECK((p * h).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((h * p).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((g * h).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((g - p).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("project") {
  const SectorLabel s(4);
  const Truncation t(6);
  const auto c = project(TwoModeState::basis(t, 2, 1), s);
  CHECK(c.at(MQuantumNumber(s, -1)) == cplx(1.0));
  CHECK(c.norm2() == 1.0);
  CHECK(project(TwoModeState::basis(t, 0, 0), SectorLabel(2)).norm2() == 0.0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const TwoModeState v(t, oracle::random_vector(rng, t.dim()));
    const auto pv = project(v, s);
    CHECK(pv.norm2() <= v.norm2());
    // Agrees with the operator projector.
    const auto via_op = project(apply(projector_spectral(s, t), v), s);
    CHECK((via_op.amplitudes() - pv.amplitudes()).norm() == 0.0);
    // Embedding then projecting is the identity.
    const PhysicalState phys(s, oracle::random_vector(rng, s.dim()));
    const auto back = project(embed(phys, t), s);
    CHECK((back.amplitudes() - phys.amplitudes()).cwiseAbs().maxCoeff() <= 1e-14);
    // Embedded physical states lie in the kernel of the constraint.
    const auto hv = apply(hamiltonian_constraint(s, t), embed(phys, t));
    CHECK(hv.norm2() == 0.0);
  }
}
