#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "twopoint/errors.hpp"
#include "twopoint/fock.hpp"

using namespace twopoint;

namespace {

// Largest entry of x restricted to basis states with both occupations <= top.
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

}  // namespace

TEST_CASE("truncation basis is row-major with n_a outermost") {
  const Truncation t(3);
  CHECK(t.dim() == 16);
  CHECK(t.index(0, 0) == 0);
  CHECK(t.index(0, 3) == 3);
  CHECK(t.index(1, 0) == 4);
  CHECK_THROWS_AS(Truncation(0), TruncationError);
}

TEST_CASE("lowering operator") {
  const Truncation t(4);
  const auto a = lowering_operator(Mode::A, t);
  const auto out = apply(a, TwoModeState::basis(t, 1, 0));
  CHECK(out.at(0, 0) == cplx(1.0));
  CHECK(out.norm2() == doctest::Approx(1.0));
  for (int k = 0; k <= 4; ++k) CHECK(apply(a, TwoModeState::basis(t, 0, k)).norm2() == 0.0);
  CHECK(apply(a, TwoModeState::basis(t, 3, 2)).at(2, 2) == cplx(std::sqrt(3.0)));
}

TEST_CASE("raising operator and truncation convention") {
  const Truncation t(4);
  const auto bd = raising_operator(Mode::B, t);
  CHECK(apply(bd, TwoModeState::basis(t, 0, 0)).at(0, 1) == cplx(1.0));
  CHECK(apply(bd, TwoModeState::basis(t, 0, 4)).norm2() == 0.0);
  for (auto mode : {Mode::A, Mode::B}) {
    CHECK(raising_operator(mode, t).entries() == lowering_operator(mode, t).entries().adjoint());
  }
}

TEST_CASE("canonical commutators on the interior occupations") {
  const Truncation t(6);
  const auto id = OperatorMatrix::identity(t);
  for (auto mode : {Mode::A, Mode::B}) {
    const auto c = commutator(lowering_operator(mode, t), raising_operator(mode, t));
    // (sqrt(n))^2 - (sqrt(n-1))^2 is 1 up to rounding.
    CHECK(interior_max(c - id, 5) <= 8 * std::numeric_limits<double>::epsilon());
  }
  CHECK(interior_max(commutator(lowering_operator(Mode::A, t), raising_operator(Mode::B, t)), 5) ==
        0.0);
  CHECK(interior_max(commutator(lowering_operator(Mode::A, t), lowering_operator(Mode::B, t)), 6) ==
        0.0);
  // Truncation loss lives on the top occupation only.
  const auto c = commutator(lowering_operator(Mode::A, t), raising_operator(Mode::A, t));
  CHECK(std::abs(c.entry(6, 0, 6, 0) - cplx(-6.0)) < 1e-12);
}

TEST_CASE("number operator") {
  const Truncation t(6);
  const auto na = number_operator(Mode::A, t);
  CHECK(na.entry(3, 0, 3, 0) == cplx(3.0));
  CHECK(na.hermitian());
  const auto product = raising_operator(Mode::A, t) * lowering_operator(Mode::A, t);
  CHECK((product.entries() - na.entries()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(na.entries().trace().real() == doctest::Approx(7.0 * 21.0));
}

TEST_CASE("hamiltonian constraint spectrum") {
  const Truncation t(6);
  const auto h3 = hamiltonian_constraint(SectorLabel(3), t);
  CHECK(h3.entry(1, 1, 1, 1) == cplx(0.0));
  CHECK(hamiltonian_constraint(SectorLabel(2), t).entry(0, 0, 0, 0) == cplx(-1.0));
  const auto h5 = hamiltonian_constraint(SectorLabel(5), t);
  int zeros = 0;
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    const auto v = h5.entries()(i, i);
    CHECK(v.real() == std::round(v.real()));
    zeros += v == cplx(0.0);
  }
  CHECK(zeros == 5);
  CHECK(hermiticity_defect(h5.entries()) == 0.0);
  CHECK_THROWS_AS(hamiltonian_constraint(SectorLabel(7), t), TruncationError);
}

TEST_CASE("insertion operator") {
  const Truncation t(5);
  const auto q = insertion_operator(1.0, t);
  const auto out = apply(q, TwoModeState::basis(t, 0, 0));
  CHECK(out.at(1, 1) == cplx(1.0));
  CHECK(out.norm2() == doctest::Approx(1.0));
  CHECK(q.hermitian());
  CHECK(hermiticity_defect(insertion_operator(0.37, t).entries()) <= 1e-14);
  const auto half = insertion_operator(1.0 / std::sqrt(2.0), t);
  CHECK((half.entries() * 2.0 - q.entries()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("hermitian flag is verified") {
  const Truncation t(2);
  CHECK_THROWS_AS(OperatorMatrix(t, lowering_operator(Mode::A, t).entries(), true), DomainError);
}

TEST_CASE("apply: identity, zero, composition, linearity") {
  const Truncation t(5);
  std::mt19937_64 rng(11);
  const TwoModeState v(t, oracle::random_vector(rng, t.dim()));
  const TwoModeState w(t, oracle::random_vector(rng, t.dim()));
  CHECK(apply(OperatorMatrix::identity(t), v).amplitudes() == v.amplitudes());
  CHECK(apply(insertion_operator(1.0, t), TwoModeState(t)).norm2() == 0.0);

  const auto x = insertion_operator(1.0, t);
  const auto y = lowering_operator(Mode::B, t) + number_operator(Mode::A, t);
  const auto lhs = apply(x * y, v).amplitudes();
  const auto rhs = apply(x, apply(y, v)).amplitudes();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);

  const cplx c(0.3, -1.7);
  const auto lin = apply(y, v * c + w).amplitudes() - (apply(y, v) * c + apply(y, w)).amplitudes();
  CHECK(lin.cwiseAbs().maxCoeff() < 1e-13);

  CHECK_THROWS_AS(apply(x, TwoModeState(Truncation(4))), TruncationError);
}
