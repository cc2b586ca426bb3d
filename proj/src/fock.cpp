#include "twopoint/fock.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "twopoint/errors.hpp"

namespace twopoint {

namespace {

constexpr double kHermitianTolerance = 1e-14;

void require_same(const Truncation& x, const Truncation& y) {
  if (!(x == y)) {
    throw TruncationError("truncation mismatch: n_max " + std::to_string(x.n_max()) + " vs " +
                          std::to_string(y.n_max()));
  }
}

// Single-mode ladder factor sqrt(n) for a|n>, placed on the requested mode.
Eigen::MatrixXcd ladder(Mode mode, Truncation trunc) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(trunc.dim(), trunc.dim());
  const int top = trunc.n_max();
  for (int na = 0; na <= top; ++na) {
    for (int nb = 0; nb <= top; ++nb) {
      const int n = mode == Mode::A ? na : nb;
      if (n == 0) continue;
      const auto col = trunc.index(na, nb);
      const auto row = mode == Mode::A ? trunc.index(na - 1, nb) : trunc.index(na, nb - 1);
      m(row, col) = std::sqrt(double(n));
    }
  }
  return m;
}

}  // namespace

SectorLabel::SectorLabel(int mass) : two_j_(mass - 1) {
  if (mass < 1) {
    throw DomainError("constraint constant M must be a positive integer, got " +
                      std::to_string(mass));
  }
}

Truncation::Truncation(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw TruncationError("n_max must be >= 1, got " + std::to_string(n_max));
}

TwoModeState::TwoModeState(Truncation trunc)
    : trunc_(trunc), amps_(Eigen::VectorXcd::Zero(trunc.dim())) {}

TwoModeState::TwoModeState(Truncation trunc, Eigen::VectorXcd amplitudes)
    : trunc_(trunc), amps_(std::move(amplitudes)) {
  if (amps_.size() != trunc_.dim()) {
    throw TruncationError("amplitude table does not cover the truncated basis");
  }
}

TwoModeState TwoModeState::basis(Truncation trunc, int n_a, int n_b) {
  if (!trunc.contains(n_a, n_b)) {
    throw TruncationError("basis state |" + std::to_string(n_a) + "," + std::to_string(n_b) +
                          "> outside truncation n_max=" + std::to_string(trunc.n_max()));
  }
  TwoModeState s(trunc);
  s.set(n_a, n_b, 1.0);
  return s;
}

cplx TwoModeState::inner(const TwoModeState& other) const {
  require_same(trunc_, other.trunc_);
  return amps_.dot(other.amps_);
}

TwoModeState TwoModeState::operator+(const TwoModeState& other) const {
  require_same(trunc_, other.trunc_);
  return TwoModeState(trunc_, amps_ + other.amps_);
}

TwoModeState TwoModeState::operator*(cplx scale) const {
  return TwoModeState(trunc_, amps_ * scale);
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

OperatorMatrix::OperatorMatrix(Truncation trunc, Eigen::MatrixXcd entries, bool hermitian)
    : trunc_(trunc), entries_(std::move(entries)), hermitian_(hermitian) {
  if (entries_.rows() != trunc_.dim() || entries_.cols() != trunc_.dim()) {
    throw TruncationError("operator matrix must be square over the truncated basis");
  }
  if (hermitian_ && hermiticity_defect(entries_) > kHermitianTolerance) {
    throw DomainError("operator flagged hermitian is not hermitian");
  }
}

OperatorMatrix OperatorMatrix::identity(Truncation trunc) {
  return OperatorMatrix(trunc, Eigen::MatrixXcd::Identity(trunc.dim(), trunc.dim()), true);
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(trunc_, entries_.adjoint(), hermitian_);
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  require_same(trunc_, rhs.trunc_);
  return OperatorMatrix(trunc_, entries_ * rhs.entries_);
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  require_same(trunc_, rhs.trunc_);
  return OperatorMatrix(trunc_, entries_ + rhs.entries_, hermitian_ && rhs.hermitian_);
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  require_same(trunc_, rhs.trunc_);
  return OperatorMatrix(trunc_, entries_ - rhs.entries_, hermitian_ && rhs.hermitian_);
}

OperatorMatrix OperatorMatrix::operator*(cplx scale) const {
  return OperatorMatrix(trunc_, entries_ * scale, hermitian_ && scale.imag() == 0.0);
}

OperatorMatrix lowering_operator(Mode mode, Truncation trunc) {
  return OperatorMatrix(trunc, ladder(mode, trunc));
}

OperatorMatrix raising_operator(Mode mode, Truncation trunc) {
  return OperatorMatrix(trunc, ladder(mode, trunc).adjoint());
}

OperatorMatrix number_operator(Mode mode, Truncation trunc) {
  Eigen::VectorXcd diag(trunc.dim());
  for (int na = 0; na <= trunc.n_max(); ++na) {
    for (int nb = 0; nb <= trunc.n_max(); ++nb) {
      diag[trunc.index(na, nb)] = double(mode == Mode::A ? na : nb);
    }
  }
  return OperatorMatrix(trunc, diag.asDiagonal(), true);
}

OperatorMatrix hamiltonian_constraint(const SectorLabel& sector, Truncation trunc) {
  if (trunc.n_max() < sector.mass()) {
    throw TruncationError("hamiltonian constraint needs n_max >= M (n_max=" +
                          std::to_string(trunc.n_max()) +
                          ", M=" + std::to_string(sector.mass()) + ")");
  }
  Eigen::VectorXcd diag(trunc.dim());
  for (int na = 0; na <= trunc.n_max(); ++na) {
    for (int nb = 0; nb <= trunc.n_max(); ++nb) {
      diag[trunc.index(na, nb)] = double(na + nb + 1 - sector.mass());
    }
  }
  return OperatorMatrix(trunc, diag.asDiagonal(), true);
}

OperatorMatrix insertion_operator(double scale, Truncation trunc) {
  const Eigen::MatrixXcd qa = ladder(Mode::A, trunc) + ladder(Mode::A, trunc).adjoint();
  const Eigen::MatrixXcd qb = ladder(Mode::B, trunc) + ladder(Mode::B, trunc).adjoint();
  return OperatorMatrix(trunc, (scale * scale) * (qa * qb), true);
}

TwoModeState apply(const OperatorMatrix& op, const TwoModeState& state) {
  require_same(op.truncation(), state.truncation());
  return TwoModeState(state.truncation(), op.entries() * state.amplitudes());
}

OperatorMatrix commutator(const OperatorMatrix& x, const OperatorMatrix& y) {
  return x * y - y * x;
}

}  // namespace twopoint
