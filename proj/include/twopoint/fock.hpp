#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "twopoint/sector_label.hpp"

namespace twopoint {

using cplx = std::complex<double>;

/// Per-mode occupation cutoff; the basis is every (n_a, n_b) with 0 <= n <= n_max,
/// ordered row-major with n_a outermost.
class Truncation {
 public:
  explicit Truncation(int n_max);

  int n_max() const { return n_max_; }
  Eigen::Index dim() const { return Eigen::Index(n_max_ + 1) * (n_max_ + 1); }
  Eigen::Index index(int n_a, int n_b) const { return Eigen::Index(n_a) * (n_max_ + 1) + n_b; }
  bool contains(int n_a, int n_b) const {
    return n_a >= 0 && n_b >= 0 && n_a <= n_max_ && n_b <= n_max_;
  }

  friend bool operator==(const Truncation&, const Truncation&) = default;

 private:
  int n_max_;
};

enum class Mode { A, B };

class TwoModeState {
 public:
  explicit TwoModeState(Truncation trunc);
  TwoModeState(Truncation trunc, Eigen::VectorXcd amplitudes);

  /// |n_a, n_b> with unit amplitude.
  static TwoModeState basis(Truncation trunc, int n_a, int n_b);

  const Truncation& truncation() const { return trunc_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

  cplx at(int n_a, int n_b) const { return amps_[trunc_.index(n_a, n_b)]; }
  void set(int n_a, int n_b, cplx value) { amps_[trunc_.index(n_a, n_b)] = value; }

  double norm2() const { return amps_.squaredNorm(); }

  /// <this|other>, antilinear in this.
  cplx inner(const TwoModeState& other) const;

  TwoModeState operator+(const TwoModeState& other) const;
  TwoModeState operator*(cplx scale) const;

 private:
  Truncation trunc_;
  Eigen::VectorXcd amps_;
};

class OperatorMatrix {
 public:
  /// When `hermitian` is set the entries are checked against their adjoint
  /// to 1e-14 and DomainError is thrown on failure.
  OperatorMatrix(Truncation trunc, Eigen::MatrixXcd entries, bool hermitian = false);

  static OperatorMatrix identity(Truncation trunc);

  const Truncation& truncation() const { return trunc_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  bool hermitian() const { return hermitian_; }

  cplx entry(int n_a, int n_b, int n_a2, int n_b2) const {
    return entries_(trunc_.index(n_a, n_b), trunc_.index(n_a2, n_b2));
  }

  OperatorMatrix adjoint() const;
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix operator*(cplx scale) const;

 private:
  Truncation trunc_;
  Eigen::MatrixXcd entries_;
  bool hermitian_;
};

/// Largest entrywise |X(i,j) - conj(X(j,i))|.
double hermiticity_defect(const Eigen::MatrixXcd& m);

/// a|n> = sqrt(n)|n-1> on `mode`, identity on the other mode.
OperatorMatrix lowering_operator(Mode mode, Truncation trunc);

/// a^dagger|n> = sqrt(n+1)|n+1>; |n_max> maps to zero (hard cutoff).
OperatorMatrix raising_operator(Mode mode, Truncation trunc);

OperatorMatrix number_operator(Mode mode, Truncation trunc);

/// Diagonal N_a + N_b + 1 - M. Requires trunc.n_max() >= M.
OperatorMatrix hamiltonian_constraint(const SectorLabel& sector, Truncation trunc);

/// lambda^2 (a + a^dagger)(b + b^dagger), the product position insertion.
/// lambda = 1 reproduces the closed-form two-point function.
OperatorMatrix insertion_operator(double scale, Truncation trunc);

/// Matrix-vector product; throws TruncationError on mismatched truncations.
TwoModeState apply(const OperatorMatrix& op, const TwoModeState& state);

/// [x, y] = xy - yx.
OperatorMatrix commutator(const OperatorMatrix& x, const OperatorMatrix& y);

}  // namespace twopoint
