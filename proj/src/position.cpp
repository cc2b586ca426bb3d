#include "twopoint/position.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "twopoint/errors.hpp"

namespace twopoint {

namespace {

const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

// Table p_n(x_i) for n = 0..max_n over the rule's nodes; row n, column i.
Eigen::MatrixXd polynomial_table(int max_n, const QuadratureRule& rule) {
  Eigen::MatrixXd table(max_n + 1, rule.order);
  for (int i = 0; i < rule.order; ++i) {
    const auto p = orthonormal_hermite_polynomials(max_n, rule.nodes[i]);
    for (int n = 0; n <= max_n; ++n) table(n, i) = p[n];
  }
  return table;
}

// Polynomial part of a physical state on the 2-D product grid: row i (q_a), column k (q_b).
Eigen::MatrixXcd state_on_grid(const PhysicalState& state, const Eigen::MatrixXd& p) {
  const int two_j = state.sector().two_j();
  const auto n = p.cols();
  Eigen::MatrixXcd grid = Eigen::MatrixXcd::Zero(n, n);
  for (int nb = 0; nb <= two_j; ++nb) {
    const Eigen::VectorXd pa = p.row(two_j - nb).transpose();
    const Eigen::VectorXd pb = p.row(nb).transpose();
    grid += state.amplitudes()[nb] * (pa * pb.transpose()).cast<cplx>();
  }
  return grid;
}

}  // namespace

std::vector<double> orthonormal_hermite_polynomials(int max_n, double x) {
  std::vector<double> p(max_n + 1);
  p[0] = kPiQuarter;
  if (max_n >= 1) p[1] = std::sqrt(2.0) * x * kPiQuarter;
  for (int n = 1; n < max_n; ++n) {
    p[n + 1] = std::sqrt(2.0 / (n + 1)) * x * p[n] - std::sqrt(double(n) / (n + 1)) * p[n - 1];
  }
  return p;
}

double hermite_function(int n, double x) {
  if (n < 0) throw DomainError("hermite_function needs n >= 0");
  double prev = 0.0;
  double cur = kPiQuarter * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

QuadratureRule gauss_hermite_rule(int order) {
  if (order < 1) throw DomainError("Gauss-Hermite order must be >= 1");
  QuadratureRule rule;
  rule.order = order;
  // Jacobi matrix of the orthonormal recurrence: off-diagonal sqrt(k/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  rule.nodes.assign(eig.eigenvalues().data(), eig.eigenvalues().data() + order);

  for (double& x : rule.nodes) {
    for (int it = 0; it < 3; ++it) {
      // p_n'(x) = sqrt(2n) p_{n-1}(x)
      const auto p = orthonormal_hermite_polynomials(order, x);
      const double dp = std::sqrt(2.0 * order) * p[order - 1];
      if (dp == 0.0) break;
      x -= p[order] / dp;
    }
  }
  // Enforce exact symmetry about the origin.
  for (int i = 0; i < order / 2; ++i) {
    const double r = 0.5 * (rule.nodes[order - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -r;
    rule.nodes[order - 1 - i] = r;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;

  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    const auto p = orthonormal_hermite_polynomials(order - 1, rule.nodes[i]);
    double sum = 0.0;
    for (double v : p) sum += v * v;
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

double wavefunction_m(const MQuantumNumber& m, double q_a, double q_b) {
  return hermite_function(m.n_a(), q_a) * hermite_function(m.n_b(), q_b);
}

double kernel(const SectorLabel& sector, double q_a, double q_b, double qp_a, double qp_b) {
  double sum = 0.0;
  for (int nb = 0; nb <= sector.two_j(); ++nb) {
    const auto m = MQuantumNumber::from_index(sector, nb);
    sum += wavefunction_m(m, q_a, q_b) * wavefunction_m(m, qp_a, qp_b);
  }
  return sum;
}

cplx evaluate_physical_state(const PhysicalState& state, double q_a, double q_b) {
  cplx sum = 0.0;
  for (int nb = 0; nb <= state.sector().two_j(); ++nb) {
    sum += state.amplitudes()[nb] * wavefunction_m(MQuantumNumber::from_index(state.sector(), nb),
                                                   q_a, q_b);
  }
  return sum;
}

int quadrature_order_threshold(const SectorLabel& sector) { return sector.two_j() + 3; }

CorrelatorResult two_point_quadrature(const CoherentLabel& label1, const CoherentLabel& label2,
                                      const SectorLabel& sector, const QuadratureRule& rule,
                                      double scale) {
  if (rule.order < quadrature_order_threshold(sector)) {
    throw QuadratureOrderError("quadrature order " + std::to_string(rule.order) +
                               " below exactness threshold 2j+3 = " +
                               std::to_string(quadrature_order_threshold(sector)));
  }
  return {detail::two_point_quadrature_unchecked(label1, label2, sector, rule, scale),
          Method::Quadrature, sector};
}

namespace detail {

cplx two_point_quadrature_unchecked(const CoherentLabel& label1, const CoherentLabel& label2,
                                    const SectorLabel& sector, const QuadratureRule& rule,
                                    double scale) {
  if (label1.is_zero() || label2.is_zero()) {
    throw DomainError("two-point function needs nonzero labels");
  }
  const int two_j = sector.two_j();
  const auto psi1 = normalize_physical(physical_coherent(label1, sector));
  const auto psi2 = normalize_physical(physical_coherent(label2, sector));
  const Eigen::MatrixXd p = polynomial_table(two_j, rule);

  // Gaussian factors of the wavefunctions combine into exp(-q^2) per axis and
  // are carried by the weights; x w folds in the position insertion.
  const auto n = rule.order;
  Eigen::VectorXd xw(n);
  for (int i = 0; i < n; ++i) xw[i] = rule.nodes[i] * rule.weights[i];
  const Eigen::MatrixXcd xw_outer = (xw * xw.transpose()).cast<cplx>();

  const Eigen::MatrixXcd ket = state_on_grid(psi1, p).cwiseProduct(xw_outer);
  const Eigen::MatrixXcd bra = state_on_grid(psi2, p).conjugate().cwiseProduct(xw_outer);

  cplx total = 0.0;
  for (int nb = 0; nb <= two_j; ++nb) {
    const Eigen::VectorXcd pa = p.row(two_j - nb).transpose().cast<cplx>();
    const Eigen::VectorXcd pb = p.row(nb).transpose().cast<cplx>();
    // int psi_m q_a q_b psi_1 and int conj(psi_2) q_a q_b psi_m
    const cplx right = pa.dot(ket * pb);
    const cplx left = pa.dot(bra * pb);
    total += left * right;
  }
  const double insertion = 2.0 * scale * scale;
  return insertion * insertion * total;
}

}  // namespace detail

}  // namespace twopoint
