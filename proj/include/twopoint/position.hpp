#pragma once

#include <vector>

#include "twopoint/coherent.hpp"
#include "twopoint/correlator.hpp"
#include "twopoint/sector.hpp"

namespace twopoint {

/// n-point Gauss-Hermite rule for the weight exp(-x^2), nodes increasing.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the Hermite
/// recurrence, polished by Newton steps on the orthonormal recurrence; weights
/// from the Christoffel function 1 / sum_k p_k(x)^2.
QuadratureRule gauss_hermite_rule(int order);

/// Orthonormal Hermite function h_n(x) = H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi)),
/// by the three-term recurrence on h_n itself.
double hermite_function(int n, double x);

/// p_n(x) = h_n(x) exp(x^2/2) for n = 0..max_n: polynomials orthonormal under exp(-x^2).
std::vector<double> orthonormal_hermite_polynomials(int max_n, double x);

/// psi_m(q_a, q_b) = h_{j-m}(q_a) h_{j+m}(q_b).
double wavefunction_m(const MQuantumNumber& m, double q_a, double q_b);

/// K(q; q') = sum_m psi_m(q) psi_m(q'): the integral kernel of the projector.
double kernel(const SectorLabel& sector, double q_a, double q_b, double qp_a, double qp_b);

/// sum_m c_m psi_m(q_a, q_b).
cplx evaluate_physical_state(const PhysicalState& state, double q_a, double q_b);

/// Minimum rule order accepted by two_point_quadrature: 2j + 3.
int quadrature_order_threshold(const SectorLabel& sector);

/// Position-space integral of conj(psi_2) Q(q) K(q; q') Q(q') psi_1 over R^4,
/// factorized through the kernel's sum over m. The insertion is the same operator
/// as insertion_operator(scale): lambda (a + a^dagger) acts as sqrt(2) lambda q, so
/// Q(q) = 2 lambda^2 q_a q_b. Throws QuadratureOrderError when rule.order < 2j + 3.
CorrelatorResult two_point_quadrature(const CoherentLabel& label1, const CoherentLabel& label2,
                                      const SectorLabel& sector, const QuadratureRule& rule,
                                      double scale = 1.0);

namespace detail {
/// two_point_quadrature without the order guard.
cplx two_point_quadrature_unchecked(const CoherentLabel& label1, const CoherentLabel& label2,
                                    const SectorLabel& sector, const QuadratureRule& rule,
                                    double scale = 1.0);
}  // namespace detail

}  // namespace twopoint
