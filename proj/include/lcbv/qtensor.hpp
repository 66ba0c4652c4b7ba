#pragma once

#include <utility>

#include "lcbv/fieldcore.hpp"
#include "lcbv/vec3.hpp"

namespace lcbv {

// Ericksen bulk constants (a, b, c) and the matching Landau constants
// (abar, bbar, cbar) under which the two bulk energies coincide on
// uniaxial states: abar = 3a/2, bbar = 9b/2, cbar = 9c/4.
struct BulkParams {
  double a = 0, b = 0, c = 1;
  double abar = 0, bbar = 0, cbar = 2.25;
};

BulkParams make_bulk_params(double a, double b, double c);
// (abar, bbar, cbar) = (3a/2, 9b/2, 9c/4); requires c > 0.
std::array<double, 3> constants_map(double a, double b, double c);

// Q = s1 (n1 x n1 - I/3) + s2 (n2 x n2 - I/3), s1 >= 0 >= s2, n1 . n2 = 0.
struct BiaxialDecomposition {
  double s1 = 0;
  Vec3 n1{1, 0, 0};
  double s2 = 0;
  Vec3 n2{0, 1, 0};

  void validate() const;
};

SymTraceless3 make_uniaxial(double s, const Vec3& n);
SymTraceless3 make_biaxial(const BiaxialDecomposition& d);

// Deterministic eigendecomposition-based inverse of make_biaxial: with
// eigenvalues l1 >= l2 >= l3, s1 = l1 - l2 (largest eigenvector) and
// s2 = l3 - l2 (smallest eigenvector), so uniaxial inputs give s2 = 0.
BiaxialDecomposition decompose(const SymTraceless3& Q);

bool is_uniaxial(const SymTraceless3& Q, double tol);

// Eigenvalues sorted descending; columns of the returned matrix are the
// matching unit eigenvectors. Cyclic Jacobi with fixed pivot order.
void sym_eigen3(const Mat3& m, std::array<double, 3>& eigenvalues, Mat3& eigenvectors);

// sigma(s) = a/2 s^2 + b/3 s^3 + c/4 s^4
double bulk_sigma(double s, const BulkParams& p);
// psi_B(Q) = abar/2 Tr(Q^2) + bbar/3 Tr(Q^3) + cbar/4 (Tr Q^2)^2
double bulk_psi(const SymTraceless3& Q, const BulkParams& p);
// Biaxial bulk energy: psi_B evaluated on the biaxial form with orthonormal
// directors; reduces to sigma(s1) when s2 = 0.
double sigma_tilde(double s1, double s2, const BulkParams& p);

// The coexistence point of sigma: the a for which sigma is a double well with
// sigma(0) = sigma(s_plus) = 0 and sigma'(s_plus) = 0.
// Closed forms: s_plus = -2b/(3c), a_c = 2b^2/(9c). Requires b < 0 < c.
std::pair<double, double> critical_bulk(double b, double c);

// Frobenius gap between two uniaxial tensors:
// lhs = |s1(n x n - I/3) - s2(m x m - I/3)|^2, rhs = |s1 - s2|^2 / 6.
std::pair<double, double> lemma_gap_uniaxial(double s1, double s2, const Vec3& n, const Vec3& m);

// Biaxial gap: lhs = |Q1 - Q2|^2,
// rhs = [(s1-t1)^2 + (s2-t2)^2]/3 + s1 t1 |n1xn1 - m1xm1|^2 + s2 t2 |n2xn2 - m2xm2|^2.
std::pair<double, double> lemma_gap_biaxial(const BiaxialDecomposition& d1,
                                            const BiaxialDecomposition& d2);

}  // namespace lcbv
