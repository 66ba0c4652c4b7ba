#include "lcbv/qtensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcbv {

namespace {

void require_unit(const Vec3& n, const char* who) {
  if (std::abs(n.norm() - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": director must be a unit vector");
}

}  // namespace

std::array<double, 3> constants_map(double a, double b, double c) {
  if (c <= 0) throw std::invalid_argument("constants_map: c must be > 0");
  return {1.5 * a, 4.5 * b, 2.25 * c};
}

BulkParams make_bulk_params(double a, double b, double c) {
  auto bars = constants_map(a, b, c);
  return {a, b, c, bars[0], bars[1], bars[2]};
}

void BiaxialDecomposition::validate() const {
  if (std::abs(n1.norm() - 1.0) > 1e-12 || std::abs(n2.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("BiaxialDecomposition: directors must be unit vectors");
  if (std::abs(n1.dot(n2)) > 1e-9)
    throw std::invalid_argument("BiaxialDecomposition: directors must be orthogonal");
  if (s1 < 0 || s2 > 0)
    throw std::invalid_argument("BiaxialDecomposition: requires s1 >= 0 >= s2");
}

SymTraceless3 make_uniaxial(double s, const Vec3& n) {
  require_unit(n, "make_uniaxial");
  const double third = s / 3.0;
  return {s * n.x * n.x - third, s * n.x * n.y, s * n.x * n.z, s * n.y * n.y - third,
          s * n.y * n.z};
}

SymTraceless3 make_biaxial(const BiaxialDecomposition& d) {
  d.validate();
  return make_uniaxial(d.s1, d.n1) + make_uniaxial(d.s2, d.n2);
}

void sym_eigen3(const Mat3& m, std::array<double, 3>& eigenvalues, Mat3& eigenvectors) {
  Mat3 a = m;
  Mat3 v = Mat3::identity();
  // cyclic Jacobi, fixed pivot order
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (off < 1e-30) break;
    static const int pq[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [p, q] : pq) {
      if (std::abs(a(p, q)) < 1e-300) continue;
      double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
      double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      double c = 1.0 / std::sqrt(t * t + 1.0);
      double s = t * c;
      Mat3 r = Mat3::identity();
      r(p, p) = c; r(q, q) = c; r(p, q) = s; r(q, p) = -s;
      a = r.transpose().matmul(a).matmul(r);
      v = v.matmul(r);
    }
  }
  int order[3] = {0, 1, 2};
  double d[3] = {a(0, 0), a(1, 1), a(2, 2)};
  std::stable_sort(order, order + 3, [&](int x, int y) { return d[x] > d[y]; });
  for (int c = 0; c < 3; ++c) {
    eigenvalues[c] = d[order[c]];
    Vec3 col = v.col(order[c]);
    // deterministic sign: largest-magnitude component positive
    int big = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(col[i]) > std::abs(col[big])) big = i;
    if (col[big] < 0) col = -col;
    for (int i = 0; i < 3; ++i) eigenvectors(i, c) = col[i];
  }
}

BiaxialDecomposition decompose(const SymTraceless3& Q) {
  Mat3 m = Q.full();
  if (m.frob2() < 1e-28) return BiaxialDecomposition{0.0, {1, 0, 0}, 0.0, {0, 1, 0}};
  std::array<double, 3> lam;
  Mat3 vec;
  sym_eigen3(m, lam, vec);
  // With eigenvalues l1 >= l2 >= l3, writing the middle eigenvector as the
  // passive axis gives s1 = l1 - l2 >= 0 and s2 = l3 - l2 <= 0; a repeated
  // top or bottom pair collapses to the uniaxial case with s2 = 0 or s1 = 0.
  BiaxialDecomposition d;
  d.s1 = lam[0] - lam[1];
  d.s2 = lam[2] - lam[1];
  d.n1 = vec.col(0);
  d.n2 = vec.col(2);
  return d;
}

bool is_uniaxial(const SymTraceless3& Q, double tol) {
  Mat3 m = Q.full();
  std::array<double, 3> lam;
  Mat3 vec;
  sym_eigen3(m, lam, vec);
  double gap = std::min(lam[0] - lam[1], lam[1] - lam[2]);
  return gap <= tol;
}

double bulk_sigma(double s, const BulkParams& p) {
  return 0.5 * p.a * s * s + p.b / 3.0 * s * s * s + 0.25 * p.c * s * s * s * s;
}

double bulk_psi(const SymTraceless3& Q, const BulkParams& p) {
  Mat3 m = Q.full();
  double tr2 = m.frob2();  // Tr(Q^2) for symmetric Q
  double tr3 = m.matmul(m).ddot(m);
  return 0.5 * p.abar * tr2 + p.bbar / 3.0 * tr3 + 0.25 * p.cbar * tr2 * tr2;
}

double sigma_tilde(double s1, double s2, const BulkParams& p) {
  // eigenvalues of s1(n x n - I/3) + s2(m x m - I/3) with n . m = 0
  const double l1 = (2.0 * s1 - s2) / 3.0;
  const double l2 = (2.0 * s2 - s1) / 3.0;
  const double l3 = -(s1 + s2) / 3.0;
  const double tr2 = l1 * l1 + l2 * l2 + l3 * l3;
  const double tr3 = l1 * l1 * l1 + l2 * l2 * l2 + l3 * l3 * l3;
  return 0.5 * p.abar * tr2 + p.bbar / 3.0 * tr3 + 0.25 * p.cbar * tr2 * tr2;
}

std::pair<double, double> critical_bulk(double b, double c) {
  if (b >= 0 || c <= 0) throw std::invalid_argument("critical_bulk: requires b < 0 < c");
  const double s_plus = -2.0 * b / (3.0 * c);
  const double a_c = 2.0 * b * b / (9.0 * c);
  return {a_c, s_plus};
}

std::pair<double, double> lemma_gap_uniaxial(double s1, double s2, const Vec3& n, const Vec3& m) {
  require_unit(n, "lemma_gap_uniaxial");
  require_unit(m, "lemma_gap_uniaxial");
  Mat3 d = make_uniaxial(s1, n).full() - make_uniaxial(s2, m).full();
  return {d.frob2(), (s1 - s2) * (s1 - s2) / 6.0};
}

std::pair<double, double> lemma_gap_biaxial(const BiaxialDecomposition& d1,
                                            const BiaxialDecomposition& d2) {
  d1.validate();
  d2.validate();
  Mat3 diff = make_biaxial(d1).full() - make_biaxial(d2).full();
  auto proj_gap = [](const Vec3& u, const Vec3& v) {
    return (Mat3::outer(u, u) - Mat3::outer(v, v)).frob2();
  };
  double rhs = ((d1.s1 - d2.s1) * (d1.s1 - d2.s1) + (d1.s2 - d2.s2) * (d1.s2 - d2.s2)) / 3.0 +
               d1.s1 * d2.s1 * proj_gap(d1.n1, d2.n1) + d1.s2 * d2.s2 * proj_gap(d1.n2, d2.n2);
  return {diff.frob2(), rhs};
}

}  // namespace lcbv
