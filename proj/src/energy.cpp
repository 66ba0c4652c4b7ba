#include "lcbv/energy.hpp"

#include <cmath>

namespace lcbv {

Vec3 curl_from_grad(const Mat3& G) {
  return {G(2, 1) - G(1, 2), G(0, 2) - G(2, 0), G(1, 0) - G(0, 1)};
}

double of_density(const Vec3& n, const Mat3& G, double t) {
  return G.frob2() + 2.0 * t * n.dot(curl_from_grad(G)) + t * t * n.norm2();
}

double ericksen_density(double s, const Vec3& grad_s, const Vec3& n, const Mat3& Gn, double t,
                        const BulkParams& bulk) {
  double elastic = Gn.frob2() + 2.0 * t * n.dot(curl_from_grad(Gn)) + t * t;
  return 2.0 * s * s * elastic + (2.0 / 3.0) * grad_s.norm2() + bulk_sigma(s, bulk);
}

double landau_density(const SymTraceless3& Q, const std::array<SymTraceless3, 3>& gradQ, double t,
                      const BulkParams& bulk) {
  Mat3 q = Q.full();
  Mat3 dq[3] = {gradQ[0].full(), gradQ[1].full(), gradQ[2].full()};
  double grad2 = dq[0].frob2() + dq[1].frob2() + dq[2].frob2();
  // (curl Q)_ij = sum_ab eps_jab dQ_ib / dx_a
  double qcurl = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double cij = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) cij += levi_civita(j, a, b) * dq[a](i, b);
      qcurl += q(i, j) * cij;
    }
  return grad2 + 4.0 * t * qcurl + 3.0 * t * t * q.frob2() + bulk_psi(Q, bulk);
}

double biaxial_ericksen_density(double s1, double s2, const Vec3& n, const Vec3& m,
                                const BiaxialGradients& grads, double t, const BulkParams& bulk) {
  const Mat3& Gn = grads.grad_n;
  const Mat3& Gm = grads.grad_m;
  double en = Gn.frob2() + 2.0 * t * n.dot(curl_from_grad(Gn)) + t * t;
  double em = Gm.frob2() + 2.0 * t * m.dot(curl_from_grad(Gm)) + t * t;

  // cross terms |m^T grad n - t n x m|^2 and |n^T grad m - t m x n|^2
  Vec3 mtGn = Gn.transpose().matvec(m) - t * n.cross(m);
  Vec3 ntGm = Gm.transpose().matvec(n) - t * m.cross(n);
  double cross = mtGn.norm2() + ntGm.norm2() - t * t;

  Vec3 gdiff = grads.grad_s1 - grads.grad_s2;
  return 2.0 * s1 * s1 * en + 2.0 * s2 * s2 * em + sigma_tilde(s1, s2, bulk) -
         2.0 * s1 * s2 * cross + gdiff.norm2() / 3.0 +
         (grads.grad_s1.norm2() + grads.grad_s2.norm2()) / 3.0;
}

EnergyBreakdown total_energy(const DirectorField& field, const ModelParams& params,
                             const JumpSet& jumps, const std::vector<double>* cell_weight) {
  const Grid& g = field.grid;
  if (!g.same_as(jumps.grid()))
    throw std::invalid_argument("total_energy: field and jump set grids differ");
  auto grads = gradient(field, jumps);
  const double dV = g.cell_volume();
  double grad_sum = 0, twist_sum = 0, norm_sum = 0;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        if (g.in_strip(i, j, k)) continue;
        const int c = g.index(i, j, k);
        double w = cell_weight ? (*cell_weight)[c] : 1.0;
        if (w == 0.0) continue;
        const Vec3& n = field.values[c];
        const Mat3& G = grads[c];
        grad_sum += w * G.frob2();
        twist_sum += w * 2.0 * params.t * n.dot(curl_from_grad(G));
        norm_sum += w * params.t * params.t * n.norm2();
      }
  return EnergyBreakdown::make(grad_sum * dV, twist_sum * dV, norm_sum * dV, 0.0,
                               params.K * jumps.area());
}

EnergyBreakdown total_energy(const DirectorField& field, const ModelParams& params) {
  return total_energy(field, params, detect_jumps(field), nullptr);
}

std::pair<double, double> twist_completion_check(const Vec3& v, const Mat3& G, double t) {
  double lhs = of_density(v, G, t);
  double rhs = -t * t * v.norm2();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double term = G(i, j);
      for (int k = 0; k < 3; ++k) term -= t * levi_civita(i, j, k) * v[k];
      rhs += term * term;
    }
  return {lhs, rhs};
}

}  // namespace lcbv
