#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lcbv/fieldcore.hpp"
#include "lcbv/qtensor.hpp"

namespace lcbv {

struct ModelParams {
  double t = 0.0;  // cholesteric chirality (inverse length)
  double K = 1.0;  // jump-surface cost per unit area
  std::optional<BulkParams> bulk;
};

// curl with (curl v)_i = eps_ijk d_j v_k, G(i,j) = d v_i / d x_j
Vec3 curl_from_grad(const Mat3& G);

// One-constant Oseen-Frank density |G|^2 + 2t n.curl(n) + t^2 |n|^2.
// The t^2 |n|^2 form makes isotropic cells energy-free.
double of_density(const Vec3& n, const Mat3& G, double t);

// 2s^2(|Gn|^2 + 2t n.curl n + t^2) + (2/3)|grad_s|^2 + sigma(s)
double ericksen_density(double s, const Vec3& grad_s, const Vec3& n, const Mat3& Gn, double t,
                        const BulkParams& bulk);

// |grad Q|^2 + 4t Q.curlQ + 3t^2|Q|^2 + psi_B(Q) with
// (curl Q)_ij = sum_ab eps_jab dQ_ib/dx_a
double landau_density(const SymTraceless3& Q, const std::array<SymTraceless3, 3>& gradQ, double t,
                      const BulkParams& bulk);

struct BiaxialGradients {
  Vec3 grad_s1, grad_s2;
  Mat3 grad_n, grad_m;
};

double biaxial_ericksen_density(double s1, double s2, const Vec3& n, const Vec3& m,
                                const BiaxialGradients& grads, double t, const BulkParams& bulk);

// Midpoint-rule cell sum of of_density over cells outside the boundary
// strips, plus K * area(jumps). An optional mask restricts the bulk sum to
// cells with nonzero weight (used for non-rectangular domains).
EnergyBreakdown total_energy(const DirectorField& field, const ModelParams& params,
                             const JumpSet& jumps,
                             const std::vector<double>* cell_weight = nullptr);
// Auto-detect jumps at the default threshold.
EnergyBreakdown total_energy(const DirectorField& field, const ModelParams& params);

// The completed-square rearrangement of the density:
// lhs = |G|^2 + 2t v.curl v + t^2|v|^2
// rhs = sum_ij (G_ij - t sum_k eps_ijk v_k)^2 - t^2 |v|^2
std::pair<double, double> twist_completion_check(const Vec3& v, const Mat3& G, double t);

}  // namespace lcbv
