#pragma once

#include <cstdint>
#include <vector>

#include "lcbv/energy.hpp"
#include "lcbv/fieldcore.hpp"

namespace lcbv {

// Projection onto S^2 union {0}, switching at |v| = 1/2.
Vec3 project_s2_or_zero(const Vec3& v);

struct RelaxParams {
  double step = 1e-2;
  int max_iters = 2000;
  double tol = 1e-9;            // energy-decrease stop threshold per sweep
  int jump_update_period = 10;
  DirectorField seed_field;
};

struct IterRecord {
  int iter = 0;
  double gradient_term = 0, twist_term = 0, norm_term = 0, jump_term = 0, total = 0;
  double jump_area = 0;
  // the one-sided descent objective (bulk + K * area); non-increasing across
  // accepted updates, unlike the central-difference total which can wobble
  // at O(h^2) while the objective decreases
  double objective = 0;
};

struct RelaxResult {
  DirectorField field;
  JumpSet jumps;
  EnergyBreakdown energy;
  std::vector<IterRecord> log;
};

// Alternating relaxation of the discrete SBV energy: backtracked projected
// gradient steps on the bulk term, greedy per-facet jump classification
// against the K-area cost, and a greedy zero-set sweep. Accepted iterates
// never increase the energy; boundary-strip cells are never modified.
RelaxResult relax(const RelaxParams& params, const ModelParams& model);

// Exact differential of the discrete bulk energy (jump set held fixed),
// zero at boundary-strip cells.
std::vector<Vec3> bulk_energy_gradient(const DirectorField& field, const JumpSet& jumps,
                                       const ModelParams& model);
double bulk_energy(const DirectorField& field, const JumpSet& jumps, const ModelParams& model);

struct ResidualStats {
  double max_norm = 0;
  double mean_norm = 0;
  int evaluated_cells = 0;
};

// Strong-form residual of Delta n - 2t curl n + lambda n with
// lambda = |grad n|^2 + 2t n.curl n, at cells whose full stencil avoids
// jump facets, zero cells, strips and the grid boundary.
ResidualStats el_residual(const DirectorField& field, const JumpSet& jumps, double t);

// One-sided residual of dn/dnu + t n x nu on each side of every jump facet.
ResidualStats natural_bc_residual(const DirectorField& field, const JumpSet& jumps, double t);

// Max relative error between the analytic bulk-energy gradient and central
// finite differences at 32 seeded random non-strip cells.
double gradient_check(const DirectorField& field, const ModelParams& model, double h_fd,
                      std::uint64_t seed = 0);

}  // namespace lcbv
