#include "lcbv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "stencil_detail.hpp"

namespace lcbv {

namespace {

using detail::Stencil;

// The descent objective uses forward differences only, and sums cell
// densities over every cell including the clamped strips (whose values stay
// fixed). Central differences decouple the odd and even sublattices, so
// minimizing them admits checkerboard states with roughly half the true
// energy; the forward-only form counts every unblocked gap exactly once, so
// the objective is coercive, including the gap between a strip plane and its
// interior neighbor.
Stencil solver_stencil(const Grid& g, const JumpSet& jumps, int i, int j, int k, int axis) {
  const int ijk[3] = {i, j, k};
  const int dims[3] = {g.nx, g.ny, g.nz};
  const int steps3[3] = {1, g.nx, g.nx * g.ny};
  const double h = axis == 0 ? g.spacing.x : (axis == 1 ? g.spacing.y : g.spacing.z);
  const int c = g.index(i, j, k);
  Stencil s;
  if (ijk[axis] + 1 < dims[axis] && !jumps.contains(c, axis)) {
    s.cells[0] = c;
    s.coefs[0] = -1.0 / h;
    s.cells[1] = c + steps3[axis];
    s.coefs[1] = 1.0 / h;
    s.n = 2;
  }
  return s;
}

Mat3 cell_grad(const DirectorField& field, const JumpSet& jumps, int i, int j, int k) {
  Mat3 G;
  for (int axis = 0; axis < 3; ++axis) {
    Stencil s = solver_stencil(field.grid, jumps, i, j, k, axis);
    Vec3 d{};
    for (int q = 0; q < s.n; ++q) d += field.values[s.cells[q]] * s.coefs[q];
    G(0, axis) = d.x;
    G(1, axis) = d.y;
    G(2, axis) = d.z;
  }
  return G;
}

double cell_density(const DirectorField& field, const JumpSet& jumps, int i, int j, int k,
                    double t) {
  return of_density(field.values[field.grid.index(i, j, k)], cell_grad(field, jumps, i, j, k), t);
}

}  // namespace

Vec3 project_s2_or_zero(const Vec3& v) {
  double n = v.norm();
  return n > 0.5 ? v / n : Vec3{};
}

double bulk_energy(const DirectorField& field, const JumpSet& jumps, const ModelParams& model) {
  const Grid& g = field.grid;
  double sum = 0.0;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) sum += cell_density(field, jumps, i, j, k, model.t);
  return sum * g.cell_volume();
}

std::vector<Vec3> bulk_energy_gradient(const DirectorField& field, const JumpSet& jumps,
                                       const ModelParams& model) {
  const Grid& g = field.grid;
  const double t = model.t;
  const double dV = g.cell_volume();
  std::vector<Vec3> grad(g.cell_count());

  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const int c = g.index(i, j, k);
        const Vec3& n = field.values[c];
        const Mat3 G = cell_grad(field, jumps, i, j, k);
        // direct dependence of the twist and norm terms on n at this cell
        grad[c] += dV * (2.0 * t * curl_from_grad(G) + 2.0 * t * t * n);
        // dependence through the gradient stencils:
        // d(density)/dG(r,a) = 2 G(r,a) + 2t sum_i eps_iar n_i
        Mat3 M;
        for (int r = 0; r < 3; ++r)
          for (int a = 0; a < 3; ++a) {
            double e = 0.0;
            for (int ii = 0; ii < 3; ++ii) e += levi_civita(ii, a, r) * n[ii];
            M(r, a) = 2.0 * G(r, a) + 2.0 * t * e;
          }
        for (int axis = 0; axis < 3; ++axis) {
          Stencil s = solver_stencil(g, jumps, i, j, k, axis);
          Vec3 col{M(0, axis), M(1, axis), M(2, axis)};
          for (int q = 0; q < s.n; ++q) grad[s.cells[q]] += (dV * s.coefs[q]) * col;
        }
      }

  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        if (g.in_strip(i, j, k)) grad[g.index(i, j, k)] = Vec3{};
  return grad;
}

RelaxResult relax(const RelaxParams& params, const ModelParams& model) {
  const Grid& g = params.seed_field.grid;
  if (params.seed_field.values.empty())
    throw std::invalid_argument("relax: seed_field must be provided");
  if (params.seed_field.values.size() != g.cell_count())
    throw std::invalid_argument("relax: seed_field size does not match its grid");

  DirectorField field = params.seed_field;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        if (!g.in_strip(i, j, k))
          field.values[g.index(i, j, k)] = project_s2_or_zero(field.values[g.index(i, j, k)]);

  JumpSet jumps = detect_jumps(field);
  const double dV = g.cell_volume();
  const int steps3[3] = {1, g.nx, g.nx * g.ny};
  const int dims[3] = {g.nx, g.ny, g.nz};

  double energy = bulk_energy(field, jumps, model) + model.K * jumps.area();
  double step = params.step;

  auto pair_energy = [&](int i, int j, int k, int axis) {
    // bulk density of the two cells adjacent to facet ((i,j,k), axis)
    double e = cell_density(field, jumps, i, j, k, model.t);
    int p[3] = {i, j, k};
    p[axis] += 1;
    e += cell_density(field, jumps, p[0], p[1], p[2], model.t);
    return e * dV;
  };

  auto record = [&](int iter) {
    EnergyBreakdown b = total_energy(field, model, jumps, nullptr);
    IterRecord r;
    r.iter = iter;
    r.gradient_term = b.gradient_term;
    r.twist_term = b.twist_term;
    r.norm_term = b.norm_term;
    r.jump_term = b.jump_term;
    r.total = b.total;
    r.jump_area = jumps.area();
    r.objective = energy;
    return r;
  };

  RelaxResult result;
  result.log.push_back(record(0));

  for (int iter = 1; iter <= params.max_iters; ++iter) {
    double energy_at_start = energy;

    // descent step on the bulk term with backtracking on the total energy
    auto grad = bulk_energy_gradient(field, jumps, model);
    double trial = step;
    for (int bt = 0; bt < 40; ++bt) {
      DirectorField cand = field;
      for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
          for (int i = 0; i < g.nx; ++i) {
            if (g.in_strip(i, j, k)) continue;
            const int c = g.index(i, j, k);
            cand.values[c] = project_s2_or_zero(field.values[c] - trial * grad[c]);
          }
      double cand_energy = bulk_energy(cand, jumps, model) + model.K * jumps.area();
      if (cand_energy <= energy) {
        field = std::move(cand);
        energy = cand_energy;
        step = trial * 2.0;  // allow the accepted step to grow again
        break;
      }
      trial *= 0.5;
    }

    if (iter % params.jump_update_period == 0) {
      // greedy per-facet classification: toggle a facet when the bulk energy
      // saved beats (or the jump cost released repays) K times its area
      for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
          for (int i = 0; i < g.nx; ++i) {
            const int ijk[3] = {i, j, k};
            const int c = g.index(i, j, k);
            for (int axis = 0; axis < 3; ++axis) {
              if (ijk[axis] + 1 >= dims[axis]) continue;
              const Vec3& vm = field.values[c];
              const Vec3& vp = field.values[c + steps3[axis]];
              if (is_zero_vec(vm) && is_zero_vec(vp)) continue;
              bool present = jumps.contains(c, axis);
              double before = pair_energy(i, j, k, axis) +
                              (present ? model.K * facet_area(g, axis) : 0.0);
              if (present)
                jumps.remove(c, axis);
              else
                jumps.add(c, axis, vm, vp);
              double after = pair_energy(i, j, k, axis) +
                             (present ? 0.0 : model.K * facet_area(g, axis));
              if (after < before) {
                energy += after - before;
              } else {
                // revert
                if (present)
                  jumps.add(c, axis, vm, vp);
                else
                  jumps.remove(c, axis);
              }
            }
          }

      // greedy zero-set sweep: a cell may melt to the isotropic phase when
      // that lowers the energy of its stencil neighborhood
      for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
          for (int i = 0; i < g.nx; ++i) {
            if (g.in_strip(i, j, k)) continue;
            const int c = g.index(i, j, k);
            if (is_zero_vec(field.values[c])) continue;
            auto cross_energy = [&]() {
              double e = cell_density(field, jumps, i, j, k, model.t);
              for (int a = 0; a < 3; ++a)
                for (int d = -1; d <= 1; d += 2) {
                  int p[3] = {i, j, k};
                  p[a] += d;
                  if (p[a] < 0 || p[a] >= dims[a]) continue;
                  e += cell_density(field, jumps, p[0], p[1], p[2], model.t);
                }
              return e * dV;
            };
            double before = cross_energy();
            Vec3 saved = field.values[c];
            field.values[c] = Vec3{};
            double after = cross_energy();
            if (after < before)
              energy += after - before;
            else
              field.values[c] = saved;
          }
    }

    result.log.push_back(record(iter));
    if (energy_at_start - energy < params.tol && iter % params.jump_update_period == 0) break;
  }

  result.field = std::move(field);
  result.jumps = std::move(jumps);
  result.energy = total_energy(result.field, model, result.jumps, nullptr);
  return result;
}

ResidualStats el_residual(const DirectorField& field, const JumpSet& jumps, double t) {
  const Grid& g = field.grid;
  const int steps3[3] = {1, g.nx, g.nx * g.ny};
  const int dims[3] = {g.nx, g.ny, g.nz};
  const double h[3] = {g.spacing.x, g.spacing.y, g.spacing.z};

  ResidualStats st;
  double sum = 0.0;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        if (g.in_strip(i, j, k)) continue;
        const int ijk[3] = {i, j, k};
        const int c = g.index(i, j, k);
        if (is_zero_vec(field.values[c])) continue;

        bool clean = true;
        for (int a = 0; a < 3 && clean; ++a) {
          if (dims[a] == 1) continue;  // flat axis carries no derivative
          if (ijk[a] == 0 || ijk[a] == dims[a] - 1) { clean = false; break; }
          if (jumps.contains(c, a) || jumps.contains(c - steps3[a], a)) { clean = false; break; }
          if (is_zero_vec(field.values[c - steps3[a]]) ||
              is_zero_vec(field.values[c + steps3[a]]))
            clean = false;
        }
        if (!clean) continue;

        const Vec3& n = field.values[c];
        Mat3 G;
        Vec3 lap{};
        for (int a = 0; a < 3; ++a) {
          if (dims[a] == 1) {
            G(0, a) = G(1, a) = G(2, a) = 0.0;
            continue;
          }
          const Vec3& vm = field.values[c - steps3[a]];
          const Vec3& vp = field.values[c + steps3[a]];
          Vec3 d = (vp - vm) / (2.0 * h[a]);
          G(0, a) = d.x;
          G(1, a) = d.y;
          G(2, a) = d.z;
          lap += (vp - 2.0 * n + vm) / (h[a] * h[a]);
        }
        Vec3 curl = curl_from_grad(G);
        double lambda = G.frob2() + 2.0 * t * n.dot(curl);
        Vec3 r = lap - 2.0 * t * curl + lambda * n;
        double rn = r.norm();
        st.max_norm = std::max(st.max_norm, rn);
        sum += rn;
        ++st.evaluated_cells;
      }
  if (st.evaluated_cells > 0) st.mean_norm = sum / st.evaluated_cells;
  return st;
}

ResidualStats natural_bc_residual(const DirectorField& field, const JumpSet& jumps, double t) {
  const Grid& g = field.grid;
  const int steps3[3] = {1, g.nx, g.nx * g.ny};
  const int dims[3] = {g.nx, g.ny, g.nz};
  const double h[3] = {g.spacing.x, g.spacing.y, g.spacing.z};

  ResidualStats st;
  double sum = 0.0;
  auto eval_side = [&](int cell, int inner, int axis, double nu_sign) {
    // derivative along the outward normal nu = nu_sign * e_axis, one-sided
    // from the given side of the facet
    const Vec3& v0 = field.values[cell];
    if (is_zero_vec(v0)) return;
    const Vec3& v1 = field.values[inner];
    if (is_zero_vec(v1)) return;
    // the inner cell lies in the -nu direction from the trace cell, so the
    // one-sided normal derivative is (trace - inner)/h on either side
    Vec3 dn = (v0 - v1) / h[axis];
    Vec3 nu{};
    nu[axis] = nu_sign;
    Vec3 r = dn + t * v0.cross(nu);
    double rn = r.norm();
    st.max_norm = std::max(st.max_norm, rn);
    sum += rn;
    ++st.evaluated_cells;
  };

  for (const auto& f : jumps.facets()) {
    auto [i, j, k] = g.coords(f.cell);
    const int ijk[3] = {i, j, k};
    int step = steps3[f.axis];
    // minus side: outward normal +e_axis
    if (ijk[f.axis] - 1 >= 0) eval_side(f.cell, f.cell - step, f.axis, 1.0);
    // plus side: outward normal -e_axis
    if (ijk[f.axis] + 2 < dims[f.axis])
      eval_side(f.cell + step, f.cell + 2 * step, f.axis, -1.0);
  }
  if (st.evaluated_cells > 0) st.mean_norm = sum / st.evaluated_cells;
  return st;
}

double gradient_check(const DirectorField& field, const ModelParams& model, double h_fd,
                      std::uint64_t seed) {
  const Grid& g = field.grid;
  JumpSet jumps = detect_jumps(field);
  auto analytic = bulk_energy_gradient(field, jumps, model);

  std::vector<int> interior;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        if (!g.in_strip(i, j, k)) interior.push_back(g.index(i, j, k));
  if (interior.empty()) throw std::invalid_argument("gradient_check: no free cells");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_cell(0, interior.size() - 1);
  std::uniform_int_distribution<int> pick_comp(0, 2);

  DirectorField work = field;
  double worst = 0.0;
  for (int trial = 0; trial < 32; ++trial) {
    int c = interior[pick_cell(rng)];
    int comp = pick_comp(rng);
    double saved = work.values[c][comp];
    work.values[c][comp] = saved + h_fd;
    double ep = bulk_energy(work, jumps, model);
    work.values[c][comp] = saved - h_fd;
    double em = bulk_energy(work, jumps, model);
    work.values[c][comp] = saved;
    double fd = (ep - em) / (2.0 * h_fd);
    double an = analytic[c][comp];
    double scale = std::max({std::abs(an), std::abs(fd), 1e-6});
    worst = std::max(worst, std::abs(fd - an) / scale);
  }
  return worst;
}

}  // namespace lcbv
