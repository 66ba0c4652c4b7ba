#include "lcbv/fieldcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stencil_detail.hpp"

namespace lcbv {

SymTraceless3 SymTraceless3::from_mat(const Mat3& m, double tol) {
  double asym = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
  if (asym > tol) throw std::invalid_argument("SymTraceless3: input not symmetric");
  if (std::abs(m.trace()) > tol) throw std::invalid_argument("SymTraceless3: input not traceless");
  return {m(0, 0), 0.5 * (m(0, 1) + m(1, 0)), 0.5 * (m(0, 2) + m(2, 0)), m(1, 1),
          0.5 * (m(1, 2) + m(2, 1))};
}

double facet_area(const Grid& grid, int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("facet_area: axis out of range");
  const double h[3] = {grid.spacing.x, grid.spacing.y, grid.spacing.z};
  return h[(axis + 1) % 3] * h[(axis + 2) % 3];
}

void JumpSet::add(int cell, int axis, const Vec3& trace_minus, const Vec3& trace_plus) {
  if (contains(cell, axis)) return;
  mask_[3 * static_cast<std::size_t>(cell) + axis] = 1;
  Facet f{cell, axis, trace_minus, trace_plus};
  auto pos = std::lower_bound(facets_.begin(), facets_.end(), f, [](const Facet& a, const Facet& b) {
    return a.cell != b.cell ? a.cell < b.cell : a.axis < b.axis;
  });
  facets_.insert(pos, f);
}

void JumpSet::remove(int cell, int axis) {
  if (!contains(cell, axis)) return;
  mask_[3 * static_cast<std::size_t>(cell) + axis] = 0;
  auto pos = std::find_if(facets_.begin(), facets_.end(), [&](const Facet& f) {
    return f.cell == cell && f.axis == axis;
  });
  facets_.erase(pos);
}

void JumpSet::clear() {
  facets_.clear();
  std::fill(mask_.begin(), mask_.end(), 0);
}

double JumpSet::area() const {
  double a = 0.0;
  for (const Facet& f : facets_) a += facet_area(grid_, f.axis);
  return a;
}

namespace {

using detail::Stencil;
using detail::axis_stencil;

void check_same_grid(const Grid& a, const Grid& b) {
  if (!a.same_as(b)) throw std::invalid_argument("gradient: field and jump set grids differ");
}

}  // namespace

std::vector<Mat3> gradient(const DirectorField& field, const JumpSet& jumps) {
  check_same_grid(field.grid, jumps.grid());
  const Grid& g = field.grid;
  std::vector<Mat3> out(g.cell_count());
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        Mat3 G;
        for (int axis = 0; axis < 3; ++axis) {
          Stencil s = axis_stencil(g, jumps, i, j, k, axis);
          Vec3 d{};
          for (int q = 0; q < s.n; ++q) d += field.values[s.cells[q]] * s.coefs[q];
          G(0, axis) = d.x;
          G(1, axis) = d.y;
          G(2, axis) = d.z;
        }
        out[g.index(i, j, k)] = G;
      }
  return out;
}

std::vector<Vec3> gradient(const ScalarField& field, const JumpSet& jumps) {
  check_same_grid(field.grid, jumps.grid());
  const Grid& g = field.grid;
  std::vector<Vec3> out(g.cell_count());
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        Vec3 d{};
        for (int axis = 0; axis < 3; ++axis) {
          Stencil s = axis_stencil(g, jumps, i, j, k, axis);
          double v = 0.0;
          for (int q = 0; q < s.n; ++q) v += field.values[s.cells[q]] * s.coefs[q];
          d[axis] = v;
        }
        out[g.index(i, j, k)] = d;
      }
  return out;
}

std::vector<std::array<SymTraceless3, 3>> gradient(const QTensorField& field,
                                                   const JumpSet& jumps) {
  check_same_grid(field.grid, jumps.grid());
  const Grid& g = field.grid;
  std::vector<std::array<SymTraceless3, 3>> out(g.cell_count());
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        std::array<SymTraceless3, 3> dQ{};
        for (int axis = 0; axis < 3; ++axis) {
          Stencil s = axis_stencil(g, jumps, i, j, k, axis);
          SymTraceless3 d{};
          for (int q = 0; q < s.n; ++q) d = d + field.values[s.cells[q]] * s.coefs[q];
          dQ[axis] = d;
        }
        out[g.index(i, j, k)] = dQ;
      }
  return out;
}

JumpSet detect_jumps(const DirectorField& field, double angle_threshold) {
  if (!(angle_threshold > 0.0 && angle_threshold < M_PI))
    throw std::invalid_argument("detect_jumps: threshold must lie in (0, pi)");
  const Grid& g = field.grid;
  JumpSet jumps(g);
  const int dims[3] = {g.nx, g.ny, g.nz};
  const int steps[3] = {1, g.nx, g.nx * g.ny};
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const int ijk[3] = {i, j, k};
        const int c = g.index(i, j, k);
        for (int axis = 0; axis < 3; ++axis) {
          if (ijk[axis] + 1 >= dims[axis]) continue;
          const Vec3& vm = field.values[c];
          const Vec3& vp = field.values[c + steps[axis]];
          bool zm = is_zero_vec(vm), zp = is_zero_vec(vp);
          if (zm && zp) continue;
          if (zm != zp) {
            jumps.add(c, axis, vm, vp);
            continue;
          }
          double cosang = vm.dot(vp) / (vm.norm() * vp.norm());
          cosang = std::clamp(cosang, -1.0, 1.0);
          if (std::acos(cosang) > angle_threshold) jumps.add(c, axis, vm, vp);
        }
      }
  return jumps;
}

double interface_area_estimate(const DirectorField& field, const JumpSet& jumps,
                               int smoothing_passes) {
  const Grid& g = field.grid;
  std::vector<double> chi(g.cell_count());
  for (std::size_t c = 0; c < chi.size(); ++c) chi[c] = is_zero_vec(field.values[c]) ? 0.0 : 1.0;

  // box-smooth the indicator so central differences give a usable normal
  std::vector<double> tmp(chi.size());
  const int steps[3] = {1, g.nx, g.nx * g.ny};
  const int dims[3] = {g.nx, g.ny, g.nz};
  for (int pass = 0; pass < smoothing_passes; ++pass) {
    for (int k = 0; k < g.nz; ++k)
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          const int ijk[3] = {i, j, k};
          const int c = g.index(i, j, k);
          double s = chi[c];
          int n = 1;
          for (int axis = 0; axis < 3; ++axis) {
            if (ijk[axis] > 0) { s += chi[c - steps[axis]]; ++n; }
            if (ijk[axis] + 1 < dims[axis]) { s += chi[c + steps[axis]]; ++n; }
          }
          tmp[c] = s / n;
        }
    chi.swap(tmp);
  }

  auto grad_chi = [&](int c) {
    auto [i, j, k] = g.coords(c);
    const int ijk[3] = {i, j, k};
    const double h[3] = {g.spacing.x, g.spacing.y, g.spacing.z};
    Vec3 grad{};
    for (int axis = 0; axis < 3; ++axis) {
      int lo = ijk[axis] > 0 ? c - steps[axis] : c;
      int hi = ijk[axis] + 1 < dims[axis] ? c + steps[axis] : c;
      double span = (hi != lo ? (hi - lo == 2 * steps[axis] ? 2.0 : 1.0) : 1.0);
      grad[axis] = (chi[hi] - chi[lo]) / (span * h[axis]);
    }
    return grad;
  };

  double area = 0.0;
  for (const auto& f : jumps.facets()) {
    int nb = f.cell + steps[f.axis];
    Vec3 nu = grad_chi(f.cell) + grad_chi(nb);
    double norm = nu.norm();
    double w = norm > 1e-12 ? std::abs(nu[f.axis]) / norm : 1.0;
    area += w * facet_area(g, f.axis);
  }
  return area;
}

std::string EnergyBreakdown::serialize() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "gradient=%.17g twist=%.17g norm=%.17g bulk=%.17g jump=%.17g total=%.17g",
                gradient_term, twist_term, norm_term, bulk_term, jump_term, total);
  return buf;
}

void write_field(std::ostream& os, const DirectorField& field) {
  const Grid& g = field.grid;
  char buf[256];
  os << "LCFIELD 1\n";
  std::snprintf(buf, sizeof(buf), "dims %d %d %d\n", g.nx, g.ny, g.nz);
  os << buf;
  std::snprintf(buf, sizeof(buf), "spacing %.17g %.17g %.17g\n", g.spacing.x, g.spacing.y,
                g.spacing.z);
  os << buf;
  std::snprintf(buf, sizeof(buf), "origin %.17g %.17g %.17g\n", g.origin.x, g.origin.y,
                g.origin.z);
  os << buf;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const Vec3& v = field.at(i, j, k);
        std::snprintf(buf, sizeof(buf), "%d %d %d %.17g %.17g %.17g\n", i, j, k, v.x, v.y, v.z);
        os << buf;
      }
}

void write_field(const std::string& path, const DirectorField& field) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_field: cannot open " + path);
  write_field(os, field);
}

DirectorField read_field(std::istream& is) {
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (magic != "LCFIELD" || version != 1)
    throw std::runtime_error("read_field: bad magic, expected 'LCFIELD 1'");
  std::string key;
  Grid g;
  is >> key >> g.nx >> g.ny >> g.nz;
  if (key != "dims") throw std::runtime_error("read_field: expected dims line");
  is >> key >> g.spacing.x >> g.spacing.y >> g.spacing.z;
  if (key != "spacing") throw std::runtime_error("read_field: expected spacing line");
  is >> key >> g.origin.x >> g.origin.y >> g.origin.z;
  if (key != "origin") throw std::runtime_error("read_field: expected origin line");
  g.validate();
  DirectorField f(g);
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    int i, j, k;
    Vec3 v;
    if (!(is >> i >> j >> k >> v.x >> v.y >> v.z))
      throw std::runtime_error("read_field: truncated cell data");
    f.at(i, j, k) = v;
  }
  return f;
}

DirectorField read_field_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_field: cannot open " + path);
  return read_field(is);
}

void write_jumps(std::ostream& os, const JumpSet& jumps) {
  os << "LCJUMPS 1\n";
  char buf[128];
  for (const auto& f : jumps.facets()) {
    auto [i, j, k] = jumps.grid().coords(f.cell);
    std::snprintf(buf, sizeof(buf), "%d %d %d %d\n", i, j, k, f.axis);
    os << buf;
  }
}

void write_jumps(const std::string& path, const JumpSet& jumps) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_jumps: cannot open " + path);
  write_jumps(os, jumps);
}

}  // namespace lcbv
