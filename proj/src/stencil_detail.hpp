#pragma once

#include "lcbv/fieldcore.hpp"

namespace lcbv::detail {

// Difference stencil for one axis at one cell. Entries are (cell index,
// coefficient); coefficients already include 1/h. Empty when both sides are
// blocked by a facet or the grid edge.
struct Stencil {
  int cells[2];
  double coefs[2];
  int n = 0;
};

inline Stencil axis_stencil(const Grid& g, const JumpSet& jumps, int i, int j, int k, int axis) {
  const int ijk[3] = {i, j, k};
  const int dims[3] = {g.nx, g.ny, g.nz};
  const double h[3] = {g.spacing.x, g.spacing.y, g.spacing.z};
  const int c = g.index(i, j, k);
  int step = axis == 0 ? 1 : (axis == 1 ? g.nx : g.nx * g.ny);

  bool has_minus = ijk[axis] > 0 && !jumps.contains(c - step, axis);
  bool has_plus = ijk[axis] < dims[axis] - 1 && !jumps.contains(c, axis);

  Stencil s;
  if (has_minus && has_plus) {
    s.cells[0] = c - step;
    s.cells[1] = c + step;
    s.coefs[0] = -0.5 / h[axis];
    s.coefs[1] = 0.5 / h[axis];
    s.n = 2;
  } else if (has_plus) {
    s.cells[0] = c;
    s.cells[1] = c + step;
    s.coefs[0] = -1.0 / h[axis];
    s.coefs[1] = 1.0 / h[axis];
    s.n = 2;
  } else if (has_minus) {
    s.cells[0] = c - step;
    s.cells[1] = c;
    s.coefs[0] = -1.0 / h[axis];
    s.coefs[1] = 1.0 / h[axis];
    s.n = 2;
  }
  return s;
}

}  // namespace lcbv::detail
