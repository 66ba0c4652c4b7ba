#include "lcbv/lifting.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace lcbv {

namespace {

// Rebuild the antipodal jump set of a signed field (zero-adjacent facets are
// not orientation jumps and are excluded here).
JumpSet antipodal_jumps(const DirectorField& field) {
  const Grid& g = field.grid;
  JumpSet jumps(g);
  const int dims[3] = {g.nx, g.ny, g.nz};
  const int steps[3] = {1, g.nx, g.nx * g.ny};
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const int ijk[3] = {i, j, k};
        const int c = g.index(i, j, k);
        if (is_zero_vec(field.values[c])) continue;
        for (int axis = 0; axis < 3; ++axis) {
          if (ijk[axis] + 1 >= dims[axis]) continue;
          const Vec3& vp = field.values[c + steps[axis]];
          if (is_zero_vec(vp)) continue;
          if (field.values[c].dot(vp) < 0.0) jumps.add(c, axis, field.values[c], vp);
        }
      }
  return jumps;
}

}  // namespace

CombResult comb(const LineField& lf) {
  const Grid& g = lf.grid;
  const std::size_t n = g.cell_count();
  CombResult result;
  result.field = DirectorField(g);
  result.field.values = lf.values;

  std::vector<char> assigned(n, 0);
  const int dims[3] = {g.nx, g.ny, g.nz};
  const int steps[3] = {1, g.nx, g.nx * g.ny};
  int components = 0;

  for (std::size_t seed = 0; seed < n; ++seed) {
    if (assigned[seed] || is_zero_vec(lf.values[seed])) continue;
    ++components;
    std::queue<int> frontier;
    assigned[seed] = 1;  // seed keeps its stored representative
    frontier.push(static_cast<int>(seed));
    while (!frontier.empty()) {
      int c = frontier.front();
      frontier.pop();
      auto [i, j, k] = g.coords(c);
      const int ijk[3] = {i, j, k};
      for (int axis = 0; axis < 3; ++axis)
        for (int dir = -1; dir <= 1; dir += 2) {
          if (ijk[axis] + dir < 0 || ijk[axis] + dir >= dims[axis]) continue;
          int nb = c + dir * steps[axis];
          if (assigned[nb] || is_zero_vec(lf.values[nb])) continue;
          assigned[nb] = 1;
          if (result.field.values[nb].dot(result.field.values[c]) < 0.0)
            result.field.values[nb] = -result.field.values[nb];
          frontier.push(nb);
        }
    }
  }

  result.jumps = antipodal_jumps(result.field);
  result.orientable = result.jumps.empty();
  result.visited_components = components;
  return result;
}

CombResult improve_jumps(const CombResult& r, int passes) {
  CombResult out = r;
  const Grid& g = out.field.grid;
  const int dims[3] = {g.nx, g.ny, g.nz};
  const int steps[3] = {1, g.nx, g.nx * g.ny};

  // weighted by facet area so the improvement is monotone in jump area too
  auto antipodal_area = [&](int c, const Vec3& v) {
    auto [i, j, k] = g.coords(c);
    const int ijk[3] = {i, j, k};
    double area = 0.0;
    for (int axis = 0; axis < 3; ++axis)
      for (int dir = -1; dir <= 1; dir += 2) {
        if (ijk[axis] + dir < 0 || ijk[axis] + dir >= dims[axis]) continue;
        const Vec3& w = out.field.values[c + dir * steps[axis]];
        if (!is_zero_vec(w) && v.dot(w) < 0.0) area += facet_area(g, axis);
      }
    return area;
  };

  for (int pass = 0; pass < passes; ++pass) {
    bool flipped = false;
    for (std::size_t c = 0; c < g.cell_count(); ++c) {
      const Vec3& v = out.field.values[c];
      if (is_zero_vec(v)) continue;
      if (antipodal_area(static_cast<int>(c), -v) < antipodal_area(static_cast<int>(c), v)) {
        out.field.values[c] = -v;
        flipped = true;
      }
    }
    if (!flipped) break;
  }

  out.jumps = antipodal_jumps(out.field);
  out.orientable = out.jumps.empty();
  return out;
}

LineField synth_defect(const Grid& grid, int k, const Vec3& center) {
  if (grid.nz != 1) throw std::invalid_argument("synth_defect: only 2D grids are supported");
  LineField lf(grid);
  const double core = std::max(grid.spacing.x, grid.spacing.y);
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      Vec3 p = grid.center(i, j, 0);
      double dx = p.x - center.x, dy = p.y - center.y;
      if (std::hypot(dx, dy) <= core) {
        lf.at(i, j, 0) = Vec3{};
        continue;
      }
      double phi = 0.5 * k * std::atan2(dy, dx);
      lf.at(i, j, 0) = Vec3{std::cos(phi), std::sin(phi), 0.0};
    }
  return lf;
}

}  // namespace lcbv
