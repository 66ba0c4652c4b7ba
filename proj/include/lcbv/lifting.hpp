#pragma once

#include "lcbv/fieldcore.hpp"

namespace lcbv {

// Sign-free director data: the stored vector is one representative of the
// line v (x) v; the zero vector encodes isotropic cells. Every operation is
// invariant under per-cell sign flips of the representatives.
struct LineField {
  Grid grid;
  std::vector<Vec3> values;

  LineField() = default;
  explicit LineField(const Grid& g) : grid(g), values(g.cell_count()) {}

  Vec3& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }
  const Vec3& at(int i, int j, int k) const { return values[grid.index(i, j, k)]; }
};

struct CombResult {
  DirectorField field;
  JumpSet jumps;
  bool orientable = true;
  int visited_components = 0;
};

// Orientation propagation: BFS over nonzero cells with face adjacency,
// seeded per connected component at the smallest cell index; each reached
// cell takes the sign agreeing with the neighbor that discovered it. Facets
// between assigned cells left antipodal (m+ . m- < 0) form the jump set.
// The output satisfies m (x) m = v (x) v bit-for-bit at every nonzero cell.
CombResult comb(const LineField& lf);

// Greedy local improvement: flip a cell's sign when that strictly reduces
// its count of antipodal facets. Jump area never increases.
CombResult improve_jumps(const CombResult& r, int passes);

// 2D test generator: director angle (k/2) * atan2(y-cy, x-cx) with an
// isotropic core of one-spacing radius at the center. k odd gives a
// non-orientable half-integer defect, k even an orientable integer one.
LineField synth_defect(const Grid& grid, int k, const Vec3& center);

}  // namespace lcbv
