#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcbv/vec3.hpp"

namespace lcbv {

inline constexpr double kZeroTol = 1e-9;      // |v| below this encodes the isotropic phase
inline constexpr double kDefaultJumpAngle = 1.0471975511965976;  // pi/3

// Cell-centered collocated grid. nz = 1 encodes 2D, ny = nz = 1 encodes 1D.
// boundary_strip counts cells per face (xlo,xhi,ylo,yhi,zlo,zhi) whose values
// are held fixed during minimization; they model the enlarged domain carrying
// the boundary data.
struct Grid {
  int nx = 1, ny = 1, nz = 1;
  Vec3 spacing{1.0, 1.0, 1.0};
  Vec3 origin{0.0, 0.0, 0.0};
  std::array<int, 6> boundary_strip{0, 0, 0, 0, 0, 0};

  Grid() = default;
  Grid(int nx_, int ny_, int nz_, Vec3 spacing_ = {1, 1, 1}, Vec3 origin_ = {0, 0, 0},
       std::array<int, 6> strip = {0, 0, 0, 0, 0, 0})
      : nx(nx_), ny(ny_), nz(nz_), spacing(spacing_), origin(origin_), boundary_strip(strip) {
    validate();
  }

  void validate() const {
    if (nx < 1 || ny < 1 || nz < 1) throw std::invalid_argument("Grid: dims must be >= 1");
    if (spacing.x <= 0 || spacing.y <= 0 || spacing.z <= 0)
      throw std::invalid_argument("Grid: spacing must be > 0");
    for (int s : boundary_strip)
      if (s < 0) throw std::invalid_argument("Grid: boundary_strip must be >= 0");
  }

  std::size_t cell_count() const {
    return static_cast<std::size_t>(nx) * ny * nz;
  }
  // x-fastest linear index
  int index(int i, int j, int k) const { return i + nx * (j + ny * k); }
  std::array<int, 3> coords(int idx) const {
    int i = idx % nx;
    int j = (idx / nx) % ny;
    int k = idx / (nx * ny);
    return {i, j, k};
  }
  Vec3 center(int i, int j, int k) const {
    return {origin.x + (i + 0.5) * spacing.x, origin.y + (j + 0.5) * spacing.y,
            origin.z + (k + 0.5) * spacing.z};
  }
  bool in_strip(int i, int j, int k) const {
    return i < boundary_strip[0] || i >= nx - boundary_strip[1] || j < boundary_strip[2] ||
           j >= ny - boundary_strip[3] || k < boundary_strip[4] || k >= nz - boundary_strip[5];
  }
  double cell_volume() const { return spacing.x * spacing.y * spacing.z; }
  int dim() const { return 3 - (ny == 1 ? 1 : 0) - (nz == 1 ? 1 : 0); }
  bool same_as(const Grid& o) const {
    return nx == o.nx && ny == o.ny && nz == o.nz;
  }
};

struct DirectorField {
  Grid grid;
  std::vector<Vec3> values;

  DirectorField() = default;
  explicit DirectorField(const Grid& g) : grid(g), values(g.cell_count()) {}

  Vec3& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }
  const Vec3& at(int i, int j, int k) const { return values[grid.index(i, j, k)]; }
};

struct ScalarField {
  Grid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const Grid& g) : grid(g), values(g.cell_count(), 0.0) {}

  double& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }
  double at(int i, int j, int k) const { return values[grid.index(i, j, k)]; }
};

// Symmetric traceless tensor stored by its five independent components.
struct SymTraceless3 {
  double q11 = 0, q12 = 0, q13 = 0, q22 = 0, q23 = 0;

  Mat3 full() const {
    Mat3 m;
    m(0, 0) = q11; m(0, 1) = q12; m(0, 2) = q13;
    m(1, 0) = q12; m(1, 1) = q22; m(1, 2) = q23;
    m(2, 0) = q13; m(2, 1) = q23; m(2, 2) = -q11 - q22;
    return m;
  }
  static SymTraceless3 from_mat(const Mat3& m, double tol = 1e-9);

  SymTraceless3 operator+(const SymTraceless3& o) const {
    return {q11 + o.q11, q12 + o.q12, q13 + o.q13, q22 + o.q22, q23 + o.q23};
  }
  SymTraceless3 operator-(const SymTraceless3& o) const {
    return {q11 - o.q11, q12 - o.q12, q13 - o.q13, q22 - o.q22, q23 - o.q23};
  }
  SymTraceless3 operator*(double s) const {
    return {q11 * s, q12 * s, q13 * s, q22 * s, q23 * s};
  }
  double frob2() const { return full().frob2(); }
};

struct QTensorField {
  Grid grid;
  std::vector<SymTraceless3> values;

  QTensorField() = default;
  explicit QTensorField(const Grid& g) : grid(g), values(g.cell_count()) {}

  SymTraceless3& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }
  const SymTraceless3& at(int i, int j, int k) const { return values[grid.index(i, j, k)]; }
};

inline bool is_zero_vec(const Vec3& v) { return v.norm() <= kZeroTol; }

// Area of one facet orthogonal to `axis`: product of the transverse spacings.
double facet_area(const Grid& grid, int axis);

// Facets of the discontinuity surface. A facet is identified by (cell, axis)
// and separates `cell` from its +axis neighbor; it carries the one-sided
// traces (minus side = cell, plus side = neighbor).
class JumpSet {
 public:
  struct Facet {
    int cell = 0;
    int axis = 0;
    Vec3 trace_minus, trace_plus;
  };

  JumpSet() = default;
  explicit JumpSet(const Grid& g) : grid_(g), mask_(3 * g.cell_count(), 0) {}

  const Grid& grid() const { return grid_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t size() const { return facets_.size(); }
  bool empty() const { return facets_.empty(); }

  bool contains(int cell, int axis) const {
    return !mask_.empty() && mask_[3 * static_cast<std::size_t>(cell) + axis] != 0;
  }
  void add(int cell, int axis, const Vec3& trace_minus = {}, const Vec3& trace_plus = {});
  void remove(int cell, int axis);
  void clear();

  double area() const;

 private:
  Grid grid_;
  std::vector<Facet> facets_;  // kept sorted by (cell, axis)
  std::vector<std::uint8_t> mask_;
};

// Spatial gradient with G(i,j) = d v_i / d x_j. Central differences in the
// interior, one-sided at the grid boundary; stencils never straddle a facet
// listed in `jumps` (the jump carries no absolutely continuous gradient).
std::vector<Mat3> gradient(const DirectorField& field, const JumpSet& jumps);
std::vector<Vec3> gradient(const ScalarField& field, const JumpSet& jumps);
// d_k Q packed as three tensors, result[cell][k] = dQ/dx_k.
std::vector<std::array<SymTraceless3, 3>> gradient(const QTensorField& field,
                                                   const JumpSet& jumps);

// Facets belonging to the discontinuity surface: isotropic-nematic interfaces
// (exactly one side zero) and orientation jumps whose angle exceeds the
// threshold.
JumpSet detect_jumps(const DirectorField& field, double angle_threshold = kDefaultJumpAngle);

// Area estimate for an isotropic-nematic interface that corrects the
// axis-aligned facet staircase: each facet is weighted by the |axis| component
// of the interface normal estimated from a smoothed zero/nonzero indicator.
double interface_area_estimate(const DirectorField& field, const JumpSet& jumps,
                               int smoothing_passes = 3);

struct EnergyBreakdown {
  double gradient_term = 0, twist_term = 0, norm_term = 0, bulk_term = 0, jump_term = 0;
  double total = 0;

  static EnergyBreakdown make(double grad, double twist, double norm, double bulk, double jump) {
    return {grad, twist, norm, bulk, jump, grad + twist + norm + bulk + jump};
  }
  std::string serialize() const;  // flat key=value text, 17 significant digits
};

// LCFIELD v1 / LCJUMPS 1 text formats
void write_field(std::ostream& os, const DirectorField& field);
void write_field(const std::string& path, const DirectorField& field);
DirectorField read_field(std::istream& is);
DirectorField read_field_file(const std::string& path);
void write_jumps(std::ostream& os, const JumpSet& jumps);
void write_jumps(const std::string& path, const JumpSet& jumps);

}  // namespace lcbv
