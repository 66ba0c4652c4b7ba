#pragma once

#include <functional>
#include <vector>

#include "lcbv/energy.hpp"
#include "lcbv/fieldcore.hpp"

namespace lcbv {

// Isotropic-core radial state x/|x| outside |x| = alpha, 0 inside, with the
// Euler-Lagrange condition on the core surface fixing alpha = 1/K.
struct HedgehogSolution {
  int dim = 3;
  double K = 2.0;
  double alpha = 0.5;            // core radius, = 1/K
  double energy_formula = 0.0;   // closed-form energy of the cored state
  double sobolev_energy = 0.0;   // x/|x| energy (infinity marker for dim 2)
};

HedgehogSolution hedgehog(double K, int dim);

// Sampled cored hedgehog on a grid covering the unit ball; cells outside the
// ball carry the boundary data x/|x|.
DirectorField hedgehog_field(double K, int dim, const Grid& grid);

// Grid quadrature of the cored hedgehog energy: FD elastic density over
// cells inside the unit annulus (volume-fraction weighted near the two
// spherical boundaries) plus K times the staircase-corrected core area.
EnergyBreakdown hedgehog_quadrature(double K, int dim, const Grid& grid);

// |K (d-1)/alpha - (d-1)/alpha^2| at alpha = 1/K (zero to rounding).
double curvature_jump_residual(double K, int dim, double alpha_scale = 1.0);

enum class CuboidBranch { Smooth, Jump, Critical };

// Two-branch minimizer on (-L1,L1)x(-L2,L2)x(0,height) with e1/e3 plates:
// the smooth quarter-turn n* above K* = pi^2/(4 height), the jump family
// n'_alpha below, both at the crossover.
struct CuboidSolution {
  CuboidBranch branch = CuboidBranch::Smooth;
  double K = 0, height = 1, L1 = 0.5, L2 = 0.5;
  double smooth_energy = 0;  // pi^2 L1 L2 / height
  double jump_energy = 0;    // 4 K L1 L2
  double energy = 0;
  double alpha = 0.5;        // jump-family representative plane, = height/2
};

CuboidSolution cuboid_minimizer(double K, double height, double L1, double L2);
DirectorField cuboid_field(const CuboidSolution& sol, const Grid& grid);
DirectorField cuboid_smooth_field(const Grid& grid, double height);
DirectorField cuboid_jump_field(const Grid& grid, double alpha);

// 1D cholesteric tilt profile: theta' = sqrt(D - t^2 cos^2 theta) with
// theta(0) = 0, theta(1) = pi/2, phi = t z; D fixed by the implicit integral
// condition int_0^{pi/2} (D - t^2 cos^2 u)^{-1/2} du = 1.
struct CholestericProfile {
  double t = 0;
  double D = 0;
  std::vector<double> theta;        // uniform samples on [0, 1]
  std::vector<double> theta_prime;  // matching derivative samples
  double phi_slope = 0;             // = t

  double eval(double z) const;      // cubic Hermite interpolation
};

CholestericProfile cholesteric_profile(double t, int steps = 2048);
DirectorField profile_to_field(const CholestericProfile& p, const Grid& grid);
// Naive comparison state theta = pi z / 2, phi = t z.
DirectorField naive_profile_field(double t, const Grid& grid);

// Hexagonal packing of double-twist cylinders (axis e2) of radius pi/(2t)
// in the (x, z) cross-section [-L1, L1] x [0, height].
struct DoubleTwistLattice {
  double t = 0;
  double radius = 0;       // pi / (2 t)
  double L1 = 0, L2 = 0, height = 0;
  std::vector<std::array<double, 2>> centers;  // (x, z)
  Vec3 axis{0, 1, 0};
  int count = 0;
  long lower_bound = 0, upper_bound = 0;  // cylinder-count bounds for the box
};

DoubleTwistLattice double_twist_lattice(double t, double L1, double L2, double height);
DirectorField double_twist_field(const DoubleTwistLattice& lat, const Grid& grid);

// Radial elastic density of the internal ansatz
// n = cos(t r) axis - sin(t r) e_phi, and its integral over one cylinder
// cross-section per unit axis length (strictly negative).
double double_twist_radial_density(double r, double t);
double double_twist_cylinder_energy_per_length(double t);
// Semi-analytic total energy of the lattice state: per-cylinder elastic
// integral plus K times the exact jump area (lateral surfaces + the two
// anchoring-violating horizontal faces).
EnergyBreakdown lattice_energy(const DoubleTwistLattice& lat, double K);

// 1D Modica-Mortola problem: minimize int (2 eps/3)|v'|^2 + sigma(v)/eps
// with v(0) = s_minus, v(1) = s_plus.
struct MMResult {
  double eps = 0;
  ScalarField minimizer;  // nodal values on [0, 1]
  double energy = 0;
  double limit_constant = 0;  // 2 sqrt(2/3) int sqrt(sigma)
};

MMResult modica_mortola_1d(double eps, const std::function<double(double)>& sigma,
                           double s_minus, double s_plus, int cells);

// Adaptive Simpson quadrature, used as the independent oracle for the
// closed-form values above.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10);

}  // namespace lcbv
