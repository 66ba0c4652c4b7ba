#include <cmath>

#include "doctest.h"
#include "lcbv/analytic.hpp"
#include "lcbv/energy.hpp"

using namespace lcbv;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("integrate_adaptive sanity") {
  CHECK(integrate_adaptive([](double x) { return x * x; }, 0, 1) ==
        doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0, kPi) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate_adaptive([](double x) { return std::exp(-x * x); }, -6, 6) ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
}

TEST_CASE("hedgehog closed forms") {
  HedgehogSolution h = hedgehog(2.0, 3);
  CHECK(h.alpha == 0.5);
  CHECK(h.energy_formula == doctest::Approx(6 * kPi).epsilon(1e-14));
  CHECK(h.sobolev_energy == doctest::Approx(8 * kPi).epsilon(1e-14));

  HedgehogSolution h2 = hedgehog(std::exp(1.0), 2);
  CHECK(h2.energy_formula == doctest::Approx(1.0 + 2 * kPi / std::exp(1.0)).epsilon(1e-14));
  CHECK(std::isinf(h2.sobolev_energy));

  // gap closes as K grows and equals S_{d-1}/((d-2) K^{d-2})
  for (double K : {1.5, 3.0, 20.0, 1e6}) {
    HedgehogSolution s = hedgehog(K, 3);
    CHECK(s.energy_formula < s.sobolev_energy);
    CHECK(s.sobolev_energy - s.energy_formula == doctest::Approx(4 * kPi / K).epsilon(1e-12));
  }
  CHECK_THROWS_AS(hedgehog(1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(hedgehog(0.5, 3), std::invalid_argument);

  // dim 4 sanity: S_3 = 2 pi^2
  HedgehogSolution h4 = hedgehog(2.0, 4);
  CHECK(h4.sobolev_energy == doctest::Approx(3.0 * kPi * kPi).epsilon(1e-12));
}

TEST_CASE("hedgehog field and detected core area") {
  double K = 2.0;
  int cells = 32;
  double span = 2.2;
  Grid g(cells, cells, cells, {span / cells, span / cells, span / cells},
         {-span / 2, -span / 2, -span / 2});
  DirectorField f = hedgehog_field(K, 3, g);
  for (const auto& v : f.values) {
    double n = v.norm();
    CHECK((n == 0.0 || std::abs(n - 1.0) <= 1e-12));
  }
  JumpSet j = detect_jumps(f);
  double sphere = 4 * kPi * 0.25;
  // facet staircase overestimates; the corrected estimate is within 10%
  CHECK(std::abs(interface_area_estimate(f, j) - sphere) / sphere < 0.10);

  CHECK_THROWS_AS(hedgehog_field(200.0, 3, g), std::runtime_error);
}

TEST_CASE("hedgehog quadrature approaches the formula") {
  Grid g(48, 48, 48, {2.2 / 48, 2.2 / 48, 2.2 / 48}, {-1.1, -1.1, -1.1});
  EnergyBreakdown q = hedgehog_quadrature(2.0, 3, g);
  CHECK(std::abs(q.total - 6 * kPi) / (6 * kPi) < 0.03);
}

TEST_CASE("curvature jump residual") {
  for (double K : {1.5, 2.0, 5.0, 10.0})
    for (int dim : {2, 3}) CHECK(curvature_jump_residual(K, dim) <= 1e-12);
  CHECK(curvature_jump_residual(2.0, 3, 1.1) > 0.0);
}

TEST_CASE("cuboid crossover") {
  double h = 1.0, L1 = 0.5, L2 = 0.5;
  double Kstar = kPi * kPi / (4 * h);
  CuboidSolution crit = cuboid_minimizer(Kstar, h, L1, L2);
  CHECK(std::abs(crit.smooth_energy - crit.jump_energy) <= 1e-12);
  CHECK(crit.branch == CuboidBranch::Critical);

  CuboidSolution jump = cuboid_minimizer(1.0, 1.0, 0.5, 0.5);
  CHECK(jump.branch == CuboidBranch::Jump);
  CHECK(jump.energy == doctest::Approx(1.0));

  CuboidSolution smooth = cuboid_minimizer(10.0, 1.0, L1, L2);
  CHECK(smooth.branch == CuboidBranch::Smooth);
  CHECK(smooth.energy == doctest::Approx(kPi * kPi * L1 * L2));

  Grid g(4, 4, 32, {2 * L1 / 4, 2 * L2 / 4, h / 32}, {-L1, -L2, 0});
  DirectorField fs = cuboid_field(smooth, g);
  CHECK(fs.at(0, 0, 0).x == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(fs.at(0, 0, 31).z == doctest::Approx(1.0).epsilon(1e-3));
  DirectorField fj = cuboid_field(jump, g);
  CHECK(fj.at(0, 0, 0).x == 1.0);
  CHECK(fj.at(0, 0, 31).z == 1.0);
}

TEST_CASE("cholesteric profile") {
  SUBCASE("t = 0 degenerates to the linear tilt") {
    CholestericProfile p = cholesteric_profile(0.0);
    CHECK(p.D == doctest::Approx(kPi * kPi / 4).epsilon(1e-14));
    for (double z : {0.0, 0.25, 0.6, 1.0})
      CHECK(p.eval(z) == doctest::Approx(kPi * z / 2).epsilon(1e-10));
  }
  SUBCASE("tiny t matches the t = 0 closed form") {
    CholestericProfile p = cholesteric_profile(1e-8);
    CHECK(p.D == doctest::Approx(kPi * kPi / 4).epsilon(1e-6));
    for (double z : {0.2, 0.5, 0.8})
      CHECK(std::abs(p.eval(z) - kPi * z / 2) < 1e-6);
  }
  SUBCASE("profile invariants at t = 1") {
    CholestericProfile p = cholesteric_profile(1.0);
    CHECK(p.D > 1.0);  // D > t^2
    CHECK(p.theta.front() == 0.0);
    CHECK(std::abs(p.theta.back() - kPi / 2) <= 1e-8);
    for (std::size_t i = 1; i < p.theta.size(); ++i) CHECK(p.theta[i] > p.theta[i - 1]);
    for (std::size_t i = 0; i < p.theta.size(); ++i)
      CHECK(p.D - std::cos(p.theta[i]) * std::cos(p.theta[i]) > 0.0);
  }
  SUBCASE("profile beats the naive tilt at t = 1") {
    double t = 1.0;
    CholestericProfile p = cholesteric_profile(t);
    Grid g(1, 1, 256, {1, 1, 1.0 / 256});
    ModelParams model{t, 1.0, std::nullopt};
    JumpSet none(g);
    double ep = total_energy(profile_to_field(p, g), model, none, nullptr).total;
    double en = total_energy(naive_profile_field(t, g), model, none, nullptr).total;
    CHECK(ep < en);
  }
}

TEST_CASE("profile_to_field") {
  CholestericProfile p = cholesteric_profile(0.0);
  Grid g(1, 1, 64, {1, 1, 1.0 / 64});
  DirectorField f = profile_to_field(p, g);
  for (const auto& v : f.values) CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
  // matches the quarter-turn state when t = 0
  for (int k = 0; k < 64; ++k) {
    double ang = kPi * g.center(0, 0, k).z / 2;
    CHECK(f.at(0, 0, k).x == doctest::Approx(std::cos(ang)).epsilon(1e-8));
    CHECK(f.at(0, 0, k).z == doctest::Approx(std::sin(ang)).epsilon(1e-8));
  }
  CHECK(f.at(0, 0, 0).x == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(f.at(0, 0, 63).z == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("double twist lattice geometry") {
  DoubleTwistLattice lat = double_twist_lattice(2 * kPi, 0.5, 0.5, 1.0);
  CHECK(lat.radius == doctest::Approx(0.25));
  CHECK(lat.count >= 1);
  for (std::size_t i = 0; i < lat.centers.size(); ++i) {
    // fully inside the cross-section
    CHECK(lat.centers[i][0] - lat.radius >= -0.5 - 1e-12);
    CHECK(lat.centers[i][0] + lat.radius <= 0.5 + 1e-12);
    CHECK(lat.centers[i][1] - lat.radius >= -1e-12);
    CHECK(lat.centers[i][1] + lat.radius <= 1.0 + 1e-12);
    for (std::size_t j = i + 1; j < lat.centers.size(); ++j) {
      double dx = lat.centers[i][0] - lat.centers[j][0];
      double dz = lat.centers[i][1] - lat.centers[j][1];
      CHECK(std::hypot(dx, dz) >= 2 * lat.radius - 1e-12);
    }
  }
  CHECK(lat.count <= lat.upper_bound);
  CHECK(lat.count >= lat.lower_bound);

  CHECK_THROWS_AS(double_twist_lattice(1.0, 0.5, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("double twist field and radial density") {
  double t = 2 * kPi;
  DoubleTwistLattice lat = double_twist_lattice(t, 0.5, 0.5, 1.0);
  Grid g(48, 8, 48, {1.0 / 48, 1.0 / 8, 1.0 / 48}, {-0.5, -0.5, 0.0});
  DirectorField f = double_twist_field(lat, g);
  for (const auto& v : f.values) {
    double n = v.norm();
    CHECK((n <= 1e-12 || std::abs(n - 1.0) <= 1e-12));
  }
  // cell closest to the first cylinder axis is nearly axial
  auto c0 = lat.centers[0];
  int ci = static_cast<int>((c0[0] + 0.5) * 48);
  int ck = static_cast<int>(c0[1] * 48);
  Vec3 axial = f.at(ci, 4, ck);
  CHECK(std::abs(axial.y) > 0.98);

  // per-cylinder elastic energy per unit length is strictly negative and
  // matches the closed radial density integral
  double e = double_twist_cylinder_energy_per_length(t);
  CHECK(e < 0.0);
  // the substitution u = t r makes it t-independent
  CHECK(double_twist_cylinder_energy_per_length(10.0) == doctest::Approx(e).epsilon(1e-9));

  // radial density against a finite-difference probe of the analytic field
  double r = 0.1;
  double h = 1e-5;
  auto sample = [&](double x, double z) {
    double rr = std::hypot(x, z);
    double cr = std::cos(t * rr), sr = std::sin(t * rr);
    Vec3 ephi{z / rr, 0.0, -x / rr};
    return Vec3{0, cr, 0} - sr * ephi;
  };
  Mat3 G;
  for (int col = 0; col < 3; ++col) {
    double dx = col == 0 ? h : 0.0, dz = col == 2 ? h : 0.0;
    Vec3 d = (sample(r + dx, dz) - sample(r - dx, -dz)) / (2 * h);
    if (col == 1) d = {0, 0, 0};
    G(0, col) = d.x;
    G(1, col) = d.y;
    G(2, col) = d.z;
  }
  double fd = of_density(sample(r, 0), G, t);
  CHECK(double_twist_radial_density(r, t) == doctest::Approx(fd).epsilon(1e-5).scale(10.0));
}

TEST_CASE("lattice energy goes negative for large t") {
  double found = -1;
  for (double t = 4.0; t <= 40.0; t += 0.5) {
    if (kPi / t >= 1.0) continue;
    DoubleTwistLattice lat = double_twist_lattice(t, 0.5, 0.5, 1.0);
    if (lattice_energy(lat, 1.0).total < 0) {
      found = t;
      break;
    }
  }
  CHECK(found > 0);
  CHECK(found <= 40.0);
}

TEST_CASE("modica mortola") {
  SUBCASE("sigma = 0 gives the linear interpolant") {
    MMResult r = modica_mortola_1d(0.05, [](double) { return 0.0; }, 0.0, 1.0, 65);
    CHECK(r.energy == doctest::Approx(2.0 * 0.05 / 3.0).epsilon(1e-9));
    CHECK(r.limit_constant == doctest::Approx(0.0));
    for (int i = 0; i < 65; ++i)
      CHECK(r.minimizer.values[i] == doctest::Approx(i / 64.0).epsilon(1e-6));
  }
  SUBCASE("double well approaches the limit constant") {
    auto sigma = [](double v) { return v * v * (1 - v) * (1 - v); };
    double C = 2 * std::sqrt(2.0 / 3.0) / 6.0;
    MMResult r = modica_mortola_1d(0.01, sigma, 0.0, 1.0, 2049);
    CHECK(r.limit_constant == doctest::Approx(C).epsilon(1e-9));
    CHECK(r.energy >= C - 1e-6);
    CHECK(std::abs(r.energy - C) / C <= 0.05);
  }
}
