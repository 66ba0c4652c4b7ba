#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcbv/analytic.hpp"
#include "lcbv/energy.hpp"
#include "lcbv/fieldcore.hpp"
#include "lcbv/lifting.hpp"
#include "lcbv/qtensor.hpp"
#include "lcbv/solver.hpp"

namespace fs = std::filesystem;
using namespace lcbv;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ensure_dir(const std::string& out) { fs::create_directories(out); }

std::ofstream open_out(const std::string& out, const std::string& name) {
  ensure_dir(out);
  std::ofstream os(fs::path(out) / name);
  if (!os) throw std::runtime_error("cannot open output file " + name);
  return os;
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

// orthonormal pair for biaxial decompositions
std::pair<Vec3, Vec3> random_frame(std::mt19937_64& rng) {
  Vec3 n = random_unit(rng);
  Vec3 h = random_unit(rng);
  Vec3 m = h - n * h.dot(n);
  double mn = m.norm();
  if (mn < 1e-6) return random_frame(rng);
  return {n, m / mn};
}

// smooth synthetic uniaxial state used by the density-identity check
void synth_sn(const Vec3& p, double& s, Vec3& n) {
  double theta = 0.5 * std::sin(2 * kPi * p.x) + 0.3 * std::cos(2 * kPi * p.y);
  double phi = 0.5 * kPi * p.z + 0.4 * std::sin(2 * kPi * p.y);
  n = {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), std::sin(theta)};
  s = 1.0 + 0.4 * std::sin(2 * kPi * p.x) * std::sin(2 * kPi * p.z);
}

// max |landau - ericksen| over interior cells of an n^3 grid
double density_identity_gap(int cells, double t) {
  Grid g(cells, cells, cells, {1.0 / cells, 1.0 / cells, 1.0 / cells});
  QTensorField qf(g);
  ScalarField sf(g);
  DirectorField nf(g);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        double s;
        Vec3 n;
        synth_sn(g.center(i, j, k), s, n);
        sf.at(i, j, k) = s;
        nf.at(i, j, k) = n;
        qf.at(i, j, k) = make_uniaxial(s, n);
      }
  JumpSet none(g);
  auto gq = gradient(qf, none);
  auto gs = gradient(sf, none);
  auto gn = gradient(nf, none);
  BulkParams bulk = make_bulk_params(0.0, 0.0, 1.0);
  double worst = 0.0;
  for (int k = 1; k < g.nz - 1; ++k)
    for (int j = 1; j < g.ny - 1; ++j)
      for (int i = 1; i < g.nx - 1; ++i) {
        int c = g.index(i, j, k);
        double lq = landau_density(qf.values[c], gq[c], t, bulk);
        double le = ericksen_density(sf.values[c], gs[c], nf.values[c], gn[c], t, bulk);
        worst = std::max(worst, std::abs(lq - le));
      }
  return worst;
}

struct CheckResult {
  std::string name;
  bool pass;
  double worst;
};

std::vector<CheckResult> run_verify_suite(long samples, std::uint64_t seed) {
  std::vector<CheckResult> checks;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> su(-10.0, 10.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  {  // bulk consistency
    BulkParams p = make_bulk_params(-1.3, -2.1, 1.7);
    double worst = 0.0;
    for (long it = 0; it < samples; ++it) {
      double s = su(rng);
      Vec3 n = random_unit(rng);
      double sig = bulk_sigma(s, p);
      double err = std::abs(bulk_psi(make_uniaxial(s, n), p) - sig) / (1.0 + std::abs(sig));
      worst = std::max(worst, err);
    }
    checks.push_back({"bulk-consistency", worst <= 1e-9, worst});
  }
  {  // uniaxial gap
    double worst_margin = 1e300;
    for (long it = 0; it < samples; ++it) {
      double s1 = su(rng), s2 = su(rng);
      auto [lhs, rhs] = lemma_gap_uniaxial(s1, s2, random_unit(rng), random_unit(rng));
      worst_margin = std::min(worst_margin, lhs - rhs);
    }
    checks.push_back({"gap-uniaxial", worst_margin >= -1e-12, worst_margin});
  }
  {  // biaxial gap
    double worst_margin = 1e300;
    for (long it = 0; it < samples; ++it) {
      auto [n1, n2] = random_frame(rng);
      auto [m1, m2] = random_frame(rng);
      BiaxialDecomposition d1{3.0 * unif(rng), n1, -3.0 * unif(rng), n2};
      BiaxialDecomposition d2{3.0 * unif(rng), m1, -3.0 * unif(rng), m2};
      auto [lhs, rhs] = lemma_gap_biaxial(d1, d2);
      worst_margin = std::min(worst_margin, lhs - rhs);
    }
    checks.push_back({"gap-biaxial", worst_margin >= -1e-12, worst_margin});
  }
  {  // density identity under refinement
    double e32 = density_identity_gap(32, 0.7);
    double e64 = density_identity_gap(64, 0.7);
    double e128 = density_identity_gap(128, 0.7);
    double r1 = e32 / e64, r2 = e64 / e128;
    checks.push_back({"density-identity", r1 >= 3.5 && r2 >= 3.5, std::min(r1, r2)});
  }
  {  // twist completion
    std::uniform_real_distribution<double> w(-2.0, 2.0);
    double worst = 0.0;
    for (long it = 0; it < samples; ++it) {
      Vec3 v{w(rng), w(rng), w(rng)};
      Mat3 G;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) G(a, b) = w(rng);
      double t = w(rng);
      auto [lhs, rhs] = twist_completion_check(v, G, t);
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
    checks.push_back({"twist-completion", worst <= 1e-12, worst});
  }
  return checks;
}

void write_csv_header(std::ofstream& os, const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
}

void write_csv_row(std::ofstream& os, const std::vector<double>& vals) {
  for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << fmt(vals[i]);
  os << "\n";
}

int cmd_verify(long samples, std::uint64_t seed, const std::string& out) {
  auto checks = run_verify_suite(samples, seed);
  auto rep = open_out(out, "verify_report.txt");
  bool all = true;
  for (const auto& c : checks) {
    std::string line = c.name + ": " + (c.pass ? "PASS" : "FAIL") + " worst=" + fmt(c.worst);
    std::cout << line << "\n";
    rep << line << "\n";
    if (!c.pass) {
      all = false;
      std::cout << "first failing check: " << c.name << "\n";
      return 1;
    }
  }
  std::cout << checks.size() << " checks passed\n";
  return all ? 0 : 1;
}

int cmd_lift(int cells, int charge_k, double flip_fraction, std::uint64_t seed,
             const std::string& out) {
  ensure_dir(out);
  Grid g(cells, cells, 1, {2.0 / cells, 2.0 / cells, 1.0}, {-1.0, -1.0, 0.0});
  LineField lf = synth_defect(g, charge_k, {0, 0, 0});
  if (flip_fraction > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& v : lf.values)
      if (u(rng) < flip_fraction) v = -v;
  }
  CombResult combed = comb(lf);
  CombResult improved = improve_jumps(combed, 100);

  write_field((fs::path(out) / "combed.lcfield").string(), improved.field);
  write_jumps((fs::path(out) / "combed.lcjumps").string(), improved.jumps);
  auto rep = open_out(out, "lift_report.txt");
  rep << "charge_k=" << charge_k << "\n";
  rep << "orientable=" << (improved.orientable ? 1 : 0) << "\n";
  rep << "components=" << improved.visited_components << "\n";
  rep << "jump_facets=" << improved.jumps.size() << "\n";
  rep << "jump_area=" << fmt(improved.jumps.area()) << "\n";
  std::cout << "orientable=" << (improved.orientable ? 1 : 0)
            << " jump_facets=" << improved.jumps.size() << "\n";
  return 0;
}

int cmd_hedgehog(double K, int dim, int cells, const std::string& out) {
  ensure_dir(out);
  HedgehogSolution sol = hedgehog(K, dim);
  double span = 2.2;
  Grid g(cells, cells, dim == 3 ? cells : 1,
         {span / cells, span / cells, dim == 3 ? span / cells : 1.0},
         {-span / 2, -span / 2, dim == 3 ? -span / 2 : 0.0});
  DirectorField f = hedgehog_field(K, dim, g);
  JumpSet jumps = detect_jumps(f);
  EnergyBreakdown quad = hedgehog_quadrature(K, dim, g);

  write_field((fs::path(out) / "hedgehog.lcfield").string(), f);
  write_jumps((fs::path(out) / "hedgehog.lcjumps").string(), jumps);
  auto rep = open_out(out, "hedgehog_report.txt");
  rep << "K=" << fmt(K) << " dim=" << dim << " alpha=" << fmt(sol.alpha) << "\n";
  rep << "energy_formula=" << fmt(sol.energy_formula) << "\n";
  rep << "sobolev_energy=" << fmt(sol.sobolev_energy) << "\n";
  rep << "quadrature " << quad.serialize() << "\n";
  rep << "facet_jump_area=" << fmt(jumps.area()) << "\n";
  rep << "corrected_jump_area=" << fmt(interface_area_estimate(f, jumps)) << "\n";
  rep << "curvature_residual=" << fmt(curvature_jump_residual(K, dim)) << "\n";
  double relerr = std::abs(quad.total - sol.energy_formula) / std::abs(sol.energy_formula);
  rep << "quadrature_rel_error=" << fmt(relerr) << "\n";
  std::cout << "formula=" << fmt(sol.energy_formula) << " quadrature=" << fmt(quad.total)
            << " rel_error=" << fmt(relerr) << "\n";
  return 0;
}

int cmd_cuboid(double K, double height, double L1, double L2, bool sweep,
               const std::vector<std::string>& sweep_spec, const std::string& out) {
  CuboidSolution sol = cuboid_minimizer(K, height, L1, L2);
  auto rep = open_out(out, "cuboid_report.txt");
  const char* bname = sol.branch == CuboidBranch::Smooth
                          ? "smooth"
                          : (sol.branch == CuboidBranch::Jump ? "jump" : "critical");
  rep << "K=" << fmt(K) << " height=" << fmt(height) << " L1=" << fmt(L1) << " L2=" << fmt(L2)
      << "\n";
  rep << "branch=" << bname << "\n";
  rep << "smooth_energy=" << fmt(sol.smooth_energy) << "\n";
  rep << "jump_energy=" << fmt(sol.jump_energy) << "\n";
  rep << "energy=" << fmt(sol.energy) << "\n";
  rep << "crossover_K=" << fmt(kPi * kPi / (4.0 * height)) << "\n";
  std::cout << "branch=" << bname << " energy=" << fmt(sol.energy) << "\n";

  ensure_dir(out);
  Grid g(24, 24, 32, {2 * L1 / 24, 2 * L2 / 24, height / 31},
         {-L1, -L2, -height / 62.0}, {0, 0, 0, 0, 1, 1});
  write_field((fs::path(out) / "cuboid.lcfield").string(), cuboid_field(sol, g));

  if (sweep) {
    if (sweep_spec.size() != 4 || sweep_spec[0] != "K")
      throw CLI::ValidationError("--sweep expects: K start stop steps");
    double a = std::stod(sweep_spec[1]), b = std::stod(sweep_spec[2]);
    int steps = std::stoi(sweep_spec[3]);
    if (steps < 2) throw CLI::ValidationError("--sweep needs at least 2 steps");
    auto csv = open_out(out, "cuboid_sweep.csv");
    write_csv_header(csv, {"K", "smooth_energy", "jump_energy", "difference"});
    for (int i = 0; i < steps; ++i) {
      double Ki = a + (b - a) * i / (steps - 1);
      CuboidSolution si = cuboid_minimizer(Ki, height, L1, L2);
      write_csv_row(csv, {Ki, si.smooth_energy, si.jump_energy,
                          si.smooth_energy - si.jump_energy});
    }
  }
  return 0;
}

int cmd_cholesteric(double t, int cells, const std::string& out) {
  CholestericProfile p = cholesteric_profile(t);
  Grid g(1, 1, cells, {1.0, 1.0, 1.0 / cells});
  DirectorField f = profile_to_field(p, g);
  DirectorField naive = naive_profile_field(t, g);
  ModelParams model{t, 1.0, std::nullopt};
  JumpSet none(g);
  EnergyBreakdown ep = total_energy(f, model, none, nullptr);
  EnergyBreakdown en = total_energy(naive, model, none, nullptr);

  auto csv = open_out(out, "cholesteric_profile.csv");
  write_csv_header(csv, {"z", "theta", "theta_prime"});
  int n = static_cast<int>(p.theta.size());
  for (int i = 0; i < n; ++i)
    write_csv_row(csv, {static_cast<double>(i) / (n - 1), p.theta[i], p.theta_prime[i]});
  write_field((fs::path(out) / "cholesteric.lcfield").string(), f);
  auto rep = open_out(out, "cholesteric_report.txt");
  rep << "t=" << fmt(t) << "\n";
  rep << "D=" << fmt(p.D) << "\n";
  rep << "profile " << ep.serialize() << "\n";
  rep << "naive " << en.serialize() << "\n";
  std::cout << "D=" << fmt(p.D) << " profile_energy=" << fmt(ep.total)
            << " naive_energy=" << fmt(en.total) << "\n";
  return 0;
}

int cmd_doubletwist(double t, double K, double L1, double L2, double height, double scan_tmax,
                    const std::string& out) {
  auto rep = open_out(out, "doubletwist_report.txt");
  DoubleTwistLattice lat = double_twist_lattice(t, L1, L2, height);
  EnergyBreakdown e = lattice_energy(lat, K);
  rep << "t=" << fmt(t) << " K=" << fmt(K) << "\n";
  rep << "radius=" << fmt(lat.radius) << " count=" << lat.count << " bounds=["
      << lat.lower_bound << "," << lat.upper_bound << "]\n";
  rep << "cylinder_energy_per_length=" << fmt(double_twist_cylinder_energy_per_length(t)) << "\n";
  rep << "lattice " << e.serialize() << "\n";

  auto csv = open_out(out, "doubletwist_centers.csv");
  write_csv_header(csv, {"x", "z"});
  for (const auto& c : lat.centers) write_csv_row(csv, {c[0], c[1]});

  double t_neg = -1.0;
  if (scan_tmax > 0) {
    auto scsv = open_out(out, "doubletwist_scan.csv");
    write_csv_header(scsv, {"t", "count", "total_energy"});
    for (double ts = 4.0; ts <= scan_tmax + 1e-9; ts += 0.5) {
      double radius = kPi / (2.0 * ts);
      if (2.0 * radius >= std::min(2.0 * L1, height)) continue;
      DoubleTwistLattice ls = double_twist_lattice(ts, L1, L2, height);
      double tot = lattice_energy(ls, K).total;
      write_csv_row(scsv, {ts, static_cast<double>(ls.count), tot});
      if (tot < 0 && t_neg < 0) t_neg = ts;
    }
    rep << "smallest_negative_t=" << fmt(t_neg) << "\n";
  }
  std::cout << "count=" << lat.count << " lattice_energy=" << fmt(e.total);
  if (scan_tmax > 0) std::cout << " smallest_negative_t=" << fmt(t_neg);
  std::cout << "\n";
  return 0;
}

int cmd_mm1d(double eps, int cells, const std::string& out) {
  auto sigma = [](double v) { return v * v * (1.0 - v) * (1.0 - v); };
  MMResult r = modica_mortola_1d(eps, sigma, 0.0, 1.0, cells);
  auto csv = open_out(out, "mm1d_minimizer.csv");
  write_csv_header(csv, {"z", "v"});
  for (int i = 0; i < cells; ++i)
    write_csv_row(csv, {static_cast<double>(i) / (cells - 1), r.minimizer.values[i]});
  auto rep = open_out(out, "mm1d_report.txt");
  rep << "eps=" << fmt(eps) << "\n";
  rep << "energy=" << fmt(r.energy) << "\n";
  rep << "limit_constant=" << fmt(r.limit_constant) << "\n";
  rep << "ratio=" << fmt(r.energy / r.limit_constant) << "\n";
  std::cout << "energy=" << fmt(r.energy) << " limit_constant=" << fmt(r.limit_constant)
            << " ratio=" << fmt(r.energy / r.limit_constant) << "\n";
  return 0;
}

DirectorField cuboid_seed(const Grid& g, double height, bool jump_branch) {
  DirectorField f(g);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        double z = std::clamp(g.center(i, j, k).z, 0.0, height);
        if (jump_branch) {
          f.at(i, j, k) = z < 0.5 * height ? Vec3{1, 0, 0} : Vec3{0, 0, 1};
        } else {
          double w = z / height;
          f.at(i, j, k) = project_s2_or_zero(Vec3{1.0 - w, 0.0, w});
        }
      }
  return f;
}

int cmd_relax(const std::string& preset, double K, double t, double height, double L1, double L2,
              int iters, double step, const std::string& out) {
  ensure_dir(out);
  Grid g(24, 24, 32, {2 * L1 / 24, 2 * L2 / 24, height / 31},
         {-L1, -L2, -height / 62.0}, {0, 0, 0, 0, 1, 1});
  RelaxParams params;
  params.step = step;
  params.max_iters = iters;
  params.jump_update_period = 10;
  if (preset == "cuboid-smooth")
    params.seed_field = cuboid_seed(g, height, false);
  else if (preset == "cuboid-jump")
    params.seed_field = cuboid_seed(g, height, true);
  else
    throw CLI::ValidationError("unknown preset: " + preset);

  ModelParams model{t, K, std::nullopt};
  RelaxResult r = relax(params, model);

  write_field((fs::path(out) / "relaxed.lcfield").string(), r.field);
  write_jumps((fs::path(out) / "relaxed.lcjumps").string(), r.jumps);
  auto csv = open_out(out, "relax_log.csv");
  write_csv_header(csv, {"iter", "gradient_term", "twist_term", "norm_term", "jump_term",
                         "total", "jump_area", "objective"});
  for (const auto& rec : r.log)
    write_csv_row(csv, {static_cast<double>(rec.iter), rec.gradient_term, rec.twist_term,
                        rec.norm_term, rec.jump_term, rec.total, rec.jump_area, rec.objective});
  auto rep = open_out(out, "relax_report.txt");
  rep << "preset=" << preset << " K=" << fmt(K) << " t=" << fmt(t) << "\n";
  rep << "final " << r.energy.serialize() << "\n";
  rep << "iterations=" << (r.log.size() - 1) << "\n";
  std::cout << "final_energy=" << fmt(r.energy.total) << " jump_area=" << fmt(r.jumps.area())
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-variation liquid crystal toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the common flags after the subcommand too
  app.set_config("--config")->configurable(false);
  app.allow_config_extras(false);

  std::string out = "out";
  std::uint64_t seed = 0;
  app.add_option("--out", out, "output directory")->configurable(true);
  app.add_option("--seed", seed, "seed for randomized checks")->configurable(true);

  auto* verify = app.add_subcommand("verify", "identity and inequality suites");
  long samples = 100000;
  verify->add_option("--samples", samples, "sample count per randomized check");

  auto* lift = app.add_subcommand("lift", "comb a synthetic defect line field");
  int lift_cells = 64, charge_k = 1;
  double flip_fraction = 0.0;
  lift->add_option("--cells", lift_cells, "grid cells per side");
  lift->add_option("--charge-k", charge_k, "defect charge numerator k (charge = k/2)");
  lift->add_option("--flip-fraction", flip_fraction, "fraction of representatives to sign-flip");

  auto* hh = app.add_subcommand("hedgehog", "isotropic-core hedgehog");
  double hh_K = 2.0;
  int hh_dim = 3, hh_cells = 64;
  hh->add_option("--K", hh_K, "jump cost");
  hh->add_option("--dim", hh_dim, "dimension (2 or 3)");
  hh->add_option("--cells", hh_cells, "grid cells per side");

  auto* cb = app.add_subcommand("cuboid", "cuboid crossover branches");
  double cb_K = 1.0, cb_height = 1.0, cb_L1 = 0.5, cb_L2 = 0.5;
  std::vector<std::string> sweep_spec;
  cb->add_option("--K", cb_K, "jump cost");
  cb->add_option("--height", cb_height, "cell height d");
  cb->add_option("--L1", cb_L1, "half width in x");
  cb->add_option("--L2", cb_L2, "half width in y");
  auto* sweep_opt = cb->add_option("--sweep", sweep_spec, "sweep: K start stop steps")
                        ->expected(4);

  auto* ch = app.add_subcommand("cholesteric1d", "1D cholesteric tilt profile");
  double ch_t = 1.0;
  int ch_cells = 128;
  ch->add_option("--t", ch_t, "chirality");
  ch->add_option("--cells", ch_cells, "z cells for the field energies");

  auto* dt = app.add_subcommand("doubletwist", "double-twist cylinder lattice");
  double dt_t = 40.0, dt_K = 1.0, dt_L1 = 0.5, dt_L2 = 0.5, dt_height = 1.0, dt_scan = 40.0;
  dt->add_option("--t", dt_t, "chirality");
  dt->add_option("--K", dt_K, "jump cost");
  dt->add_option("--L1", dt_L1, "half width in x");
  dt->add_option("--L2", dt_L2, "half width in y");
  dt->add_option("--height", dt_height, "box height");
  dt->add_option("--scan-tmax", dt_scan, "scan t up to this value (0 disables)");

  auto* mm = app.add_subcommand("mm1d", "1D Modica-Mortola minimization");
  double mm_eps = 0.01;
  int mm_cells = 4097;
  mm->add_option("--eps", mm_eps, "interface width parameter");
  mm->add_option("--cells", mm_cells, "nodal cells on [0,1]");

  auto* rx = app.add_subcommand("relax", "SBV energy relaxation");
  std::string rx_preset = "cuboid-smooth";
  double rx_K = 5.0, rx_t = 0.0, rx_height = 1.0, rx_L1 = 0.5, rx_L2 = 0.5, rx_step = 1e-3;
  int rx_iters = 2000;
  rx->add_option("--preset", rx_preset, "seed preset: cuboid-smooth | cuboid-jump");
  rx->add_option("--K", rx_K, "jump cost");
  rx->add_option("--t", rx_t, "chirality");
  rx->add_option("--height", rx_height, "cell height");
  rx->add_option("--L1", rx_L1, "half width in x");
  rx->add_option("--L2", rx_L2, "half width in y");
  rx->add_option("--iters", rx_iters, "max iterations");
  rx->add_option("--step", rx_step, "initial descent step");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (samples <= 0) {
        std::cerr << "verify: --samples must be positive\n";
        return 2;
      }
      return cmd_verify(samples, seed, out);
    }
    if (*lift) return cmd_lift(lift_cells, charge_k, flip_fraction, seed, out);
    if (*hh) return cmd_hedgehog(hh_K, hh_dim, hh_cells, out);
    if (*cb) return cmd_cuboid(cb_K, cb_height, cb_L1, cb_L2, sweep_opt->count() > 0, sweep_spec,
                               out);
    if (*ch) return cmd_cholesteric(ch_t, ch_cells, out);
    if (*dt) return cmd_doubletwist(dt_t, dt_K, dt_L1, dt_L2, dt_height, dt_scan, out);
    if (*mm) return cmd_mm1d(mm_eps, mm_cells, out);
    if (*rx) return cmd_relax(rx_preset, rx_K, rx_t, rx_height, rx_L1, rx_L2, rx_iters, rx_step,
                              out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
