#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcbv/analytic.hpp"
#include "lcbv/energy.hpp"
#include "lcbv/lifting.hpp"
#include "lcbv/qtensor.hpp"
#include "lcbv/solver.hpp"

namespace py = pybind11;
using namespace lcbv;

namespace {

std::array<std::array<double, 3>, 3> to_rows(const Mat3& m) {
  std::array<std::array<double, 3>, 3> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m(i, j);
  return r;
}

Mat3 from_rows(const std::array<std::array<double, 3>, 3>& r) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = r[i][j];
  return m;
}

}  // namespace

PYBIND11_MODULE(_lcbv, m) {
  m.doc() = "bounded-variation liquid crystal toolkit";

  m.def("constants_map", &constants_map, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("critical_bulk", &critical_bulk, py::arg("b"), py::arg("c"));
  m.def(
      "bulk_sigma",
      [](double s, double a, double b, double c) {
        return bulk_sigma(s, make_bulk_params(a, b, c));
      },
      py::arg("s"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "make_uniaxial",
      [](double s, std::array<double, 3> n) {
        return to_rows(make_uniaxial(s, {n[0], n[1], n[2]}).full());
      },
      py::arg("s"), py::arg("n"));
  m.def(
      "decompose",
      [](const std::array<std::array<double, 3>, 3>& q) {
        BiaxialDecomposition d = decompose(SymTraceless3::from_mat(from_rows(q)));
        py::dict out;
        out["s1"] = d.s1;
        out["s2"] = d.s2;
        out["n1"] = std::array<double, 3>{d.n1.x, d.n1.y, d.n1.z};
        out["n2"] = std::array<double, 3>{d.n2.x, d.n2.y, d.n2.z};
        return out;
      },
      py::arg("Q"));

  m.def(
      "of_density",
      [](std::array<double, 3> n, const std::array<std::array<double, 3>, 3>& G, double t) {
        return of_density({n[0], n[1], n[2]}, from_rows(G), t);
      },
      py::arg("n"), py::arg("grad_n"), py::arg("t"));

  m.def(
      "hedgehog",
      [](double K, int dim) {
        HedgehogSolution s = hedgehog(K, dim);
        py::dict out;
        out["dim"] = s.dim;
        out["K"] = s.K;
        out["alpha"] = s.alpha;
        out["energy_formula"] = s.energy_formula;
        out["sobolev_energy"] = s.sobolev_energy;
        return out;
      },
      py::arg("K"), py::arg("dim"));

  m.def(
      "cuboid_minimizer",
      [](double K, double height, double L1, double L2) {
        CuboidSolution s = cuboid_minimizer(K, height, L1, L2);
        py::dict out;
        out["branch"] = s.branch == CuboidBranch::Smooth
                            ? "smooth"
                            : (s.branch == CuboidBranch::Jump ? "jump" : "critical");
        out["smooth_energy"] = s.smooth_energy;
        out["jump_energy"] = s.jump_energy;
        out["energy"] = s.energy;
        return out;
      },
      py::arg("K"), py::arg("height"), py::arg("L1"), py::arg("L2"));

  m.def(
      "cholesteric_profile",
      [](double t, int steps) {
        CholestericProfile p = cholesteric_profile(t, steps);
        py::dict out;
        out["t"] = p.t;
        out["D"] = p.D;
        out["theta"] = p.theta;
        return out;
      },
      py::arg("t"), py::arg("steps") = 2048);

  m.def(
      "modica_mortola_1d",
      [](double eps, int cells) {
        auto sigma = [](double v) { return v * v * (1.0 - v) * (1.0 - v); };
        MMResult r = modica_mortola_1d(eps, sigma, 0.0, 1.0, cells);
        py::dict out;
        out["energy"] = r.energy;
        out["limit_constant"] = r.limit_constant;
        out["minimizer"] = r.minimizer.values;
        return out;
      },
      py::arg("eps"), py::arg("cells"));

  m.def(
      "comb_defect",
      [](int cells, int charge_k) {
        Grid g(cells, cells, 1, {2.0 / cells, 2.0 / cells, 1.0}, {-1.0, -1.0, 0.0});
        CombResult r = comb(synth_defect(g, charge_k, {0, 0, 0}));
        py::dict out;
        out["orientable"] = r.orientable;
        out["jump_facets"] = r.jumps.size();
        out["jump_area"] = r.jumps.area();
        return out;
      },
      py::arg("cells"), py::arg("charge_k"));

  m.def(
      "double_twist_lattice_energy",
      [](double t, double K, double L1, double L2, double height) {
        DoubleTwistLattice lat = double_twist_lattice(t, L1, L2, height);
        EnergyBreakdown e = lattice_energy(lat, K);
        py::dict out;
        out["count"] = lat.count;
        out["radius"] = lat.radius;
        out["lower_bound"] = lat.lower_bound;
        out["upper_bound"] = lat.upper_bound;
        out["total"] = e.total;
        return out;
      },
      py::arg("t"), py::arg("K"), py::arg("L1") = 0.5, py::arg("L2") = 0.5,
      py::arg("height") = 1.0);
}
