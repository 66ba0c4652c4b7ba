#include <cmath>
#include <sstream>

#include "doctest.h"
#include "lcbv/fieldcore.hpp"

using namespace lcbv;

TEST_CASE("grid indexing and geometry") {
  Grid g(4, 3, 2, {0.5, 0.25, 1.0}, {1.0, 2.0, 3.0});
  CHECK(g.cell_count() == 24);
  CHECK(g.index(1, 2, 1) == 1 + 4 * (2 + 3 * 1));
  auto [i, j, k] = g.coords(g.index(3, 1, 1));
  CHECK(i == 3);
  CHECK(j == 1);
  CHECK(k == 1);
  Vec3 c = g.center(0, 0, 0);
  CHECK(c.x == doctest::Approx(1.25));
  CHECK(c.y == doctest::Approx(2.125));
  CHECK(c.z == doctest::Approx(3.5));
  CHECK(g.dim() == 3);
  CHECK(Grid(8, 8, 1).dim() == 2);
  CHECK(Grid(8, 1, 1).dim() == 1);
  CHECK_THROWS_AS(Grid(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Grid(2, 2, 2, {0.0, 1, 1}), std::invalid_argument);
}

TEST_CASE("boundary strips") {
  Grid g(6, 6, 6, {1, 1, 1}, {0, 0, 0}, {1, 2, 0, 0, 1, 1});
  CHECK(g.in_strip(0, 3, 3));
  CHECK(g.in_strip(4, 3, 3));
  CHECK(g.in_strip(5, 3, 3));
  CHECK(!g.in_strip(3, 0, 3));
  CHECK(g.in_strip(3, 3, 0));
  CHECK(g.in_strip(3, 3, 5));
  CHECK(!g.in_strip(2, 3, 3));
}

TEST_CASE("facet_area") {
  Grid g(2, 2, 2, {0.5, 0.25, 1.0});
  CHECK(facet_area(Grid(2, 2, 2), 2) == doctest::Approx(1.0));
  CHECK(facet_area(g, 2) == doctest::Approx(0.125));
  CHECK(facet_area(g, 0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(facet_area(g, 3), std::invalid_argument);
}

TEST_CASE("gradient of constant field is zero") {
  Grid g(5, 5, 5, {0.3, 0.3, 0.3});
  DirectorField f(g);
  for (auto& v : f.values) v = {0, 0, 1};
  auto grads = gradient(f, JumpSet(g));
  for (const auto& G : grads) CHECK(G.frob2() == doctest::Approx(0.0));
}

TEST_CASE("gradient exact for affine fields at interior cells") {
  Grid g(6, 6, 6, {0.25, 0.5, 0.125});
  DirectorField f(g);
  for (int k = 0; k < 6; ++k)
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < 6; ++i) {
        Vec3 p = g.center(i, j, k);
        f.at(i, j, k) = {2.0 * p.x - p.y, 0.5 * p.z + 1.0, -p.x + 3.0 * p.y};
      }
  auto grads = gradient(f, JumpSet(g));
  for (int k = 0; k < 6; ++k)
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < 6; ++i) {
        const Mat3& G = grads[g.index(i, j, k)];
        CHECK(G(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(G(0, 1) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(G(1, 2) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(G(2, 0) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(G(2, 1) == doctest::Approx(3.0).epsilon(1e-12));
      }
}

TEST_CASE("linear field v = (x, 0, 0)") {
  Grid g(8, 8, 8);
  DirectorField f(g);
  for (int k = 0; k < 8; ++k)
    for (int j = 0; j < 8; ++j)
      for (int i = 0; i < 8; ++i) f.at(i, j, k) = {g.center(i, j, k).x, 0, 0};
  auto grads = gradient(f, JumpSet(g));
  const Mat3& G = grads[g.index(4, 4, 4)];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(G(r, c) == doctest::Approx(r == 0 && c == 0 ? 1.0 : 0.0));
}

TEST_CASE("jump facet suppresses the straddling stencil") {
  // 1x1x4 column, e1 below the facet between cells 1 and 2, e3 above
  Grid g(1, 1, 4);
  DirectorField f(g);
  f.at(0, 0, 0) = f.at(0, 0, 1) = {1, 0, 0};
  f.at(0, 0, 2) = f.at(0, 0, 3) = {0, 0, 1};
  JumpSet jumps(g);
  jumps.add(g.index(0, 0, 1), 2);
  auto grads = gradient(f, jumps);
  for (const auto& G : grads) CHECK(G.frob2() == doctest::Approx(0.0));
  // without the jump the straddling cells see a nonzero difference
  auto raw = gradient(f, JumpSet(g));
  CHECK(raw[g.index(0, 0, 1)].frob2() > 0.1);
}

TEST_CASE("detect_jumps basics") {
  Grid g(8, 1, 1, {0.1, 1, 1});
  DirectorField f(g);
  SUBCASE("slowly varying field gives no jumps") {
    for (int i = 0; i < 8; ++i) {
      double a = 0.05 * i;
      f.at(i, 0, 0) = {std::cos(a), std::sin(a), 0};
    }
    CHECK(detect_jumps(f).empty());
  }
  SUBCASE("single antipodal flip is detected") {
    for (int i = 0; i < 8; ++i) f.at(i, 0, 0) = {1, 0, 0};
    for (int i = 4; i < 8; ++i) f.at(i, 0, 0) = {-1, 0, 0};
    JumpSet j = detect_jumps(f);
    CHECK(j.size() == 1);
    CHECK(j.facets()[0].cell == g.index(3, 0, 0));
    CHECK(j.facets()[0].axis == 0);
  }
  SUBCASE("isotropic-nematic interface is always a jump") {
    for (int i = 0; i < 4; ++i) f.at(i, 0, 0) = {0, 0, 0};
    for (int i = 4; i < 8; ++i) f.at(i, 0, 0) = {0, 1, 0};
    CHECK(detect_jumps(f, 3.0).size() == 1);
  }
  SUBCASE("threshold validation") {
    CHECK_THROWS_AS(detect_jumps(f, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(detect_jumps(f, 4.0), std::invalid_argument);
  }
}

TEST_CASE("detect_jumps monotone in threshold and sign-flip invariant") {
  Grid g(6, 6, 1);
  DirectorField f(g);
  std::uint64_t state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return (state >> 11) * (1.0 / 9007199254740992.0);
  };
  for (auto& v : f.values) {
    double a = 6.28 * next(), b = 3.14 * next();
    v = {std::cos(a) * std::sin(b), std::sin(a) * std::sin(b), std::cos(b)};
  }
  JumpSet lo = detect_jumps(f, 0.5);
  JumpSet hi = detect_jumps(f, 2.0);
  CHECK(hi.size() <= lo.size());
  for (const auto& fc : hi.facets()) CHECK(lo.contains(fc.cell, fc.axis));

  DirectorField flipped = f;
  for (auto& v : flipped.values) v = -v;
  CHECK(detect_jumps(flipped, 0.9).area() == doctest::Approx(detect_jumps(f, 0.9).area()));
}

TEST_CASE("jump set bookkeeping") {
  Grid g(4, 4, 4, {0.5, 0.5, 2.0});
  JumpSet j(g);
  j.add(5, 0);
  j.add(5, 0);  // duplicate ignored
  j.add(9, 2);
  CHECK(j.size() == 2);
  CHECK(j.contains(5, 0));
  CHECK(j.area() == doctest::Approx(facet_area(g, 0) + facet_area(g, 2)));
  j.remove(5, 0);
  CHECK(!j.contains(5, 0));
  CHECK(j.size() == 1);
  j.clear();
  CHECK(j.empty());
}

TEST_CASE("energy breakdown serialization") {
  EnergyBreakdown b = EnergyBreakdown::make(1.0, -0.25, 0.5, 0.0, 2.0);
  CHECK(b.total == doctest::Approx(3.25).epsilon(1e-12));
  std::string s = b.serialize();
  CHECK(s.find("gradient=1") != std::string::npos);
  CHECK(s.find("twist=-0.25") != std::string::npos);
  CHECK(s.find("total=3.25") != std::string::npos);
}

TEST_CASE("LCFIELD round trip") {
  Grid g(3, 2, 2, {0.1, 0.2, 0.3}, {-1.0, 0.5, 0.25});
  DirectorField f(g);
  std::uint64_t state = 999;
  for (auto& v : f.values) {
    state = state * 2862933555777941757ULL + 3037000493ULL;
    v = {std::sin(double(state % 1000)), std::cos(double(state % 777)), 0.125};
  }
  std::stringstream ss;
  write_field(ss, f);
  std::string text = ss.str();
  CHECK(text.rfind("LCFIELD 1\n", 0) == 0);
  DirectorField r = read_field(ss);
  CHECK(r.grid.nx == 3);
  CHECK(r.grid.spacing.y == doctest::Approx(0.2));
  for (std::size_t c = 0; c < f.values.size(); ++c) {
    CHECK(r.values[c].x == f.values[c].x);
    CHECK(r.values[c].y == f.values[c].y);
    CHECK(r.values[c].z == f.values[c].z);
  }
}

TEST_CASE("LCJUMPS format") {
  Grid g(4, 4, 1);
  JumpSet j(g);
  j.add(g.index(2, 1, 0), 1);
  std::stringstream ss;
  write_jumps(ss, j);
  CHECK(ss.str() == "LCJUMPS 1\n2 1 0 1\n");
}
