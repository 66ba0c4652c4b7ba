#include <cmath>
#include <random>

#include "doctest.h"
#include "lcbv/lifting.hpp"

using namespace lcbv;

namespace {

Grid defect_grid(int cells) {
  return Grid(cells, cells, 1, {2.0 / cells, 2.0 / cells, 1.0}, {-1.0, -1.0, 0.0});
}

LineField random_flips(const LineField& lf, std::uint64_t seed, double fraction = 0.5) {
  LineField out = lf;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& v : out.values)
    if (u(rng) < fraction) v = -v;
  return out;
}

}  // namespace

TEST_CASE("comb a constant line field with scattered flips") {
  Grid g(8, 8, 1);
  LineField lf(g);
  for (auto& v : lf.values) v = {1, 0, 0};
  lf = random_flips(lf, 3);
  CombResult r = comb(lf);
  CHECK(r.orientable);
  CHECK(r.jumps.empty());
  CHECK(r.visited_components == 1);
  // constant up to one global sign
  Vec3 first = r.field.values[0];
  for (const auto& v : r.field.values) CHECK(v.dot(first) == doctest::Approx(1.0));
}

TEST_CASE("projector exactness: output is +-input bit for bit") {
  Grid g = defect_grid(32);
  LineField lf = random_flips(synth_defect(g, 3, {0, 0, 0}), 5);
  CombResult r = comb(lf);
  for (std::size_t c = 0; c < lf.values.size(); ++c) {
    const Vec3& in = lf.values[c];
    const Vec3& out = r.field.values[c];
    bool same = out.x == in.x && out.y == in.y && out.z == in.z;
    bool anti = out.x == -in.x && out.y == -in.y && out.z == -in.z;
    CHECK((same || anti));
  }
}

TEST_CASE("half-integer defect is non-orientable, integer defect is orientable") {
  Grid g = defect_grid(64);
  SUBCASE("charge 1/2") {
    CombResult r = comb(synth_defect(g, 1, {0, 0, 0}));
    CHECK(!r.orientable);
    CHECK(r.jumps.size() >= 30);
    CHECK(r.jumps.size() <= 34);
  }
  SUBCASE("charge 1") {
    CombResult r = comb(synth_defect(g, 2, {0, 0, 0}));
    CHECK(r.orientable);
    CHECK(r.jumps.empty());
  }
  SUBCASE("charge 0") {
    LineField lf = synth_defect(g, 0, {0, 0, 0});
    for (const auto& v : lf.values)
      if (!is_zero_vec(v)) CHECK(v.x == doctest::Approx(1.0));
    CHECK(comb(lf).orientable);
  }
}

TEST_CASE("comb results are sign-gauge invariant") {
  Grid g = defect_grid(48);
  LineField base = synth_defect(g, 1, {0, 0, 0});
  CombResult r0 = comb(base);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    CombResult r = comb(random_flips(base, seed));
    CHECK(r.orientable == r0.orientable);
    CHECK(r.jumps.area() == doctest::Approx(r0.jumps.area()));
  }
}

TEST_CASE("all-zero field combs to an empty orientable result") {
  Grid g(6, 6, 1);
  LineField lf(g);
  CombResult r = comb(lf);
  CHECK(r.orientable);
  CHECK(r.visited_components == 0);
  CHECK(r.jumps.empty());
}

TEST_CASE("zero cells split components") {
  Grid g(5, 1, 1);
  LineField lf(g);
  lf.at(0, 0, 0) = {1, 0, 0};
  lf.at(1, 0, 0) = {-1, 0, 0};
  lf.at(3, 0, 0) = {0, 1, 0};
  lf.at(4, 0, 0) = {0, -1, 0};
  CombResult r = comb(lf);
  CHECK(r.visited_components == 2);
  CHECK(r.jumps.empty());
  CHECK(r.orientable);
}

TEST_CASE("improve_jumps removes an adversarial single flip") {
  Grid g(5, 5, 1);
  LineField lf(g);
  for (auto& v : lf.values) v = {0, 1, 0};
  CombResult r = comb(lf);
  CHECK(r.jumps.empty());
  // flip one interior cell by hand and rebuild the jump set state
  r.field.at(2, 2, 0) = {0, -1, 0};
  CombResult forced = improve_jumps(r, 0);  // zero passes: just rebuilds jumps
  CHECK(forced.jumps.size() == 4);
  CombResult fixed = improve_jumps(forced, 10);
  CHECK(fixed.jumps.empty());
  CHECK(fixed.orientable);
}

TEST_CASE("improve_jumps never increases jump area") {
  Grid g = defect_grid(48);
  CombResult r = comb(random_flips(synth_defect(g, 1, {0, 0, 0}), 9));
  double area = r.jumps.area();
  for (int pass = 1; pass <= 5; ++pass) {
    r = improve_jumps(r, 1);
    CHECK(r.jumps.area() <= area + 1e-12);
    area = r.jumps.area();
  }
}

TEST_CASE("synth_defect validation and core") {
  Grid g3(4, 4, 4);
  CHECK_THROWS_AS(synth_defect(g3, 1, {0, 0, 0}), std::invalid_argument);
  Grid g = defect_grid(16);
  LineField lf = synth_defect(g, 1, {0, 0, 0});
  int zeros = 0;
  for (const auto& v : lf.values)
    if (is_zero_vec(v)) ++zeros;
  CHECK(zeros >= 1);
  for (const auto& v : lf.values)
    if (!is_zero_vec(v)) CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
}
