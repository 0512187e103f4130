#include <doctest.h>

#include <set>

#include "costas/cloud/cloud.hpp"
#include "costas/error.hpp"
#include "costas/ruler/enumeration.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace costas;
using namespace costas::cloud;
using Points = std::vector<std::pair<Rational, Rational>>;

namespace {

Points pairs_of(const CloudState& s) {
  Points out;
  for (const auto& p : s.points) out.emplace_back(p.x, p.y);
  return out;
}

void check_cells(const CloudState& s) {
  for (const auto& p : s.points) {
    const Rational side = cell_side(s.geometry, p.stage);
    const Rational lo = grid_origin(s.geometry, p.stage);
    const Rational x0 = lo + side * Rational(Integer(p.j)), y0 = lo + side * Rational(Integer(p.k));
    CHECK(x0 <= p.x);
    CHECK(p.x < x0 + side);
    CHECK(y0 <= p.y);
    CHECK(p.y < y0 + side);
  }
}

void check_structure(const CloudState& s) {
  std::set<Rational> xs, ys;
  for (const auto& p : s.points) {
    CHECK(xs.insert(p.x).second);
    CHECK(ys.insert(p.y).second);
  }
  std::size_t expected = 0;
  for (unsigned n = 1; n <= s.stages; ++n) expected += std::size_t{1} << (2 * n);
  CHECK(s.points.size() == expected);
  CHECK(verify_cloud(s.points).ok);
  check_cells(s);
  const auto occ = cell_occupancy(s);
  REQUIRE(occ.size() == s.stages);
  for (std::size_t n = 0; n < occ.size(); ++n) {
    CHECK(occ[n].size() == std::size_t{1} << (n + 1));
    for (const auto& row : occ[n])
      for (const bool cell : row) CHECK(cell);
  }
}

// At each stage the first unused rational of the coordinate enumeration is
// among that stage's x-coordinates, and likewise for y.
void check_coverage(const CloudState& s, const ruler::Interval& domain) {
  std::set<Rational> used_x, used_y;
  for (unsigned n = 1; n <= s.stages; ++n) {
    const Rational lo = grid_origin(s.geometry, n);
    const auto first_unused = [&](const std::set<Rational>& used) {
      ruler::RationalEnumerator e(domain);
      for (;;) {
        const Rational r = *e.next();
        if (used.contains(r)) continue;
        if (s.geometry == Geometry::expanding && (r < lo || !(r < -lo))) continue;
        return r;
      }
    };
    const Rational rx = first_unused(used_x), ry = first_unused(used_y);
    bool seen_x = false, seen_y = false;
    for (const auto& p : s.points) {
      if (p.stage != n) continue;
      seen_x = seen_x || p.x == rx;
      seen_y = seen_y || p.y == ry;
    }
    CHECK(seen_x);
    CHECK(seen_y);
    for (const auto& p : s.points)
      if (p.stage == n) {
        used_x.insert(p.x);
        used_y.insert(p.y);
      }
  }
}

}  // namespace

TEST_CASE("verify_cloud examples") {
  CHECK(verify_cloud(Points{{0, 0}}).ok);
  CHECK(verify_cloud(Points{}).ok);
  const Points bad{{0, 0}, {Rational(1, 2), Rational(1, 4)}, {Rational(1, 4), Rational(1, 2)}, {Rational(3, 4), Rational(3, 4)}};
  const auto r = verify_cloud(bad);
  CHECK_FALSE(r.ok);
  // A parallelogram: both pairs of opposite sides collide.
  REQUIRE(r.collisions.size() == 2);
  bool found = false;
  for (const auto& c : r.collisions) {
    if (c.dx != Rational(1, 4)) continue;
    found = true;
    CHECK(c.dy == Rational(1, 2));
    CHECK(c.first == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(c.second == std::pair<std::size_t, std::size_t>{1, 3});
  }
  CHECK(found);
  CHECK_FALSE(oracle::cloud_ok(bad));
  const Points other{{0, 0}, {Rational(1, 2), Rational(1, 4)}, {Rational(1, 4), Rational(5, 8)}, {Rational(3, 4), Rational(15, 16)}};
  CHECK(verify_cloud(other).ok == oracle::cloud_ok(other));
  CHECK_THROWS_AS(verify_cloud(Points{{0, 0}, {0, 0}}), InvalidArgument);
}

TEST_CASE("verify_cloud agrees with the brute-force scan") {
  gen::Rng rng(61);
  int failures = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = t < 3 ? 60 : static_cast<std::size_t>(gen::integer(rng, 1, 16));
    const long den = gen::integer(rng, 2, t < 3 ? 40 : 6);
    Points pts;
    std::set<std::pair<Rational, Rational>> seen;
    while (pts.size() < m) {
      std::pair<Rational, Rational> p{Rational(gen::integer(rng, 0, den * 4), den), Rational(gen::integer(rng, 0, den * 4), den)};
      if (seen.insert(p).second) pts.push_back(p);
    }
    const bool ok = verify_cloud(pts).ok;
    CHECK(ok == oracle::cloud_ok(pts));
    failures += !ok;
  }
  CHECK(failures > 20);
  CHECK(failures < 190);
}

TEST_CASE("build_cloud small stages") {
  CHECK(build_cloud(0).points.empty());
  const auto s1 = build_cloud(1);
  REQUIRE(s1.points.size() == 4);
  bool x0 = false, y0 = false;
  for (const auto& p : s1.points) {
    x0 = x0 || p.x == 0;
    y0 = y0 || p.y == 0;
    CHECK(p.stage == 1);
  }
  CHECK(x0);
  CHECK(y0);
  check_structure(s1);
  const auto s2 = build_cloud(2);
  CHECK(s2.points.size() == 20);
  check_structure(s2);
  CHECK(oracle::cloud_ok(pairs_of(s2)));
  CHECK_THROWS_AS(build_cloud(6), InvalidArgument);
}

TEST_CASE("build_cloud stage 3") {
  const auto s = build_cloud(3);
  check_structure(s);
  check_coverage(s, ruler::Interval::half_open(0, 1));
  CHECK(cell_occupancy(s)[2].size() * cell_occupancy(s)[2][0].size() == 64);
  const auto again = build_cloud(3);
  CHECK(again.points == s.points);
  CHECK(again.next_x_index == s.next_x_index);
}

TEST_CASE("a removed point leaves exactly one empty cell") {
  auto s = build_cloud(3);
  s.points.erase(s.points.begin() + 30);
  std::size_t empty = 0;
  for (const auto& stage : cell_occupancy(s))
    for (const auto& row : stage)
      for (const bool cell : row) empty += !cell;
  CHECK(empty == 1);
}

TEST_CASE("expanding cloud") {
  const auto e1 = expanding_cloud(1);
  REQUIRE(e1.points.size() == 4);
  for (const auto& p : e1.points) {
    CHECK(Rational(-2) <= p.x);
    CHECK(p.x < Rational(2));
    CHECK(Rational(-2) <= p.y);
    CHECK(p.y < Rational(2));
  }
  check_structure(e1);
  const auto e2 = expanding_cloud(2);
  check_structure(e2);
  CHECK(oracle::cloud_ok(pairs_of(e2)));
  const auto e3 = expanding_cloud(3);
  check_structure(e3);
  check_coverage(e3, ruler::Interval::real_line());
  CHECK(cell_side(Geometry::expanding, 3) == 2);
  CHECK(grid_origin(Geometry::expanding, 3) == -8);
  CHECK_THROWS_AS(expanding_cloud(5), InvalidArgument);
}

TEST_CASE("search cap surfaces as an error") {
  CHECK_THROWS_AS(build_cloud(4, {.candidate_cap = 1}), CapExceeded);
}
