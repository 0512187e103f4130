#include <doctest.h>

#include <numeric>
#include <set>

#include "costas/error.hpp"
#include "costas/gf/number_theory.hpp"
#include "costas/ruler/constructions.hpp"
#include "costas/ruler/greedy.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace costas;
using namespace costas::ruler;
using Marks = std::vector<std::int64_t>;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

std::vector<Rational> take(RationalEnumerator e, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(*e.next());
  return out;
}

bool modular_ok(const Marks& m, std::int64_t n) { return verify_sidon_modular(std::span<const std::int64_t>(m), n).ok; }

}  // namespace

TEST_CASE("verify_sidon examples") {
  CHECK(verify_sidon(Marks{1, 2, 5, 11}).ok);
  CHECK(verify_sidon(Marks{0}).ok);
  CHECK(verify_sidon(Marks{}).ok);
  const auto r = verify_sidon(Marks{1, 2, 3});
  CHECK_FALSE(r.ok);
  REQUIRE(r.conflict);
  CHECK(*r.conflict == Quadruple<std::int64_t>{1, 3, 2, 2});
  CHECK_FALSE(verify_sidon_sums(Marks{1, 2, 3}).ok);
  CHECK_THROWS_AS(verify_sidon(Marks{1, 1}), InvalidArgument);
  CHECK(verify_sidon(rats({0, 1, Rational(1, 3), Rational(1, 4)})).ok);
  CHECK_FALSE(verify_sidon(rats({0, 1, Rational(1, 2)})).ok);
}

TEST_CASE("sum and difference forms agree with the naive quadruple scan") {
  gen::Rng rng(31);
  for (int t = 0; t < 10000; ++t) {
    const Marks s = gen::int_set(rng, gen::integer(rng, 2, 60), 8);
    const auto diff = verify_sidon(s);
    const auto sums = verify_sidon_sums(s);
    CHECK(diff.ok == sums.ok);
    CHECK(diff.ok == oracle::is_sidon(s));
    for (const auto* r : {&diff, &sums}) {
      if (r->ok) continue;
      REQUIRE(r->conflict);
      const auto& q = *r->conflict;
      CHECK(q[0] + q[1] == q[2] + q[3]);
      CHECK_FALSE(((q[0] == q[2] && q[1] == q[3]) || (q[0] == q[3] && q[1] == q[2])));
    }
  }
}

TEST_CASE("translation invariance over rational shifts") {
  gen::Rng rng(32);
  for (int t = 0; t < 2000; ++t) {
    const Marks s = gen::int_set(rng, 40, 7);
    const Rational g = gen::rational(rng, 100);
    std::vector<Rational> shifted;
    for (const auto m : s) shifted.push_back(Rational(static_cast<long>(m)) + g);
    CHECK(verify_sidon(shifted).ok == verify_sidon(s).ok);
  }
}

TEST_CASE("modular Sidon test") {
  CHECK(modular_ok({1, 2, 4}, 7));  // differences ±1, ±2, ±3 cover Z/7 minus 0 once
  CHECK_FALSE(modular_ok({0, 1, 2}, 7));
  CHECK_FALSE(modular_ok({0, 1, 3}, 4));  // 3 − 0 ≡ 0 − 1
  CHECK_THROWS_AS(verify_sidon_modular(std::span<const std::int64_t>(Marks{1, 8}), 7), InvalidArgument);
}

TEST_CASE("Erdos-Turan") {
  CHECK(erdos_turan(2).marks() == Marks{0, 5});
  CHECK(erdos_turan(3).marks() == Marks{0, 7, 13});
  CHECK(erdos_turan(5).marks() == Marks{0, 11, 24, 34, 41});
  CHECK_THROWS_AS(erdos_turan(9), InvalidArgument);
  for (std::uint64_t p = 2; p <= 50; ++p) {
    if (!oracle::is_prime(p)) continue;
    const auto r = erdos_turan(p);
    CHECK(r.markings() == p);
    CHECK(verify_sidon(r.marks()).ok);
    CHECK(r.length() <= static_cast<std::int64_t>(2 * p * p + p));
  }
}

TEST_CASE("Ruzsa-Lindstrom") {
  CHECK(ruzsa_lindstrom(5, 2, 1).marks() == Marks{4, 6, 7, 13});
  CHECK(ruzsa_lindstrom(3, 2, 1).marks() == Marks{1, 2});
  CHECK(ruzsa_lindstrom(7, 3, 1).markings() == 6);
  CHECK(verify_sidon(ruzsa_lindstrom(7, 3, 1).marks()).ok);
  CHECK_THROWS_AS(ruzsa_lindstrom(7, 2, 1), InvalidArgument);  // 2 has order 3 mod 7
  CHECK_THROWS_AS(ruzsa_lindstrom(7, 3, 2), InvalidArgument);  // gcd(2, 6) ≠ 1
  for (std::uint64_t p = 3; p <= 50; ++p) {
    if (!oracle::is_prime(p)) continue;
    const auto n = static_cast<std::int64_t>(p * (p - 1));
    for (const auto g : gf::primitive_roots(p))
      for (std::uint64_t s = 1; s < p - 1; ++s) {
        if (std::gcd(s, p - 1) != 1) continue;
        const auto r = ruzsa_lindstrom(p, g, s);
        CHECK(r == ruzsa_lindstrom_reduced(p, g, s));
        CHECK(r.markings() == p - 1);
        CHECK(verify_sidon(r.marks()).ok);
        CHECK(modular_ok(r.marks(), n));
        CHECK(r.marks().back() < n);
      }
  }
}

TEST_CASE("Bose-Chowla") {
  CHECK(bose_chowla(2, 1).marks() == Marks{1, 2});
  const auto b3 = bose_chowla(3, 1);
  CHECK(b3.markings() == 3);
  CHECK(modular_ok(b3.marks(), 8));
  const auto b4 = bose_chowla(2, 2);
  CHECK(b4.markings() == 4);
  CHECK(modular_ok(b4.marks(), 15));
  CHECK_THROWS_AS(bose_chowla(17, 2), InvalidArgument);
  for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    const std::uint64_t q = gf::checked_pow(p, m);
    const auto r = bose_chowla(p, m);
    CHECK(r.markings() == q);
    CHECK(verify_sidon(r.marks()).ok);
    CHECK(modular_ok(r.marks(), static_cast<std::int64_t>(q * q - 1)));
    CHECK(r.length() < static_cast<std::int64_t>(q * q - 1));
    CHECK(bose_chowla_difference_check(p, m));
  }
}

TEST_CASE("quadratic rulers") {
  CHECK(quadratic_ruler(3, 1).marks() == Marks{0, 4, 14});
  CHECK(quadratic_ruler(1, 2).marks() == Marks{0});
  CHECK(quadratic_ruler(4, 2).marks() == Marks{0, 9, 34, 75});
  CHECK_THROWS_AS(quadratic_ruler(3, 3), InvalidArgument);
  CHECK_THROWS_AS(quadratic_ruler(0, 1), InvalidArgument);
  for (std::int64_t n = 1; n <= 50; ++n)
    for (int a : {1, 2}) {
      const auto r = quadratic_ruler(static_cast<std::uint64_t>(n), a);
      CHECK(verify_sidon(r.marks()).ok);
      CHECK(r.length() == a * n * (n - 1) * (n - 1) + (n - 1));
    }
}

TEST_CASE("optimality report") {
  const auto rl = optimality_report(ruzsa_lindstrom(5, 2, 1));
  CHECK(rl.m == 4);
  CHECK(rl.length == 9);
  CHECK(rl.ratio == "1.333333");
  const auto one = optimality_report(IntRuler({7}));
  CHECK(one.m == 1);
  CHECK(one.length == 0);
  CHECK(one.ratio == "inf");
  const auto et = optimality_report(erdos_turan(5));
  CHECK(et.m == 5);
  CHECK(et.length == 41);
  CHECK(et.ratio == "0.780869");
  CHECK_THROWS_AS(optimality_report(IntRuler()), InvalidArgument);
  CHECK_THROWS_AS(IntRuler({3, 1}), InvalidArgument);
  CHECK_THROWS_AS(IntRuler({-1, 1}), InvalidArgument);
}

TEST_CASE("rational enumerations") {
  CalkinWilf cw;
  std::vector<Rational> first;
  for (int i = 0; i < 8; ++i) first.push_back(cw.next());
  CHECK(first == rats({1, Rational(1, 2), 2, Rational(1, 3), Rational(3, 2), Rational(2, 3), 3, Rational(1, 4)}));

  CHECK(take(RationalEnumerator(Interval::closed(0, 1)), 6) ==
        rats({0, 1, Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4)}));
  CHECK(take(RationalEnumerator(Interval::half_open(0, 1)), 3) == rats({0, Rational(1, 2), Rational(1, 3)}));
  CHECK(take(RationalEnumerator(Interval::real_line()), 5) == rats({0, 1, -1, Rational(1, 2), Rational(-1, 2)}));
  CHECK(take(RationalEnumerator::naturals(), 4) == rats({1, 2, 3, 4}));

  FareyEnumerator farey(Interval::closed(0, 1));
  std::vector<Rational> f;
  for (int i = 0; i < 7; ++i) f.push_back(farey.next());
  CHECK(f == rats({0, 1, Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4), Rational(3, 4)}));
  CHECK_THROWS_AS(FareyEnumerator(Interval::real_line()), InvalidArgument);

  // Each positive rational appears once within the first few thousand terms.
  CalkinWilf again;
  std::set<Rational> seen;
  for (int i = 0; i < 5000; ++i) CHECK(seen.insert(again.next()).second);
}

TEST_CASE("dyadic schedule") {
  DyadicSchedule s(Interval::closed(0, 1));
  for (std::size_t i = 0; i < 30; ++i) {
    const auto e = s.next();
    const auto [lo, hi] = oracle::unit_schedule_cell(i);
    CHECK(e.cell == Interval::closed(lo, hi));
  }
  DyadicSchedule wide(Interval::closed(0, 3));
  const auto first = wide.next();
  CHECK(first.level == 1);
  CHECK(first.cell == Interval::closed(0, Rational(1, 2)));
}

TEST_CASE("greedy examples") {
  const auto r = greedy_dense(Interval::closed(0, 1), 4);
  CHECK(r.accepted == rats({0, 1, Rational(1, 3), Rational(1, 4)}));
  CHECK(r.ruler.marks() == rats({0, Rational(1, 4), Rational(1, 3), 1}));
  REQUIRE(r.log.size() == 6);
  CHECK(r.log[2].candidate == Rational(1, 2));
  CHECK_FALSE(r.log[2].accepted);
  CHECK(r.log[4].candidate == Rational(2, 3));
  CHECK_FALSE(r.log[4].accepted);

  CHECK(greedy_dense(Naturals{}, 6).accepted == rats({1, 2, 4, 8, 13, 21}));
  CHECK(greedy_dense(Interval::closed(2, 5), 1).accepted == rats({2}));
  CHECK_THROWS_AS(greedy_dense(Naturals{}, 0), InvalidArgument);
  CHECK_THROWS_AS(greedy_dense(Naturals{}, 3, {.dense = true}), InvalidArgument);
  CHECK_THROWS_AS(greedy_dense(Naturals{}, 40, {.candidate_cap = 5}), CapExceeded);
}

TEST_CASE("greedy over the naturals matches the quadratic-time oracle") {
  const auto r = greedy_dense(Naturals{}, 25);
  const auto expected = oracle::mian_chowla(25);
  REQUIRE(r.accepted.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(r.accepted[i] == Rational(static_cast<long>(expected[i])));
}

TEST_CASE("greedy rejections are genuine and every prefix is Sidon") {
  for (const auto& [domain, dense] : std::vector<std::pair<GreedyDomain, bool>>{
           {Interval::closed(0, 1), false},
           {Interval::closed(0, 1), true},
           {Interval::closed(-2, Rational(7, 3)), true},
           {Interval::real_line(), false},
           {Naturals{}, false}}) {
    const auto r = greedy_dense(domain, 20, {.dense = dense});
    std::vector<Rational> prefix;
    for (const auto& step : r.log) {
      std::vector<Rational> with = prefix;
      with.push_back(step.candidate);
      CHECK(oracle::is_sidon(with) == step.accepted);
      if (step.accepted) {
        prefix = with;
        CHECK_FALSE(step.conflict);
      } else {
        REQUIRE(step.conflict);
        const auto& q = *step.conflict;
        CHECK(q[0] + q[1] == q[2] + q[3]);
        for (const auto& x : q) CHECK(std::find(with.begin(), with.end(), x) != with.end());
        CHECK(std::find(q.begin(), q.end(), step.candidate) != q.end());
      }
      if (dense) {
        REQUIRE(step.cell);
        CHECK(step.cell->cell.contains(step.candidate));
      }
    }
    CHECK(prefix == r.accepted);
  }
}

TEST_CASE("dense greedy places element m+1 in cell m+1") {
  const auto r = greedy_dense(Interval::closed(0, 1), 60, {.dense = true});
  std::size_t m = 0;
  for (const auto& step : r.log) {
    if (!step.accepted) continue;
    const auto [lo, hi] = oracle::unit_schedule_cell(m++);
    CHECK(lo <= step.candidate);
    CHECK(step.candidate <= hi);
  }
  CHECK(m == 60);
  CHECK(verify_sidon(r.accepted).ok);
}
