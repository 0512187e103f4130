#include <doctest.h>

#include <algorithm>

#include "costas/cauchy/transforms.hpp"
#include "costas/error.hpp"
#include "gen.hpp"

using namespace costas;
using namespace costas::cauchy;

namespace {

const HamelVector b0 = HamelVector::basis(0);
const HamelVector b1 = HamelVector::basis(1);

// "-0.123" as an exact rational.
Rational decimal(const std::string& s) {
  const bool neg = s.front() == '-';
  const std::string body = neg ? s.substr(1) : s;
  const auto dot = body.find('.');
  std::string digits = body.substr(0, dot);
  std::string den = "1";
  if (dot != std::string::npos) {
    digits += body.substr(dot + 1);
    den += std::string(body.size() - dot - 1, '0');
  }
  const Rational r{Integer(digits, 10), Integer(den, 10)};
  return neg ? -r : r;
}

// |x − value| < 10^-digits, compared exactly.
bool near(const BigFloat& x, const std::string& value, unsigned digits) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  return (x.to_rational() - decimal(value)).abs() < Rational(Integer(1), scale);
}

// |f(v)| ≤ bound for every vector, decided on a double approximation.
bool moderate(const QLinearMap& map, std::initializer_list<HamelVector> vs, double bound) {
  for (const auto& v : vs)
    if (std::abs(f_value(map, v).to_double()) > bound) return false;
  return true;
}

// 2^-e at the default precision.
BigFloat tiny(unsigned e) { return BigFloat(Rational(Integer(1), Integer(Integer(1) << e)), kDefaultPrecision); }

BigFloat residual_welch(const QLinearMap& map, const HamelVector& x, const HamelVector& y, const HamelVector& z) {
  const auto g = [&](const HamelVector& v) { return welch_g(map, v); };
  const BigFloat one(Rational(1), kDefaultPrecision);
  return (g(x + z) - g(x)) - (g(y + z) - g(y)) - (g(z) - one) * (g(x) - g(y));
}

}  // namespace

TEST_CASE("sandbox validation") {
  CHECK_THROWS_AS(Sandbox({}), InvalidArgument);
  CHECK_THROWS_AS(Sandbox({{0, 1}, {0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Sandbox({{0, 2}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Sandbox({{0, 4}}), InvalidArgument);
  CHECK_THROWS_AS(Sandbox::standard(17), InvalidArgument);
  const auto sb = Sandbox::standard(6);
  std::vector<std::int64_t> radicands;
  for (const auto& s : sb.symbols()) radicands.push_back(s.radicand);
  CHECK(radicands == std::vector<std::int64_t>{1, 2, 3, 5, 6, 7});
  CHECK(sb.radicand(4) == 6);
  CHECK_THROWS_AS(sb.position(9), InvalidArgument);
}

TEST_CASE("Hamel vectors and linear maps") {
  const auto sb = Sandbox::standard(2);
  const auto swap = QLinearMap::swap(sb);
  CHECK(swap.apply(b0) == b1);
  const HamelVector v = 2 * b0 + 3 * b1;
  CHECK(swap.apply(v) == 3 * b0 + 2 * b1);
  CHECK(v.to_string() == "2/1*b0 + 3/1*b1");
  CHECK(HamelVector().to_string() == "0");
  CHECK((v - v).is_zero());
  const QLinearMap scale(sb, {0, 1}, {2, 1});
  CHECK(scale.apply(5 * b0) == 10 * b0);
  CHECK_THROWS_AS(swap.apply(HamelVector::basis(7)), InvalidArgument);
  CHECK_THROWS_AS(QLinearMap(sb, {0, 0}, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(QLinearMap(sb, {0, 1}, {1, 0}), InvalidArgument);

  CHECK(QLinearMap::identity(sb, Rational(5, 3)).is_scalar());
  CHECK_FALSE(swap.is_scalar());
  CHECK_FALSE(scale.is_scalar());
  CHECK(scale.is_scalar_on({1}));
}

TEST_CASE("additivity, homogeneity and inverse round trip") {
  gen::Rng rng(51);
  const HamelVector zero;
  for (int t = 0; t < 1000; ++t) {
    const auto sb = Sandbox::standard(static_cast<std::size_t>(gen::integer(rng, 2, 8)));
    const auto map = gen::map(rng, sb, 20);
    const auto v1 = gen::hamel(rng, sb, 100), v2 = gen::hamel(rng, sb, 100);
    CHECK(additivity_check(map, v1, v2));
    CHECK(additivity_check(map, zero, zero));
    CHECK(homogeneity_check(map, gen::rational(rng, 100), v1));
    CHECK(map.inverse().apply(map.apply(v1)) == v1);
    CHECK(map.apply(map.inverse().apply(v2)) == v2);
  }
}

TEST_CASE("embedding") {
  const auto sb = Sandbox::standard(3);
  CHECK(embed(sb, b0) == BigFloat(Rational(1), 128));
  CHECK(embed(sb, b1).to_string(30) == "1.41421356237309504880168872421e+00");
  CHECK(near(embed(sb, b0 + b1), "2.41421356237309504880168872421", 30));
  CHECK(embed(sb, b1, 200).precision() == 200);
  CHECK_THROWS_AS(embed(sb, b1, 32), InvalidArgument);
  // 99/70 > √2 > 140/99
  CHECK(embedded_sign(sb, Rational(99, 70) * b0 - b1) > 0);
  CHECK(embedded_sign(sb, Rational(140, 99) * b0 - b1) < 0);
  CHECK(embedded_sign(sb, HamelVector()) == 0);
  const Rational close = Rational(Integer("665857"), Integer("470832"));  // convergent of √2, error ~ 1.6e-12
  CHECK(embedded_sign(sb, close * b0 - b1) > 0);
}

TEST_CASE("transform values") {
  const auto sb = Sandbox::standard(2);
  const auto swap = QLinearMap::swap(sb);
  const HamelVector zero;
  CHECK(welch_g(swap, zero) == BigFloat(Rational(1), 128));
  CHECK(near(welch_g(swap, b0), "4.11325037878292751717", 19));
  CHECK(near(golomb_g(swap, -b0), "-0.278546244085973154673", 20));
  CHECK(near(strip_h(swap, zero), "0.367879441171442321596", 20));
  CHECK(near(strip_h(swap, b0), "0.0163545296240251679609", 21));
  CHECK(moebius_h(swap, zero) == BigFloat(Rational(1, 2), 128));
  CHECK(near(moebius_h(swap, b0), "0.804429682506956905193", 20));
  CHECK_THROWS_AS(golomb_g(swap, b0), DomainError);
  CHECK_THROWS_AS(golomb_g(swap, zero), DomainError);
}

TEST_CASE("golomb_g domain error exactly when f(v) >= 0") {
  gen::Rng rng(52);
  const auto sb = Sandbox::standard(4);
  int errors = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto map = gen::map(rng, sb, 5);
    const auto v = gen::hamel(rng, sb, 10);
    const bool nonneg = embedded_sign(sb, map.apply(v)) >= 0;
    bool threw = false;
    try {
      const auto g = golomb_g(map, v);
      CHECK(g.sign() < 0);
    } catch (const DomainError&) {
      threw = true;
    }
    CHECK(threw == nonneg);
    errors += threw;
  }
  CHECK(errors > 300);
  CHECK(errors < 700);
}

TEST_CASE("golomb_g diverges toward minus infinity as f(v) -> 0-") {
  const auto sb = Sandbox::standard(2);
  const auto swap = QLinearMap::swap(sb);
  std::optional<BigFloat> last;
  Rational q(1);
  for (int k = 0; k < 40; ++k, q /= 4) {
    const BigFloat g = golomb_g(swap, -q * b1);
    if (last) CHECK(g < *last);
    last = g;
  }
  CHECK(last->to_double() < -50);
}

TEST_CASE("strip_h and moebius_h are monotone in welch_g") {
  gen::Rng rng(53);
  const auto sb = Sandbox::standard(3);
  const auto map = gen::map(rng, sb, 4);
  std::vector<HamelVector> vs;
  for (int t = 0; t < 200; ++t) vs.push_back(gen::hamel(rng, sb, 6));
  std::sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) { return welch_g(map, a) < welch_g(map, b); });
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (map.apply(vs[i]) == map.apply(vs[i - 1])) continue;
    CHECK(strip_h(map, vs[i]) < strip_h(map, vs[i - 1]));
    CHECK(moebius_h(map, vs[i - 1]) < moebius_h(map, vs[i]));
    const auto h = moebius_h(map, vs[i]);
    CHECK(h.sign() > 0);
    CHECK(h < BigFloat(Rational(1), 128));
  }
}

TEST_CASE("welch factorization identity") {
  gen::Rng rng(54);
  const auto sb = Sandbox::standard(3);
  const BigFloat tol = tiny(88);  // 2^(40−128)
  // Absolute rounding error scales with g, so triples are kept where |f| ≤ 10.
  int tested = 0;
  for (int t = 0; t < 2000 && tested < 300; ++t) {
    const auto map = gen::map(rng, sb, 3);
    const auto x = gen::hamel(rng, sb, 3), y = gen::hamel(rng, sb, 3), z = gen::hamel(rng, sb, 3);
    if (!moderate(map, {x, y, z, x + z, y + z}, 10)) continue;
    ++tested;
    CHECK(residual_welch(map, x, y, z).abs() < tol);
  }
  CHECK(tested == 300);
}

TEST_CASE("costas_decide") {
  const auto sb = Sandbox::standard(2);
  const auto swap = QLinearMap::swap(sb);
  CHECK(costas_decide(swap, b0, b0, b1));
  CHECK(costas_decide(swap, b0, b1, HamelVector()));
  CHECK_FALSE(costas_decide(swap, b0, b1, b0));
  const auto g = [&](const HamelVector& v) { return welch_g(swap, v); };
  const BigFloat gap = ((g(b0 + b0) - g(b0)) - (g(b1 + b0) - g(b1))).abs();
  CHECK(gap > BigFloat(Rational(1, 100000), 128));

  gen::Rng rng(55);
  const auto sb3 = Sandbox::standard(3);
  const BigFloat floor = tiny(70);
  for (int t = 0; t < 300; ++t) {
    const auto map = gen::map(rng, sb3, 3);
    const auto x = gen::hamel(rng, sb3, 3), y = gen::hamel(rng, sb3, 3), z = gen::hamel(rng, sb3, 3);
    const bool can = costas_decide(map, x, y, z);
    CHECK(can == (z.is_zero() || x == y));
    const auto gm = [&](const HamelVector& v) { return welch_g(map, v); };
    const BigFloat diff = ((gm(x + z) - gm(x)) - (gm(y + z) - gm(y))).abs();
    if (!can) CHECK(diff > floor);
    else CHECK(diff < floor);
  }
}

TEST_CASE("moebius differences on positive samples") {
  gen::Rng rng(56);
  const auto sb = Sandbox::standard(3);
  const BigFloat floor = tiny(70);
  int tested = 0;
  for (int t = 0; t < 3000 && tested < 200; ++t) {
    const auto map = gen::map(rng, sb, 3);
    const auto x = gen::hamel(rng, sb, 3), z = gen::hamel(rng, sb, 3);
    auto y = gen::hamel(rng, sb, 3);
    if (embedded_sign(sb, x) <= 0 || embedded_sign(sb, y) <= 0 || embedded_sign(sb, z) <= 0) continue;
    ++tested;
    const auto h = [&](const HamelVector& v) { return moebius_h(map, v); };
    CHECK(((h(x + z) - h(x)) - (h(x + z) - h(x))).sign() == 0);
    if (x == y) continue;
    CHECK(((h(x + z) - h(x)) - (h(y + z) - h(y))).abs() > floor);
  }
  CHECK(tested >= 100);
}

TEST_CASE("convergents") {
  CHECK(convergents(Rational(415, 93), 100) == std::vector<Rational>{4, Rational(9, 2), Rational(58, 13), Rational(415, 93)});
  CHECK(convergents(Rational(415, 93), 20) == std::vector<Rational>{4, Rational(9, 2), Rational(58, 13)});
  CHECK(convergents(Rational(-3, 2), 10).back() == Rational(-3, 2));
  CHECK(convergents(Rational(7), 1) == std::vector<Rational>{7});
}

TEST_CASE("density probe") {
  const auto sb = Sandbox::standard(2);
  const auto swap = QLinearMap::swap(sb);
  const auto origin = density_probe(swap, b0, b1, {0, 0}, 0.01, Integer(1000000));
  CHECK(origin.ok);
  CHECK(origin.r1 == 0);
  CHECK(origin.r2 == 0);

  const auto p = density_probe(swap, b0, b1, {1, 1.5}, 0.01, Integer(1000000));
  REQUIRE(p.ok);
  CHECK(p.w == p.r1 * b0 + p.r2 * b1);
  const double x = embed(sb, p.w).to_double(), y = f_value(swap, p.w).to_double();
  CHECK(std::abs(x - 1) <= 0.01);
  CHECK(std::abs(y - 1.5) <= 0.01);
  CHECK(p.distance <= 0.01);

  CHECK_THROWS_AS(density_probe(QLinearMap::identity(sb), b0, b1, {1, 1}, 0.01, Integer(1000)), InvalidArgument);
  CHECK_THROWS_AS(density_probe(QLinearMap::identity(sb, 3), b0, b1, {1, 1}, 0.01, Integer(1000)), InvalidArgument);
  CHECK_THROWS_AS(density_probe(swap, b0, 2 * b0, {1, 1}, 0.01, Integer(1000)), InvalidArgument);
  CHECK_FALSE(independent(sb, b0, b0, b1, b1));
  CHECK(independent(sb, b0, b1, b1, b0));

  const auto tight = density_probe(swap, b0, b1, {3.3, -7.1}, 1e-9, Integer(3));
  CHECK_FALSE(tight.ok);
}

TEST_CASE("density probe on random targets") {
  gen::Rng rng(57);
  std::uniform_real_distribution<double> coord(-10, 10);
  const auto sb = Sandbox::standard(3);
  const auto swap = QLinearMap::swap(sb);
  int ok = 0;
  for (int t = 0; t < 100; ++t) {
    const std::pair<double, double> target{coord(rng), coord(rng)};
    const auto r = density_probe(swap, b0, b1, target, 0.01, Integer(1000000));
    if (!r.ok) continue;
    ++ok;
    CHECK(std::abs(embed(sb, r.w).to_double() - target.first) <= 0.01);
    CHECK(std::abs(f_value(swap, r.w).to_double() - target.second) <= 0.01);
  }
  CHECK(ok == 100);
}
