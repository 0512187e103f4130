#include <doctest.h>

#include "costas/error.hpp"
#include "costas/io/serialize.hpp"
#include "gen.hpp"

using namespace costas;
using exact::Integer;
using exact::Rational;
using io::json;

TEST_CASE("rationals are num/den strings") {
  CHECK(io::to_json(Rational(3)) == "3/1");
  CHECK(io::to_json(Rational(-1, 2)) == "-1/2");
  CHECK(io::rational_from_json(json("6/4")) == Rational(3, 2));
  CHECK(io::rational_from_json(json(5)) == 5);
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), InvalidArgument);
  gen::Rng rng(71);
  for (int t = 0; t < 500; ++t) {
    const Rational r = gen::rational(rng, 1000000);
    CHECK(io::rational_from_json(json::parse(io::to_json(r).dump())) == r);
  }
}

TEST_CASE("surds and permutations") {
  const exact::QuadExt y(Integer(669), Rational(-1, 2), Rational(1, 6));
  const json j = io::to_json(y);
  CHECK(j == json{{"a", "-1/2"}, {"b", "1/6"}, {"d", 669}});
  CHECK(io::quad_ext_from_json(j) == y);
  CHECK(io::to_json(perm::Permutation({1, 2, 4, 3})).dump() == R"({"n":4,"values":[1,2,4,3]})");
  const auto report = perm::verify_costas(perm::Permutation({1, 2, 3}));
  CHECK(io::to_json(report)["violations"][0] == json{{"lag", 1}, {"i", 1}, {"j", 2}});
}

TEST_CASE("rulers") {
  CHECK(io::to_json(ruler::bose_chowla(2, 1)).dump() == R"({"marks":[1,2]})");
  CHECK(io::marks_from_json(json::parse(R"({"marks":[0,7,13]})")) == std::vector<std::int64_t>{0, 7, 13});
  CHECK(io::marks_from_json(json::parse("[1,2]")) == std::vector<std::int64_t>{1, 2});
  CHECK_THROWS_AS(io::marks_from_json(json::parse(R"({"m":[1]})")), InvalidArgument);
  const auto g = ruler::greedy_dense(ruler::Interval::closed(0, 1), 4);
  CHECK(io::to_json(g.ruler).dump() == R"({"interval":["0/1","1/1"],"marks":["0/1","1/4","1/3","1/1"]})");
  const std::string csv = io::greedy_log_csv(g.log);
  CHECK(csv.rfind("candidate,accepted,conflict,level,k,cell_lo,cell_hi\n", 0) == 0);
  CHECK(csv.find("1/2,0,") != std::string::npos);
  const auto dense = ruler::greedy_dense(ruler::Interval::closed(0, 1), 2, {.dense = true});
  CHECK(io::greedy_log_csv(dense.log).find(",1,1,0/1,1/2") != std::string::npos);
  CHECK(io::to_json(ruler::optimality_report(ruler::IntRuler({4}))) == json{{"m", 1}, {"length", 0}, {"ratio", "inf"}});
}

TEST_CASE("sandbox maps and vectors") {
  const json spec = json::parse(R"({"symbols":[{"id":0,"radicand":1},{"id":1,"radicand":2}],"perm":[1,0],"scale":["1/1","1/1"]})");
  const auto map = io::map_from_json(spec);
  CHECK(map.apply(cauchy::HamelVector::basis(0)) == cauchy::HamelVector::basis(1));
  CHECK(io::to_json(map) == spec);
  const auto plain = io::map_from_json(json::parse(R"({"symbols":[{"id":3,"radicand":5}]})"));
  CHECK(plain.is_scalar());
  CHECK_THROWS_AS(io::map_from_json(json::parse(R"({"symbols":[{"id":0,"radicand":4}]})")), InvalidArgument);
  CHECK_THROWS_AS(io::map_from_json(json::parse(R"({"perm":[0]})")), InvalidArgument);
  gen::Rng rng(72);
  const auto sb = cauchy::Sandbox::standard(5);
  for (int t = 0; t < 200; ++t) {
    const auto v = gen::hamel(rng, sb, 1000);
    CHECK(io::hamel_from_json(json::parse(io::to_json(v).dump())) == v);
  }
  CHECK_THROWS_AS(io::hamel_from_json(json::parse(R"({"x":"1/2"})")), InvalidArgument);
}

TEST_CASE("clouds") {
  const auto s = cloud::build_cloud(2);
  const json j = io::to_json(s);
  CHECK(j["stages"] == 2);
  CHECK(j["geometry"] == "unit");
  CHECK(j["points"][0] == json{{"x", "0/1"}, {"y", "0/1"}, {"stage", 1}, {"cell", {0, 0}}});
  const auto back = io::cloud_from_json(json::parse(j.dump()));
  CHECK(back.points == s.points);
  CHECK(back.used_x == s.used_x);
  CHECK(io::to_json(back) == j);
  const auto e = io::cloud_from_json(io::to_json(cloud::expanding_cloud(1)));
  CHECK(e.geometry == cloud::Geometry::expanding);
  CHECK_THROWS_AS(io::cloud_from_json(json::parse(R"({"stages":1,"geometry":"torus","points":[]})")), InvalidArgument);
  const std::string csv = io::cloud_csv(s);
  CHECK(csv.rfind("x,y,stage,j,k,x_embed,y_embed\n0/1,0/1,1,0,0,0.000000000000,0.000000000000\n", 0) == 0);
  CHECK(io::to_json(cloud::verify_cloud(s.points)) == json{{"costas", true}, {"collisions", json::array()}});
}

TEST_CASE("decimal rendering") {
  CHECK(io::decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(io::decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(io::decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(io::decimal(Rational(-1, 1000), 2) == "0.00");
  CHECK(io::decimal(Rational(7, 2), 0) == "4");
  CHECK_THROWS_AS(io::decimal(Rational(1), -1), InvalidArgument);
}
