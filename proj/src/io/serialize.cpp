#include "costas/io/serialize.hpp"

#include <sstream>

#include "costas/error.hpp"

namespace costas::io {

using exact::Integer;
using exact::Rational;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string csv_rational(const Rational& r) { return r.to_string(); }

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidArgument("expected a rational written as \"num/den\"");
}

json to_json(const exact::QuadExt& x) {
  return {{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", x.d().get_si()}};
}

exact::QuadExt quad_ext_from_json(const json& j) {
  return exact::QuadExt(Integer(field(j, "d").get<long>()), rational_from_json(field(j, "a")),
                        rational_from_json(field(j, "b")));
}

json to_json(const indicator::RealRep& x) { return x.is_rational() ? to_json(x.rational()) : to_json(x.surd()); }

json to_json(const perm::Permutation& p) { return {{"n", p.n()}, {"values", p.values()}}; }

json to_json(const perm::CostasReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"lag", v.lag}, {"i", v.i}, {"j", v.j}});
  return {{"costas", report.ok}, {"violations", violations}};
}

json to_json(const ruler::IntRuler& r) { return {{"marks", r.marks()}}; }

std::vector<std::int64_t> marks_from_json(const json& j) {
  const json& arr = j.is_array() ? j : field(j, "marks");
  if (!arr.is_array()) throw InvalidArgument("marks must be an array");
  return arr.get<std::vector<std::int64_t>>();
}

json to_json(const ruler::RatRuler& r) {
  json marks = json::array();
  for (const auto& m : r.marks()) marks.push_back(to_json(m));
  return {{"marks", marks}, {"interval", {r.interval().lo_token(), r.interval().hi_token()}}};
}

json to_json(const ruler::OptimalityReport& r) { return {{"m", r.m}, {"length", r.length}, {"ratio", r.ratio}}; }

json to_json(const ruler::SidonReport<std::int64_t>& r) {
  json out{{"sidon", r.ok}};
  out["conflict"] = r.conflict ? json(*r.conflict) : json(nullptr);
  return out;
}

std::string greedy_log_csv(const std::vector<ruler::GreedyStep>& log) {
  std::ostringstream out;
  out << "candidate,accepted,conflict,level,k,cell_lo,cell_hi\n";
  for (const auto& step : log) {
    out << csv_rational(step.candidate) << ',' << (step.accepted ? 1 : 0) << ',';
    if (step.conflict) {
      const auto& q = *step.conflict;
      out << q[0].to_string() << ' ' << q[1].to_string() << ' ' << q[2].to_string() << ' ' << q[3].to_string();
    }
    out << ',';
    if (step.cell)
      out << step.cell->level << ',' << step.cell->k << ',' << step.cell->cell.lo_token() << ','
          << step.cell->cell.hi_token();
    else
      out << ",,,";
    out << '\n';
  }
  return out.str();
}

json to_json(const indicator::IndicatorParams& p) {
  return {{"n", p.n()}, {"c", to_json(p.c())}, {"a", to_json(p.a())}};
}

json to_json(const indicator::ScanReport& r, const indicator::IndicatorParams& p, std::uint64_t seed) {
  json out{{"params", to_json(p)},
           {"trials", r.trials},
           {"violations", r.violations},
           {"branch_histogram", r.branch_histogram},
           {"forced_equalities", r.forced_equalities},
           {"seed", seed}};
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    out["first_violation"] = {{"x", to_json(v.x)}, {"y", to_json(v.y)}, {"z", to_json(v.z)}};
  }
  return out;
}

json to_json(const indicator::Witness& w, const Rational& c) {
  return {{"x", to_json(w.x)},     {"z", to_json(w.z)},     {"c", to_json(c)},
          {"y", to_json(w.y)},     {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
}

json to_json(const cauchy::HamelVector& v) {
  json out = json::object();
  for (const auto& [id, q] : v.coords()) out[std::to_string(id)] = to_json(q);
  return out;
}

cauchy::HamelVector hamel_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("vector must be an object {\"id\": \"num/den\"}");
  cauchy::HamelVector v;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw InvalidArgument("bad symbol id \"" + key + "\"");
    v.set(id, v.coord(id) + rational_from_json(value));
  }
  return v;
}

json to_json(const cauchy::QLinearMap& map) {
  json symbols = json::array();
  for (const auto& s : map.sandbox().symbols()) symbols.push_back({{"id", s.id}, {"radicand", s.radicand}});
  json scale = json::array();
  for (const auto& q : map.scale()) scale.push_back(to_json(q));
  return {{"symbols", symbols}, {"perm", map.perm()}, {"scale", scale}};
}

cauchy::QLinearMap map_from_json(const json& j) {
  std::vector<cauchy::BasisSymbol> symbols;
  for (const auto& s : field(j, "symbols")) symbols.push_back({field(s, "id").get<int>(), field(s, "radicand").get<std::int64_t>()});
  cauchy::Sandbox sandbox(std::move(symbols));
  std::vector<int> perm;
  if (j.contains("perm")) {
    perm = j.at("perm").get<std::vector<int>>();
  } else {
    for (const auto& s : sandbox.symbols()) perm.push_back(s.id);
  }
  std::vector<Rational> scale;
  if (j.contains("scale")) {
    for (const auto& q : j.at("scale")) scale.push_back(rational_from_json(q));
  } else {
    scale.assign(sandbox.size(), Rational(1));
  }
  return cauchy::QLinearMap(std::move(sandbox), std::move(perm), std::move(scale));
}

json to_json(const cauchy::ProbeResult& r) {
  return {{"ok", r.ok},       {"r1", to_json(r.r1)}, {"r2", to_json(r.r2)},          {"w", to_json(r.w)},
          {"x_embed", r.x},   {"y_embed", r.y},      {"distance", r.distance}};
}

json to_json(const cloud::CloudState& s) {
  json points = json::array();
  for (const auto& p : s.points)
    points.push_back({{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"stage", p.stage}, {"cell", {p.j, p.k}}});
  return {{"stages", s.stages},
          {"geometry", s.geometry == cloud::Geometry::unit ? "unit" : "expanding"},
          {"points", points}};
}

cloud::CloudState cloud_from_json(const json& j) {
  cloud::CloudState s;
  s.stages = field(j, "stages").get<unsigned>();
  if (j.contains("geometry")) {
    const auto g = j.at("geometry").get<std::string>();
    if (g == "unit") s.geometry = cloud::Geometry::unit;
    else if (g == "expanding") s.geometry = cloud::Geometry::expanding;
    else throw InvalidArgument("unknown cloud geometry \"" + g + "\"");
  }
  for (const auto& p : field(j, "points")) {
    cloud::CloudPoint point{rational_from_json(field(p, "x")), rational_from_json(field(p, "y")),
                            p.value("stage", 0U), 0, 0};
    if (p.contains("cell")) {
      const auto cell = p.at("cell").get<std::vector<std::uint64_t>>();
      if (cell.size() != 2) throw InvalidArgument("cell must be [j, k]");
      point.j = cell[0];
      point.k = cell[1];
    }
    s.used_x.insert(point.x);
    s.used_y.insert(point.y);
    s.points.push_back(std::move(point));
  }
  return s;
}

json to_json(const cloud::CloudReport& r) {
  json collisions = json::array();
  for (const auto& c : r.collisions)
    collisions.push_back({{"dx", to_json(c.dx)},
                          {"dy", to_json(c.dy)},
                          {"first", {c.first.first, c.first.second}},
                          {"second", {c.second.first, c.second.second}}});
  return {{"costas", r.ok}, {"collisions", collisions}};
}

std::string cloud_csv(const cloud::CloudState& s) {
  std::ostringstream out;
  out << "x,y,stage,j,k,x_embed,y_embed\n";
  for (const auto& p : s.points)
    out << p.x.to_string() << ',' << p.y.to_string() << ',' << p.stage << ',' << p.j << ',' << p.k << ','
        << decimal(p.x, 12) << ',' << decimal(p.y, 12) << '\n';
  return out.str();
}

std::string decimal(const Rational& r, int digits) {
  if (digits < 0) throw InvalidArgument("decimal: digits must be >= 0");
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero.
  const Rational scaled = r.abs() * Rational(scale) + Rational(1, 2);
  const Integer units = scaled.floor();
  Integer whole, frac;
  mpz_tdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), units.get_mpz_t(), scale.get_mpz_t());
  std::string out = (r.sign() < 0 && units != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.' + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace costas::io
