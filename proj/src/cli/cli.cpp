#include "costas/cli/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "costas/error.hpp"
#include "costas/io/serialize.hpp"

namespace costas::cli {

namespace {

using exact::Integer;
using exact::Rational;
using io::json;

struct Outcome {
  json payload;
  std::optional<std::string> csv;  // replaces the JSON payload under --format csv
  int exit_code = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

long long parse_integer(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw InvalidArgument("not an integer: \"" + s + "\"");
  return v;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(static_cast<int>(parse_integer(part)));
  return out;
}

// "id:q,id:q"
cauchy::HamelVector parse_hamel(const std::string& text) {
  cauchy::HamelVector v;
  if (text.empty() || text == "0") return v;
  for (const auto& part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw InvalidArgument("vector entries are written id:q, got \"" + part + "\"");
    const int id = static_cast<int>(parse_integer(part.substr(0, colon)));
    v.set(id, v.coord(id) + Rational::parse(part.substr(colon + 1)));
  }
  return v;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << content;
}

template <class T>
std::string csv_row(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_same_v<T, Rational>) out += values[i].to_string();
    else out += std::to_string(values[i]);
  }
  return out + "\n";
}

Outcome permutation_outcome(const perm::Permutation& p) { return {io::to_json(p), p.to_csv() + "\n"}; }

Outcome ruler_outcome(const ruler::IntRuler& r, bool report) {
  json payload = io::to_json(r);
  if (report) payload["optimality"] = io::to_json(ruler::optimality_report(r));
  return {payload, csv_row(r.marks())};
}

Outcome costas_report_outcome(const perm::CostasReport& report) {
  std::string csv = "lag,i,j\n";
  for (const auto& v : report.violations)
    csv += std::to_string(v.lag) + ',' + std::to_string(v.i) + ',' + std::to_string(v.j) + '\n';
  return {io::to_json(report), csv, report.ok ? 0 : 1};
}

Rational random_rational(std::mt19937_64& rng, long bound, bool allow_negative) {
  std::uniform_int_distribution<long> num(allow_negative ? -bound : 1, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

cauchy::HamelVector random_hamel(std::mt19937_64& rng, const cauchy::Sandbox& sb, long bound) {
  cauchy::HamelVector v;
  std::bernoulli_distribution keep(0.6);
  for (const auto& s : sb.symbols())
    if (keep(rng)) v.set(s.id, random_rational(rng, bound, true));
  return v;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Costas permutations, Golomb rulers and their continuum analogues", "costas-cli"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool envelope = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed_echo;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--envelope", envelope, "Wrap the JSON payload with tool version, command and exit code");
  app.add_option("--threads", threads, "Worker threads (output does not depend on it)")->check(CLI::Range(1U, 256U));

  std::function<Outcome()> action;

  // costas
  auto* costas_cmd = app.add_subcommand("costas", "Costas permutations");
  costas_cmd->require_subcommand(1);

  std::uint64_t w_p = 0, w_alpha = 0, w_c = 0;
  auto* welch_cmd = costas_cmd->add_subcommand("welch", "Welch construction f(i) = alpha^(i-1+c) mod p");
  welch_cmd->add_option("--p", w_p)->required();
  welch_cmd->add_option("--alpha", w_alpha)->required();
  welch_cmd->add_option("--c", w_c)->default_val(0);
  welch_cmd->callback([&] { action = [&] { return permutation_outcome(perm::welch(w_p, w_alpha, w_c)); }; });

  unsigned g_p = 0, g_m = 1;
  std::optional<std::uint64_t> g_alpha, g_beta;
  auto* golomb_cmd = costas_cmd->add_subcommand("golomb", "Golomb construction alpha^i + beta^f(i) = 1 over GF(p^m)");
  golomb_cmd->add_option("--p", g_p)->required();
  golomb_cmd->add_option("--m", g_m)->default_val(1);
  golomb_cmd->add_option("--alpha", g_alpha, "Element index sum c_i p^i (default: first primitive)");
  golomb_cmd->add_option("--beta", g_beta, "Element index (default: first primitive)");
  golomb_cmd->callback([&] {
    action = [&] {
      const auto field = gf::ExtFieldContext::make(g_p, g_m);
      const auto pick = [&](const std::optional<std::uint64_t>& index) {
        if (!index) return gf::first_primitive(field);
        if (*index >= field->q()) throw InvalidArgument("element index outside the field");
        return field->from_index(*index);
      };
      const auto alpha = pick(g_alpha);
      const auto beta = pick(g_beta);
      Outcome o = permutation_outcome(perm::golomb(field, alpha, beta));
      o.payload["q"] = field->q();
      o.payload["modulus"] = field->modulus();
      o.payload["alpha"] = alpha.index();
      o.payload["beta"] = beta.index();
      return o;
    };
  });

  std::string v_perm, v_file;
  auto* cverify_cmd = costas_cmd->add_subcommand("verify", "Difference-triangle Costas test");
  auto* perm_opt = cverify_cmd->add_option("--perm", v_perm, "Comma-separated f(1),...,f(n)");
  auto* pfile_opt = cverify_cmd->add_option("--file", v_file, "JSON permutation file {\"n\", \"values\"}")->excludes(perm_opt);
  cverify_cmd->callback([&] {
    action = [&] {
      if (pfile_opt->count() == 0 && perm_opt->count() == 0) throw InvalidArgument("give --perm or --file");
      std::vector<int> values;
      if (pfile_opt->count()) {
        const json j = read_json_file(v_file);
        const json& arr = j.is_array() ? j : j.contains("values") ? j.at("values") : j.at("perm");
        values = arr.get<std::vector<int>>();
      } else {
        values = parse_ints(v_perm);
      }
      return costas_report_outcome(perm::verify_costas(std::span<const int>(values)));
    };
  });

  std::size_t e_n = 0;
  bool e_count_only = false;
  auto* enum_cmd = costas_cmd->add_subcommand("enumerate", "All Costas permutations of order n (n <= 10)");
  enum_cmd->add_option("--n", e_n)->required();
  enum_cmd->add_flag("--count-only", e_count_only);
  enum_cmd->callback([&] {
    action = [&] {
      const auto all = perm::enumerate_costas(e_n, {10, threads});
      json payload{{"n", e_n}, {"count", all.size()}};
      std::string csv;
      if (!e_count_only) {
        json perms = json::array();
        for (const auto& p : all) {
          perms.push_back(io::to_json(p));
          csv += p.to_csv() + "\n";
        }
        payload["perms"] = perms;
      } else {
        csv = std::to_string(all.size()) + "\n";
      }
      return Outcome{payload, csv};
    };
  });

  // ruler
  auto* ruler_cmd = app.add_subcommand("ruler", "Golomb rulers");
  ruler_cmd->require_subcommand(1);
  bool r_report = false;
  ruler_cmd->add_flag("--report", r_report, "Add m, length and m/sqrt(length)");

  std::uint64_t et_p = 0;
  auto* et_cmd = ruler_cmd->add_subcommand("et", "Erdos-Turan ruler 2pk + (k^2 mod p)");
  et_cmd->add_option("--p", et_p)->required();
  et_cmd->callback([&] { action = [&] { return ruler_outcome(ruler::erdos_turan(et_p), r_report); }; });

  std::uint64_t rl_p = 0, rl_g = 0, rl_s = 1;
  auto* rl_cmd = ruler_cmd->add_subcommand("rl", "Ruzsa-Lindstrom ruler (psk + (p-1)g^k) mod p(p-1)");
  rl_cmd->add_option("--p", rl_p)->required();
  rl_cmd->add_option("--g", rl_g)->required();
  rl_cmd->add_option("--s", rl_s)->default_val(1);
  rl_cmd->callback([&] { action = [&] { return ruler_outcome(ruler::ruzsa_lindstrom(rl_p, rl_g, rl_s), r_report); }; });

  std::uint64_t bc_p = 0;
  unsigned bc_m = 1;
  auto* bc_cmd = ruler_cmd->add_subcommand("bc", "Bose-Chowla ruler over GF(q^2), q = p^m");
  bc_cmd->add_option("--p", bc_p)->required();
  bc_cmd->add_option("--m", bc_m)->default_val(1);
  bc_cmd->callback([&] { action = [&] { return ruler_outcome(ruler::bose_chowla(bc_p, bc_m), r_report); }; });

  std::uint64_t quad_n = 0;
  int quad_a = 1;
  auto* quad_cmd = ruler_cmd->add_subcommand("quad", "Quadratic ruler ank^2 + k");
  quad_cmd->add_option("--n", quad_n)->required();
  quad_cmd->add_option("--a", quad_a)->default_val(1);
  quad_cmd->callback([&] { action = [&] { return ruler_outcome(ruler::quadratic_ruler(quad_n, quad_a), r_report); }; });

  std::string rv_marks, rv_file;
  std::optional<std::int64_t> rv_modulus;
  auto* rverify_cmd = ruler_cmd->add_subcommand("verify", "Sidon test (distinct pairwise differences)");
  auto* marks_opt = rverify_cmd->add_option("--marks", rv_marks, "Comma-separated integers or num/den");
  auto* rfile_opt = rverify_cmd->add_option("--file", rv_file, "JSON file with a \"marks\" array")->excludes(marks_opt);
  rverify_cmd->add_option("--modulus", rv_modulus, "Test differences modulo this integer");
  rverify_cmd->callback([&] {
    action = [&] {
      if (rfile_opt->count() == 0 && marks_opt->count() == 0) throw InvalidArgument("give --marks or --file");
      std::vector<Rational> marks;
      if (rfile_opt->count()) {
        const json j = read_json_file(rv_file);
        const json& arr = j.is_array() ? j : j.at("marks");
        for (const auto& m : arr) marks.push_back(io::rational_from_json(m));
      } else {
        marks = parse_rationals(rv_marks);
      }
      const bool integral = std::all_of(marks.begin(), marks.end(), [](const Rational& r) { return r.is_integer(); });
      json payload;
      bool ok = true;
      if (rv_modulus) {
        if (!integral) throw InvalidArgument("--modulus needs integer marks");
        std::vector<std::int64_t> ints;
        for (const auto& m : marks) ints.push_back(m.num().get_si());
        const auto report = ruler::verify_sidon_modular(ints, *rv_modulus);
        ok = report.ok;
        payload = {{"sidon", ok}, {"modulus", *rv_modulus}};
        payload["conflict"] = report.conflict ? json(*report.conflict) : json(nullptr);
      } else {
        const auto report = ruler::verify_sidon(marks);
        ok = report.ok;
        payload = {{"sidon", ok}};
        if (report.conflict) {
          json q = json::array();
          for (const auto& x : *report.conflict) {
            if (integral) q.push_back(x.num().get_si());
            else q.push_back(io::to_json(x));
          }
          payload["conflict"] = q;
        } else {
          payload["conflict"] = nullptr;
        }
      }
      std::string csv = std::string("sidon,") + (ok ? "1" : "0") + "\n";
      return Outcome{payload, csv, ok ? 0 : 1};
    };
  });

  std::string gr_interval = "0,1";
  std::size_t gr_count = 0;
  bool gr_dense = false;
  std::string gr_log;
  std::uint64_t gr_cap = 1'000'000;
  auto* greedy_cmd = ruler_cmd->add_subcommand("greedy", "Greedy rational Golomb ruler");
  greedy_cmd->add_option("--interval", gr_interval, "LO,HI (rationals, -inf/inf) or nat")->default_val("0,1");
  greedy_cmd->add_option("--count", gr_count)->required();
  greedy_cmd->add_flag("--dense", gr_dense, "Draw element m+1 from the m+1-th dyadic schedule cell");
  greedy_cmd->add_option("--log", gr_log, "Write the acceptance log as CSV");
  greedy_cmd->add_option("--cap", gr_cap, "Candidates per step")->default_val(1'000'000);
  greedy_cmd->callback([&] {
    action = [&] {
      const ruler::GreedyDomain domain =
          gr_interval == "nat" ? ruler::GreedyDomain(ruler::Naturals{}) : ruler::GreedyDomain(ruler::Interval::parse(gr_interval));
      ruler::GreedyOptions options;
      options.dense = gr_dense;
      options.candidate_cap = gr_cap;
      options.keep_log = !gr_log.empty();
      const auto result = ruler::greedy_dense(domain, gr_count, options);
      if (!gr_log.empty()) write_file(gr_log, io::greedy_log_csv(result.log));
      json payload = io::to_json(result.ruler);
      json order = json::array();
      for (const auto& r : result.accepted) order.push_back(io::to_json(r));
      payload["acceptance_order"] = order;
      return Outcome{payload, csv_row(result.accepted)};
    };
  });

  // indicator
  auto* ind_cmd = app.add_subcommand("indicator", "f(x) = x^n (1 + a 1_Q(x))");
  ind_cmd->require_subcommand(1);

  std::string sc_c;
  int sc_n = 2;
  std::uint64_t sc_trials = 10'000, sc_seed = 0, sc_bound = 1000;
  auto* scan_cmd = ind_cmd->add_subcommand("scan", "Random exact test of the Costas implication");
  scan_cmd->add_option("--c", sc_c)->required();
  scan_cmd->add_option("--n", sc_n)->default_val(2);
  scan_cmd->add_option("--trials", sc_trials)->default_val(10'000);
  scan_cmd->add_option("--seed", sc_seed)->required();
  scan_cmd->add_option("--bound", sc_bound)->default_val(1000);
  scan_cmd->callback([&] {
    action = [&] {
      seed_echo = sc_seed;
      const indicator::IndicatorParams params(sc_n, Rational::parse(sc_c));
      const auto report = indicator::costas_scan(params, {sc_trials, sc_seed, sc_bound, threads});
      std::string csv = "key,value\ntrials," + std::to_string(report.trials) + "\nviolations," +
                        std::to_string(report.violations) + "\n";
      for (const auto& [k, v] : report.branch_histogram) csv += k + "," + std::to_string(v) + "\n";
      return Outcome{io::to_json(report, params, sc_seed), csv, report.violations == 0 ? 0 : 1};
    };
  });

  std::string wt_x, wt_z, wt_c;
  auto* witness_cmd = ind_cmd->add_subcommand("witness", "Exact n = 3 counterexample");
  witness_cmd->add_option("--x", wt_x)->required();
  witness_cmd->add_option("--z", wt_z)->required();
  witness_cmd->add_option("--c", wt_c)->required();
  witness_cmd->callback([&] {
    action = [&] {
      const Rational c = Rational::parse(wt_c);
      const auto w = indicator::witness_n3(Rational::parse(wt_x), Rational::parse(wt_z), c);
      if (!w) return Outcome{json{{"witness", nullptr}}, std::string("witness\nnone\n")};
      const std::string csv = "x,z,c,y_a,y_b,y_d,difference\n" + w->x.to_string() + ',' + w->z.to_string() + ',' +
                              c.to_string() + ',' + w->y.a().to_string() + ',' + w->y.b().to_string() + ',' +
                              w->y.d().get_str() + ',' + w->lhs.to_string() + "\n";
      return Outcome{json{{"witness", io::to_json(*w, c)}}, csv};
    };
  });

  // cauchy
  auto* cauchy_cmd = app.add_subcommand("cauchy", "Finite Hamel-basis sandbox");
  cauchy_cmd->require_subcommand(1);
  std::string cy_sandbox;
  mpfr_prec_t cy_precision = cauchy::kDefaultPrecision;
  cauchy_cmd->add_option("--sandbox", cy_sandbox, "Sandbox JSON file")->required();
  cauchy_cmd->add_option("--precision", cy_precision, "Bits")->default_val(cauchy::kDefaultPrecision)->check(CLI::Range(64, 1 << 16));
  const auto load_map = [&] { return io::map_from_json(read_json_file(cy_sandbox)); };

  std::uint64_t ck_cases = 1000, ck_seed = 0;
  long ck_bound = 100;
  auto* check_cmd = cauchy_cmd->add_subcommand("check", "Additivity, homogeneity, inversion and Welch factorization");
  check_cmd->add_option("--cases", ck_cases)->default_val(1000);
  check_cmd->add_option("--seed", ck_seed)->required();
  check_cmd->add_option("--bound", ck_bound, "Numerator/denominator bound")->default_val(100)->check(CLI::Range(1L, 1L << 30));
  check_cmd->callback([&] {
    action = [&] {
      seed_echo = ck_seed;
      const auto map = load_map();
      const auto inverse = map.inverse();
      std::mt19937_64 rng(ck_seed);
      bool additive = true, homogeneous = true, round_trip = true;
      cauchy::BigFloat worst(cy_precision);
      for (std::uint64_t i = 0; i < ck_cases; ++i) {
        const auto x = random_hamel(rng, map.sandbox(), ck_bound);
        const auto y = random_hamel(rng, map.sandbox(), ck_bound);
        const auto z = random_hamel(rng, map.sandbox(), ck_bound);
        const Rational q = random_rational(rng, ck_bound, true);
        additive = additive && cauchy::additivity_check(map, x, y);
        homogeneous = homogeneous && cauchy::homogeneity_check(map, q, x);
        round_trip = round_trip && inverse.apply(map.apply(x)) == x;
        const auto g = [&](const cauchy::HamelVector& v) { return cauchy::welch_g(map, v, cy_precision); };
        const cauchy::BigFloat one(Rational(1), cy_precision);
        const auto residual = ((g(x + z) - g(x)) - (g(y + z) - g(y))) - (g(z) - one) * (g(x) - g(y));
        if (residual.abs() > worst) worst = residual.abs();
      }
      const bool ok = additive && homogeneous && round_trip;
      json payload{{"cases", ck_cases},           {"additivity", additive},
                   {"homogeneity", homogeneous},  {"round_trip", round_trip},
                   {"scalar", map.is_scalar()},   {"max_factorization_residual", worst.to_string(6)},
                   {"precision", cy_precision},   {"seed", ck_seed}};
      std::string csv = "check,value\nadditivity," + std::to_string(additive) + "\nhomogeneity," +
                        std::to_string(homogeneous) + "\nround_trip," + std::to_string(round_trip) +
                        "\nmax_factorization_residual," + worst.to_string(6) + "\n";
      return Outcome{payload, csv, ok ? 0 : 1};
    };
  });

  std::uint64_t sm_count = 100, sm_seed = 0;
  long sm_bound = 10;
  auto* sample_cmd = cauchy_cmd->add_subcommand("sample", "Random graph points (v, f(v))");
  sample_cmd->add_option("--count", sm_count)->default_val(100);
  sample_cmd->add_option("--seed", sm_seed)->required();
  sample_cmd->add_option("--bound", sm_bound)->default_val(10)->check(CLI::Range(1L, 1L << 30));
  sample_cmd->callback([&] {
    action = [&] {
      seed_echo = sm_seed;
      const auto map = load_map();
      std::mt19937_64 rng(sm_seed);
      json points = json::array();
      std::string csv = "x_embed,y_embed";
      for (const auto& s : map.sandbox().symbols()) csv += ",q" + std::to_string(s.id);
      csv += "\n";
      for (std::uint64_t i = 0; i < sm_count; ++i) {
        const auto v = random_hamel(rng, map.sandbox(), sm_bound);
        const auto xe = cauchy::embed(map.sandbox(), v, cy_precision).to_fixed(20);
        const auto ye = cauchy::f_value(map, v, cy_precision).to_fixed(20);
        points.push_back({{"v", io::to_json(v)}, {"x_embed", xe}, {"y_embed", ye}});
        csv += xe + "," + ye;
        for (const auto& s : map.sandbox().symbols()) csv += "," + v.coord(s.id).to_string();
        csv += "\n";
      }
      return Outcome{json{{"points", points}, {"seed", sm_seed}}, csv};
    };
  });

  std::string pr_v1, pr_v2, pr_target;
  double pr_eps = 1e-2;
  std::string pr_bound = "1000000";
  std::optional<std::uint64_t> pr_random, pr_seed;
  auto* probe_cmd = cauchy_cmd->add_subcommand("probe", "Rational combinations whose graph point hits a target");
  probe_cmd->add_option("--v1", pr_v1, "id:q,... (default: first symbol)");
  probe_cmd->add_option("--v2", pr_v2, "id:q,... (default: second symbol)");
  auto* target_opt = probe_cmd->add_option("--target", pr_target, "X,Y");
  auto* random_opt = probe_cmd->add_option("--random", pr_random, "Number of random targets in [-10,10]^2")->excludes(target_opt);
  probe_cmd->add_option("--seed", pr_seed, "Required with --random");
  probe_cmd->add_option("--eps", pr_eps)->default_val(1e-2);
  probe_cmd->add_option("--coeff-bound", pr_bound)->default_val("1000000");
  probe_cmd->callback([&] {
    action = [&] {
      const auto map = load_map();
      const auto& symbols = map.sandbox().symbols();
      const auto v1 = pr_v1.empty() ? cauchy::HamelVector::basis(symbols.at(0).id) : parse_hamel(pr_v1);
      const auto v2 = pr_v2.empty() ? cauchy::HamelVector::basis(symbols.at(std::min<std::size_t>(1, symbols.size() - 1)).id)
                                    : parse_hamel(pr_v2);
      const Integer bound(pr_bound);
      std::vector<std::pair<double, double>> targets;
      if (random_opt->count()) {
        if (!pr_seed) throw InvalidArgument("--random needs --seed");
        seed_echo = *pr_seed;
        std::mt19937_64 rng(*pr_seed);
        std::uniform_real_distribution<double> u(-10, 10);
        for (std::uint64_t i = 0; i < *pr_random; ++i) {
          const double tx = u(rng);
          targets.emplace_back(tx, u(rng));
        }
      } else {
        if (target_opt->count() == 0) throw InvalidArgument("give --target X,Y or --random N");
        const auto parts = split(pr_target, ',');
        if (parts.size() != 2) throw InvalidArgument("--target must be X,Y");
        try {
          targets.emplace_back(std::stod(parts[0]), std::stod(parts[1]));
        } catch (const std::exception&) {
          throw InvalidArgument("--target must be two decimals");
        }
      }
      json results = json::array();
      std::string csv = "target_x,target_y,ok,r1,r2,x_embed,y_embed,distance\n";
      std::size_t successes = 0;
      for (const auto& t : targets) {
        const auto r = cauchy::density_probe(map, v1, v2, t, pr_eps, bound, cy_precision);
        successes += r.ok ? 1 : 0;
        json entry = io::to_json(r);
        entry["target"] = {t.first, t.second};
        results.push_back(entry);
        std::ostringstream row;
        row.precision(17);
        row << t.first << ',' << t.second << ',' << (r.ok ? 1 : 0) << ',' << r.r1.to_string() << ','
            << r.r2.to_string() << ',' << r.x << ',' << r.y << ',' << r.distance << '\n';
        csv += row.str();
      }
      json payload{{"probes", results}, {"successes", successes}, {"eps", pr_eps}};
      return Outcome{payload, csv, successes == targets.size() ? 0 : 1};
    };
  });

  std::string ev_v, ev_transform = "f";
  auto* eval_cmd = cauchy_cmd->add_subcommand("eval", "Evaluate f, welch, golomb, strip or moebius at a vector");
  eval_cmd->add_option("--v", ev_v, "id:q,...")->required();
  eval_cmd->add_option("--transform", ev_transform)->check(CLI::IsMember({"f", "welch", "golomb", "strip", "moebius"}));
  eval_cmd->callback([&] {
    action = [&] {
      const auto map = load_map();
      const auto v = parse_hamel(ev_v);
      cauchy::BigFloat value(cy_precision);
      if (ev_transform == "f") value = cauchy::f_value(map, v, cy_precision);
      else if (ev_transform == "welch") value = cauchy::welch_g(map, v, cy_precision);
      else if (ev_transform == "golomb") value = cauchy::golomb_g(map, v, cy_precision);
      else if (ev_transform == "strip") value = cauchy::strip_h(map, v, cy_precision);
      else value = cauchy::moebius_h(map, v, cy_precision);
      const std::string text = value.to_string(30);
      return Outcome{json{{"transform", ev_transform}, {"v", io::to_json(v)}, {"image", io::to_json(map.apply(v))}, {"value", text}},
                     text + "\n"};
    };
  });

  // cloud
  auto* cloud_cmd = app.add_subcommand("cloud", "Rational Costas clouds");
  cloud_cmd->require_subcommand(1);

  unsigned cl_stages = 1;
  bool cl_expanding = false;
  std::string cl_svg;
  auto* build_cmd = cloud_cmd->add_subcommand("build", "Grid-refinement construction");
  build_cmd->add_option("--stages", cl_stages)->required();
  build_cmd->add_flag("--expanding", cl_expanding, "Grow the square [-2^n, 2^n)^2 with the stage");
  build_cmd->add_option("--svg", cl_svg, "Write a scatter plot");
  build_cmd->callback([&] {
    action = [&] {
      const auto state = cl_expanding ? cloud::expanding_cloud(cl_stages) : cloud::build_cloud(cl_stages);
      if (!cl_svg.empty()) write_file(cl_svg, svg_scatter(state));
      return Outcome{io::to_json(state), io::cloud_csv(state)};
    };
  });

  std::string cv_file;
  auto* cloud_verify_cmd = cloud_cmd->add_subcommand("verify", "Distinct difference vectors, coordinate reuse, cell occupancy");
  cloud_verify_cmd->add_option("--file", cv_file)->required();
  cloud_verify_cmd->callback([&] {
    action = [&] {
      const auto state = io::cloud_from_json(read_json_file(cv_file));
      const auto report = cloud::verify_cloud(state.points);
      const bool distinct_x = state.used_x.size() == state.points.size();
      const bool distinct_y = state.used_y.size() == state.points.size();
      bool occupied = true;
      for (const auto& grid : cloud::cell_occupancy(state))
        for (const auto& row : grid)
          for (const bool cell : row) occupied = occupied && cell;
      json payload = io::to_json(report);
      payload["points"] = state.points.size();
      payload["distinct_x"] = distinct_x;
      payload["distinct_y"] = distinct_y;
      payload["cells_occupied"] = occupied;
      const bool ok = report.ok && distinct_x && distinct_y && occupied;
      std::string csv = std::string("check,value\ncostas,") + (report.ok ? "1" : "0") + "\ndistinct_x," +
                        (distinct_x ? "1" : "0") + "\ndistinct_y," + (distinct_y ? "1" : "0") + "\ncells_occupied," +
                        (occupied ? "1" : "0") + "\n";
      return Outcome{payload, csv, ok ? 0 : 1};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << "error: no command given\n";
    return 2;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  if (format == "csv" && outcome.csv) {
    out << *outcome.csv;
  } else if (envelope) {
    json command = json::array();
    for (int i = 1; i < argc; ++i) command.push_back(argv[i]);
    json wrapped{{"tool", "costas-cli"}, {"version", kVersion}, {"command", command}};
    wrapped["seed"] = seed_echo ? json(*seed_echo) : json(nullptr);
    wrapped["payload"] = outcome.payload;
    wrapped["exit_code"] = outcome.exit_code;
    out << wrapped.dump() << "\n";
  } else {
    out << outcome.payload.dump() << "\n";
  }
  return outcome.exit_code;
}

}  // namespace costas::cli
