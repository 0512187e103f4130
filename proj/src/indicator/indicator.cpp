#include "costas/indicator/indicator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "costas/error.hpp"

namespace costas::indicator {

IndicatorParams::IndicatorParams(int n, Rational c) : n_(n), c_(std::move(c)) {
  if (n_ != 2 && n_ != 3) throw InvalidArgument("indicator: exponent must be 2 or 3");
  if (c_.sign() <= 0) throw InvalidArgument("indicator: c must be positive");
  if (c_ == Rational(1)) throw InvalidArgument("indicator: c = 1 gives a = 0");
  a_ = c_.pow(n_) - Rational(1);
}

RealRep::RealRep(Rational value) : value_(std::move(value)) {}

RealRep::RealRep(QuadExt value) : value_(Rational(0)) {
  if (value.is_rational()) value_ = value.a();
  else value_ = std::move(value);
}

RealRep::RealRep(exact::ExactRoot value) : value_(Rational(0)) {
  if (auto* r = std::get_if<Rational>(&value)) *this = RealRep(std::move(*r));
  else *this = RealRep(std::get<QuadExt>(std::move(value)));
}

int RealRep::sign() const { return is_rational() ? rational().sign() : surd().sign(); }

RealRep RealRep::operator+(const Rational& r) const {
  if (is_rational()) return RealRep(rational() + r);
  return RealRep(surd() + r);
}

RealRep RealRep::operator-(const RealRep& rhs) const {
  if (is_rational() && rhs.is_rational()) return RealRep(rational() - rhs.rational());
  if (is_rational()) return RealRep(rational() - rhs.surd());
  if (rhs.is_rational()) return RealRep(surd() - rhs.rational());
  return RealRep(surd() - rhs.surd());
}

RealRep RealRep::pow(long e) const {
  if (is_rational()) return RealRep(rational().pow(e));
  return RealRep(surd().pow(e));
}

bool operator==(const RealRep& x, const RealRep& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.is_rational()) return x.rational() == y.rational();
  if (x.surd().d() != y.surd().d()) return false;
  return x.surd() == y.surd();
}

std::string RealRep::to_string() const { return is_rational() ? rational().to_string() : surd().to_string(); }

namespace {

RealRep eval_raw(const RealRep& x, int n, const Rational& cn) {
  if (x.sign() < 0) throw InvalidArgument("indicator: f is defined for x >= 0 only");
  if (x.is_rational()) return RealRep(x.rational().pow(n) * cn);
  return x.pow(n);
}

}  // namespace

RealRep eval_f(const RealRep& x, const IndicatorParams& params) {
  return eval_raw(x, params.n(), params.c().pow(params.n()));
}

Rational forced_y(const Rational& x, const Rational& z, const Rational& c) {
  if (z.is_zero()) throw InvalidArgument("forced_y: z must be nonzero");
  return (c * c * (Rational(2) * x * z + z * z) - z * z) / (Rational(2) * z);
}

RealRep preimage(const Rational& y, const IndicatorParams& params) {
  if (params.n() != 2) throw InvalidArgument("preimage: implemented for n = 2");
  if (y.sign() < 0) throw InvalidArgument("preimage: target must be non-negative");
  RealRep root(exact::exact_square_root(y));
  if (root.is_rational()) return RealRep(root.rational() / params.c());
  return root;
}

std::optional<Witness> witness_n3(const Rational& x, const Rational& z, const Rational& c) {
  if (x.sign() <= 0 || z.sign() <= 0) throw InvalidArgument("witness_n3: x and z must be positive");
  if (c.sign() <= 0) throw InvalidArgument("witness_n3: c must be positive");
  const Rational c3 = c.pow(3);
  const Rational target = c3 * ((x + z).pow(3) - x.pow(3));
  // (y+z)³ − y³ = target
  const auto roots = exact::solve_quadratic(Rational(3) * z, Rational(3) * z * z, z.pow(3) - target);
  if (!roots.real() || roots.rational()) return std::nullopt;
  const QuadExt y = std::get<QuadExt>(roots.roots->second);
  if (y.sign() <= 0) return std::nullopt;
  const RealRep yr(y);
  const RealRep lhs = eval_raw(RealRep(x + z), 3, c3) - eval_raw(RealRep(x), 3, c3);
  const RealRep rhs = eval_raw(yr + z, 3, c3) - eval_raw(yr, 3, c3);
  if (!(lhs == rhs)) throw Error("witness_n3: certificate failed for x = " + x.to_string() + ", z = " + z.to_string());
  return Witness{x, z, y, lhs, rhs};
}

namespace {

constexpr std::uint64_t kBlock = 1024;
constexpr std::array<long, 8> kRadicands{2, 3, 5, 6, 7, 10, 11, 13};
constexpr std::array<const char*, 6> kKinds{"QQ", "QA", "AQ", "AA", "equal", "forced"};

class TrialSource {
 public:
  TrialSource(std::uint64_t seed, std::uint64_t block, std::uint64_t bound)
      : dist_(1, bound) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32U)};
    rng_.seed(seq);
  }

  Rational rational() {
    const auto num = dist_(rng_);
    const auto den = dist_(rng_);
    return Rational(Integer(num), Integer(den));
  }

  RealRep irrational() {
    const long d = kRadicands[std::uniform_int_distribution<std::size_t>(0, kRadicands.size() - 1)(rng_)];
    return RealRep(QuadExt(Integer(d), Rational(0), rational()));
  }

  RealRep any() { return std::bernoulli_distribution(0.5)(rng_) ? RealRep(rational()) : irrational(); }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<unsigned long> dist_;
};

struct Partial {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::uint64_t forced_equalities = 0;
  std::uint64_t out_of_domain = 0;
  std::array<std::uint64_t, kKinds.size()> kinds{};
  std::optional<std::pair<std::uint64_t, ScanViolation>> first;
};

void run_block(const IndicatorParams& params, const ScanOptions& options, std::uint64_t block, Partial& out) {
  TrialSource src(options.seed, block, options.bound);
  const std::uint64_t begin = block * kBlock;
  const std::uint64_t end = std::min(options.trials, begin + kBlock);
  for (std::uint64_t t = begin; t < end; ++t) {
    const std::size_t kind = t % kKinds.size();
    ++out.trials;
    const Rational z = src.rational();
    std::optional<RealRep> x;
    std::optional<RealRep> y;
    switch (kind) {
      case 0: x = src.rational(); y = src.rational(); break;
      case 1: x = src.rational(); y = src.irrational(); break;
      case 2: x = src.irrational(); y = src.rational(); break;
      case 3: x = src.irrational(); y = src.irrational(); break;
      case 4: x = src.any(); y = x; break;
      default: {
        const Rational xr = src.rational();
        const Rational yr = forced_y(xr, z, params.c());
        if (yr.sign() <= 0) {
          ++out.out_of_domain;
          continue;
        }
        x = RealRep(xr);
        y = RealRep(yr);
      }
    }
    ++out.kinds[kind];
    const RealRep dx = eval_f(*x + z, params) - eval_f(*x, params);
    const RealRep dy = eval_f(*y + z, params) - eval_f(*y, params);
    const bool same_image_step = dx == dy;
    if (kind == 5 && same_image_step && !(*x == *y)) ++out.forced_equalities;
    if (same_image_step && !(*x == *y)) {
      ++out.violations;
      if (!out.first) out.first.emplace(t, ScanViolation{*x, *y, z});
    }
  }
}

}  // namespace

ScanReport costas_scan(const IndicatorParams& params, const ScanOptions& options) {
  if (params.n() != 2) throw InvalidArgument("costas_scan: the scan is defined for n = 2");
  if (options.bound == 0) throw InvalidArgument("costas_scan: bound must be >= 1");
  const std::uint64_t blocks = (options.trials + kBlock - 1) / kBlock;
  Partial total;
  std::mutex merge;
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    Partial local;
    for (std::uint64_t b = next++; b < blocks; b = next++) run_block(params, options, b, local);
    const std::lock_guard lock(merge);
    total.trials += local.trials;
    total.violations += local.violations;
    total.forced_equalities += local.forced_equalities;
    total.out_of_domain += local.out_of_domain;
    for (std::size_t k = 0; k < kKinds.size(); ++k) total.kinds[k] += local.kinds[k];
    if (local.first && (!total.first || local.first->first < total.first->first)) total.first = local.first;
  };
  const auto threads = static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(blocks, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  ScanReport report;
  report.trials = total.trials;
  report.violations = total.violations;
  report.forced_equalities = total.forced_equalities;
  for (std::size_t k = 0; k < kKinds.size(); ++k) report.branch_histogram[kKinds[k]] = total.kinds[k];
  report.branch_histogram["forced_out_of_domain"] = total.out_of_domain;
  if (total.first) report.first_violation = total.first->second;
  return report;
}

}  // namespace costas::indicator
