#include "costas/perm/costas.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "costas/error.hpp"
#include "costas/gf/number_theory.hpp"

namespace costas::perm {

namespace {

void validate_permutation(std::span<const int> values) {
  const auto n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (const int v : values) {
    if (v < 1 || v > n) throw InvalidArgument("value " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)]) throw InvalidArgument("repeated value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

CostasReport difference_triangle(std::span<const int> f) {
  CostasReport report;
  const auto n = static_cast<int>(f.size());
  for (int t = 1; t < n; ++t) {
    // Row t of the triangle; group positions by difference value.
    std::map<int, std::vector<int>> rows;
    for (int i = 1; i + t <= n; ++i) {
      const int d = f[static_cast<std::size_t>(i + t - 1)] - f[static_cast<std::size_t>(i - 1)];
      rows[d].push_back(i);
    }
    for (const auto& [d, positions] : rows) {
      for (std::size_t a = 0; a < positions.size(); ++a)
        for (std::size_t b = a + 1; b < positions.size(); ++b)
          report.violations.push_back({t, positions[a], positions[b]});
    }
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.lag, x.i, x.j) < std::tie(y.lag, y.i, y.j);
  });
  report.ok = report.violations.empty();
  return report;
}

class Backtracker {
 public:
  explicit Backtracker(int n)
      : n_(n), values_(static_cast<std::size_t>(n)), used_value_(static_cast<std::size_t>(n) + 1, false),
        used_diff_(static_cast<std::size_t>(n) * (2 * static_cast<std::size_t>(n) + 1), false) {}

  void run_with_first(int first, std::vector<Permutation>& out) {
    place(0, first);
    descend(1, out);
    unplace(0, first);
  }

 private:
  std::size_t slot(int lag, int diff) const {
    return static_cast<std::size_t>(lag) * (2 * static_cast<std::size_t>(n_) + 1) + static_cast<std::size_t>(diff + n_);
  }

  bool fits(int pos, int v) const {
    for (int j = 0; j < pos; ++j)
      if (used_diff_[slot(pos - j, v - values_[static_cast<std::size_t>(j)])]) return false;
    return true;
  }

  void place(int pos, int v) {
    values_[static_cast<std::size_t>(pos)] = v;
    used_value_[static_cast<std::size_t>(v)] = true;
    for (int j = 0; j < pos; ++j) used_diff_[slot(pos - j, v - values_[static_cast<std::size_t>(j)])] = true;
  }

  void unplace(int pos, int v) {
    used_value_[static_cast<std::size_t>(v)] = false;
    for (int j = 0; j < pos; ++j) used_diff_[slot(pos - j, v - values_[static_cast<std::size_t>(j)])] = false;
  }

  void descend(int pos, std::vector<Permutation>& out) {
    if (pos == n_) {
      out.emplace_back(values_);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_value_[static_cast<std::size_t>(v)] || !fits(pos, v)) continue;
      place(pos, v);
      descend(pos + 1, out);
      unplace(pos, v);
    }
  }

  int n_;
  std::vector<int> values_;
  std::vector<bool> used_value_;
  std::vector<bool> used_diff_;
};

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) { validate_permutation(values_); }

Permutation Permutation::reversed() const {
  std::vector<int> r(values_.rbegin(), values_.rend());
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

std::string Permutation::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

CostasReport verify_costas(const Permutation& perm) { return difference_triangle(perm.values()); }

CostasReport verify_costas(std::span<const int> values) {
  validate_permutation(values);
  return difference_triangle(values);
}

bool is_costas(std::span<const int> f) {
  const std::size_t n = f.size();
  std::vector<int> stamp(2 * n + 1, 0);
  for (std::size_t t = 1; t < n; ++t) {
    for (std::size_t i = 0; i + t < n; ++i) {
      int& s = stamp[static_cast<std::size_t>(f[i + t] - f[i] + static_cast<int>(n))];
      if (s == static_cast<int>(t)) return false;
      s = static_cast<int>(t);
    }
  }
  return true;
}

Permutation welch(std::uint64_t p, std::uint64_t alpha, std::uint64_t c) {
  if (!gf::is_prime(p)) throw InvalidArgument("welch: p = " + std::to_string(p) + " is not prime");
  if (alpha == 0 || alpha >= p || !gf::is_primitive_root(alpha, p))
    throw InvalidArgument("welch: " + std::to_string(alpha) + " is not a primitive root mod " + std::to_string(p));
  if (c > p - 2) throw InvalidArgument("welch: c must lie in [0, p-2]");
  std::vector<int> values;
  values.reserve(p - 1);
  for (std::uint64_t i = 1; i <= p - 1; ++i) values.push_back(static_cast<int>(gf::pow_mod(alpha, i - 1 + c, p)));
  return Permutation(std::move(values));
}

Permutation golomb(const gf::FieldPtr& ctx, const gf::FieldElem& alpha, const gf::FieldElem& beta) {
  if (ctx->q() < 4) throw InvalidArgument("golomb: field order must be at least 4");
  if (!alpha.ctx().same_field(*ctx) || !beta.ctx().same_field(*ctx))
    throw InvalidArgument("golomb: elements do not belong to the given field");
  if (alpha.is_zero() || !gf::is_primitive(alpha)) throw InvalidArgument("golomb: alpha is not primitive");
  if (beta.is_zero() || !gf::is_primitive(beta)) throw InvalidArgument("golomb: beta is not primitive");
  const gf::DlogTable logs(beta);
  const gf::FieldElem one = ctx->one();
  std::vector<int> values;
  const std::uint64_t order = ctx->q() - 2;
  values.reserve(order);
  gf::FieldElem a_pow = alpha;
  for (std::uint64_t i = 1; i <= order; ++i) {
    values.push_back(static_cast<int>(logs.log(one - a_pow)));
    a_pow *= alpha;
  }
  return Permutation(std::move(values));
}

std::vector<Permutation> enumerate_costas(std::size_t n, const EnumerateOptions& options) {
  if (n == 0) throw InvalidArgument("enumerate_costas: order must be >= 1");
  if (n > options.max_order)
    throw InvalidArgument("enumerate_costas: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(options.max_order));
  const int order = static_cast<int>(n);
  std::vector<std::vector<Permutation>> branches(n);
  std::atomic<int> next{1};
  const auto worker = [&] {
    Backtracker bt(order);
    for (int first = next++; first <= order; first = next++)
      bt.run_with_first(first, branches[static_cast<std::size_t>(first - 1)]);
  };
  const unsigned threads = std::clamp(options.threads, 1U, static_cast<unsigned>(n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<Permutation> out;
  for (auto& branch : branches)
    for (auto& p : branch) out.push_back(std::move(p));
  return out;
}

}  // namespace costas::perm
