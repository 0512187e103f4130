#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "costas/ruler/enumeration.hpp"
#include "costas/ruler/sidon.hpp"

namespace costas::ruler {

/// Strictly increasing rational marks inside an interval.
class RatRuler {
 public:
  /// Throws InvalidArgument unless marks are strictly increasing and inside interval.
  RatRuler(std::vector<Rational> marks, Interval interval);

  const std::vector<Rational>& marks() const { return marks_; }
  const Interval& interval() const { return interval_; }
  std::size_t markings() const { return marks_.size(); }

 private:
  std::vector<Rational> marks_;
  Interval interval_;
};

/// The natural numbers 1, 2, 3, … as a greedy domain.
struct Naturals {};
using GreedyDomain = std::variant<Interval, Naturals>;

struct GreedyStep {
  Rational candidate;
  bool accepted = false;
  /// Repeated sum x1 + x2 = x3 + x4 created by a rejected candidate.
  std::optional<Quadruple<Rational>> conflict;
  /// Schedule cell in dense mode.
  std::optional<DyadicSchedule::Entry> cell;
};

struct GreedyOptions {
  bool dense = false;
  /// Candidates examined per accepted element before giving up.
  std::uint64_t candidate_cap = 1'000'000;
  bool keep_log = true;
};

struct GreedyResult {
  /// Accepted marks in acceptance order.
  std::vector<Rational> accepted;
  /// Sorted accepted marks.
  RatRuler ruler;
  std::vector<GreedyStep> log;
};

/// First M greedy acceptances over the canonical enumeration of the domain.
/// Each candidate is kept iff it creates no repeated difference. In dense
/// mode the (m+1)-th element is drawn from the schedule cell I_{m+1}, its
/// rationals tried in denominator order. Throws InvalidArgument for M = 0 or
/// dense mode over the naturals, CapExceeded when a step needs too many
/// candidates.
GreedyResult greedy_dense(const GreedyDomain& domain, std::size_t count, const GreedyOptions& options = {});

}  // namespace costas::ruler
