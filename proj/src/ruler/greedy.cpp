#include "costas/ruler/greedy.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "costas/error.hpp"

namespace costas::ruler {

RatRuler::RatRuler(std::vector<Rational> marks, Interval interval)
    : marks_(std::move(marks)), interval_(std::move(interval)) {
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    if (!interval_.contains(marks_[i])) throw InvalidArgument("mark " + marks_[i].to_string() + " outside interval");
    if (i > 0 && !(marks_[i - 1] < marks_[i])) throw InvalidArgument("ruler marks must be strictly increasing");
  }
}

namespace {

// Accepted set with its difference table: b − a ↦ (a, b).
class DifferenceTable {
 public:
  bool contains(const Rational& x) const { return members_.contains(x); }

  /// Conflict created by adding r, if any.
  std::optional<Quadruple<Rational>> conflict(const Rational& r) const {
    std::unordered_map<Rational, const Rational*> fresh;
    for (const Rational& s : marks_) {
      const bool above = s < r;
      Rational d = above ? r - s : s - r;
      if (const auto it = diffs_.find(d); it != diffs_.end()) {
        const auto& [a, b] = it->second;
        if (above) return Quadruple<Rational>{r, a, b, s};
        return Quadruple<Rational>{s, a, b, r};
      }
      auto [it, inserted] = fresh.try_emplace(std::move(d), &s);
      if (!inserted) return Quadruple<Rational>{*it->second, s, r, r};
    }
    return std::nullopt;
  }

  void add(const Rational& r) {
    for (const Rational& s : marks_) {
      if (s < r) diffs_.try_emplace(r - s, s, r);
      else diffs_.try_emplace(s - r, r, s);
    }
    marks_.push_back(r);
    members_.insert(r);
  }

  const std::vector<Rational>& marks() const { return marks_; }

 private:
  std::vector<Rational> marks_;
  std::unordered_set<Rational> members_;
  std::unordered_map<Rational, std::pair<Rational, Rational>> diffs_;
};

}  // namespace

GreedyResult greedy_dense(const GreedyDomain& domain, std::size_t count, const GreedyOptions& options) {
  if (count == 0) throw InvalidArgument("greedy: target count must be >= 1");
  const bool naturals = std::holds_alternative<Naturals>(domain);
  if (naturals && options.dense) throw InvalidArgument("greedy: dense mode needs an interval, not the naturals");
  const Interval interval = naturals ? Interval::at_least(Rational(1)) : std::get<Interval>(domain);

  DifferenceTable table;
  std::vector<GreedyStep> log;
  RationalEnumerator stream = naturals ? RationalEnumerator::naturals() : RationalEnumerator(interval);
  std::optional<DyadicSchedule> schedule;
  if (options.dense) schedule.emplace(interval);

  while (table.marks().size() < count) {
    std::optional<DyadicSchedule::Entry> cell;
    std::optional<FareyEnumerator> local;
    if (schedule) {
      cell = schedule->next();
      local.emplace(cell->cell);
    }
    bool placed = false;
    for (std::uint64_t tried = 0; tried < options.candidate_cap; ++tried) {
      std::optional<Rational> next = local ? std::optional<Rational>(local->next()) : stream.next();
      if (!next) throw CapExceeded("greedy: enumeration of the interval is exhausted");
      const Rational& r = *next;
      if (!interval.contains(r) || table.contains(r)) continue;
      auto conflict = table.conflict(r);
      if (options.keep_log) log.push_back({r, !conflict, conflict, cell});
      if (!conflict) {
        table.add(r);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw CapExceeded("greedy: no admissible candidate for element " + std::to_string(table.marks().size() + 1) +
                        " within " + std::to_string(options.candidate_cap) + " candidates");
  }

  std::vector<Rational> sorted = table.marks();
  std::sort(sorted.begin(), sorted.end());
  return {table.marks(), RatRuler(std::move(sorted), interval), std::move(log)};
}

}  // namespace costas::ruler
