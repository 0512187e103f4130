#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "costas/exact/rational.hpp"

namespace costas::ruler {

using exact::Integer;
using exact::Rational;

/// A real interval with rational (or infinite) endpoints.
class Interval {
 public:
  static Interval closed(Rational lo, Rational hi);
  static Interval half_open(Rational lo, Rational hi);  // [lo, hi)
  static Interval real_line();
  static Interval at_least(Rational lo);  // [lo, ∞)
  static Interval at_most(Rational hi);   // (−∞, hi]

  /// "LO,HI" with LO/HI rationals or -inf/inf; finite endpoints are closed.
  static Interval parse(const std::string& text);

  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool bounded() const { return lo_ && hi_; }

  bool contains(const Rational& x) const;
  /// Intersection with the closed interval [a, b]; nullopt when empty or a point.
  std::optional<Interval> clip(const Rational& a, const Rational& b) const;

  /// Endpoint tokens for serialization: "num/den", "-inf" or "inf".
  std::string lo_token() const;
  std::string hi_token() const;
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Interval(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed);
  std::optional<Rational> lo_;
  bool lo_closed_ = false;
  std::optional<Rational> hi_;
  bool hi_closed_ = false;
};

/// Calkin–Wilf enumeration of the positive rationals: 1, 1/2, 2, 1/3, 3/2, …
class CalkinWilf {
 public:
  Rational next();

 private:
  std::optional<Rational> current_;
};

/// Canonical enumeration of ℚ ∩ I.
///
/// Bounded I: closed endpoints first, then lo + (hi − lo)·t for the
/// Calkin–Wilf terms t in (0, 1). Half-lines: the closed endpoint, then
/// endpoint ± t over all Calkin–Wilf terms. ℝ: 0, then t, −t. The naturals
/// mode yields 1, 2, 3, …
class RationalEnumerator {
 public:
  explicit RationalEnumerator(Interval interval);
  static RationalEnumerator naturals();

  /// nullopt only for a degenerate (single point) interval once exhausted.
  std::optional<Rational> next();
  /// Number of values produced so far.
  std::uint64_t produced() const { return produced_; }

 private:
  RationalEnumerator() = default;
  std::optional<Interval> interval_;
  CalkinWilf cw_;
  int endpoint_stage_ = 0;
  std::optional<Rational> pending_negative_;
  Integer natural_ = 0;
  std::uint64_t produced_ = 0;
};

/// Rationals of a bounded interval ordered by denominator, then numerator.
/// Each value appears once (only reduced fractions are emitted).
class FareyEnumerator {
 public:
  /// Throws InvalidArgument for an unbounded interval.
  explicit FareyEnumerator(Interval interval);
  Rational next();

 private:
  void start_denominator();
  Interval interval_;
  Integer den_ = 0;
  Integer num_ = 0;
  Integer num_end_ = 0;
};

/// The density schedule I_{N,k}: for N = 1, 2, … the consecutive closed
/// subintervals of length 2^−N of I ∩ [−2^N, 2^N], left to right (the last
/// one truncated at the right end).
class DyadicSchedule {
 public:
  explicit DyadicSchedule(Interval interval);

  struct Entry {
    unsigned level;   // N
    std::uint64_t k;  // 1-based
    Interval cell;
  };
  Entry next();

 private:
  void start_level();
  Interval interval_;
  unsigned level_ = 0;
  std::uint64_t k_ = 0;
  std::uint64_t count_ = 0;
  Rational left_;
  Rational right_;
  Rational width_;
};

}  // namespace costas::ruler
