#include "costas/ruler/enumeration.hpp"

#include "costas/error.hpp"

namespace costas::ruler {

Interval::Interval(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed)
    : lo_(std::move(lo)), lo_closed_(lo_closed && lo_), hi_(std::move(hi)), hi_closed_(hi_closed && hi_) {
  if (lo_ && hi_ && *hi_ < *lo_) throw InvalidArgument("interval with hi < lo");
  if (lo_ && hi_ && *hi_ == *lo_ && !(lo_closed_ && hi_closed_)) throw InvalidArgument("empty interval");
}

Interval Interval::closed(Rational lo, Rational hi) { return Interval(std::move(lo), true, std::move(hi), true); }
Interval Interval::half_open(Rational lo, Rational hi) { return Interval(std::move(lo), true, std::move(hi), false); }
Interval Interval::real_line() { return Interval(std::nullopt, false, std::nullopt, false); }
Interval Interval::at_least(Rational lo) { return Interval(std::move(lo), true, std::nullopt, false); }
Interval Interval::at_most(Rational hi) { return Interval(std::nullopt, false, std::move(hi), true); }

Interval Interval::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("interval must be written LO,HI");
  const std::string lo = text.substr(0, comma);
  const std::string hi = text.substr(comma + 1);
  const bool lo_inf = lo == "-inf" || lo == "-oo";
  const bool hi_inf = hi == "inf" || hi == "+inf" || hi == "oo";
  if (lo == "inf" || lo == "+inf" || hi == "-inf") throw InvalidArgument("interval endpoints are reversed");
  if (lo_inf && hi_inf) return real_line();
  if (lo_inf) return at_most(Rational::parse(hi));
  if (hi_inf) return at_least(Rational::parse(lo));
  return closed(Rational::parse(lo), Rational::parse(hi));
}

bool Interval::contains(const Rational& x) const {
  if (lo_ && (lo_closed_ ? x < *lo_ : x <= *lo_)) return false;
  if (hi_ && (hi_closed_ ? x > *hi_ : x >= *hi_)) return false;
  return true;
}

std::optional<Interval> Interval::clip(const Rational& a, const Rational& b) const {
  Rational lo = lo_ ? exact::max(*lo_, a) : a;
  Rational hi = hi_ ? exact::min(*hi_, b) : b;
  if (!(lo < hi)) return std::nullopt;
  return closed(std::move(lo), std::move(hi));
}

std::string Interval::lo_token() const { return lo_ ? lo_->to_string() : "-inf"; }
std::string Interval::hi_token() const { return hi_ ? hi_->to_string() : "inf"; }

std::string Interval::to_string() const {
  return std::string(lo_closed_ ? "[" : "(") + lo_token() + ", " + hi_token() + (hi_closed_ ? "]" : ")");
}

Rational CalkinWilf::next() {
  if (!current_) {
    current_ = Rational(1);
  } else {
    // Successor of x is 1 / (2⌊x⌋ − x + 1).
    const Rational fl(current_->floor());
    current_ = (Rational(2) * fl - *current_ + Rational(1)).inverse();
  }
  return *current_;
}

RationalEnumerator::RationalEnumerator(Interval interval) : interval_(std::move(interval)) {}

RationalEnumerator RationalEnumerator::naturals() { return RationalEnumerator(); }

std::optional<Rational> RationalEnumerator::next() {
  if (!interval_) {
    natural_ += 1;
    ++produced_;
    return Rational(natural_);
  }
  const Interval& iv = *interval_;
  // Endpoint stage: 0 = lo, 1 = hi, 2 = interior.
  while (endpoint_stage_ < 2) {
    const int stage = endpoint_stage_++;
    if (stage == 0 && iv.lo() && iv.lo_closed()) {
      ++produced_;
      return *iv.lo();
    }
    if (stage == 1 && iv.hi() && iv.hi_closed() && !(iv.lo() && *iv.lo() == *iv.hi())) {
      ++produced_;
      return *iv.hi();
    }
    if (stage == 1 && !iv.lo() && !iv.hi()) {
      ++produced_;
      return Rational(0);
    }
  }
  if (iv.lo() && iv.hi() && *iv.lo() == *iv.hi()) return std::nullopt;

  ++produced_;
  if (iv.bounded()) {
    const Rational width = *iv.hi() - *iv.lo();
    Rational t = cw_.next();
    while (!(t < Rational(1))) t = cw_.next();
    return *iv.lo() + width * t;
  }
  if (iv.lo()) return *iv.lo() + cw_.next();
  if (iv.hi()) return *iv.hi() - cw_.next();
  if (pending_negative_) {
    Rational out = -*pending_negative_;
    pending_negative_.reset();
    return out;
  }
  Rational t = cw_.next();
  pending_negative_ = t;
  return t;
}

FareyEnumerator::FareyEnumerator(Interval interval) : interval_(std::move(interval)) {
  if (!interval_.bounded()) throw InvalidArgument("denominator-order enumeration needs a bounded interval");
  den_ = 0;
  num_ = 1;
  num_end_ = 0;
}

void FareyEnumerator::start_denominator() {
  den_ += 1;
  const Rational lo_scaled = *interval_.lo() * Rational(den_);
  const Rational hi_scaled = *interval_.hi() * Rational(den_);
  num_ = lo_scaled.ceil();
  num_end_ = hi_scaled.floor();
}

Rational FareyEnumerator::next() {
  for (;;) {
    while (num_ > num_end_) start_denominator();
    const Integer n = num_;
    num_ += 1;
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) continue;
    Rational candidate(n, den_);
    if (interval_.contains(candidate)) return candidate;
  }
}

DyadicSchedule::DyadicSchedule(Interval interval) : interval_(std::move(interval)) {}

void DyadicSchedule::start_level() {
  for (;;) {
    ++level_;
    if (level_ > 62) throw CapExceeded("density schedule ran past level 62 without meeting the interval");
    const Rational bound(Integer(Integer(1) << level_));
    const auto clipped = interval_.clip(-bound, bound);
    if (!clipped) continue;
    left_ = *clipped->lo();
    right_ = *clipped->hi();
    width_ = bound.inverse();
    const Rational cells = (right_ - left_) / width_;
    count_ = cells.ceil().get_ui();
    k_ = 0;
    return;
  }
}

DyadicSchedule::Entry DyadicSchedule::next() {
  if (k_ >= count_) start_level();
  ++k_;
  const Rational a = left_ + width_ * Rational(Integer(k_ - 1));
  const Rational b = exact::min(left_ + width_ * Rational(Integer(k_)), right_);
  return {level_, k_, Interval::closed(a, b)};
}

}  // namespace costas::ruler
