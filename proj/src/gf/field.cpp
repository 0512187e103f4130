#include "costas/gf/field.hpp"

#include <algorithm>
#include <sstream>

#include "costas/error.hpp"
#include "costas/gf/number_theory.hpp"

namespace costas::gf {

namespace {

constexpr std::uint64_t kMaxFieldOrder = 1ULL << 20U;
constexpr std::uint64_t kMaxTableOrder = 1ULL << 16U;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Residue inv_mod(Residue a, Residue p) { return static_cast<Residue>(pow_mod(a, p - 2, p)); }

// Remainder of a modulo f (f nonzero), both over GF(p).
Poly poly_rem(Poly a, const Poly& f, Residue p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const Residue lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = c * f[i] % p;
      a[shift + i] = static_cast<Residue>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, Residue p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly poly_gcd(Poly a, Poly b, Residue p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Coefficient tuples ordered constant term first, c0 most significant.
Poly tuple_at(std::uint64_t t, Residue p, unsigned m) {
  Poly c(m, 0);
  for (unsigned i = m; i-- > 0;) {
    c[i] = static_cast<Residue>(t % p);
    t /= p;
  }
  return c;
}

void check_prime_power(Residue p, unsigned m) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime, got " + std::to_string(p));
  if (m == 0) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw InvalidArgument("field order p^m exceeds 2^20");
  }
}

}  // namespace

bool is_irreducible(const Poly& f_in, Residue p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) throw InvalidArgument("irreducibility test needs degree >= 1");
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  const Poly x = {0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    // h ← h^p mod f, so h = x^(p^i).
    Poly power = {1};
    Poly base = h;
    for (Residue e = p; e != 0; e >>= 1U) {
      if (e & 1U) power = poly_rem(poly_mul(power, base, p), f, p);
      base = poly_rem(poly_mul(base, base, p), f, p);
    }
    h = power;
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

Poly find_irreducible(Residue p, unsigned m) {
  check_prime_power(p, m);
  if (m == 1) return {0, 1};
  const std::uint64_t count = checked_pow(p, m);
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f = tuple_at(t, p, m);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

std::string poly_to_string(const Poly& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || f[i] != 1) os << f[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

ExtFieldContext::ExtFieldContext(Residue p, Poly modulus)
    : p_(p), m_(static_cast<unsigned>(modulus.size() - 1)), q_(checked_pow(p, m_)), modulus_(std::move(modulus)),
      factors_(distinct_prime_factors(q_ - 1)) {}

FieldPtr ExtFieldContext::make(Residue p, unsigned m) {
  return FieldPtr(new ExtFieldContext(p, find_irreducible(p, m)));
}

FieldPtr ExtFieldContext::make(Residue p, Poly modulus) {
  trim(modulus);
  if (modulus.size() < 2) throw InvalidArgument("modulus must have degree >= 1");
  check_prime_power(p, static_cast<unsigned>(modulus.size() - 1));
  if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
  for (const Residue c : modulus)
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  if (!is_irreducible(modulus, p)) throw InvalidArgument("modulus " + poly_to_string(modulus) + " is reducible");
  return FieldPtr(new ExtFieldContext(p, std::move(modulus)));
}

FieldElem ExtFieldContext::zero() const { return FieldElem(shared_from_this(), Poly(m_, 0)); }

FieldElem ExtFieldContext::one() const {
  Poly c(m_, 0);
  c[0] = 1 % p_;
  return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtFieldContext::x() const {
  Poly c(m_, 0);
  if (m_ >= 2) c[1] = 1;
  return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtFieldContext::element(const Poly& coeffs) const {
  if (coeffs.size() > m_) throw InvalidArgument("too many coefficients for GF(" + std::to_string(q_) + ")");
  Poly c(m_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range [0, p)");
    c[i] = coeffs[i];
  }
  return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtFieldContext::from_integer(long long value) const {
  const long long p = p_;
  Poly c(m_, 0);
  c[0] = static_cast<Residue>(((value % p) + p) % p);
  return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtFieldContext::from_index(std::uint64_t index) const {
  if (index >= q_) throw InvalidArgument("element index out of range");
  Poly c(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = static_cast<Residue>(index % p_);
    index /= p_;
  }
  return FieldElem(shared_from_this(), std::move(c));
}

std::vector<FieldElem> ExtFieldContext::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (std::uint64_t t = 0; t < q_; ++t) out.emplace_back(shared_from_this(), tuple_at(t, p_, m_));
  return out;
}

void ExtFieldContext::add_into(Poly& acc, const Poly& b) const {
  for (unsigned i = 0; i < m_; ++i) acc[i] = (acc[i] + b[i]) % p_;
}

Poly ExtFieldContext::sub(const Poly& a, const Poly& b) const {
  Poly out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = (a[i] + p_ - b[i]) % p_;
  return out;
}

Poly ExtFieldContext::mul(const Poly& a, const Poly& b) const {
  if (m_ == 1) return {static_cast<Residue>(static_cast<std::uint64_t>(a[0]) * b[0] % p_)};
  std::vector<std::uint64_t> acc(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
  }
  // modulus is monic of degree m.
  for (std::size_t k = acc.size(); k-- > m_;) {
    const std::uint64_t c = acc[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= m_; ++i) acc[k - m_ + i] = (acc[k - m_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  return Poly(acc.begin(), acc.begin() + m_);
}

FieldElem::FieldElem(FieldPtr ctx, Poly coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw InvalidArgument("field element without context");
  if (coeffs_.size() != ctx_->m()) throw InvalidArgument("coefficient list length must equal m");
  for (const Residue c : coeffs_)
    if (c >= ctx_->p()) throw InvalidArgument("coefficient out of range [0, p)");
}

std::uint64_t FieldElem::index() const {
  std::uint64_t out = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) out = out * ctx_->p() + coeffs_[i];
  return out;
}

bool FieldElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

bool FieldElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Residue c) { return c == 0; });
}

void FieldElem::require_same(const FieldElem& other) const {
  if (ctx_ != other.ctx_ && !ctx_->same_field(*other.ctx_))
    throw InvalidArgument("field elements from different contexts");
}

FieldElem FieldElem::operator-() const { return FieldElem(ctx_, ctx_->sub(Poly(coeffs_.size(), 0), coeffs_)); }

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  require_same(rhs);
  ctx_->add_into(coeffs_, rhs.coeffs_);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  require_same(rhs);
  coeffs_ = ctx_->sub(coeffs_, rhs.coeffs_);
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  require_same(rhs);
  coeffs_ = ctx_->mul(coeffs_, rhs.coeffs_);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in GF(" + std::to_string(ctx_->q()) + ")");
  return pow(ctx_->q() - 2);
}

FieldElem FieldElem::pow(std::uint64_t exponent) const {
  FieldElem result = ctx_->one();
  FieldElem base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  a.require_same(b);
  return a.coeffs_ == b.coeffs_;
}

bool operator<(const FieldElem& a, const FieldElem& b) {
  a.require_same(b);
  return a.coeffs_ < b.coeffs_;
}

std::string FieldElem::to_string() const {
  if (coeffs_.size() == 1) return std::to_string(coeffs_[0]);
  return poly_to_string(coeffs_);
}

bool is_primitive(const FieldElem& a) {
  if (a.is_zero()) throw DomainError("zero is never primitive");
  const std::uint64_t order = a.ctx().q() - 1;
  for (const std::uint64_t l : a.ctx().group_order_factors())
    if (a.pow(order / l).is_one()) return false;
  return true;
}

std::vector<FieldElem> primitive_elements(const FieldPtr& ctx) {
  if (ctx->q() > kMaxTableOrder) throw InvalidArgument("primitive element enumeration limited to q <= 2^16");
  std::vector<FieldElem> out;
  for (const FieldElem& e : ctx->elements())
    if (!e.is_zero() && is_primitive(e)) out.push_back(e);
  return out;
}

FieldElem first_primitive(const FieldPtr& ctx) {
  for (std::uint64_t t = 0; t < ctx->q(); ++t) {
    FieldElem e(ctx, tuple_at(t, ctx->p(), ctx->m()));
    if (!e.is_zero() && is_primitive(e)) return e;
  }
  throw Error("multiplicative group has no generator");  // unreachable
}

DlogTable::DlogTable(const FieldElem& g) : ctx_(g.ctx_ptr()) {
  const std::uint64_t q = ctx_->q();
  if (q > kMaxTableOrder) throw InvalidArgument("discrete log tables limited to q <= 2^16");
  if (g.is_zero()) throw InvalidArgument("zero is not a primitive element");
  log_by_index_.assign(q, -1);
  powers_.reserve(q - 1);
  FieldElem cur = ctx_->one();
  for (std::uint64_t e = 0; e + 1 < q; ++e) {
    const std::uint64_t idx = cur.index();
    if (log_by_index_[idx] != -1)
      throw InvalidArgument(g.to_string() + " is not a primitive element of GF(" + std::to_string(q) + ")");
    log_by_index_[idx] = static_cast<std::int64_t>(e);
    powers_.push_back(cur);
    cur *= g;
  }
  if (!cur.is_one()) throw InvalidArgument(g.to_string() + " is not a primitive element");
}

std::uint64_t DlogTable::log(const FieldElem& a) const {
  if (!a.ctx().same_field(*ctx_)) throw InvalidArgument("element from a different field");
  if (a.is_zero()) throw DomainError("discrete log of zero");
  return static_cast<std::uint64_t>(log_by_index_[a.index()]);
}

}  // namespace costas::gf
