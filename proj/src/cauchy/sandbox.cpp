#include "costas/cauchy/sandbox.hpp"

#include <set>

#include "costas/error.hpp"
#include "costas/exact/quadratic.hpp"

namespace costas::cauchy {

Sandbox::Sandbox(std::vector<BasisSymbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidArgument("sandbox needs at least one symbol");
  if (symbols_.size() > kMaxSymbols) throw InvalidArgument("sandbox holds at most 16 symbols");
  std::set<std::int64_t> radicands;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    if (s.radicand < 1 || !exact::is_squarefree(Integer(static_cast<long>(s.radicand))))
      throw InvalidArgument("radicand " + std::to_string(s.radicand) + " is not a squarefree positive integer");
    if (!radicands.insert(s.radicand).second) throw InvalidArgument("repeated radicand " + std::to_string(s.radicand));
    if (!position_.emplace(s.id, i).second) throw InvalidArgument("repeated symbol id " + std::to_string(s.id));
  }
}

Sandbox Sandbox::standard(std::size_t k) {
  std::vector<BasisSymbol> symbols;
  for (long r = 1; symbols.size() < k; ++r)
    if (exact::is_squarefree(Integer(r))) symbols.push_back({static_cast<int>(symbols.size()), r});
  return Sandbox(std::move(symbols));
}

std::size_t Sandbox::position(int id) const {
  const auto it = position_.find(id);
  if (it == position_.end()) throw InvalidArgument("unknown basis symbol " + std::to_string(id));
  return it->second;
}

HamelVector HamelVector::basis(int id, Rational q) {
  HamelVector v;
  v.set(id, std::move(q));
  return v;
}

Rational HamelVector::coord(int id) const {
  const auto it = coords_.find(id);
  return it == coords_.end() ? Rational(0) : it->second;
}

void HamelVector::set(int id, Rational q) {
  if (q.is_zero()) coords_.erase(id);
  else coords_[id] = std::move(q);
}

HamelVector& HamelVector::operator+=(const HamelVector& rhs) {
  for (const auto& [id, q] : rhs.coords_) set(id, coord(id) + q);
  return *this;
}

HamelVector& HamelVector::operator-=(const HamelVector& rhs) {
  for (const auto& [id, q] : rhs.coords_) set(id, coord(id) - q);
  return *this;
}

HamelVector& HamelVector::operator*=(const Rational& q) {
  if (q.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [id, c] : coords_) c *= q;
  return *this;
}

HamelVector HamelVector::operator-() const { return Rational(-1) * *this; }

std::string HamelVector::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [id, q] : coords_) {
    if (!out.empty()) out += " + ";
    out += q.to_string() + "*b" + std::to_string(id);
  }
  return out;
}

QLinearMap::QLinearMap(Sandbox sandbox, std::vector<int> perm, std::vector<Rational> scale)
    : sandbox_(std::move(sandbox)), perm_(std::move(perm)), scale_(std::move(scale)) {
  if (perm_.size() != sandbox_.size() || scale_.size() != sandbox_.size())
    throw InvalidArgument("map needs one image and one scale per symbol");
  std::set<int> images;
  for (const int target : perm_) {
    if (!sandbox_.has(target)) throw InvalidArgument("map image " + std::to_string(target) + " is not a symbol");
    if (!images.insert(target).second) throw InvalidArgument("map permutation repeats " + std::to_string(target));
  }
  for (const auto& s : scale_)
    if (s.is_zero()) throw InvalidArgument("map scales must be nonzero");
}

QLinearMap QLinearMap::identity(Sandbox sandbox, Rational scale) {
  std::vector<int> perm;
  for (const auto& s : sandbox.symbols()) perm.push_back(s.id);
  std::vector<Rational> scales(sandbox.size(), scale);
  return QLinearMap(std::move(sandbox), std::move(perm), std::move(scales));
}

QLinearMap QLinearMap::swap(Sandbox sandbox) {
  if (sandbox.size() < 2) throw InvalidArgument("swap map needs two symbols");
  std::vector<int> perm;
  for (const auto& s : sandbox.symbols()) perm.push_back(s.id);
  std::swap(perm[0], perm[1]);
  std::vector<Rational> scales(sandbox.size(), Rational(1));
  return QLinearMap(std::move(sandbox), std::move(perm), std::move(scales));
}

HamelVector QLinearMap::apply(const HamelVector& v) const {
  HamelVector out;
  for (const auto& [id, q] : v.coords()) {
    const std::size_t i = sandbox_.position(id);
    out.set(perm_[i], q * scale_[i]);
  }
  return out;
}

QLinearMap QLinearMap::inverse() const {
  std::vector<int> perm(perm_.size());
  std::vector<Rational> scale(scale_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const std::size_t j = sandbox_.position(perm_[i]);
    perm[j] = sandbox_.symbols()[i].id;
    scale[j] = scale_[i].inverse();
  }
  return QLinearMap(sandbox_, std::move(perm), std::move(scale));
}

bool QLinearMap::is_scalar() const {
  std::vector<int> ids;
  for (const auto& s : sandbox_.symbols()) ids.push_back(s.id);
  return is_scalar_on(ids);
}

bool QLinearMap::is_scalar_on(const std::vector<int>& ids) const {
  const Rational* common = nullptr;
  for (const int id : ids) {
    const std::size_t i = sandbox_.position(id);
    if (perm_[i] != id) return false;
    if (common && !(*common == scale_[i])) return false;
    common = &scale_[i];
  }
  return true;
}

bool additivity_check(const QLinearMap& map, const HamelVector& v1, const HamelVector& v2) {
  return map.apply(v1 + v2) == map.apply(v1) + map.apply(v2);
}

bool homogeneity_check(const QLinearMap& map, const Rational& q, const HamelVector& v) {
  return map.apply(q * v) == q * map.apply(v);
}

}  // namespace costas::cauchy
