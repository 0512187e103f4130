#include "costas/cloud/cloud.hpp"

#include <map>
#include <unordered_set>

#include "costas/error.hpp"
#include "costas/ruler/enumeration.hpp"

namespace costas::cloud {

namespace {

using Vector = std::pair<Rational, Rational>;

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept {
    return v.first.hash() * 0x9e3779b97f4a7c15ULL ^ v.second.hash();
  }
};

// Representative of ±(dx, dy): dx > 0, or dx = 0 and dy > 0.
Vector canonical(Rational dx, Rational dy) {
  if (dx.sign() < 0 || (dx.is_zero() && dy.sign() < 0)) return {-dx, -dy};
  return {std::move(dx), std::move(dy)};
}

// First unused rational of a fixed enumeration; the cursor only moves forward
// because everything before it has been used.
class Cursor {
 public:
  explicit Cursor(ruler::Interval domain) : stream_(std::move(domain)) {}

  std::pair<std::uint64_t, Rational> first_unused(const std::set<Rational>& used) {
    for (;;) {
      while (index_ >= seen_.size()) seen_.push_back(*stream_.next());
      if (!used.contains(seen_[index_])) return {index_, seen_[index_]};
      ++index_;
    }
  }

 private:
  ruler::RationalEnumerator stream_;
  std::vector<Rational> seen_;
  std::uint64_t index_ = 0;
};

// Unused rationals of a half-open cell side, by denominator then numerator.
class CellStream {
 public:
  CellStream(const Rational& lo, const Rational& hi, const std::set<Rational>& used)
      : farey_(ruler::Interval::half_open(lo, hi)), used_(used) {}

  const Rational& at(std::size_t i) {
    while (items_.size() <= i) {
      Rational r = farey_.next();
      if (!used_.contains(r)) items_.push_back(std::move(r));
    }
    return items_[i];
  }

 private:
  ruler::FareyEnumerator farey_;
  const std::set<Rational>& used_;
  std::vector<Rational> items_;
};

class Builder {
 public:
  Builder(Geometry geometry, const BuildOptions& options)
      : options_(options),
        x_cursor_(domain(geometry)),
        y_cursor_(domain(geometry)) {
    state_.geometry = geometry;
  }

  void run_stage(unsigned n) {
    const Rational side = cell_side(state_.geometry, n);
    const Rational origin = grid_origin(state_.geometry, n);
    const std::uint64_t cells = std::uint64_t{1} << n;
    const Rational end = origin + side * Rational(Integer(static_cast<unsigned long>(cells)));
    std::vector<std::vector<bool>> occupied(cells, std::vector<bool>(cells, false));
    const auto lo = [&](std::uint64_t i) { return origin + side * Rational(Integer(static_cast<unsigned long>(i))); };
    const auto index_of = [&](const Rational& r) {
      return static_cast<std::uint64_t>(((r - origin) / side).floor().get_ui());
    };
    const auto inside = [&](const Rational& r) { return !(r < origin) && r < end; };

    // x coverage: the first unused rational, in its column, lowest workable row.
    if (auto [idx, r] = x_cursor_.first_unused(state_.used_x); inside(r)) {
      const std::uint64_t j = index_of(r);
      bool done = false;
      for (std::uint64_t k = 0; k < cells && !done; ++k) {
        if (occupied[k][j]) continue;
        CellStream ys(lo(k), lo(k + 1), state_.used_y);
        for (std::uint64_t t = 0; t < options_.candidate_cap; ++t) {
          const Rational& y = ys.at(t);
          if (try_place(r, y, n, j, k)) {
            occupied[k][j] = true;
            done = true;
            break;
          }
        }
      }
      if (!done) throw CapExceeded("cloud: no row accepts x coverage value " + r.to_string());
    }

    // y coverage: the first unused rational, in its row, first free column.
    if (auto [idx, s] = y_cursor_.first_unused(state_.used_y); inside(s)) {
      const std::uint64_t k = index_of(s);
      bool done = false;
      for (std::uint64_t j = 0; j < cells && !done; ++j) {
        if (occupied[k][j]) continue;
        CellStream xs(lo(j), lo(j + 1), state_.used_x);
        for (std::uint64_t t = 0; t < options_.candidate_cap; ++t) {
          const Rational& x = xs.at(t);
          if (try_place(x, s, n, j, k)) {
            occupied[k][j] = true;
            done = true;
            break;
          }
        }
      }
      if (!done) throw CapExceeded("cloud: no column accepts y coverage value " + s.to_string());
    }

    for (std::uint64_t k = 0; k < cells; ++k) {
      for (std::uint64_t j = 0; j < cells; ++j) {
        if (occupied[k][j]) continue;
        fill_cell(n, j, k, lo(j), lo(j + 1), lo(k), lo(k + 1));
        occupied[k][j] = true;
      }
    }
    state_.stages = n;
    state_.next_x_index = x_cursor_.first_unused(state_.used_x).first;
    state_.next_y_index = y_cursor_.first_unused(state_.used_y).first;
  }

  CloudState take() { return std::move(state_); }

 private:
  static ruler::Interval domain(Geometry g) {
    return g == Geometry::unit ? ruler::Interval::half_open(Rational(0), Rational(1)) : ruler::Interval::real_line();
  }

  // Cantor diagonal over (x index, y index) pairs of the two cell streams.
  void fill_cell(unsigned n, std::uint64_t j, std::uint64_t k, const Rational& x0, const Rational& x1,
                 const Rational& y0, const Rational& y1) {
    CellStream xs(x0, x1, state_.used_x);
    CellStream ys(y0, y1, state_.used_y);
    std::uint64_t tried = 0;
    for (std::size_t d = 0;; ++d) {
      for (std::size_t a = 0; a <= d; ++a) {
        if (++tried > options_.candidate_cap)
          throw CapExceeded("cloud: cell (" + std::to_string(j) + "," + std::to_string(k) + ") of stage " +
                            std::to_string(n) + " exceeded the candidate cap");
        if (try_place(xs.at(a), ys.at(d - a), n, j, k)) return;
      }
    }
  }

  bool try_place(const Rational& x, const Rational& y, unsigned n, std::uint64_t j, std::uint64_t k) {
    std::vector<Vector> fresh;
    fresh.reserve(state_.points.size());
    std::unordered_set<Vector, VectorHash> local;
    for (const auto& p : state_.points) {
      Vector v = canonical(x - p.x, y - p.y);
      if (vectors_.contains(v) || !local.insert(v).second) return false;
      fresh.push_back(std::move(v));
    }
    for (auto& v : fresh) vectors_.insert(std::move(v));
    state_.points.push_back({x, y, n, j, k});
    state_.used_x.insert(x);
    state_.used_y.insert(y);
    return true;
  }

  BuildOptions options_;
  CloudState state_;
  Cursor x_cursor_;
  Cursor y_cursor_;
  std::unordered_set<Vector, VectorHash> vectors_;
};

CloudState build(Geometry geometry, unsigned stages, unsigned cap, const BuildOptions& options) {
  if (stages > cap)
    throw InvalidArgument("cloud: at most " + std::to_string(cap) + " stages supported, got " + std::to_string(stages));
  Builder builder(geometry, options);
  for (unsigned n = 1; n <= stages; ++n) builder.run_stage(n);
  return builder.take();
}

}  // namespace

CloudReport verify_cloud(const std::vector<std::pair<Rational, Rational>>& points) {
  {
    std::set<std::pair<Rational, Rational>> distinct(points.begin(), points.end());
    if (distinct.size() != points.size()) throw InvalidArgument("verify_cloud: duplicate points");
  }
  CloudReport report;
  // Δx ↦ (Δy ↦ first ordered pair).
  std::map<Rational, std::map<Rational, std::pair<std::size_t, std::size_t>>> table;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (a == b) continue;
      Rational dx = points[b].first - points[a].first;
      Rational dy = points[b].second - points[a].second;
      const bool forward = dx.sign() > 0 || (dx.is_zero() && dy.sign() > 0);
      if (!forward) continue;
      auto& column = table[dx];
      auto [it, inserted] = column.try_emplace(dy, a, b);
      if (!inserted) report.collisions.push_back({dx, dy, it->second, {a, b}});
    }
  }
  report.ok = report.collisions.empty();
  return report;
}

CloudReport verify_cloud(const std::vector<CloudPoint>& points) {
  std::vector<std::pair<Rational, Rational>> xy;
  xy.reserve(points.size());
  for (const auto& p : points) xy.emplace_back(p.x, p.y);
  return verify_cloud(xy);
}

CloudState build_cloud(unsigned stages, const BuildOptions& options) {
  return build(Geometry::unit, stages, 5, options);
}

CloudState expanding_cloud(unsigned stages, const BuildOptions& options) {
  return build(Geometry::expanding, stages, 4, options);
}

Rational cell_side(Geometry geometry, unsigned stage) {
  if (geometry == Geometry::expanding) return Rational(2);
  return Rational(Integer(1), Integer(Integer(1) << stage));
}

Rational grid_origin(Geometry geometry, unsigned stage) {
  if (geometry == Geometry::expanding) return -Rational(Integer(Integer(1) << stage));
  return Rational(0);
}

std::vector<std::vector<std::vector<bool>>> cell_occupancy(const CloudState& state) {
  std::vector<std::vector<std::vector<bool>>> out;
  for (unsigned n = 1; n <= state.stages; ++n) {
    const std::uint64_t cells = std::uint64_t{1} << n;
    std::vector<std::vector<bool>> grid(cells, std::vector<bool>(cells, false));
    const Rational side = cell_side(state.geometry, n);
    const Rational origin = grid_origin(state.geometry, n);
    for (const auto& p : state.points) {
      if (p.stage != n) continue;
      const Integer j = ((p.x - origin) / side).floor();
      const Integer k = ((p.y - origin) / side).floor();
      if (j < 0 || k < 0 || j >= cells || k >= cells) continue;
      grid[k.get_ui()][j.get_ui()] = true;
    }
    out.push_back(std::move(grid));
  }
  return out;
}

}  // namespace costas::cloud
