#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "costas/exact/rational.hpp"

namespace costas::cloud {

using exact::Integer;
using exact::Rational;

struct CloudPoint {
  Rational x;
  Rational y;
  /// Stage that placed the point (1-based) and its grid cell (column j, row k).
  unsigned stage = 0;
  std::uint64_t j = 0;
  std::uint64_t k = 0;
  friend bool operator==(const CloudPoint&, const CloudPoint&) = default;
};

/// unit: stage n splits [0,1)² into 4ⁿ cells of side 2⁻ⁿ.
/// expanding: stage n splits [−2ⁿ, 2ⁿ)² into 4ⁿ cells of side 2.
enum class Geometry { unit, expanding };

struct CloudState {
  Geometry geometry = Geometry::unit;
  unsigned stages = 0;
  std::vector<CloudPoint> points;
  std::set<Rational> used_x;
  std::set<Rational> used_y;
  /// Index of the first unused rational in the canonical enumeration of the
  /// coordinate domain, for x and for y.
  std::uint64_t next_x_index = 0;
  std::uint64_t next_y_index = 0;
};

/// Two ordered pairs of points with the same difference vector.
struct VectorCollision {
  Rational dx;
  Rational dy;
  std::pair<std::size_t, std::size_t> first;   // (from, to) point indices
  std::pair<std::size_t, std::size_t> second;
};

struct CloudReport {
  bool ok = true;
  std::vector<VectorCollision> collisions;
};

/// Every ordered pair of distinct points must have its own difference
/// vector. A repeat in one direction implies the mirrored repeat, so each
/// collision is reported once, for the vector with Δx > 0 (or Δx = 0,
/// Δy > 0). Throws InvalidArgument for duplicate points.
CloudReport verify_cloud(const std::vector<std::pair<Rational, Rational>>& points);
CloudReport verify_cloud(const std::vector<CloudPoint>& points);

struct BuildOptions {
  /// Candidate points tried per cell before giving up.
  std::uint64_t candidate_cap = 1'000'000;
};

/// Runs stages 1..stages of the grid-refinement construction on [0,1)²:
/// one new point in every cell, coordinates never reused, distinct
/// difference vectors throughout. Cells are half-open. The first unused
/// rationals of the enumeration of ℚ ∩ [0,1) are placed first, in their
/// column (x) and row (y); the other cells follow row by row, each taking
/// the first admissible pair of unused rationals from its two
/// denominator-ordered streams. stages ≤ 5; CapExceeded on a failed search.
CloudState build_cloud(unsigned stages, const BuildOptions& options = {});

/// Same construction on the growing squares [−2ⁿ, 2ⁿ)², coverage taken from
/// the enumeration of ℚ (skipped when the rational lies outside the square).
/// stages ≤ 4.
CloudState expanding_cloud(unsigned stages, const BuildOptions& options = {});

/// Side length and lower-left corner of stage n cells.
Rational cell_side(Geometry geometry, unsigned stage);
Rational grid_origin(Geometry geometry, unsigned stage);

/// For each stage 1..state.stages, a 2ⁿ×2ⁿ matrix [row k][column j] that is
/// true where some point of that stage lies in the cell, recomputed from the
/// coordinates.
std::vector<std::vector<std::vector<bool>>> cell_occupancy(const CloudState& state);

}  // namespace costas::cloud
