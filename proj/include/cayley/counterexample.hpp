#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cayley/errors.hpp"
#include "cayley/groups.hpp"
#include "cayley/vertex_set.hpp"

namespace cayley {

using Rational = boost::rational<std::int64_t>;

/// Accepts "p/q", integers, decimals ("0.125") and scientific ("1e-6"), exactly.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

struct LatticeMeasure {
  std::uint64_t size = 0;
  std::uint64_t boundary_size = 0;
  std::uint64_t depth = 0;
};

/// Subset of Z^2 contained in a box, stored as a bitmap. The outermost ring
/// of cells must be empty so that the boundary of the set fits in the box.
class LatticeBitmap {
 public:
  /// Cells (x0 .. x0+width-1) x (y0 .. y0+height-1).
  LatticeBitmap(std::int64_t x0, std::int64_t y0, std::int64_t width, std::int64_t height);

  std::int64_t x0() const { return x0_; }
  std::int64_t y0() const { return y0_; }
  std::int64_t width() const { return width_; }
  std::int64_t height() const { return height_; }

  void set(std::int64_t x, std::int64_t y, bool value = true);
  bool test(std::int64_t x, std::int64_t y) const;

  /// Bitmap of `a` (host must be z^2) with a one-cell empty margin.
  static LatticeBitmap from_set(const VertexSet& a);

 private:
  friend LatticeMeasure measure(const LatticeBitmap& bitmap);
  std::size_t index(std::int64_t x, std::int64_t y) const;

  std::int64_t x0_, y0_, width_, height_;
  std::vector<std::uint8_t> cells_;
};

/// |A|, |dA| and depth(A) by neighbor scan and multi-source BFS on the bitmap.
LatticeMeasure measure(const LatticeBitmap& bitmap);

namespace counterexample {

/// Largest bitmap (in cells) the dense oracle will allocate.
inline constexpr std::size_t kDefaultGridCells = std::size_t{1} << 25;
/// Default upper limit on i = k for find_params.
inline constexpr std::int64_t kDefaultCap = std::int64_t{1} << 20;

/// Perforation spacing `i` and number of cells per side `k`; both >= 2.
struct GridParams {
  std::int64_t i = 2;
  std::int64_t k = 2;

  /// Throws DomainError unless i, k >= 2.
  static GridParams make(std::int64_t i, std::int64_t k);

  std::int64_t side() const { return k * i; }
  friend auto operator<=>(const GridParams&, const GridParams&) = default;
};

/// The square {0..ki}^2 with the interior lattice points (mi, ni),
/// 1 <= m, n <= k-1, removed.
VertexSet build(const GridParams& p);
LatticeBitmap build_bitmap(const GridParams& p, std::size_t cell_cap = kDefaultGridCells);

/// (ki+1)^2 - (k-1)^2, the element count of build(p).
std::uint64_t enumerated_size(const GridParams& p);
/// (ki)^2 - (k-1)^2
std::uint64_t size_formula_ki_squared(const GridParams& p);
/// (k-1)^2 + 4(ki+1)
std::uint64_t boundary_closed_form(const GridParams& p);

/// Exact depth in O(ki) time. In the L1 metric the distance to the hole
/// lattice splits as h(x) + h(y) and the distance to the outside of the square
/// is min(o(x), o(y)); depth >= D iff some x with o(x) >= D has 2h(x) >= D.
std::uint64_t depth_by_distance_profile(const GridParams& p);

struct CounterexampleStats {
  GridParams params;
  std::uint64_t size_a = 0;         ///< enumerated
  std::uint64_t boundary_size = 0;  ///< oracle
  std::uint64_t depth_oracle = 0;   ///< BFS oracle
  Rational ratio;                   ///< boundary_size * depth_oracle / size_a
  /// Oracle |dA| equals (k-1)^2 + 4(ki+1) and |A| equals (ki+1)^2 - (k-1)^2.
  bool closed_forms_match = false;

  std::uint64_t boundary_formula = 0;
  std::uint64_t size_formula_ki_squared = 0;
  bool size_matches_ki_squared = false;
  Rational half_i;
  bool depth_at_most_half_i = false;
};

/// Oracle measurements of build(p) on a dense bitmap.
CounterexampleStats stats(const GridParams& p, std::size_t cell_cap = kDefaultGridCells);

/// Raised when no diagonal parameters up to the cap reach the target ratio.
class SearchExhausted : public ResourceError {
 public:
  SearchExhausted(const std::string& what, GridParams best, Rational best_ratio)
      : ResourceError(what), best_(best), best_ratio_(best_ratio) {}
  GridParams best() const { return best_; }
  Rational best_ratio() const { return best_ratio_; }

 private:
  GridParams best_;
  Rational best_ratio_;
};

struct FindResult {
  GridParams params;
  CounterexampleStats stats;   ///< BFS-oracle verification of the hit
  Rational scan_ratio;         ///< ratio from closed forms + distance-profile depth
  std::uint64_t evaluated = 0; ///< diagonal candidates scanned
  /// The oracle ratio equals the scan ratio and is below c.
  bool verified = false;
};

/// First i = k = 2, 3, ... whose ratio is below c, verified by stats().
/// Throws SearchExhausted past `cap`, DomainError for c <= 0.
FindResult find_params(const Rational& c, std::int64_t cap = kDefaultCap,
                       std::size_t cell_cap = kDefaultGridCells);

struct TorusEmbedding {
  GridParams params;
  std::int64_t n = 0;  ///< 3ki + 1
  GroupGraph host;
  VertexSet set;
  LatticeMeasure lattice;
  LatticeMeasure torus;
  bool preserved = false;    ///< (|A|, |dA|, depth) identical
  bool half_volume = false;  ///< 2|A| <= n^2
  Rational ratio;            ///< on the torus
};

/// Reduces build(p) mod n = 3ki+1 into torus:n x n and re-measures it there.
TorusEmbedding embed_torus(const GridParams& p);

/// stats() for every 2 <= i <= imax, 2 <= k <= kmax, sorted by (i, k).
std::vector<CounterexampleStats> sweep(std::int64_t imax, std::int64_t kmax,
                                       std::size_t cell_cap = kDefaultGridCells);

}  // namespace counterexample
}  // namespace cayley
