#include "cayley/counterexample.hpp"

#include <algorithm>
#include <limits>

#include "cayley/isoperimetry.hpp"

namespace cayley {

LatticeBitmap::LatticeBitmap(std::int64_t x0, std::int64_t y0, std::int64_t width, std::int64_t height)
    : x0_(x0), y0_(y0), width_(width), height_(height) {
  if (width < 1 || height < 1) throw DomainError("bitmap dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

std::size_t LatticeBitmap::index(std::int64_t x, std::int64_t y) const {
  return static_cast<std::size_t>(y - y0_) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x - x0_);
}

void LatticeBitmap::set(std::int64_t x, std::int64_t y, bool value) {
  if (x < x0_ || y < y0_ || x >= x0_ + width_ || y >= y0_ + height_) {
    throw DomainError("cell (" + std::to_string(x) + "," + std::to_string(y) + ") outside bitmap");
  }
  cells_[index(x, y)] = value ? 1 : 0;
}

bool LatticeBitmap::test(std::int64_t x, std::int64_t y) const {
  if (x < x0_ || y < y0_ || x >= x0_ + width_ || y >= y0_ + height_) return false;
  return cells_[index(x, y)] != 0;
}

LatticeBitmap LatticeBitmap::from_set(const VertexSet& a) {
  if (a.host() != GroupGraph::integer_lattice(2)) throw DomainError("bitmaps hold subsets of z^2 only");
  if (a.empty()) throw DomainError("bitmap of an empty set");
  auto lo_x = std::numeric_limits<std::int64_t>::max(), lo_y = lo_x;
  auto hi_x = std::numeric_limits<std::int64_t>::min(), hi_y = hi_x;
  for (const Vertex& v : a) {
    lo_x = std::min(lo_x, v[0]);
    hi_x = std::max(hi_x, v[0]);
    lo_y = std::min(lo_y, v[1]);
    hi_y = std::max(hi_y, v[1]);
  }
  LatticeBitmap bm(lo_x - 1, lo_y - 1, hi_x - lo_x + 3, hi_y - lo_y + 3);
  for (const Vertex& v : a) bm.set(v[0], v[1]);
  return bm;
}

LatticeMeasure measure(const LatticeBitmap& bm) {
  const std::int64_t w = bm.width_;
  const std::int64_t h = bm.height_;
  const auto& cells = bm.cells_;
  auto at = [&](std::int64_t x, std::int64_t y) { return cells[static_cast<std::size_t>(y * w + x)] != 0; };

  for (std::int64_t x = 0; x < w; ++x) {
    if (at(x, 0) || at(x, h - 1)) throw DomainError("bitmap set touches its outer margin");
  }
  for (std::int64_t y = 0; y < h; ++y) {
    if (at(0, y) || at(w - 1, y)) throw DomainError("bitmap set touches its outer margin");
  }
  if (std::max(w, h) >= std::numeric_limits<std::uint16_t>::max()) {
    throw ResourceError("bitmap side too long for the dense oracle");
  }

  LatticeMeasure m;
  constexpr std::uint16_t kUnseen = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> dist(cells.size(), kUnseen);
  std::vector<std::uint32_t> queue;
  constexpr std::int64_t dx[] = {1, -1, 0, 0};
  constexpr std::int64_t dy[] = {0, 0, 1, -1};

  for (std::int64_t y = 1; y + 1 < h; ++y) {
    for (std::int64_t x = 1; x + 1 < w; ++x) {
      if (!at(x, y)) continue;
      ++m.size;
      for (int d = 0; d < 4; ++d) {
        if (!at(x + dx[d], y + dy[d])) {
          dist[static_cast<std::size_t>(y * w + x)] = 1;
          queue.push_back(static_cast<std::uint32_t>(y * w + x));
          break;
        }
      }
    }
  }
  if (m.size == 0) throw DomainError("measure of an empty bitmap");

  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      if (at(x, y)) continue;
      for (int d = 0; d < 4; ++d) {
        const std::int64_t nx = x + dx[d], ny = y + dy[d];
        if (nx >= 0 && ny >= 0 && nx < w && ny < h && at(nx, ny)) {
          ++m.boundary_size;
          break;
        }
      }
    }
  }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int64_t cell = queue[head];
    const std::uint16_t d0 = dist[static_cast<std::size_t>(cell)];
    m.depth = std::max<std::uint64_t>(m.depth, d0);
    const std::int64_t x = cell % w, y = cell / w;
    for (int d = 0; d < 4; ++d) {
      const std::int64_t nc = (y + dy[d]) * w + (x + dx[d]);
      auto& slot = dist[static_cast<std::size_t>(nc)];
      if (cells[static_cast<std::size_t>(nc)] != 0 && slot == kUnseen) {
        slot = static_cast<std::uint16_t>(d0 + 1);
        queue.push_back(static_cast<std::uint32_t>(nc));
      }
    }
  }
  return m;
}

namespace counterexample {

GridParams GridParams::make(std::int64_t i, std::int64_t k) {
  if (i < 2 || k < 2) {
    throw DomainError("grid parameters need i >= 2 and k >= 2, got i=" + std::to_string(i) + " k=" + std::to_string(k));
  }
  if (i > (std::int64_t{1} << 30) || k > (std::int64_t{1} << 30)) throw DomainError("grid parameters too large");
  return GridParams{i, k};
}

namespace {

void check(const GridParams& p) { (void)GridParams::make(p.i, p.k); }

bool is_hole(const GridParams& p, std::int64_t x, std::int64_t y) {
  return x % p.i == 0 && y % p.i == 0 && x >= p.i && y >= p.i && x <= (p.k - 1) * p.i && y <= (p.k - 1) * p.i;
}

}  // namespace

VertexSet build(const GridParams& p) {
  check(p);
  const std::int64_t n = p.side();
  if (static_cast<__int128>(n + 1) * (n + 1) > static_cast<__int128>(Budget::from_env().max_vertices)) {
    throw ResourceError("A_i(k) with i=" + std::to_string(p.i) + " k=" + std::to_string(p.k) +
                        " exceeds the vertex budget; use the bitmap oracle");
  }
  VertexSet a(GroupGraph::integer_lattice(2));
  for (std::int64_t x = 0; x <= n; ++x) {
    for (std::int64_t y = 0; y <= n; ++y) {
      if (!is_hole(p, x, y)) a.insert_unchecked(Vertex{x, y});
    }
  }
  return a;
}

LatticeBitmap build_bitmap(const GridParams& p, std::size_t cell_cap) {
  check(p);
  const std::int64_t n = p.side();
  const std::int64_t w = n + 3;
  if (static_cast<__int128>(w) * w > static_cast<__int128>(cell_cap)) {
    throw ResourceError("bitmap for i=" + std::to_string(p.i) + " k=" + std::to_string(p.k) + " needs " +
                        std::to_string(static_cast<long double>(w) * w) + " cells, cap is " +
                        std::to_string(cell_cap));
  }
  LatticeBitmap bm(-1, -1, w, w);
  for (std::int64_t y = 0; y <= n; ++y) {
    for (std::int64_t x = 0; x <= n; ++x) {
      if (!is_hole(p, x, y)) bm.set(x, y);
    }
  }
  return bm;
}

std::uint64_t enumerated_size(const GridParams& p) {
  const auto n = static_cast<std::uint64_t>(p.side());
  const auto h = static_cast<std::uint64_t>(p.k - 1);
  return (n + 1) * (n + 1) - h * h;
}

std::uint64_t size_formula_ki_squared(const GridParams& p) {
  const auto n = static_cast<std::uint64_t>(p.side());
  const auto h = static_cast<std::uint64_t>(p.k - 1);
  return n * n - h * h;
}

std::uint64_t boundary_closed_form(const GridParams& p) {
  const auto h = static_cast<std::uint64_t>(p.k - 1);
  return h * h + 4 * (static_cast<std::uint64_t>(p.side()) + 1);
}

std::uint64_t depth_by_distance_profile(const GridParams& p) {
  check(p);
  const std::int64_t n = p.side();
  const std::int64_t last_hole = (p.k - 1) * p.i;
  auto hole_dist = [&](std::int64_t x) -> std::int64_t {
    if (x <= p.i) return p.i - x;
    if (x >= last_hole) return x - last_hole;
    const std::int64_t r = x % p.i;
    return std::min(r, p.i - r);
  };

  // best[o] = max h(x) over x with o(x) = o; symmetric under x -> n - x.
  const std::int64_t max_o = n / 2 + 1;
  std::vector<std::int64_t> best(static_cast<std::size_t>(max_o) + 2, -1);
  for (std::int64_t x = 0; x <= n / 2; ++x) {
    const std::int64_t o = std::min(x + 1, n + 1 - x);
    auto& slot = best[static_cast<std::size_t>(o)];
    slot = std::max(slot, hole_dist(x));
  }
  std::uint64_t depth = 0;
  std::int64_t suffix = -1;
  for (std::int64_t d = max_o; d >= 1; --d) {
    suffix = std::max(suffix, best[static_cast<std::size_t>(d)]);
    if (2 * suffix >= d) {
      depth = static_cast<std::uint64_t>(d);
      break;
    }
  }
  return depth;
}

CounterexampleStats stats(const GridParams& p, std::size_t cell_cap) {
  const LatticeMeasure m = measure(build_bitmap(p, cell_cap));
  CounterexampleStats s;
  s.params = p;
  s.size_a = m.size;
  s.boundary_size = m.boundary_size;
  s.depth_oracle = m.depth;
  s.ratio = Rational(static_cast<std::int64_t>(m.boundary_size * m.depth), static_cast<std::int64_t>(m.size));
  s.boundary_formula = boundary_closed_form(p);
  s.closed_forms_match = s.boundary_size == s.boundary_formula && s.size_a == enumerated_size(p);
  s.size_formula_ki_squared = size_formula_ki_squared(p);
  s.size_matches_ki_squared = s.size_a == s.size_formula_ki_squared;
  s.half_i = Rational(p.i, 2);
  s.depth_at_most_half_i = 2 * s.depth_oracle <= static_cast<std::uint64_t>(p.i);
  return s;
}

FindResult find_params(const Rational& c, std::int64_t cap, std::size_t cell_cap) {
  if (c <= Rational(0)) throw DomainError("target ratio c must be positive, got " + to_string(c));
  if (cap < 2) throw DomainError("search cap must be >= 2");

  GridParams best{2, 2};
  Rational best_ratio(std::numeric_limits<std::int64_t>::max());
  std::uint64_t evaluated = 0;
  std::int64_t last = 1;
  for (std::int64_t k = 2; k <= cap; ++k) {
    const GridParams p = GridParams::make(k, k);
    // (ki+1)^2 must fit in an int64 for the exact ratio.
    if (p.side() >= 3'037'000'499) break;
    ++evaluated;
    last = k;
    const auto num = static_cast<std::int64_t>(boundary_closed_form(p) * depth_by_distance_profile(p));
    const Rational scan(num, static_cast<std::int64_t>(enumerated_size(p)));
    if (scan < best_ratio) {
      best_ratio = scan;
      best = p;
    }
    if (scan < c) {
      FindResult r;
      r.params = p;
      r.scan_ratio = scan;
      r.evaluated = evaluated;
      r.stats = stats(p, cell_cap);
      r.verified = r.stats.ratio == scan && r.stats.ratio < c;
      return r;
    }
  }
  throw SearchExhausted("no i = k <= " + std::to_string(last) + " reaches ratio < " + to_string(c) +
                            "; best ratio " + to_string(best_ratio) + " at i = k = " + std::to_string(best.k),
                        best, best_ratio);
}

TorusEmbedding embed_torus(const GridParams& p) {
  const VertexSet lattice_set = build(p);
  const std::int64_t n = 3 * p.side() + 1;
  GroupGraph host = GroupGraph::torus(n, 2);
  VertexSet torus_set(host);
  for (const Vertex& v : lattice_set) {
    torus_set.insert(Vertex{((v[0] % n) + n) % n, ((v[1] % n) + n) % n});
  }

  TorusEmbedding e{p, n, host, torus_set, {}, {}, false, false, Rational(0)};
  e.lattice = {lattice_set.size(), boundary(lattice_set).size(), depth(lattice_set)};
  e.torus = {torus_set.size(), boundary(torus_set).size(), depth(torus_set)};
  e.preserved = e.lattice.size == e.torus.size && e.lattice.boundary_size == e.torus.boundary_size &&
                e.lattice.depth == e.torus.depth;
  e.half_volume = 2 * e.torus.size <= static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  e.ratio = Rational(static_cast<std::int64_t>(e.torus.boundary_size * e.torus.depth),
                     static_cast<std::int64_t>(e.torus.size));
  return e;
}

std::vector<CounterexampleStats> sweep(std::int64_t imax, std::int64_t kmax, std::size_t cell_cap) {
  std::vector<CounterexampleStats> out;
  for (std::int64_t i = 2; i <= imax; ++i) {
    for (std::int64_t k = 2; k <= kmax; ++k) out.push_back(stats(GridParams::make(i, k), cell_cap));
  }
  return out;
}

}  // namespace counterexample
}  // namespace cayley
