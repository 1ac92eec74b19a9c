#include <doctest.h>

#include <random>

#include "cayley/counterexample.hpp"
#include "cayley/errors.hpp"
#include "cayley/isoperimetry.hpp"

using namespace cayley;
using namespace cayley::counterexample;

namespace {

GridParams gp(std::int64_t i, std::int64_t k) { return GridParams::make(i, k); }

bool is_hole(const GridParams& p, std::int64_t x, std::int64_t y) {
  return x % p.i == 0 && y % p.i == 0 && x / p.i >= 1 && x / p.i <= p.k - 1 && y / p.i >= 1 && y / p.i <= p.k - 1;
}

}  // namespace

TEST_CASE("build enumerates the perforated square") {
  CHECK(build(gp(2, 5)).size() == 105);
  CHECK(enumerated_size(gp(2, 5)) == 105);

  VertexSet a22 = build(gp(2, 2));
  CHECK(a22.size() == 24);
  CHECK_FALSE(a22.contains(Vertex{2, 2}));
  CHECK(a22.contains(Vertex{0, 0}));
  CHECK(a22.contains(Vertex{4, 4}));

  VertexSet a32 = build(gp(3, 2));
  CHECK(a32.size() == 48);
  CHECK_FALSE(a32.contains(Vertex{3, 3}));

  CHECK_THROWS_AS(GridParams::make(1, 5), DomainError);
  CHECK_THROWS_AS(GridParams::make(2, 1), DomainError);
}

TEST_CASE("size formulas") {
  for (std::int64_t i = 2; i <= 6; ++i) {
    for (std::int64_t k = 2; k <= 8; ++k) {
      const auto p = gp(i, k);
      CHECK(build(p).size() == enumerated_size(p));
      CHECK(size_formula_ki_squared(p) == static_cast<std::uint64_t>((k * i) * (k * i) - (k - 1) * (k - 1)));
      CHECK(size_formula_ki_squared(p) != enumerated_size(p));
    }
  }
}

TEST_CASE("stats examples") {
  auto s = stats(gp(2, 5));
  CHECK(s.size_a == 105);
  CHECK(s.boundary_size == 60);
  CHECK(s.depth_oracle == 2);
  CHECK(s.ratio == Rational(8, 7));
  CHECK(s.closed_forms_match);
  CHECK(s.half_i == Rational(1));
  CHECK_FALSE(s.depth_at_most_half_i);

  auto big = stats(gp(16, 16));
  CHECK(big.size_a == 65824);
  CHECK(big.boundary_size == 1253);
  CHECK(big.depth_oracle == 16);
  CHECK(big.ratio == Rational(1253, 4114));
  CHECK(big.ratio < Rational(1, 2));

  CHECK(stats(gp(2, 2)).ratio == Rational(7, 4));
  CHECK(stats(gp(3, 2)).ratio == Rational(29, 24));
}

TEST_CASE("bitmap oracle agrees with the hash-set oracle and the closed forms") {
  for (std::int64_t i = 2; i <= 6; ++i) {
    for (std::int64_t k = 2; k <= 8; ++k) {
      const auto p = gp(i, k);
      CAPTURE(i);
      CAPTURE(k);
      VertexSet a = build(p);
      VertexSet da = boundary(a);
      const auto s = stats(p);
      CHECK(s.size_a == a.size());
      CHECK(s.boundary_size == da.size());
      CHECK(s.depth_oracle == depth(a));
      CHECK(s.boundary_size == boundary_closed_form(p));
      CHECK(s.depth_oracle == depth_by_distance_profile(p));
      CHECK(s.closed_forms_match);
      CHECK(is_connected_with_boundary(a));
      for (std::int64_t x = 1; x < k * i; ++x) {
        for (std::int64_t y = 1; y < k * i; ++y) {
          if (is_hole(p, x, y)) CHECK(da.contains(Vertex{x, y}));
        }
      }
    }
  }
}

TEST_CASE("distance-profile depth matches BFS on the diagonal") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(depth_by_distance_profile(gp(n, n)) == stats(gp(n, n)).depth_oracle);
  }
  for (auto [i, k] : {std::pair{7, 3}, {3, 17}, {10, 4}, {5, 21}}) {
    CHECK(depth_by_distance_profile(gp(i, k)) == stats(gp(i, k)).depth_oracle);
  }
}

TEST_CASE("bitmap measure agrees with hash-set oracle on random lattice sets") {
  std::mt19937_64 rng(31);
  auto z2 = GroupGraph::integer_lattice(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 800);
    VertexSet a = random_connected_set(z2, size(rng), rng);
    auto m = measure(LatticeBitmap::from_set(a));
    CHECK(m.size == a.size());
    CHECK(m.boundary_size == boundary(a).size());
    CHECK(m.depth == depth(a));
  }
}

TEST_CASE("even diagonal ratios decrease") {
  Rational prev = stats(gp(4, 4)).ratio;
  for (std::int64_t n = 6; n <= 40; n += 2) {
    Rational cur = stats(gp(n, n)).ratio;
    CHECK(cur < prev);
    prev = cur;
  }
  // Odd sides lose one unit of depth, so the full diagonal is not monotone.
  CHECK(stats(gp(7, 7)).ratio < stats(gp(8, 8)).ratio);
}

TEST_CASE("find_params") {
  auto two = find_params(Rational(2));
  CHECK(two.params == gp(2, 2));
  CHECK(two.verified);

  auto half = find_params(Rational(1, 2));
  CHECK(half.params == gp(9, 9));
  CHECK(half.stats.ratio == Rational(784, 1665));
  CHECK(half.scan_ratio == half.stats.ratio);
  CHECK(half.verified);

  auto tenth = find_params(parse_rational("0.1"));
  CHECK(tenth.params == gp(49, 49));
  CHECK(tenth.stats.ratio == Rational(142944, 1441825));
  CHECK(tenth.stats.ratio < Rational(1, 10));
  CHECK(tenth.verified);

  try {
    find_params(parse_rational("1e-6"), 1 << 10);
    FAIL("expected SearchExhausted");
  } catch (const SearchExhausted& e) {
    CHECK(e.best().k <= 1 << 10);
    CHECK(e.best_ratio() > Rational(0));
    CHECK(e.best_ratio() < Rational(1, 100));
  }
  CHECK_THROWS_AS(find_params(Rational(0)), DomainError);
  CHECK_THROWS_AS(find_params(Rational(-1, 2)), DomainError);
}

TEST_CASE("torus embedding preserves the measurements") {
  for (auto [i, k, n] : {std::tuple{2, 5, 31}, {2, 2, 13}, {3, 4, 37}}) {
    auto e = embed_torus(gp(i, k));
    CHECK(e.n == n);
    CHECK(e.host == GroupGraph::torus(n, 2));
    CHECK(e.preserved);
    CHECK(e.half_volume);
    CHECK(e.torus.size == e.lattice.size);
    CHECK(e.torus.boundary_size == e.lattice.boundary_size);
    CHECK(e.torus.depth == e.lattice.depth);
    CHECK(e.set.size() == e.lattice.size);
  }
  auto e = embed_torus(gp(2, 5));
  CHECK(e.torus.size == 105);
  CHECK(e.torus.boundary_size == 60);
  for (std::int64_t i = 2; i <= 4; ++i)
    for (std::int64_t k = 2; k <= 5; ++k) CHECK(embed_torus(gp(i, k)).preserved);
}

TEST_CASE("sweep covers the grid in order") {
  auto rows = sweep(3, 4);
  REQUIRE(rows.size() == 6);
  CHECK(rows.front().params == gp(2, 2));
  CHECK(rows.back().params == gp(3, 4));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("1e-6") == Rational(1, 1000000));
  CHECK(parse_rational("2.5E1") == Rational(25));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(to_string(Rational(8, 7)) == "8/7");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("oversized bitmaps are refused") {
  CHECK_THROWS_AS(build_bitmap(gp(100, 100), 1000), ResourceError);
}
