#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cayley {

/// A group element in the coordinate encoding of its host family:
///  - integer lattice: the integer vector itself
///  - torus: residues in [0, n)
///  - cylinder Z x Z_m: (z, r) with r in [0, m)
///  - free group: the reduced word, one entry per letter, +g for the g-th
///    generator and -g for its inverse (g >= 1)
///
/// A Vertex carries no reference to its host; it is only meaningful next to
/// the GroupGraph that produced or validated it.
class Vertex {
 public:
  using Coord = std::int64_t;

  Vertex() = default;
  explicit Vertex(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  Vertex(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::span<const Coord> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }

  void push_back(Coord c) { coords_.push_back(c); }
  void pop_back() { coords_.pop_back(); }
  Coord back() const { return coords_.back(); }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  std::vector<Coord> coords_;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (Vertex::Coord c : v.coords()) {
      std::uint64_t x = static_cast<std::uint64_t>(c);
      x ^= x >> 33;
      x *= 0xff51afd7ed558ccdULL;
      x ^= x >> 33;
      h = (h ^ x) * 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace cayley
