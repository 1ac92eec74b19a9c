#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/groups.hpp"
#include "cayley/isoperimetry.hpp"
#include "cayley/vertex_set.hpp"

namespace cayley::ringlike {

inline constexpr std::int64_t kDefaultWindow = 50;

/// The Z_m-fibers {z} x Z_m of a cylinder host, ordered by z along a
/// bi-infinite path, together with the properties verified on the blocks
/// z in [-window, window].
struct CyclicSystem {
  GroupGraph host;
  std::int64_t window = kDefaultWindow;
  std::uint64_t s = 0;  ///< block size (= m)
  std::uint64_t t = 0;  ///< max |z-shift| over the generators
  std::uint64_t q = 0;  ///< cohesiveness observed on the window

  bool partition_ok = false;  ///< every window vertex in exactly one block of size s
  bool ring_like_ok = false;  ///< every window edge spans <= t blocks
  bool cohesive_ok = false;   ///< q <= 2st

  /// Block index of a vertex: its z-coordinate.
  static std::int64_t block_of(const Vertex& v) { return v[0]; }
  bool holds() const { return partition_ok && ring_like_ok && cohesive_ok; }
};

/// Instantiates and checks the fiber system. Throws DomainError unless the
/// host is a cylinder, or if window < 1.
CyclicSystem cyclic_system(const GroupGraph& host, std::int64_t window = kDefaultWindow);

/// Smallest interval of blocks containing A and the slack it leaves.
struct IntervalCover {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::uint64_t q_size = 0;  ///< |Q| = (hi - lo + 1) s
  std::uint64_t k = 0;       ///< |dA|
  std::uint64_t slack = 0;   ///< |Q \ A|
  std::uint64_t bound = 0;   ///< 2 s^2 t^2 k + 2 s t k
  bool contained = false;    ///< A subset of Q
  bool holds = false;        ///< contained && slack <= bound
};

/// Throws DomainError if A is empty or lives on another host,
/// PreconditionError if A u dA is disconnected.
IntervalCover interval_cover(const CyclicSystem& sys, const VertexSet& a);

struct Branch2Report {
  SeparationReport separation;
  CyclicSystem system;
  IntervalCover cover;
  /// Ring-like parameters exist, A in Q, slack within bound.
  bool holds() const { return system.holds() && cover.contained && cover.holds; }
};

/// The ring-like alternative for |A| > 16k^2 on a cylinder host. Throws
/// PreconditionError when |A| <= 16k^2 (the small-set branch applies).
Branch2Report theorem_impr_branch2(const VertexSet& a, std::int64_t window = kDefaultWindow);

}  // namespace cayley::ringlike
