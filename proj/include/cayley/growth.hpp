#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/budget.hpp"
#include "cayley/groups.hpp"
#include "cayley/vertex_set.hpp"

namespace cayley {

/// Breadth-first enumeration of balls around a center, one sphere at a time.
/// Throws ResourceError (carrying the last complete radius) once the ball
/// would exceed the vertex budget.
class BallGrower {
 public:
  BallGrower(const GroupGraph& host, const Vertex& center, Budget budget = Budget::from_env());

  std::uint64_t radius() const { return radius_; }
  /// |ball(center, radius())|
  std::uint64_t size() const { return ball_.size(); }
  /// Number of vertices at distance exactly radius().
  std::uint64_t sphere_size() const { return sphere_.size(); }
  /// The host is finite and every vertex has been reached.
  bool saturated() const { return sphere_.empty(); }

  /// Extends the ball by one layer.
  void grow();
  void grow_to(std::uint64_t r);

  const VertexSet& ball() const { return ball_; }
  const std::vector<Vertex>& sphere() const { return sphere_; }

 private:
  Budget budget_;
  VertexSet ball_;
  std::vector<Vertex> sphere_;
  std::uint64_t radius_ = 0;
};

/// {u : d(u, center) <= r}
VertexSet ball(const GroupGraph& host, const Vertex& center, std::uint64_t r,
               Budget budget = Budget::from_env());

/// b(r), enumerated around the identity.
std::uint64_t ball_size(const GroupGraph& host, std::uint64_t r, Budget budget = Budget::from_env());

/// |ball(center, r)| for an arbitrary center; equal to ball_size by transitivity.
std::uint64_t ball_size_at(const GroupGraph& host, const Vertex& center, std::uint64_t r,
                           Budget budget = Budget::from_env());

/// b(0..max_radius) of the free group of `rank`, by counting reduced words
/// per last letter instead of enumerating them. Throws ResourceError once
/// b overflows 64 bits.
std::vector<std::uint64_t> free_group_growth_series(int rank, std::uint64_t max_radius);

/// b(0), b(1), ..., b(max_radius). Free groups are counted, other hosts
/// enumerated by BFS.
std::vector<std::uint64_t> growth_series(const GroupGraph& host, std::uint64_t max_radius,
                                         Budget budget = Budget::from_env());

/// Smallest m >= 1 with b(m) >= target (counted for free groups). Throws DomainError if the host is
/// finite and never reaches the target.
std::uint64_t min_radius_with_ball_at_least(const GroupGraph& host, std::uint64_t target,
                                            Budget budget = Budget::from_env());

enum class GrowthBranch { Linear, AtLeastQuadratic, Undetermined };

std::string to_string(GrowthBranch b);

struct GrowthReport {
  std::vector<std::uint64_t> sizes;  ///< b(0..maxRadius)
  GrowthBranch branch = GrowthBranch::Undetermined;
  /// Fitted linear envelope b(n) <= alpha*n + beta: alpha = max increment, beta = b(0).
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  /// alpha*N + beta < (N+1)(N+2)/2 at N = maxRadius, which rules out the
  /// quadratic branch on this sample.
  bool linear_envelope_below_quadratic = false;
  /// b(n) >= (n+1)(n+2)/2 for every sampled n.
  bool quadratic_lower_bound_holds = false;
  /// First n where the quadratic bound fails, if any.
  std::int64_t first_quadratic_failure = -1;

  /// Exactly one branch is evidenced on the sample.
  bool dichotomy_holds() const { return linear_envelope_below_quadratic != quadratic_lower_bound_holds; }
};

/// Linear vs at-least-quadratic growth decided on b(0..maxRadius).
/// Requires maxRadius >= 2.
GrowthReport classify_growth(const GroupGraph& host, std::uint64_t max_radius,
                             Budget budget = Budget::from_env());

}  // namespace cayley
