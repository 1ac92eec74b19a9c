#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cayley/budget.hpp"
#include "cayley/groups.hpp"
#include "cayley/vertex_set.hpp"

namespace cayley {

/// Vertices outside A adjacent to some vertex of A. Throws DomainError on empty A.
VertexSet boundary(const VertexSet& a);

/// max over u in A of d(u, V \ A), by one multi-source BFS seeded at the
/// boundary and confined to A. Throws DomainError if A is empty or is the
/// whole (finite) vertex set.
std::uint64_t depth(const VertexSet& a);

/// Whether the subgraph induced on A u dA is connected.
bool is_connected_with_boundary(const VertexSet& a);

/// Whether the subgraph induced on A is connected.
bool is_connected(const VertexSet& a);

struct VaropoulosResult {
  std::uint64_t m = 0;    ///< minimal m >= 1 with b(m) >= 2|A|
  std::uint64_t lhs = 0;  ///< |A|
  std::uint64_t rhs = 0;  ///< 2m|dA|
  bool holds = false;
};

/// |A| <= 2m|dA| with m minimal such that b(m) >= 2|A|. Infinite hosts only.
VaropoulosResult varopoulos_check(const VertexSet& a, Budget budget = Budget::from_env());

enum class SeparationBranch { SmallSet, RingLike, Inapplicable };

std::string to_string(SeparationBranch b);

/// One checked inequality `lhs rel rhs`, with exact integer sides.
struct Inequality {
  std::string name;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
  /// The inequality is guaranteed for this host; a failure is a claim violation.
  bool mandatory = false;
};

struct SeparationReport {
  std::uint64_t size_a = 0;
  std::uint64_t boundary_size = 0;  ///< k
  std::uint64_t depth = 0;
  bool connected_a_union_boundary = false;
  SeparationBranch branch = SeparationBranch::Inapplicable;
  std::vector<Inequality> inequalities;
  /// Obligations that another module must discharge (two-ended hosts, |A| > 16k^2).
  std::vector<std::string> delegated;
  Ends host_ends = Ends::One;

  /// No mandatory inequality failed and the branch is not Inapplicable.
  bool consistent() const;
};

/// Names used in SeparationReport::inequalities.
inline constexpr const char* kSizeBound = "|A|<=16k^2";
/// Stored squared: lhs = depth^2, rhs = 32k^2, so depth < 4*sqrt(2)*k is decided exactly.
inline constexpr const char* kDepthBound = "depth<4sqrt2*k";

/// Small-set vs ring-like dichotomy for a finite A with A u dA connected on an
/// infinite host. Throws PreconditionError if A u dA is disconnected.
SeparationReport classify_separation(const VertexSet& a);

/// Same, with externally computed k and depth (used to inject alternative
/// oracles; the consistency checks are identical).
SeparationReport classify_separation(const VertexSet& a, std::uint64_t k, std::uint64_t depth_value);

/// Random connected set of `size` vertices containing `seed`, grown by
/// repeatedly absorbing a uniformly chosen boundary vertex.
VertexSet random_connected_set(const GroupGraph& host, std::size_t size, std::mt19937_64& rng);
VertexSet random_connected_set(const GroupGraph& host, const Vertex& seed, std::size_t size, std::mt19937_64& rng);

}  // namespace cayley
