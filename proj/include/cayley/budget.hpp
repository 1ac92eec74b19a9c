#pragma once

#include <cstddef>

namespace cayley {

/// Limits on how much an implicit-graph search may materialize.
struct Budget {
  static constexpr std::size_t kDefaultVertices = 10'000'000;

  std::size_t max_vertices = kDefaultVertices;

  /// Default budget, overridden by the ISO_BUDGET environment variable when set.
  static Budget from_env();
};

}  // namespace cayley
