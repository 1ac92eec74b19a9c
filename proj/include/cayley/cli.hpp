#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cayley/vertex_set.hpp"

namespace cayley::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
/// A guaranteed inequality failed on the given input.
inline constexpr int kExitViolation = 2;

/// Oracles used by the set subcommands; replaceable so that tests can feed a
/// deliberately wrong oracle and observe the violation exit code.
struct Oracles {
  std::function<VertexSet(const VertexSet&)> boundary;
  std::function<std::uint64_t(const VertexSet&)> depth;

  static Oracles standard();
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Oracles& oracles = Oracles::standard());

}  // namespace cayley::cli
