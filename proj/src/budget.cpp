#include "cayley/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "cayley/errors.hpp"

namespace cayley {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("ISO_BUDGET"); env != nullptr && *env != '\0') {
    std::string_view s(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
      throw ParseError("ISO_BUDGET must be a positive integer, got '" + std::string(s) + "'");
    }
    b.max_vertices = value;
  }
  return b;
}

}  // namespace cayley
