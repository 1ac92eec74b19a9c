#include <cctype>
#include <charconv>
#include <limits>

#include "cayley/counterexample.hpp"

namespace cayley {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t parse_plain_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    throw ParseError("invalid rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t p = parse_plain_int(text.substr(0, slash), text);
    const std::int64_t q = parse_plain_int(text.substr(slash + 1), text);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }

  std::string_view mantissa = text;
  std::int64_t exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_plain_int(text.substr(e + 1), text);
  }

  bool negative = false;
  std::size_t pos = 0;
  if (pos < mantissa.size() && (mantissa[pos] == '-' || mantissa[pos] == '+')) {
    negative = mantissa[pos] == '-';
    ++pos;
  }
  __int128 num = 0;
  std::int64_t digits = 0;
  bool seen_point = false;
  for (; pos < mantissa.size(); ++pos) {
    const char c = mantissa[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("invalid rational '" + std::string(text) + "'");
    num = num * 10 + (c - '0');
    if (num > kMax) throw ParseError("rational literal out of range: '" + std::string(text) + "'");
    ++digits;
    if (seen_point) --exponent;
  }
  if (digits == 0) throw ParseError("invalid rational '" + std::string(text) + "'");

  __int128 den = 1;
  for (; exponent > 0; --exponent) {
    num *= 10;
    if (num > kMax) throw ParseError("rational literal out of range: '" + std::string(text) + "'");
  }
  for (; exponent < 0; ++exponent) {
    den *= 10;
    if (den > kMax) throw ParseError("rational literal out of range: '" + std::string(text) + "'");
  }
  Rational r(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  return negative ? -r : r;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace cayley
