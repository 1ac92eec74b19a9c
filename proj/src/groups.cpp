#include "cayley/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("expected integer in " + std::string(context) + ", got '" + std::string(s) + "'");
  }
  return value;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

char letter_char(Vertex::Coord letter) {
  const auto g = static_cast<char>(std::llabs(letter) - 1);
  return letter > 0 ? static_cast<char>('a' + g) : static_cast<char>('A' + g);
}

std::vector<Shift> symmetrize(std::int64_t m, std::vector<Shift> gens) {
  std::set<Shift> out;
  for (const Shift& s : gens) {
    Shift fwd{s.z, floor_mod(s.r, m)};
    Shift inv{-s.z, floor_mod(-s.r, m)};
    if (fwd.z != 0 || fwd.r != 0) {
      out.insert(fwd);
      out.insert(inv);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Shift> standard_cylinder_generators(std::int64_t m) {
  return symmetrize(m, {{1, 0}, {0, 1}});
}

}  // namespace

std::string to_string(Ends e) {
  switch (e) {
    case Ends::Zero: return "0";
    case Ends::One: return "1";
    case Ends::Two: return "2";
    case Ends::Infinite: return "inf";
  }
  return "?";
}

bool generates_cylinder(std::int64_t modulus, const std::vector<Shift>& gens) {
  std::vector<std::pair<__int128, __int128>> vecs;
  vecs.reserve(gens.size() + 1);
  for (const Shift& s : gens) vecs.emplace_back(s.z, s.r);
  vecs.emplace_back(0, modulus);
  std::uint64_t g = 0;
  for (std::size_t a = 0; a < vecs.size(); ++a) {
    for (std::size_t b = a + 1; b < vecs.size(); ++b) {
      __int128 det = vecs[a].first * vecs[b].second - vecs[b].first * vecs[a].second;
      if (det < 0) det = -det;
      // Reduce before narrowing; only divisibility by small factors matters once g > 0.
      if (g != 0) det %= g;
      g = std::gcd(g, static_cast<std::uint64_t>(det));
      if (g == 1) return true;
    }
  }
  return g == 1;
}

GroupGraph GroupGraph::integer_lattice(int dim) {
  if (dim < 1) throw ValidationError("integer lattice dimension must be >= 1");
  return GroupGraph(IntegerLattice{dim});
}

GroupGraph GroupGraph::torus(std::int64_t modulus, int dim) {
  if (modulus < 3) throw ValidationError("torus modulus must be >= 3");
  if (dim < 1) throw ValidationError("torus dimension must be >= 1");
  return GroupGraph(Torus{modulus, dim});
}

GroupGraph GroupGraph::free_group(int rank) {
  if (rank < 2) throw ValidationError("free group rank must be >= 2");
  if (rank > 26) throw ValidationError("free group rank must be <= 26");
  return GroupGraph(FreeGroup{rank});
}

GroupGraph GroupGraph::cylinder(std::int64_t modulus, std::vector<Shift> generators) {
  if (modulus < 2) throw ValidationError("cylinder modulus must be >= 2");
  auto gens = symmetrize(modulus, std::move(generators));
  if (gens.empty()) throw ValidationError("cylinder needs at least one non-identity generator");
  if (!generates_cylinder(modulus, gens)) {
    throw ValidationError("generators do not generate Z x Z_" + std::to_string(modulus));
  }
  return GroupGraph(CylinderZxZm{modulus, std::move(gens)});
}

GroupGraph GroupGraph::cylinder(std::int64_t modulus) {
  if (modulus < 2) throw ValidationError("cylinder modulus must be >= 2");
  return cylinder(modulus, {{1, 0}, {0, 1}});
}

GroupGraph GroupGraph::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  auto starts = [&](std::string_view p) { return s.rfind(p, 0) == 0; };

  if (starts("z^")) {
    return integer_lattice(static_cast<int>(parse_int(std::string_view(s).substr(2), "lattice dimension")));
  }
  if (starts("torus:")) {
    std::string_view rest = std::string_view(s).substr(6);
    std::vector<std::int64_t> sides;
    std::size_t pos = 0;
    while (true) {
      std::size_t x = rest.find('x', pos);
      sides.push_back(parse_int(rest.substr(pos, x == std::string_view::npos ? rest.npos : x - pos), "torus side"));
      if (x == std::string_view::npos) break;
      pos = x + 1;
    }
    for (std::int64_t side : sides) {
      if (side != sides.front()) throw ParseError("torus sides must all be equal: '" + s + "'");
    }
    return torus(sides.front(), static_cast<int>(sides.size()));
  }
  if (starts("free:")) {
    return free_group(static_cast<int>(parse_int(std::string_view(s).substr(5), "free group rank")));
  }
  if (starts("cyl:")) {
    std::string_view rest = std::string_view(s).substr(4);
    std::size_t colon = rest.find(':');
    const std::int64_t m = parse_int(rest.substr(0, colon), "cylinder modulus");
    if (colon == std::string_view::npos) return cylinder(m);
    std::string_view list = rest.substr(colon + 1);
    if (list.size() < 2 || list.front() != '[' || list.back() != ']') {
      throw ParseError("cylinder generators must be a bracketed list: '" + s + "'");
    }
    list = list.substr(1, list.size() - 2);
    std::vector<Shift> gens;
    std::size_t pos = 0;
    while (pos < list.size()) {
      if (list[pos] == ',') {
        ++pos;
        continue;
      }
      if (list[pos] != '(') throw ParseError("expected '(' in generator list: '" + s + "'");
      std::size_t close = list.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated generator in '" + s + "'");
      std::string_view pair = list.substr(pos + 1, close - pos - 1);
      std::size_t comma = pair.find(',');
      if (comma == std::string_view::npos) throw ParseError("generator needs two components: '" + s + "'");
      gens.push_back({parse_int(pair.substr(0, comma), "generator z-shift"),
                      parse_int(pair.substr(comma + 1), "generator residue shift")});
      pos = close + 1;
    }
    return cylinder(m, std::move(gens));
  }
  throw ParseError("unknown group '" + std::string(text) + "' (expected z^D, torus:NxN, free:R or cyl:M[:[...]])");
}

std::size_t GroupGraph::degree() const {
  return std::visit(Overloaded{
                        [](const IntegerLattice& f) -> std::size_t { return 2 * static_cast<std::size_t>(f.dim); },
                        [](const Torus& f) -> std::size_t { return 2 * static_cast<std::size_t>(f.dim); },
                        [](const FreeGroup& f) -> std::size_t { return 2 * static_cast<std::size_t>(f.rank); },
                        [](const CylinderZxZm& f) -> std::size_t { return f.generators.size(); },
                    },
                    family_);
}

Ends GroupGraph::declared_ends() const {
  return std::visit(Overloaded{
                        [](const IntegerLattice& f) { return f.dim == 1 ? Ends::Two : Ends::One; },
                        [](const Torus&) { return Ends::Zero; },
                        [](const FreeGroup&) { return Ends::Infinite; },
                        [](const CylinderZxZm&) { return Ends::Two; },
                    },
                    family_);
}

std::optional<std::uint64_t> GroupGraph::order() const {
  const auto* t = std::get_if<Torus>(&family_);
  if (t == nullptr) return std::nullopt;
  std::uint64_t n = 1;
  for (int i = 0; i < t->dim; ++i) {
    if (n > UINT64_MAX / static_cast<std::uint64_t>(t->modulus)) throw ValidationError("torus order overflows");
    n *= static_cast<std::uint64_t>(t->modulus);
  }
  return n;
}

Vertex GroupGraph::identity() const {
  return std::visit(Overloaded{
                        [](const IntegerLattice& f) { return Vertex(std::vector<Vertex::Coord>(f.dim, 0)); },
                        [](const Torus& f) { return Vertex(std::vector<Vertex::Coord>(f.dim, 0)); },
                        [](const FreeGroup&) { return Vertex(); },
                        [](const CylinderZxZm&) { return Vertex{0, 0}; },
                    },
                    family_);
}

bool GroupGraph::is_valid(const Vertex& v) const {
  try {
    validate(v);
    return true;
  } catch (const InvalidVertex&) {
    return false;
  }
}

void GroupGraph::validate(const Vertex& v) const {
  auto arity = [&](std::size_t want) {
    if (v.size() != want) {
      throw InvalidVertex("vertex has " + std::to_string(v.size()) + " coordinates, host " + name() +
                          " expects " + std::to_string(want));
    }
  };
  std::visit(Overloaded{
                 [&](const IntegerLattice& f) { arity(static_cast<std::size_t>(f.dim)); },
                 [&](const Torus& f) {
                   arity(static_cast<std::size_t>(f.dim));
                   for (auto c : v.coords()) {
                     if (c < 0 || c >= f.modulus) {
                       throw InvalidVertex("residue " + std::to_string(c) + " out of range for " + name());
                     }
                   }
                 },
                 [&](const CylinderZxZm& f) {
                   arity(2);
                   if (v[1] < 0 || v[1] >= f.modulus) {
                     throw InvalidVertex("residue " + std::to_string(v[1]) + " out of range for " + name());
                   }
                 },
                 [&](const FreeGroup& f) {
                   for (std::size_t i = 0; i < v.size(); ++i) {
                     if (v[i] == 0 || std::llabs(v[i]) > f.rank) {
                       throw InvalidVertex("letter index " + std::to_string(v[i]) + " out of range for " + name());
                     }
                     if (i > 0 && v[i] == -v[i - 1]) {
                       throw InvalidVertex("word is not reduced at position " + std::to_string(i));
                     }
                   }
                 },
             },
             family_);
}

void GroupGraph::neighbors_into(const Vertex& v, std::vector<Vertex>& out) const {
  out.clear();
  std::visit(Overloaded{
                 [&](const IntegerLattice& f) {
                   for (int d = 0; d < f.dim; ++d) {
                     for (int sign : {1, -1}) {
                       Vertex u = v;
                       u[d] += sign;
                       out.push_back(std::move(u));
                     }
                   }
                 },
                 [&](const Torus& f) {
                   for (int d = 0; d < f.dim; ++d) {
                     Vertex up = v;
                     up[d] = v[d] + 1 == f.modulus ? 0 : v[d] + 1;
                     out.push_back(std::move(up));
                     Vertex down = v;
                     down[d] = v[d] == 0 ? f.modulus - 1 : v[d] - 1;
                     out.push_back(std::move(down));
                   }
                 },
                 [&](const CylinderZxZm& f) {
                   for (const Shift& s : f.generators) {
                     Vertex u{v[0] + s.z, (v[1] + s.r) % f.modulus};
                     out.push_back(std::move(u));
                   }
                 },
                 [&](const FreeGroup& f) {
                   for (int g = 1; g <= f.rank; ++g) {
                     for (Vertex::Coord letter : {Vertex::Coord{g}, Vertex::Coord{-g}}) {
                       Vertex u = v;
                       if (!u.empty() && u.back() == -letter) {
                         u.pop_back();
                       } else {
                         u.push_back(letter);
                       }
                       out.push_back(std::move(u));
                     }
                   }
                 },
             },
             family_);
}

std::vector<Vertex> GroupGraph::neighbors(const Vertex& v) const {
  validate(v);
  std::vector<Vertex> out;
  neighbors_into(v, out);
  return out;
}

std::string GroupGraph::name() const {
  return std::visit(Overloaded{
                        [](const IntegerLattice& f) { return "z^" + std::to_string(f.dim); },
                        [](const Torus& f) {
                          std::string s = "torus:";
                          for (int d = 0; d < f.dim; ++d) {
                            if (d > 0) s += 'x';
                            s += std::to_string(f.modulus);
                          }
                          return s;
                        },
                        [](const FreeGroup& f) { return "free:" + std::to_string(f.rank); },
                        [](const CylinderZxZm& f) {
                          std::string s = "cyl:" + std::to_string(f.modulus);
                          if (f.generators == standard_cylinder_generators(f.modulus)) return s;
                          s += ":[";
                          for (std::size_t i = 0; i < f.generators.size(); ++i) {
                            if (i > 0) s += ',';
                            s += "(" + std::to_string(f.generators[i].z) + "," + std::to_string(f.generators[i].r) + ")";
                          }
                          return s + "]";
                        },
                    },
                    family_);
}

std::string GroupGraph::format_vertex(const Vertex& v) const {
  if (is_free_group()) {
    if (v.empty()) return "e";
    std::string s;
    for (auto letter : v.coords()) s.push_back(letter_char(letter));
    return s;
  }
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

Vertex GroupGraph::parse_word(std::string_view word) const {
  const auto* f = std::get_if<FreeGroup>(&family_);
  if (f == nullptr) throw ParseError("words are only meaningful for free groups, host is " + name());
  Vertex v;
  if (word == "e") return v;
  for (char c : word) {
    Vertex::Coord letter = 0;
    if (c >= 'a' && c <= 'z') letter = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z') letter = -(c - 'A' + 1);
    else throw ParseError(std::string("invalid letter '") + c + "' in word '" + std::string(word) + "'");
    v.push_back(letter);
  }
  validate(v);
  return v;
}

}  // namespace cayley
