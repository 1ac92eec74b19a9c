#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cayley/vertex.hpp"

namespace cayley {

/// Number of ends declared for a family. Never computed, only looked up.
enum class Ends { Zero, One, Two, Infinite };

std::string to_string(Ends e);

/// Z^d with generators +-e_1 .. +-e_d.
struct IntegerLattice {
  int dim = 1;
  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;
};

/// (Z_n)^d with generators +-e_1 .. +-e_d; n >= 3 so the 2d neighbors are distinct.
struct Torus {
  std::int64_t modulus = 3;
  int dim = 1;
  friend bool operator==(const Torus&, const Torus&) = default;
};

/// Free group on `rank` generators a, b, c, ...
struct FreeGroup {
  int rank = 2;
  friend bool operator==(const FreeGroup&, const FreeGroup&) = default;
};

/// Generator (z, r) of Z x Z_m acting by translation.
struct Shift {
  std::int64_t z = 0;
  std::int64_t r = 0;
  friend auto operator<=>(const Shift&, const Shift&) = default;
};

/// Z x Z_m. `generators` is stored symmetrized, deduplicated, with residues
/// reduced into [0, m) and the identity removed.
struct CylinderZxZm {
  std::int64_t modulus = 2;
  std::vector<Shift> generators;
  friend bool operator==(const CylinderZxZm&, const CylinderZxZm&) = default;
};

using GroupFamily = std::variant<IntegerLattice, Torus, FreeGroup, CylinderZxZm>;

/// True iff `gens` together with the relation (0, m) span all of Z^2, i.e.
/// the gcd of every 2x2 minor is 1. Equivalent to generating Z x Z_m.
bool generates_cylinder(std::int64_t modulus, const std::vector<Shift>& gens);

/// Implicit Cayley graph of one of the supported families. Immutable; cheap
/// to copy except for cylinders with long generator lists.
class GroupGraph {
 public:
  static GroupGraph integer_lattice(int dim);
  static GroupGraph torus(std::int64_t modulus, int dim);
  static GroupGraph free_group(int rank);
  /// Symmetrizes `generators`; throws ValidationError unless they generate Z x Z_m.
  static GroupGraph cylinder(std::int64_t modulus, std::vector<Shift> generators);
  /// Z x Z_m with generators (+-1, 0), (0, +-1).
  static GroupGraph cylinder(std::int64_t modulus);

  /// Parses the compact grammar: `z^D`, `torus:NxN...`, `free:R`,
  /// `cyl:M` or `cyl:M:[(z,r),...]`.
  static GroupGraph parse(std::string_view text);

  const GroupFamily& family() const { return family_; }
  /// Number of distinct neighbors of any vertex.
  std::size_t degree() const;
  Ends declared_ends() const;
  bool is_finite() const { return std::holds_alternative<Torus>(family_); }
  /// |V| for finite hosts.
  std::optional<std::uint64_t> order() const;

  bool is_free_group() const { return std::holds_alternative<FreeGroup>(family_); }
  bool is_cylinder() const { return std::holds_alternative<CylinderZxZm>(family_); }

  Vertex identity() const;

  bool is_valid(const Vertex& v) const;
  /// Throws InvalidVertex with a description of what is wrong.
  void validate(const Vertex& v) const;

  /// Appends the neighbors of `v` to `out` (after clearing it). `v` must be
  /// valid; no check is performed.
  void neighbors_into(const Vertex& v, std::vector<Vertex>& out) const;
  /// Validated neighbor enumeration; every result is distinct.
  std::vector<Vertex> neighbors(const Vertex& v) const;

  /// Canonical grammar string; parse(name()) == *this.
  std::string name() const;

  /// Human-readable element: "(x,y)" for coordinate families, "aB" for words
  /// ("e" for the empty word).
  std::string format_vertex(const Vertex& v) const;
  /// Inverse of format_vertex for words; accepts "" or "e" for the identity.
  Vertex parse_word(std::string_view word) const;

  friend bool operator==(const GroupGraph&, const GroupGraph&) = default;

 private:
  explicit GroupGraph(GroupFamily family) : family_(std::move(family)) {}

  GroupFamily family_;
};

}  // namespace cayley
