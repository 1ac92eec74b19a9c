#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "cayley/groups.hpp"
#include "cayley/vertex.hpp"

namespace cayley {

/// Finite set of vertices of one host graph with O(1) membership.
class VertexSet {
 public:
  using Storage = std::unordered_set<Vertex, VertexHash>;
  using const_iterator = Storage::const_iterator;

  explicit VertexSet(GroupGraph host) : host_(std::move(host)) {}

  /// Validates every element against `host`.
  VertexSet(GroupGraph host, const std::vector<Vertex>& elements);

  const GroupGraph& host() const { return host_; }

  /// Validating insert; returns false if already present.
  bool insert(const Vertex& v);
  /// Insert for vertices known to be valid (produced by the host itself).
  bool insert_unchecked(Vertex v) { return elements_.insert(std::move(v)).second; }
  bool erase(const Vertex& v) { return elements_.erase(v) > 0; }

  bool contains(const Vertex& v) const { return elements_.contains(v); }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }

  /// Elements in lexicographic coordinate order, for deterministic output.
  std::vector<Vertex> sorted() const;

  /// Same host and same elements.
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.host_ == b.host_ && a.elements_ == b.elements_;
  }

 private:
  GroupGraph host_;
  Storage elements_;
};

}  // namespace cayley
