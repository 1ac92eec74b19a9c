#include "cayley/vertex_set.hpp"

#include <algorithm>

namespace cayley {

VertexSet::VertexSet(GroupGraph host, const std::vector<Vertex>& elements) : host_(std::move(host)) {
  elements_.reserve(elements.size());
  for (const Vertex& v : elements) insert(v);
}

bool VertexSet::insert(const Vertex& v) {
  host_.validate(v);
  return elements_.insert(v).second;
}

std::vector<Vertex> VertexSet::sorted() const {
  std::vector<Vertex> out(elements_.begin(), elements_.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cayley
