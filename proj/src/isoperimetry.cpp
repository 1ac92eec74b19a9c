#include "cayley/isoperimetry.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "cayley/errors.hpp"
#include "cayley/growth.hpp"

namespace cayley {

namespace {

void require_non_empty(const VertexSet& a, const char* op) {
  if (a.empty()) throw DomainError(std::string(op) + " requires a non-empty set");
}

bool ends_force_small_sets(Ends e) { return e == Ends::One || e == Ends::Infinite; }

}  // namespace

VertexSet boundary(const VertexSet& a) {
  require_non_empty(a, "boundary");
  const GroupGraph& host = a.host();
  VertexSet out(host);
  std::vector<Vertex> nbrs;
  for (const Vertex& v : a) {
    host.neighbors_into(v, nbrs);
    for (Vertex& u : nbrs) {
      if (!a.contains(u)) out.insert_unchecked(std::move(u));
    }
  }
  return out;
}

std::uint64_t depth(const VertexSet& a) {
  require_non_empty(a, "depth");
  const GroupGraph& host = a.host();
  if (auto n = host.order(); n && a.size() >= *n) {
    throw DomainError("depth is undefined when A is the whole vertex set of " + host.name());
  }

  // Distances to the complement; vertices of A adjacent to it sit at 1.
  std::unordered_map<Vertex, std::uint64_t, VertexHash> dist;
  dist.reserve(a.size());
  std::deque<const Vertex*> queue;
  std::vector<Vertex> nbrs;
  for (const Vertex& v : a) {
    host.neighbors_into(v, nbrs);
    const bool touches = std::any_of(nbrs.begin(), nbrs.end(), [&](const Vertex& u) { return !a.contains(u); });
    if (touches) {
      auto [it, _] = dist.emplace(v, 1);
      queue.push_back(&it->first);
    }
  }

  std::uint64_t best = 0;
  while (!queue.empty()) {
    const Vertex& v = *queue.front();
    queue.pop_front();
    const std::uint64_t d = dist.at(v);
    best = std::max(best, d);
    host.neighbors_into(v, nbrs);
    for (Vertex& u : nbrs) {
      if (!a.contains(u) || dist.contains(u)) continue;
      auto [it, _] = dist.emplace(std::move(u), d + 1);
      queue.push_back(&it->first);
    }
  }
  return best;
}

namespace {

// Connected components of the subgraph induced on `members`.
bool induced_connected(const VertexSet& members) {
  if (members.empty()) return true;
  const GroupGraph& host = members.host();
  VertexSet seen(host);
  std::vector<Vertex> stack{*members.begin()};
  seen.insert_unchecked(stack.back());
  std::vector<Vertex> nbrs;
  while (!stack.empty()) {
    Vertex v = std::move(stack.back());
    stack.pop_back();
    host.neighbors_into(v, nbrs);
    for (Vertex& u : nbrs) {
      if (members.contains(u) && seen.insert_unchecked(u)) stack.push_back(std::move(u));
    }
  }
  return seen.size() == members.size();
}

}  // namespace

bool is_connected(const VertexSet& a) {
  require_non_empty(a, "is_connected");
  return induced_connected(a);
}

bool is_connected_with_boundary(const VertexSet& a) {
  require_non_empty(a, "is_connected_with_boundary");
  VertexSet closure = boundary(a);
  for (const Vertex& v : a) closure.insert_unchecked(v);
  return induced_connected(closure);
}

VaropoulosResult varopoulos_check(const VertexSet& a, Budget budget) {
  require_non_empty(a, "varopoulos_check");
  if (a.host().is_finite()) {
    throw DomainError("the Varopoulos inequality is checked on infinite hosts only, got " + a.host().name());
  }
  VaropoulosResult r;
  r.m = min_radius_with_ball_at_least(a.host(), 2 * static_cast<std::uint64_t>(a.size()), budget);
  r.lhs = a.size();
  r.rhs = 2 * r.m * boundary(a).size();
  r.holds = r.lhs <= r.rhs;
  return r;
}

std::string to_string(SeparationBranch b) {
  switch (b) {
    case SeparationBranch::SmallSet: return "SmallSet";
    case SeparationBranch::RingLike: return "RingLike";
    case SeparationBranch::Inapplicable: return "Inapplicable";
  }
  return "?";
}

bool SeparationReport::consistent() const {
  if (branch == SeparationBranch::Inapplicable) return false;
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [](const Inequality& q) { return q.holds || !q.mandatory; });
}

SeparationReport classify_separation(const VertexSet& a) {
  require_non_empty(a, "classify_separation");
  return classify_separation(a, boundary(a).size(), depth(a));
}

SeparationReport classify_separation(const VertexSet& a, std::uint64_t k, std::uint64_t depth_value) {
  require_non_empty(a, "classify_separation");
  const GroupGraph& host = a.host();
  if (host.is_finite()) {
    throw DomainError("separation classification needs an infinite host, got " + host.name());
  }

  SeparationReport r;
  r.size_a = a.size();
  r.boundary_size = k;
  r.depth = depth_value;
  r.host_ends = host.declared_ends();
  r.connected_a_union_boundary = is_connected_with_boundary(a);
  if (!r.connected_a_union_boundary) {
    throw PreconditionError("A u dA is not connected; the small/ring-like dichotomy does not apply");
  }

  const bool forced = ends_force_small_sets(r.host_ends);
  const std::uint64_t size_bound = 16 * k * k;
  const bool small = r.size_a <= size_bound;
  r.inequalities.push_back({kSizeBound, r.size_a, size_bound, small, forced});

  if (small) {
    r.branch = SeparationBranch::SmallSet;
    const std::uint64_t lhs = depth_value * depth_value;
    const std::uint64_t rhs = 32 * k * k;
    r.inequalities.push_back({kDepthBound, lhs, rhs, lhs < rhs, forced});
  } else if (r.host_ends == Ends::Two) {
    r.branch = SeparationBranch::RingLike;
    if (host.is_cylinder()) {
      r.delegated.emplace_back("ringlike.theorem_impr_branch2");
    } else {
      r.delegated.emplace_back("no cyclic system instantiated for " + host.name());
    }
  } else {
    r.branch = SeparationBranch::Inapplicable;
  }
  return r;
}

VertexSet random_connected_set(const GroupGraph& host, std::size_t size, std::mt19937_64& rng) {
  return random_connected_set(host, host.identity(), size, rng);
}

VertexSet random_connected_set(const GroupGraph& host, const Vertex& seed, std::size_t size, std::mt19937_64& rng) {
  if (size == 0) throw DomainError("random_connected_set needs size >= 1");
  if (auto n = host.order(); n && size > *n) {
    throw DomainError("cannot draw " + std::to_string(size) + " vertices from " + host.name());
  }
  host.validate(seed);

  VertexSet a(host);
  std::vector<Vertex> frontier;
  std::unordered_map<Vertex, std::size_t, VertexHash> slot;
  std::vector<Vertex> nbrs;

  auto absorb = [&](Vertex v) {
    host.neighbors_into(v, nbrs);
    a.insert_unchecked(std::move(v));
    for (Vertex& u : nbrs) {
      if (a.contains(u) || slot.contains(u)) continue;
      slot.emplace(u, frontier.size());
      frontier.push_back(std::move(u));
    }
  };

  absorb(seed);
  while (a.size() < size) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const std::size_t idx = pick(rng);
    Vertex chosen = std::move(frontier[idx]);
    slot.erase(chosen);
    if (idx + 1 != frontier.size()) {
      frontier[idx] = std::move(frontier.back());
      slot[frontier[idx]] = idx;
    }
    frontier.pop_back();
    absorb(std::move(chosen));
  }
  return a;
}

}  // namespace cayley
