#include "cayley/ringlike.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <unordered_map>

#include "cayley/errors.hpp"

namespace cayley::ringlike {

namespace {

const CylinderZxZm& cylinder_of(const GroupGraph& host) {
  const auto* cyl = std::get_if<CylinderZxZm>(&host.family());
  if (cyl == nullptr) throw DomainError("cyclic systems are instantiated for cylinder hosts only, got " + host.name());
  return *cyl;
}

// Largest distance from `from` to any vertex in blocks z-1, z, z+1.
std::uint64_t farthest_in_neighboring_blocks(const GroupGraph& host, std::int64_t m, const Vertex& from) {
  const std::int64_t z = from[0];
  std::size_t remaining = static_cast<std::size_t>(3 * m) - 1;
  std::unordered_map<Vertex, std::uint64_t, VertexHash> dist{{from, 0}};
  std::deque<Vertex> queue{from};
  std::vector<Vertex> nbrs;
  std::uint64_t farthest = 0;
  while (remaining > 0 && !queue.empty()) {
    Vertex v = std::move(queue.front());
    queue.pop_front();
    const std::uint64_t d = dist.at(v);
    host.neighbors_into(v, nbrs);
    for (Vertex& u : nbrs) {
      if (dist.contains(u)) continue;
      if (std::llabs(u[0] - z) <= 1) {
        farthest = d + 1;
        --remaining;
      }
      dist.emplace(u, d + 1);
      queue.push_back(std::move(u));
    }
  }
  return farthest;
}

}  // namespace

CyclicSystem cyclic_system(const GroupGraph& host, std::int64_t window) {
  const CylinderZxZm& cyl = cylinder_of(host);
  if (window < 1) throw DomainError("window must be >= 1");

  CyclicSystem sys{host, window};
  sys.s = static_cast<std::uint64_t>(cyl.modulus);
  for (const Shift& g : cyl.generators) sys.t = std::max<std::uint64_t>(sys.t, static_cast<std::uint64_t>(std::llabs(g.z)));
  if (sys.t == 0) throw DomainError("no generator moves between blocks; host is not two-ended");

  sys.partition_ok = true;
  sys.ring_like_ok = true;
  std::vector<Vertex> nbrs;
  for (std::int64_t z = -window; z <= window; ++z) {
    VertexSet block(host);
    for (std::int64_t r = 0; r < cyl.modulus; ++r) {
      Vertex v{z, r};
      if (CyclicSystem::block_of(v) != z) sys.partition_ok = false;
      block.insert(v);

      host.neighbors_into(v, nbrs);
      for (const Vertex& u : nbrs) {
        const auto span = static_cast<std::uint64_t>(std::llabs(CyclicSystem::block_of(u) - z));
        if (span > sys.t) sys.ring_like_ok = false;
      }
      sys.q = std::max(sys.q, farthest_in_neighboring_blocks(host, cyl.modulus, v));
    }
    if (block.size() != sys.s) sys.partition_ok = false;
  }
  sys.cohesive_ok = sys.q <= 2 * sys.s * sys.t;
  return sys;
}

IntervalCover interval_cover(const CyclicSystem& sys, const VertexSet& a) {
  if (a.empty()) throw DomainError("interval_cover requires a non-empty set");
  if (a.host() != sys.host) throw DomainError("set lives on " + a.host().name() + ", system on " + sys.host.name());
  if (!is_connected_with_boundary(a)) throw PreconditionError("A u dA is not connected");

  IntervalCover c;
  c.lo = std::numeric_limits<std::int64_t>::max();
  c.hi = std::numeric_limits<std::int64_t>::min();
  for (const Vertex& v : a) {
    c.lo = std::min(c.lo, CyclicSystem::block_of(v));
    c.hi = std::max(c.hi, CyclicSystem::block_of(v));
  }
  c.q_size = static_cast<std::uint64_t>(c.hi - c.lo + 1) * sys.s;
  c.contained = std::all_of(a.begin(), a.end(), [&](const Vertex& v) {
    const std::int64_t b = CyclicSystem::block_of(v);
    return b >= c.lo && b <= c.hi;
  });
  c.slack = c.q_size - a.size();
  c.k = boundary(a).size();
  const std::uint64_t st = sys.s * sys.t;
  c.bound = 2 * st * st * c.k + 2 * st * c.k;
  c.holds = c.contained && c.slack <= c.bound;
  return c;
}

Branch2Report theorem_impr_branch2(const VertexSet& a, std::int64_t window) {
  cylinder_of(a.host());
  SeparationReport sep = classify_separation(a);
  if (sep.branch != SeparationBranch::RingLike) {
    throw PreconditionError("|A| = " + std::to_string(sep.size_a) + " <= 16k^2 = " +
                            std::to_string(16 * sep.boundary_size * sep.boundary_size) +
                            "; use classify_separation for the small-set branch");
  }
  CyclicSystem sys = cyclic_system(a.host(), window);
  IntervalCover cover = interval_cover(sys, a);
  return Branch2Report{std::move(sep), std::move(sys), cover};
}

}  // namespace cayley::ringlike
