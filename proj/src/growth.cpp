#include "cayley/growth.hpp"

#include <algorithm>
#include <limits>

#include "cayley/errors.hpp"

namespace cayley {

BallGrower::BallGrower(const GroupGraph& host, const Vertex& center, Budget budget)
    : budget_(budget), ball_(host) {
  host.validate(center);
  ball_.insert_unchecked(center);
  sphere_.push_back(center);
}

void BallGrower::grow() {
  const GroupGraph& host = ball_.host();
  std::vector<Vertex> next;
  std::vector<Vertex> nbrs;
  for (const Vertex& v : sphere_) {
    host.neighbors_into(v, nbrs);
    for (Vertex& u : nbrs) {
      if (ball_.contains(u)) continue;
      if (ball_.size() >= budget_.max_vertices) {
        throw ResourceError("ball enumeration exceeded the budget of " + std::to_string(budget_.max_vertices) +
                                " vertices after completing radius " + std::to_string(radius_),
                            radius_);
      }
      ball_.insert_unchecked(u);
      next.push_back(std::move(u));
    }
  }
  sphere_ = std::move(next);
  ++radius_;
}

void BallGrower::grow_to(std::uint64_t r) {
  while (radius_ < r) {
    if (saturated()) {
      radius_ = r;
      return;
    }
    grow();
  }
}

VertexSet ball(const GroupGraph& host, const Vertex& center, std::uint64_t r, Budget budget) {
  BallGrower grower(host, center, budget);
  grower.grow_to(r);
  return grower.ball();
}

std::uint64_t ball_size(const GroupGraph& host, std::uint64_t r, Budget budget) {
  return ball_size_at(host, host.identity(), r, budget);
}

std::uint64_t ball_size_at(const GroupGraph& host, const Vertex& center, std::uint64_t r, Budget budget) {
  BallGrower grower(host, center, budget);
  grower.grow_to(r);
  return grower.size();
}

std::vector<std::uint64_t> free_group_growth_series(int rank, std::uint64_t max_radius) {
  if (rank < 2) throw DomainError("free group rank must be >= 2");
  // words[l]: reduced words of the current length ending in letter l; l and
  // l ^ 1 are mutually inverse.
  const std::size_t letters = 2 * static_cast<std::size_t>(rank);
  std::vector<unsigned __int128> words(letters, 1);
  std::vector<std::uint64_t> sizes{1};
  unsigned __int128 total = 1;
  for (std::uint64_t n = 1; n <= max_radius; ++n) {
    if (n > 1) {
      unsigned __int128 all = 0;
      for (auto w : words) all += w;
      const auto prev = words;
      for (std::size_t l = 0; l < letters; ++l) words[l] = all - prev[l ^ 1];
    }
    for (auto w : words) total += w;
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      throw ResourceError("b(" + std::to_string(n) + ") of free:" + std::to_string(rank) + " overflows 64 bits",
                          n - 1);
    }
    sizes.push_back(static_cast<std::uint64_t>(total));
  }
  return sizes;
}

std::vector<std::uint64_t> growth_series(const GroupGraph& host, std::uint64_t max_radius, Budget budget) {
  if (const auto* f = std::get_if<FreeGroup>(&host.family())) return free_group_growth_series(f->rank, max_radius);
  BallGrower grower(host, host.identity(), budget);
  std::vector<std::uint64_t> sizes{grower.size()};
  while (grower.radius() < max_radius) {
    grower.grow_to(grower.radius() + 1);
    sizes.push_back(grower.size());
  }
  return sizes;
}

std::uint64_t min_radius_with_ball_at_least(const GroupGraph& host, std::uint64_t target, Budget budget) {
  if (auto n = host.order(); n && *n < target) {
    throw DomainError("finite host " + host.name() + " has only " + std::to_string(*n) + " vertices, fewer than " +
                      std::to_string(target));
  }
  if (const auto* f = std::get_if<FreeGroup>(&host.family())) {
    for (std::uint64_t m = 1;; ++m) {
      if (free_group_growth_series(f->rank, m).back() >= target) return m;
    }
  }
  BallGrower grower(host, host.identity(), budget);
  grower.grow();
  while (grower.size() < target) grower.grow();
  return grower.radius();
}

std::string to_string(GrowthBranch b) {
  switch (b) {
    case GrowthBranch::Linear: return "linear";
    case GrowthBranch::AtLeastQuadratic: return "at-least-quadratic";
    case GrowthBranch::Undetermined: return "undetermined";
  }
  return "?";
}

GrowthReport classify_growth(const GroupGraph& host, std::uint64_t max_radius, Budget budget) {
  if (max_radius < 2) throw DomainError("classify_growth needs maxRadius >= 2");
  GrowthReport report;
  report.sizes = growth_series(host, max_radius, budget);
  const auto& b = report.sizes;

  report.beta = b[0];
  for (std::size_t n = 1; n < b.size(); ++n) report.alpha = std::max(report.alpha, b[n] - b[n - 1]);

  auto quad = [](std::uint64_t n) { return (n + 1) * (n + 2) / 2; };
  report.quadratic_lower_bound_holds = true;
  for (std::size_t n = 0; n < b.size(); ++n) {
    if (b[n] < quad(n)) {
      report.quadratic_lower_bound_holds = false;
      report.first_quadratic_failure = static_cast<std::int64_t>(n);
      break;
    }
  }
  const std::uint64_t N = max_radius;
  report.linear_envelope_below_quadratic = report.alpha * N + report.beta < quad(N);

  if (report.dichotomy_holds()) {
    report.branch = report.quadratic_lower_bound_holds ? GrowthBranch::AtLeastQuadratic : GrowthBranch::Linear;
  }
  return report;
}

}  // namespace cayley
