#pragma once

// Permutation groups given by generators: deterministic Schreier-Sims,
// giant recognition and generation of alternating groups.

#include "bigint.hpp"
#include "errors.hpp"
#include "perm.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_set>

namespace homcount {

class PermutationGroup {
public:
  static constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

  PermutationGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree)
  {
    if (degree > kMaxDegree)
      throw bound_exceeded("permutation group degree " + std::to_string(degree) + " exceeds " +
                           std::to_string(kMaxDegree));
    for (auto& g : generators) {
      if (g.degree() > degree)
        throw input_error("generator degree " + std::to_string(g.degree()) +
                          " exceeds group degree " + std::to_string(degree));
      generators_.push_back(pad(std::move(g)));
    }
    build_chain();
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  BigInt order() const
  {
    BigInt result = 1;
    for (const auto& level : levels_)
      result *= level.orbit.size();
    return result;
  }

  std::vector<std::uint32_t> base() const
  {
    std::vector<std::uint32_t> b;
    for (const auto& level : levels_)
      b.push_back(level.base);
    return b;
  }

  bool contains(const Permutation& p) const
  {
    if (p.degree() > degree_)
      return false;
    auto [residue, depth] = sift(pad(p), 0);
    return depth == levels_.size() && residue.is_identity();
  }

  /// Orbit of `point` under the generators, in discovery order.
  std::vector<std::uint32_t> orbit(std::uint32_t point) const
  {
    std::vector<std::uint32_t> out{point};
    std::vector<char> seen(degree_, 0);
    seen[point] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
      for (const auto& g : generators_) {
        auto y = g[out[head]];
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    return out;
  }

private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> gens_inv;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> schreier; // -1: outside orbit, -2: base, else generator index
  };

  Permutation pad(Permutation p) const
  {
    if (p.degree() == degree_)
      return p;
    auto images = p.images();
    for (std::size_t x = images.size(); x < degree_; ++x)
      images.push_back(static_cast<std::uint32_t>(x));
    return Permutation(std::move(images));
  }

  static void rebuild_orbit(Level& level, std::size_t degree)
  {
    level.schreier.assign(degree, -1);
    level.schreier[level.base] = -2;
    level.orbit.assign(1, level.base);
    for (std::size_t head = 0; head < level.orbit.size(); ++head)
      for (std::size_t i = 0; i < level.gens.size(); ++i) {
        auto y = level.gens[i][level.orbit[head]];
        if (level.schreier[y] == -1) {
          level.schreier[y] = static_cast<std::int32_t>(i);
          level.orbit.push_back(y);
        }
      }
  }

  /// Coset representative u with base^u == point.
  Permutation transversal(const Level& level, std::uint32_t point) const
  {
    Permutation u(degree_);
    while (level.schreier[point] != -2) {
      auto i = static_cast<std::size_t>(level.schreier[point]);
      u = level.gens[i] * u;
      point = level.gens_inv[i][point];
    }
    return u;
  }

  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const
  {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      auto image = h[levels_[i].base];
      if (levels_[i].schreier[image] == -1)
        return {std::move(h), i};
      h = h * transversal(levels_[i], image).inverse();
    }
    return {std::move(h), levels_.size()};
  }

  void add_strong_generator(const Permutation& h, std::size_t first, std::size_t last)
  {
    if (last == levels_.size()) {
      Level fresh;
      fresh.base = h.first_moved_point();
      levels_.push_back(std::move(fresh));
    }
    for (std::size_t l = first; l <= last; ++l) {
      levels_[l].gens.push_back(h);
      levels_[l].gens_inv.push_back(h.inverse());
      rebuild_orbit(levels_[l], degree_);
    }
  }

  void build_chain()
  {
    for (const auto& g : generators_) {
      if (g.is_identity())
        continue;
      // A generator belongs to every level whose earlier base points it fixes.
      add_strong_generator(g, 0, lowest_moving(g));
    }
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      auto& level = levels_[static_cast<std::size_t>(i)];
      bool restarted = false;
      for (std::size_t oi = 0; oi < level.orbit.size() && !restarted; ++oi) {
        auto p = level.orbit[oi];
        auto up = transversal(level, p);
        for (std::size_t s = 0; s < level.gens.size() && !restarted; ++s) {
          auto q = level.gens[s][p];
          auto h = up * level.gens[s] * transversal(level, q).inverse();
          if (h.is_identity())
            continue;
          auto [residue, depth] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
          if (depth == levels_.size() && residue.is_identity())
            continue;
          add_strong_generator(residue, static_cast<std::size_t>(i) + 1, depth);
          i = static_cast<std::ptrdiff_t>(depth);
          restarted = true;
        }
      }
      if (!restarted)
        --i;
    }
  }

  /// Index of the first level whose base `g` moves; levels_.size() if none.
  std::size_t lowest_moving(const Permutation& g)
  {
    for (std::size_t l = 0; l < levels_.size(); ++l)
      if (g[levels_[l].base] != levels_[l].base)
        return l;
    return levels_.size();
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// Order by explicit breadth-first closure; used to cross-check the chain.
inline std::size_t closure_order(std::size_t degree, const std::vector<Permutation>& gens,
                                 std::size_t bound = 5'000'000)
{
  std::vector<Permutation> padded;
  for (const auto& g : gens) {
    auto images = g.images();
    for (std::size_t x = images.size(); x < degree; ++x)
      images.push_back(static_cast<std::uint32_t>(x));
    padded.emplace_back(std::move(images));
  }
  std::unordered_set<Permutation, PermutationHash> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : padded) {
      auto next = queue[head] * g;
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw bound_exceeded("closure_order: more than " + std::to_string(bound) + " elements");
        queue.push_back(std::move(next));
      }
    }
  return queue.size();
}

enum class GiantClass { alternating, symmetric, other };

inline const char* to_string(GiantClass c)
{
  switch (c) {
  case GiantClass::alternating:
    return "alternating";
  case GiantClass::symmetric:
    return "symmetric";
  default:
    return "other";
  }
}

inline GiantClass classify_giant(const PermutationGroup& g)
{
  const auto n = g.degree();
  if (n < 5)
    throw input_error("classify_giant: degree " + std::to_string(n) +
                      " < 5, Alt(n) is not the unique index-2 subgroup");
  auto order = g.order();
  auto full = factorial(n);
  if (order == full)
    return GiantClass::symmetric;
  bool all_even = std::all_of(g.generators().begin(), g.generators().end(),
                              [](const Permutation& p) { return p.is_even(); });
  if (all_even && order * 2 == full)
    return GiantClass::alternating;
  return GiantClass::other;
}

struct AltGenerationReport {
  bool generates = false;
  bool intersection_graph_connected = false;
  BigInt generated_order;
  BigInt alternating_order;
};

/// Whether Alt(T_1), ..., Alt(T_k) generate Alt(S). Points are arbitrary
/// labels; S must be the union of the T_i.
inline AltGenerationReport alt_generation_check(const std::vector<std::uint32_t>& s,
                                                const std::vector<std::vector<std::uint32_t>>& ts)
{
  std::map<std::uint32_t, std::uint32_t> index;
  for (auto x : s)
    index.emplace(x, static_cast<std::uint32_t>(index.size()));
  if (index.size() != s.size())
    throw input_error("alt_generation_check: repeated point in S");
  std::vector<char> covered(s.size(), 0);
  std::vector<Permutation> gens;
  for (const auto& t : ts) {
    if (t.size() < 3)
      throw input_error("alt_generation_check: subset with fewer than 3 points");
    std::vector<std::uint32_t> local;
    for (auto x : t) {
      auto it = index.find(x);
      if (it == index.end())
        throw input_error("alt_generation_check: subset point " + std::to_string(x) + " not in S");
      local.push_back(it->second);
      covered[it->second] = 1;
    }
    // 3-cycles (t0 t1 tj) generate Alt(T).
    for (std::size_t j = 2; j < local.size(); ++j)
      gens.push_back(Permutation::cycle(s.size(), {local[0], local[1], local[j]}));
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw input_error("alt_generation_check: the subsets do not cover S");

  AltGenerationReport report;
  PermutationGroup group(s.size(), gens);
  report.generated_order = group.order();
  report.alternating_order = s.size() < 2 ? BigInt(1) : factorial(s.size()) / 2;
  report.generates = report.generated_order == report.alternating_order;

  std::vector<std::size_t> component(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i)
    component[i] = i;
  auto find = [&](std::size_t x) {
    while (component[x] != x)
      x = component[x] = component[component[x]];
    return x;
  };
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      bool meet = std::any_of(ts[i].begin(), ts[i].end(), [&](std::uint32_t x) {
        return std::find(ts[j].begin(), ts[j].end(), x) != ts[j].end();
      });
      if (meet)
        component[find(i)] = find(j);
    }
  report.intersection_graph_connected = true;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (find(i) != find(0))
      report.intersection_graph_connected = false;
  return report;
}

} // namespace homcount
