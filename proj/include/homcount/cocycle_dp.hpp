#pragma once

// Counting 1-cocycles Z^1(X; G) by a sweep over an ordering of the
// simplices. Edges are oriented from lower to higher vertex and a cocycle
// satisfies g(uv) g(vw) = g(uw) on every triangle u < v < w.
//
// The state after k simplices maps labelings of the active edges (placed
// edges with an unplaced triangle coface) to the number of cocycles on the
// prefix restricting to that labeling. An edge step makes |G| copies of
// every state, a triangle step keeps the states satisfying the triangle and
// sums out edges whose last triangle it was.
//
// With deferred edges an edge enters the state unlabeled and gets its label
// at the first triangle containing it; a triangle with one unlabeled edge
// determines it. This counts the same extensions with far fewer states
// when edges are placed long before their triangles.

#include "complex.hpp"

#include <functional>
#include <unordered_map>

namespace homcount {

enum class DpMode {
  /// Every cocycle is counted; the total is divided by |G|^(v-1).
  full,
  /// Edges of a spanning tree (built greedily in ordering order) are fixed
  /// to the identity, which picks one cocycle per coboundary orbit.
  gauge_fixed,
};

struct DpResult {
  BigInt homs; // |Z^1(X;G)| / |G|^(v-1)
  BigInt cocycles; // |Z^1(X;G)|, full mode only
  std::size_t max_states = 0;
  std::size_t max_active_edges = 0;
};

struct DpOptions {
  DpMode mode = DpMode::gauge_fixed;
  bool defer_edges = true;
  std::size_t max_states = WorkBounds{}.max_states;
};

inline DpResult dp_count_homs(const SimplicialComplex& x, const SimplexOrdering& ord, const FiniteGroup& g,
                              const DpOptions& opts = {})
{
  validate_ordering(x, ord);
  if (!x.is_connected())
    throw input_error("dp_count_homs: complex is disconnected");
  const auto n = x.size();
  const Elem order = static_cast<Elem>(g.order());
  constexpr Elem unlabeled = 0xffff;
  if (g.order() >= unlabeled)
    throw bound_exceeded("dp_count_homs: group order " + std::to_string(g.order()) + " is too large");

  std::vector<char> tree(n, 0);
  if (opts.mode == DpMode::gauge_fixed) {
    std::vector<std::uint32_t> parent(x.vertex_count());
    std::iota(parent.begin(), parent.end(), 0u);
    auto root = [&](std::uint32_t v) {
      while (parent[v] != v)
        v = parent[v] = parent[parent[v]];
      return v;
    };
    for (auto id : ord)
      if (x.dimension_of(id) == 1) {
        auto a = root(x.simplex(id)[0]), b = root(x.simplex(id)[1]);
        if (a != b) {
          parent[a] = b;
          tree[id] = 1;
        }
      }
  }

  std::vector<std::size_t> open_triangles(n, 0);
  for (std::size_t id = 0; id < n; ++id)
    if (x.dimension_of(id) == 1)
      for (auto c : x.cofaces(id))
        open_triangles[id] += x.dimension_of(c) == 2;

  // Active edge slots, kept sorted by simplex id; keys store 2 bytes per slot.
  std::vector<std::size_t> active;
  using Key = std::string;
  std::unordered_map<Key, BigInt> states{{Key(), BigInt(1)}};
  BigInt factor = 1; // edges with no triangle coface contribute freely
  DpResult result;
  result.max_states = 1;

  auto slot_of = [&](std::size_t edge) {
    return static_cast<std::size_t>(std::lower_bound(active.begin(), active.end(), edge) - active.begin());
  };
  auto label = [](const Key& k, std::size_t slot) {
    return static_cast<Elem>(static_cast<unsigned char>(k[2 * slot]) |
                             (static_cast<unsigned char>(k[2 * slot + 1]) << 8));
  };
  auto encode = [](Elem v) {
    return std::string{static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  };

  for (auto id : ord) {
    const auto dim = x.dimension_of(id);
    if (dim == 1) {
      const bool fixed = tree[id] != 0;
      if (open_triangles[id] == 0) {
        if (!fixed)
          factor *= order;
        continue;
      }
      const bool branch = !fixed && !opts.defer_edges;
      if (branch && states.size() * order > opts.max_states)
        throw bound_exceeded("dp_count_homs: " + std::to_string(states.size() * order) +
                             " states would exceed max-states " + std::to_string(opts.max_states));
      auto slot = slot_of(id);
      active.insert(active.begin() + static_cast<std::ptrdiff_t>(slot), id);
      std::unordered_map<Key, BigInt> next;
      next.reserve(states.size() * (branch ? order : 1));
      for (const auto& [key, count] : states) {
        if (!branch) {
          Key k = key;
          k.insert(2 * slot, encode(fixed ? FiniteGroup::identity() : unlabeled));
          next.emplace(std::move(k), count);
          continue;
        }
        for (Elem v = 0; v < order; ++v) {
          Key k = key;
          k.insert(2 * slot, encode(v));
          next.emplace(std::move(k), count);
        }
      }
      states = std::move(next);
    } else if (dim == 2) {
      const auto& s = x.simplex(id);
      const std::size_t uv = x.edge_id(s[0], s[1]), vw = x.edge_id(s[1], s[2]), uw = x.edge_id(s[0], s[2]);
      const auto suv = slot_of(uv), svw = slot_of(vw), suw = slot_of(uw);
      std::vector<std::size_t> retire;
      for (auto e : {uv, vw, uw})
        if (--open_triangles[e] == 0)
          retire.push_back(slot_of(e));
      std::sort(retire.begin(), retire.end(), std::greater<>());
      std::unordered_map<Key, BigInt> next;
      next.reserve(states.size());
      auto emit = [&](const Key& key, const BigInt& count) {
        Key k = key;
        for (auto slot : retire)
          k.erase(2 * slot, 2);
        next[std::move(k)] += count;
        if (next.size() > opts.max_states)
          throw bound_exceeded("dp_count_homs: more than " + std::to_string(opts.max_states) + " states");
      };
      // Labels every unlabeled edge of the triangle consistently: the first
      // unlabeled ones by branching, the last one by solving g(uv) g(vw) = g(uw).
      std::function<void(Key&, const BigInt&)> complete = [&](Key& key, const BigInt& count) {
        Elem a = label(key, suv), b = label(key, svw), c = label(key, suw);
        int missing = (a == unlabeled) + (b == unlabeled) + (c == unlabeled);
        if (missing == 0) {
          if (g.mul(a, b) == c)
            emit(key, count);
          return;
        }
        if (missing == 1) {
          std::size_t slot = a == unlabeled ? suv : (b == unlabeled ? svw : suw);
          Elem v = a == unlabeled ? g.mul(c, g.inv(b)) : (b == unlabeled ? g.mul(g.inv(a), c) : g.mul(a, b));
          key.replace(2 * slot, 2, encode(v));
          emit(key, count);
          key.replace(2 * slot, 2, encode(unlabeled));
          return;
        }
        std::size_t slot = a == unlabeled ? suv : svw;
        for (Elem v = 0; v < order; ++v) {
          key.replace(2 * slot, 2, encode(v));
          complete(key, count);
        }
        key.replace(2 * slot, 2, encode(unlabeled));
      };
      for (const auto& [key, count] : states) {
        Key k = key;
        complete(k, count);
      }
      for (auto slot : retire)
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(slot));
      states = std::move(next);
    }
    // Vertices and tetrahedra impose nothing on 1-cocycles.
    result.max_states = std::max(result.max_states, states.size());
    result.max_active_edges = std::max(result.max_active_edges, active.size());
    if (states.size() > opts.max_states)
      throw bound_exceeded("dp_count_homs: " + std::to_string(states.size()) + " states exceed max-states " +
                           std::to_string(opts.max_states));
  }
  BigInt total = 0;
  for (const auto& [key, count] : states)
    total += count;
  total *= factor;
  if (opts.mode == DpMode::gauge_fixed) {
    result.homs = total;
    return result;
  }
  result.cocycles = total;
  BigInt gauge = ipow(BigInt(g.order()), x.vertex_count() - 1);
  if (total % gauge != 0)
    throw verification_error("dp_count_homs: |Z^1| = " + to_string(total) + " is not divisible by |G|^(v-1) = " +
                             to_string(gauge));
  result.homs = total / gauge;
  return result;
}

} // namespace homcount
