#pragma once

// #Q(X, J) for every subgroup J of G from hom counts, by inverting
//   #H(X, J) = sum over K <= J of |Aut(K)| #Q(X, K).

#include "group.hpp"

#include <functional>

namespace homcount {

struct LatticeRow {
  Subgroup subgroup;
  BigInt homs; // #H(X, J)
  BigInt surjections; // S(J) = #H(X, J) - sum over K < J of S(K)
  std::size_t automorphisms = 0;
  BigInt quotients; // S(J) / |Aut(J)|
  bool cached = false; // hom count reused from an isomorphic subgroup
};

struct InversionTable {
  std::vector<LatticeRow> rows; // in lattice order: by order, then members
  BigInt total_homs; // #H(X, G)
  BigInt weighted_sum; // sum of |Aut(J)| #Q(X, J)
  bool consistent = false;
};

namespace detail {

struct GroupFingerprint {
  std::size_t order;
  bool abelian;
  std::vector<std::size_t> order_histogram;
  auto operator<=>(const GroupFingerprint&) const = default;
};

inline GroupFingerprint fingerprint(const FiniteGroup& g)
{
  GroupFingerprint f{g.order(), g.is_abelian(), std::vector<std::size_t>(g.order() + 1, 0)};
  for (Elem x = 0; x < g.order(); ++x)
    ++f.order_histogram[g.element_order(x)];
  return f;
}

} // namespace detail

/// `count_homs_into(J)` returns #H(X, J) for J given as a group in its own
/// right. Hom counts and |Aut| are cached per isomorphism type: a
/// fingerprint match is confirmed by an explicit isomorphism before reuse.
inline InversionTable quotient_counts_via_inversion(const FiniteGroup& g,
                                                    const std::function<BigInt(const FiniteGroup&)>& count_homs_into,
                                                    std::size_t order_bound = WorkBounds{}.max_group_order)
{
  auto lattice = subgroup_lattice(g, order_bound);
  struct CacheEntry {
    FiniteGroup group;
    BigInt homs;
    std::size_t automorphisms;
  };
  std::multimap<detail::GroupFingerprint, CacheEntry> cache;
  InversionTable table;
  const auto k = lattice.subgroups.size();
  table.rows.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto& row = table.rows[i];
    row.subgroup = lattice.subgroups[i];
    auto sub = subgroup_as_group(g, row.subgroup).group;
    auto fp = detail::fingerprint(sub);
    const CacheEntry* hit = nullptr;
    auto [lo, hi] = cache.equal_range(fp);
    for (auto it = lo; it != hi && !hit; ++it)
      if (find_isomorphism(sub, it->second.group))
        hit = &it->second;
    if (hit) {
      row.homs = hit->homs;
      row.automorphisms = hit->automorphisms;
      row.cached = true;
    } else {
      row.homs = count_homs_into(sub);
      row.automorphisms = automorphisms(sub, order_bound).size();
      cache.emplace(fp, CacheEntry{sub, row.homs, row.automorphisms});
    }
    row.surjections = row.homs;
    for (std::size_t j = 0; j < i; ++j)
      if (lattice.contains[i][j])
        row.surjections -= table.rows[j].surjections;
    if (row.surjections < 0 || row.surjections % row.automorphisms != 0)
      throw verification_error("inversion: S(J) = " + to_string(row.surjections) + " for a subgroup of order " +
                               std::to_string(row.subgroup.order()) + " is not a multiple of |Aut(J)| = " +
                               std::to_string(row.automorphisms));
    row.quotients = row.surjections / row.automorphisms;
  }
  table.total_homs = table.rows.back().homs;
  table.weighted_sum = 0;
  for (const auto& row : table.rows)
    table.weighted_sum += row.quotients * row.automorphisms;
  table.consistent = table.weighted_sum == table.total_homs;
  return table;
}

/// The relation #H = |Aut(G)| #Q + 1, expected when the only quotients of
/// pi among subgroups of G are G itself and the trivial group.
struct HqCheck {
  bool applicable = false; // no proper nontrivial J with #Q(J) > 0
  bool holds = false;
};

inline HqCheck check_hq(const InversionTable& t)
{
  HqCheck c;
  c.applicable = true;
  for (std::size_t i = 1; i + 1 < t.rows.size(); ++i)
    if (t.rows[i].quotients != 0)
      c.applicable = false;
  const auto& top = t.rows.back();
  c.holds = t.total_homs == top.quotients * top.automorphisms + 1;
  return c;
}

} // namespace homcount
