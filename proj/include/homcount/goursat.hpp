#pragma once

// Subdirect products H <= G1 x G2 as graphs of isomorphisms G1/N1 -> G2/N2.

#include "group.hpp"

namespace homcount {

struct GoursatDecomposition {
  Subgroup n1; // {g : (g,1) in H}
  Subgroup n2; // {g : (1,g) in H}
  Quotient q1;
  Quotient q2;
  std::vector<Elem> iso; // coset of N1 -> coset of N2
  std::vector<std::pair<Elem, Elem>> members; // H, sorted
};

/// Closure of the given pairs inside G1 x G2, sorted.
inline std::vector<std::pair<Elem, Elem>> close_pairs(const FiniteGroup& g1, const FiniteGroup& g2,
                                                      const std::vector<std::pair<Elem, Elem>>& gens)
{
  const auto n2 = g2.order();
  std::vector<char> seen(g1.order() * n2, 0);
  std::vector<std::pair<Elem, Elem>> out{{0, 0}};
  seen[0] = 1;
  for (const auto& [a, b] : gens)
    if (a >= g1.order() || b >= n2)
      throw input_error("goursat: generator pair out of range");
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& [a, b] : gens) {
      std::pair<Elem, Elem> next{g1.mul(out[head].first, a), g2.mul(out[head].second, b)};
      auto key = static_cast<std::size_t>(next.first) * n2 + next.second;
      if (!seen[key]) {
        seen[key] = 1;
        out.push_back(next);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline GoursatDecomposition goursat_decompose(const std::vector<std::pair<Elem, Elem>>& h,
                                              const FiniteGroup& g1, const FiniteGroup& g2)
{
  std::vector<char> hit1(g1.order(), 0), hit2(g2.order(), 0);
  for (const auto& [a, b] : h) {
    hit1[a] = 1;
    hit2[b] = 1;
  }
  if (std::find(hit1.begin(), hit1.end(), 0) != hit1.end())
    throw input_error("goursat: H does not surject onto the first factor");
  if (std::find(hit2.begin(), hit2.end(), 0) != hit2.end())
    throw input_error("goursat: H does not surject onto the second factor");

  GoursatDecomposition d;
  d.members = h;
  std::sort(d.members.begin(), d.members.end());
  for (const auto& [a, b] : d.members) {
    if (b == FiniteGroup::identity())
      d.n1.members.push_back(a);
    if (a == FiniteGroup::identity())
      d.n2.members.push_back(b);
  }
  std::sort(d.n1.members.begin(), d.n1.members.end());
  std::sort(d.n2.members.begin(), d.n2.members.end());
  d.q1 = quotient(g1, d.n1);
  d.q2 = quotient(g2, d.n2);
  if (d.q1.group.order() != d.q2.group.order())
    throw verification_error("goursat: quotients have different orders");
  const auto k = d.q1.group.order();
  d.iso.assign(k, static_cast<Elem>(-1));
  for (const auto& [a, b] : d.members) {
    auto c1 = d.q1.projection[a], c2 = d.q2.projection[b];
    if (d.iso[c1] == static_cast<Elem>(-1))
      d.iso[c1] = c2;
    else if (d.iso[c1] != c2)
      throw verification_error("goursat: coset correspondence is not a function");
  }
  if (!is_homomorphism(d.q1.group, d.q2.group, d.iso))
    throw verification_error("goursat: coset correspondence is not a homomorphism");
  return d;
}

/// {(g1, g2) : iso(g1 N1) = g2 N2}, sorted.
inline std::vector<std::pair<Elem, Elem>> goursat_reconstruct(const GoursatDecomposition& d, const FiniteGroup& g1,
                                                              const FiniteGroup& g2)
{
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < g1.order(); ++a)
    for (Elem b = 0; b < g2.order(); ++b)
      if (d.iso[d.q1.projection[a]] == d.q2.projection[b])
        out.emplace_back(a, b);
  return out;
}

} // namespace homcount
