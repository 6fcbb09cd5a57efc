#pragma once

// Brute-force homomorphism counting from presentations.

#include "presentation.hpp"

namespace homcount {

struct HomCount {
  BigInt homs;
  BigInt surjections;
  BigInt quotients;
  /// Surjections that are lexicographically least in their Aut(G)-orbit.
  BigInt canonical_surjections;
  std::size_t automorphisms = 0;
};

namespace detail {

/// Backtracking over generator images in order; a relator is evaluated as
/// soon as its largest generator is assigned.
class HomEnumerator {
public:
  HomEnumerator(const Presentation& p, const FiniteGroup& g, std::uint64_t max_enumeration)
    : p_(p), g_(g), checks_(p.generators)
  {
    p_.validate();
    BigInt work = ipow(BigInt(g.order()), p.generators);
    if (work > max_enumeration)
      throw bound_exceeded("hom enumeration: |G|^r = " + to_string(work) + " exceeds max-enumeration " +
                           std::to_string(max_enumeration));
    for (std::size_t i = 0; i < p_.relators.size(); ++i) {
      int top = 0;
      for (int l : p_.relators[i])
        top = std::max(top, std::abs(l));
      if (top == 0)
        continue; // empty relator
      checks_[static_cast<std::size_t>(top - 1)].push_back(i);
    }
  }

  /// Calls visit(images) for every homomorphism.
  template <class Visit>
  void run(Visit&& visit)
  {
    images_.assign(p_.generators, 0);
    inverse_images_.assign(p_.generators, 0);
    descend(0, visit);
  }

private:
  template <class Visit>
  void descend(std::size_t depth, Visit& visit)
  {
    if (depth == p_.generators) {
      visit(static_cast<const std::vector<Elem>&>(images_));
      return;
    }
    for (Elem x = 0; x < g_.order(); ++x) {
      images_[depth] = x;
      inverse_images_[depth] = g_.inv(x);
      bool ok = true;
      for (auto r : checks_[depth])
        if (evaluate(p_.relators[r]) != FiniteGroup::identity()) {
          ok = false;
          break;
        }
      if (ok)
        descend(depth + 1, visit);
    }
  }

  Elem evaluate(const Word& w) const
  {
    Elem acc = FiniteGroup::identity();
    for (int l : w)
      acc = g_.mul(acc, l > 0 ? images_[static_cast<std::size_t>(l - 1)] : inverse_images_[static_cast<std::size_t>(-l - 1)]);
    return acc;
  }

  Presentation p_;
  const FiniteGroup& g_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<Elem> images_;
  std::vector<Elem> inverse_images_;
};

} // namespace detail

struct CountOptions {
  std::uint64_t max_enumeration = WorkBounds{}.max_enumeration;
  bool simplify = true;
};

/// Calls visit(images) for each homomorphism of the (simplified)
/// presentation; returns the presentation actually enumerated.
template <class Visit>
Presentation for_each_hom(const Presentation& p, const FiniteGroup& g, Visit&& visit, const CountOptions& opts = {})
{
  Presentation work = opts.simplify ? simplify_presentation(p) : p;
  detail::HomEnumerator e(work, g, opts.max_enumeration);
  e.run(visit);
  return work;
}

inline BigInt count_homs(const Presentation& p, const FiniteGroup& g, const CountOptions& opts = {})
{
  std::uint64_t count = 0;
  for_each_hom(p, g, [&](const std::vector<Elem>&) { ++count; }, opts);
  return count;
}

inline BigInt count_surjections(const Presentation& p, const FiniteGroup& g, const CountOptions& opts = {})
{
  std::uint64_t count = 0;
  for_each_hom(p, g, [&](const std::vector<Elem>& images) { count += generates(g, images); }, opts);
  return count;
}

/// Homs, surjections and #Q = surjections / |Aut(G)|, with the quotient
/// count confirmed by counting lexicographically least orbit members.
inline HomCount count_all(const Presentation& p, const FiniteGroup& g, const CountOptions& opts = {},
                          std::size_t aut_bound = WorkBounds{}.max_group_order)
{
  auto auts = automorphisms(g, aut_bound);
  HomCount out;
  out.automorphisms = auts.size();
  std::uint64_t homs = 0, surj = 0, canonical = 0;
  std::vector<Elem> moved;
  for_each_hom(
    p, g,
    [&](const std::vector<Elem>& images) {
      ++homs;
      if (!generates(g, images))
        return;
      ++surj;
      moved.resize(images.size());
      for (const auto& phi : auts) {
        for (std::size_t i = 0; i < images.size(); ++i)
          moved[i] = phi[images[i]];
        if (moved < images)
          return;
      }
      ++canonical;
    },
    opts);
  out.homs = homs;
  out.surjections = surj;
  out.canonical_surjections = canonical;
  if (out.surjections % out.automorphisms != 0)
    throw verification_error("surjection count " + to_string(out.surjections) + " is not divisible by |Aut(G)| = " +
                             std::to_string(out.automorphisms));
  out.quotients = out.surjections / out.automorphisms;
  if (out.quotients != out.canonical_surjections)
    throw verification_error("quotient count " + to_string(out.quotients) +
                             " differs from the number of canonical orbit representatives " +
                             to_string(out.canonical_surjections));
  return out;
}

inline BigInt count_quotients(const Presentation& p, const FiniteGroup& g, const CountOptions& opts = {})
{
  return count_all(p, g, opts).quotients;
}

} // namespace homcount
