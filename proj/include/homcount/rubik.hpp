#pragma once

// Rubik groups: the commutator subgroup of the group of Γ-equivariant
// permutations of a Γ-set whose orbits are fixed points or free.

#include "gset.hpp"
#include "schreier_sims.hpp"

namespace homcount {

/// An equivariant permutation written in wreath coordinates: p maps
/// g . section(o) to g * components[o] . section(orbit_perm(o)).
struct WreathCoordinates {
  Permutation fixed_perm; // on indices into fixed_points()
  Permutation orbit_perm; // on indices into free_orbit_ids()
  std::vector<Elem> components;
};

inline WreathCoordinates decompose_equivariant(const Permutation& p, const GSetAction& act)
{
  if (act.has_other_orbits())
    throw input_error("rubik: the action has an orbit that is neither fixed nor free");
  if (!act.is_equivariant(p))
    throw input_error("rubik: permutation does not commute with the group action");
  const auto& fixed = act.fixed_points();
  const auto& free = act.free_orbit_ids();
  std::vector<std::uint32_t> fixed_index(act.points(), 0), free_index(act.orbit_count(), 0);
  for (std::uint32_t i = 0; i < fixed.size(); ++i)
    fixed_index[fixed[i]] = i;
  for (std::uint32_t i = 0; i < free.size(); ++i)
    free_index[free[i]] = i;

  std::vector<std::uint32_t> fixed_images(fixed.size());
  for (std::size_t i = 0; i < fixed.size(); ++i)
    fixed_images[i] = fixed_index[p[fixed[i]]];
  std::vector<std::uint32_t> orbit_images(free.size());
  std::vector<Elem> components(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) {
    auto image = p[act.section(free[i])];
    orbit_images[i] = free_index[act.orbit_of(image)];
    components[i] = act.offset(image);
  }
  return {Permutation(std::move(fixed_images)), Permutation(std::move(orbit_images)), std::move(components)};
}

/// Product of the abelianized components.
inline Elem sigma(const WreathCoordinates& w, const GSetAction& act)
{
  const auto& ab = act.abelianization_map();
  Elem total = FiniteGroup::identity();
  for (auto h : w.components)
    total = ab.quotient.mul(total, ab.projection[h]);
  return total;
}

inline bool rubik_membership(const Permutation& p, const GSetAction& act)
{
  auto w = decompose_equivariant(p, act);
  return w.fixed_perm.is_even() && w.orbit_perm.is_even() && sigma(w, act) == FiniteGroup::identity();
}

/// Inverse of decompose_equivariant.
inline Permutation wreath_element(const GSetAction& act, const WreathCoordinates& w)
{
  const auto& g = act.group();
  const auto& fixed = act.fixed_points();
  const auto& free = act.free_orbit_ids();
  if (w.fixed_perm.degree() != fixed.size() || w.orbit_perm.degree() != free.size() ||
      w.components.size() != free.size())
    throw input_error("wreath_element: coordinates do not match the action");
  std::vector<std::uint32_t> images(act.points());
  for (std::size_t i = 0; i < fixed.size(); ++i)
    images[fixed[i]] = fixed[w.fixed_perm[static_cast<std::uint32_t>(i)]];
  for (std::size_t i = 0; i < free.size(); ++i) {
    auto target = free[w.orbit_perm[static_cast<std::uint32_t>(i)]];
    for (Elem x = 0; x < g.order(); ++x)
      images[act.point_at(free[i], x)] = act.point_at(target, g.mul(x, w.components[i]));
  }
  return Permutation(std::move(images));
}

/// |Γ|^n / |Γ_ab| * n!/2.
inline BigInt rubik_order(std::size_t n, const FiniteGroup& gamma)
{
  if (n < 2)
    throw input_error("rubik_order: need at least 2 orbits");
  auto ab = abelianization(gamma);
  return ipow(BigInt(gamma.order()), n) / ab.quotient.order() * (factorial(n) / 2);
}

/// Generators of Rub(n, Γ) for an action made of n free orbits: lifts of
/// generators of Alt(n), elements (g, g^-1, 1, ...) for generators g of Γ,
/// and (c, 1, ...) for generators c of [Γ, Γ].
inline std::vector<Permutation> standard_rubik_generators(const GSetAction& act)
{
  const auto& g = act.group();
  const auto n = act.free_orbit_ids().size();
  if (n < 2)
    throw input_error("standard_rubik_generators: need at least 2 free orbits");
  Permutation fixed_id(act.fixed_points().size());
  auto with = [&](Permutation orbit_perm, std::vector<Elem> comps) {
    return wreath_element(act, {fixed_id, std::move(orbit_perm), std::move(comps)});
  };
  std::vector<Permutation> gens;
  const std::vector<Elem> ones(n, FiniteGroup::identity());
  if (n >= 3) {
    gens.push_back(with(Permutation::cycle(n, {0, 1, 2}), ones));
    std::vector<std::uint32_t> long_cycle;
    for (std::uint32_t i = (n % 2 == 1) ? 0 : 1; i < n; ++i)
      long_cycle.push_back(i);
    if (n > 3)
      gens.push_back(with(Permutation::cycle(n, long_cycle), ones));
  }
  for (auto x : generating_set(g)) {
    auto comps = ones;
    comps[0] = x;
    comps[1] = g.inv(x);
    gens.push_back(with(Permutation(n), comps));
  }
  auto derived = commutator_subgroup(g);
  for (auto c : generating_set(g, derived)) {
    for (std::size_t slot = 0; slot < (n == 2 ? 2u : 1u); ++slot) {
      auto comps = ones;
      comps[slot] = c;
      gens.push_back(with(Permutation(n), comps));
    }
  }
  return gens;
}

struct RubikSurjectivityReport {
  std::size_t orbits = 0;
  bool orbit_action_contains_alt = false; // (i)
  GiantClass orbit_action_class = GiantClass::other;
  bool gset_two_transitive = false; // (ii)
  BigInt generated_order;
  BigInt rubik_order;
  bool generates_rubik = false; // (iii)
  bool alt_quotient_excluded = false;
  /// (i) and (ii) and the quotient hypothesis imply (iii).
  bool consistent_with_theorem = false;
};

namespace detail {

/// Whether Alt(n-2) is a quotient of Γ. Only decidable here when the
/// orders rule it out, or when n - 2 == 5 and Γ is small enough to search.
inline bool alt_is_quotient(std::size_t n, const FiniteGroup& gamma)
{
  BigInt alt_order = factorial(n - 2) / 2;
  if (BigInt(gamma.order()) < alt_order)
    return false;
  if (n - 2 != 5)
    throw bound_exceeded("rubik check: cannot decide whether Alt(" + std::to_string(n - 2) +
                         ") is a quotient of " + gamma.name());
  // A5 is the only simple group of order 60: look for a normal subgroup of
  // index 60 with perfect quotient.
  auto lattice = subgroup_lattice(gamma);
  for (const auto& s : lattice.subgroups)
    if (s.order() * 60 == gamma.order() && is_normal(gamma, s) && is_perfect(quotient(gamma, s).group))
      return true;
  return false;
}

} // namespace detail

inline RubikSurjectivityReport rubik_surjectivity_check(const std::vector<Permutation>& gens,
                                                        const GSetAction& act)
{
  if (!act.fixed_points().empty())
    throw input_error("rubik check: the action must consist of free orbits only");
  const auto n = act.free_orbit_ids().size();
  if (n < 7)
    throw input_error("rubik check: needs at least 7 orbits, got " + std::to_string(n));
  std::vector<Permutation> orbit_perms;
  for (const auto& p : gens) {
    if (!rubik_membership(p, act))
      throw input_error("rubik check: a generator is not in the Rubik group of the action");
    orbit_perms.push_back(decompose_equivariant(p, act).orbit_perm);
  }
  RubikSurjectivityReport report;
  report.orbits = n;
  report.orbit_action_class = classify_giant(PermutationGroup(n, orbit_perms));
  report.orbit_action_contains_alt = report.orbit_action_class != GiantClass::other;

  // Ordered pairs of points in distinct orbits, explored from one pair.
  const auto m = act.points();
  std::vector<char> seen(m * m, 0);
  std::uint32_t x0 = act.section(act.free_orbit_ids()[0]), y0 = act.section(act.free_orbit_ids()[1]);
  std::vector<std::size_t> queue{static_cast<std::size_t>(x0) * m + y0};
  seen[queue[0]] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto x = static_cast<std::uint32_t>(queue[head] / m), y = static_cast<std::uint32_t>(queue[head] % m);
    for (const auto& p : gens) {
      auto key = static_cast<std::size_t>(p[x]) * m + p[y];
      if (!seen[key]) {
        seen[key] = 1;
        queue.push_back(key);
      }
    }
  }
  const std::size_t k = act.group().order();
  report.gset_two_transitive = queue.size() == (n * k) * ((n - 1) * k);

  report.generated_order = PermutationGroup(m, gens).order();
  report.rubik_order = rubik_order(n, act.group());
  report.generates_rubik = report.generated_order == report.rubik_order;
  report.alt_quotient_excluded = !detail::alt_is_quotient(n, act.group());
  report.consistent_with_theorem =
    !(report.orbit_action_contains_alt && report.gset_two_transitive && report.alt_quotient_excluded) ||
    report.generates_rubik;
  return report;
}

} // namespace homcount
