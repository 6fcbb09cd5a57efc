#pragma once

// Finite groups given by multiplication tables, with the subgroup, quotient
// and automorphism machinery the counting code is built on.

#include "bigint.hpp"
#include "errors.hpp"
#include "perm.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace homcount {

using Elem = std::uint32_t;

class FiniteGroup {
public:
  /// Number of random triples checked when the table is too large for the
  /// full cubic associativity test.
  static constexpr std::size_t kFullAssociativityLimit = 128;
  static constexpr std::size_t kAssociativitySamples = 200'000;

  FiniteGroup() = default;

  /// Validates a multiplication table (row-major, table[a*n+b] = ab) whose
  /// element 0 is the identity.
  static FiniteGroup from_table(std::string name, std::size_t order, std::vector<Elem> table)
  {
    if (order == 0)
      throw input_error("group '" + name + "': empty group");
    if (table.size() != order * order)
      throw input_error("group '" + name + "': table has " + std::to_string(table.size()) +
                        " entries, expected " + std::to_string(order * order));
    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = order;
    g.table_ = std::move(table);
    g.validate_table();
    g.build_inverses();
    return g;
  }

  /// Breadth-first closure of permutation generators. Element ids follow
  /// discovery order with id 0 the identity.
  static FiniteGroup from_permutations(std::string name, const std::vector<Permutation>& gens,
                                       std::size_t max_order = 100'000)
  {
    std::size_t degree = 0;
    for (const auto& p : gens)
      degree = std::max(degree, p.degree());
    std::vector<Permutation> padded;
    for (const auto& p : gens) {
      auto images = p.images();
      for (std::size_t x = images.size(); x < degree; ++x)
        images.push_back(static_cast<std::uint32_t>(x));
      padded.emplace_back(std::move(images));
    }
    std::vector<Permutation> elements{Permutation(degree)};
    std::unordered_map<Permutation, Elem, PermutationHash> index{{elements[0], 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const auto& s : padded) {
        auto next = elements[head] * s;
        if (index.emplace(next, static_cast<Elem>(elements.size())).second) {
          elements.push_back(std::move(next));
          if (elements.size() > max_order)
            throw bound_exceeded("group '" + name + "': closure exceeds order bound " +
                                 std::to_string(max_order));
        }
      }
    }
    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = elements.size();
    g.table_.resize(g.n_ * g.n_);
    for (std::size_t a = 0; a < g.n_; ++a)
      for (std::size_t b = 0; b < g.n_; ++b)
        g.table_[a * g.n_ + b] = index.at(elements[a] * elements[b]);
    g.build_inverses();
    g.realization_ = std::move(elements);
    return g;
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return n_; }
  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  Elem conjugate(Elem x, Elem by) const { return mul(mul(by, x), inv(by)); }

  Elem pow(Elem a, std::int64_t k) const
  {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    Elem result = identity();
    Elem base = a;
    while (k) {
      if (k & 1)
        result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  std::size_t element_order(Elem a) const
  {
    std::size_t k = 1;
    for (Elem x = a; x != identity(); x = mul(x, a))
      ++k;
    return k;
  }

  bool is_abelian() const
  {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  const std::vector<Elem>& table() const { return table_; }

  /// Permutations realising the elements when built from generators.
  const std::vector<Permutation>& realization() const { return realization_; }

private:
  void validate_table()
  {
    for (auto v : table_)
      if (v >= n_)
        throw input_error("group '" + name_ + "': table entry out of range");
    std::vector<char> seen(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n_; ++b) {
        auto v = table_[a * n_ + b];
        if (seen[v])
          throw input_error("group '" + name_ + "': row " + std::to_string(a) + " is not a bijection");
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n_; ++b) {
        auto v = table_[b * n_ + a];
        if (seen[v])
          throw input_error("group '" + name_ + "': column " + std::to_string(a) +
                            " is not a bijection");
        seen[v] = 1;
      }
    }
    for (std::size_t a = 0; a < n_; ++a)
      if (table_[a] != a || table_[a * n_] != a)
        throw input_error("group '" + name_ + "': element 0 is not a two-sided identity");
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      return mul(mul(static_cast<Elem>(a), static_cast<Elem>(b)), static_cast<Elem>(c)) ==
             mul(static_cast<Elem>(a), mul(static_cast<Elem>(b), static_cast<Elem>(c)));
    };
    if (n_ <= kFullAssociativityLimit) {
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
          for (std::size_t c = 0; c < n_; ++c)
            if (!assoc(a, b, c))
              throw input_error("group '" + name_ + "': table is not associative");
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
      for (std::size_t t = 0; t < kAssociativitySamples; ++t)
        if (!assoc(pick(rng), pick(rng), pick(rng)))
          throw input_error("group '" + name_ + "': table is not associative");
    }
  }

  void build_inverses()
  {
    inverse_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n_; ++b)
        if (table_[a * n_ + b] == identity()) {
          inverse_[a] = static_cast<Elem>(b);
          found = true;
          break;
        }
      if (!found || table_[inverse_[a] * n_ + a] != identity())
        throw input_error("group '" + name_ + "': inverse table inconsistent");
    }
  }

  std::string name_;
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Permutation> realization_;
};

/// A subgroup stored as its sorted member ids.
struct Subgroup {
  std::vector<Elem> members;

  std::size_t order() const { return members.size(); }
  bool contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup& other) const
  {
    if (auto c = members.size() <=> other.members.size(); c != 0)
      return c;
    return members <=> other.members;
  }
};

/// Subgroup generated by `gens`.
inline Subgroup closure(const FiniteGroup& g, std::span<const Elem> gens)
{
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{FiniteGroup::identity()};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (auto s : gens) {
      auto next = g.mul(members[head], s);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

inline Subgroup whole_group(const FiniteGroup& g)
{
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), 0u);
  return s;
}

inline Subgroup trivial_subgroup() { return Subgroup{{FiniteGroup::identity()}}; }

/// True iff `elems` generate all of G; stops as soon as the closure is full.
inline bool generates(const FiniteGroup& g, std::span<const Elem> elems)
{
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> members{FiniteGroup::identity()};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (auto s : elems) {
      auto next = g.mul(members[head], s);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
        if (members.size() == n)
          return true;
      }
    }
  return members.size() == n;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& ids)
{
  if (ids.empty() || !std::is_sorted(ids.begin(), ids.end()))
    return false;
  Subgroup s{ids};
  if (!s.contains(FiniteGroup::identity()))
    return false;
  for (auto a : ids) {
    if (!s.contains(g.inv(a)))
      return false;
    for (auto b : ids)
      if (!s.contains(g.mul(a, b)))
        return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h)
{
  for (Elem x = 0; x < g.order(); ++x)
    for (auto m : h.members)
      if (!h.contains(g.conjugate(m, x)))
        return false;
  return true;
}

inline Subgroup center(const FiniteGroup& g)
{
  Subgroup z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central)
      z.members.push_back(a);
  }
  return z;
}

inline Subgroup commutator_subgroup(const FiniteGroup& g)
{
  std::set<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      comms.insert(g.commutator(a, b));
  std::vector<Elem> gens(comms.begin(), comms.end());
  return closure(g, gens);
}

inline bool is_perfect(const FiniteGroup& g) { return commutator_subgroup(g).order() == g.order(); }

/// Greedy small generating set of `target` (default: all of G): repeatedly
/// adds the element enlarging the generated subgroup the most, ties to the
/// smallest id.
inline std::vector<Elem> generating_set(const FiniteGroup& g, const Subgroup& target)
{
  std::vector<Elem> gens;
  Subgroup current = trivial_subgroup();
  while (current.order() < target.order()) {
    Elem best = 0;
    std::size_t best_size = 0;
    for (auto x : target.members) {
      if (current.contains(x))
        continue;
      gens.push_back(x);
      auto size = closure(g, gens).order();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    current = closure(g, gens);
  }
  return gens;
}

inline std::vector<Elem> generating_set(const FiniteGroup& g) { return generating_set(g, whole_group(g)); }

/// The subgroup H relabelled as a group in its own right; `embedding[i]` is
/// the parent id of local element i (local 0 is the identity).
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;
};

inline EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string name = {})
{
  const std::size_t k = h.order();
  std::vector<Elem> emb = h.members; // sorted, so emb[0] == identity
  std::unordered_map<Elem, Elem> local;
  for (std::size_t i = 0; i < k; ++i)
    local[emb[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = local.find(g.mul(emb[i], emb[j]));
      if (it == local.end())
        throw input_error("subgroup_as_group: member set is not closed");
      table[i * k + j] = it->second;
    }
  if (name.empty())
    name = g.name() + "-sub" + std::to_string(k);
  return {FiniteGroup::from_table(std::move(name), k, std::move(table)), std::move(emb)};
}

/// G/N with the projection G -> G/N; coset 0 is N itself.
struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;
  std::vector<Elem> representatives;
};

inline Quotient quotient(const FiniteGroup& g, const Subgroup& n, std::string name = {})
{
  if (!is_normal(g, n))
    throw input_error("quotient: subgroup is not normal");
  const std::size_t size = g.order();
  std::vector<Elem> coset(size, static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < size; ++x) {
    if (coset[x] != static_cast<Elem>(-1))
      continue;
    auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (auto m : n.members)
      coset[g.mul(x, m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = coset[g.mul(reps[i], reps[j])];
  if (name.empty())
    name = g.name() + "/N" + std::to_string(n.order());
  return {FiniteGroup::from_table(std::move(name), k, std::move(table)), std::move(coset),
          std::move(reps)};
}

/// Projection of G onto its abelianization G/[G,G].
struct AbelianizationMap {
  FiniteGroup quotient;
  std::vector<Elem> projection;
};

inline AbelianizationMap abelianization(const FiniteGroup& g)
{
  auto q = quotient(g, commutator_subgroup(g), g.name() + "_ab");
  return {std::move(q.group), std::move(q.projection)};
}

/// Checks that `map` (ids of `from` to ids of `to`) is a homomorphism.
inline bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const Elem> map)
{
  if (map.size() != from.order())
    return false;
  for (Elem a = 0; a < from.order(); ++a)
    for (Elem b = 0; b < from.order(); ++b)
      if (map[from.mul(a, b)] != to.mul(map[a], map[b]))
        return false;
  return true;
}

namespace detail {

/// Spanning tree of the Cayley graph: every element is parent * gens[gen].
struct CayleyTree {
  std::vector<Elem> order; // BFS order, starts at identity
  std::vector<Elem> parent;
  std::vector<std::uint32_t> gen;
};

inline CayleyTree cayley_tree(const FiniteGroup& g, std::span<const Elem> gens)
{
  CayleyTree t;
  const std::size_t n = g.order();
  t.parent.assign(n, static_cast<Elem>(-1));
  t.gen.assign(n, 0);
  t.parent[0] = 0;
  t.order.push_back(0);
  for (std::size_t head = 0; head < t.order.size(); ++head)
    for (std::uint32_t i = 0; i < gens.size(); ++i) {
      auto next = g.mul(t.order[head], gens[i]);
      if (t.parent[next] == static_cast<Elem>(-1)) {
        t.parent[next] = t.order[head];
        t.gen[next] = i;
        t.order.push_back(next);
      }
    }
  return t;
}

/// Extends generator images to a map and checks it is a homomorphism;
/// optionally also that it is injective.
inline std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& from,
                                                            const FiniteGroup& to,
                                                            std::span<const Elem> gens,
                                                            const CayleyTree& tree,
                                                            std::span<const Elem> images,
                                                            bool require_bijective)
{
  std::vector<Elem> map(from.order(), 0);
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    auto x = tree.order[k];
    map[x] = to.mul(map[tree.parent[x]], images[tree.gen[x]]);
  }
  for (Elem x = 0; x < from.order(); ++x)
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (map[from.mul(x, gens[i])] != to.mul(map[x], images[i]))
        return std::nullopt;
  if (require_bijective) {
    std::vector<char> seen(to.order(), 0);
    for (auto v : map) {
      if (seen[v])
        return std::nullopt;
      seen[v] = 1;
    }
  }
  return map;
}

template <class Visit>
void for_each_generator_image(const FiniteGroup& from, const FiniteGroup& to, std::span<const Elem> gens,
                              Visit&& visit)
{
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto ord = from.element_order(gens[i]);
    for (Elem y = 0; y < to.order(); ++y)
      if (to.element_order(y) == ord)
        candidates[i].push_back(y);
    if (candidates[i].empty())
      return;
  }
  std::vector<std::size_t> idx(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  for (;;) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      images[i] = candidates[i][idx[i]];
    if (!visit(std::span<const Elem>(images)))
      return;
    std::size_t pos = 0;
    while (pos < gens.size() && ++idx[pos] == candidates[pos].size())
      idx[pos++] = 0;
    if (pos == gens.size())
      return;
  }
}

} // namespace detail

/// An automorphism as a permutation of element ids.
using Automorphism = std::vector<Elem>;

/// All automorphisms, by brute force over images of a greedy generating set.
/// The identity automorphism comes first.
inline std::vector<Automorphism> automorphisms(const FiniteGroup& g, std::size_t order_bound = 120)
{
  if (g.order() > order_bound)
    throw bound_exceeded("automorphisms: group order " + std::to_string(g.order()) + " exceeds bound " +
                         std::to_string(order_bound));
  auto gens = generating_set(g);
  auto tree = detail::cayley_tree(g, gens);
  std::vector<Automorphism> result;
  detail::for_each_generator_image(g, g, gens, [&](std::span<const Elem> images) {
    if (auto map = detail::extend_homomorphism(g, g, gens, tree, images, true))
      result.push_back(std::move(*map));
    return true;
  });
  std::sort(result.begin(), result.end());
  return result;
}

/// An isomorphism G -> H when one exists.
inline std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h)
{
  if (g.order() != h.order())
    return std::nullopt;
  auto gens = generating_set(g);
  auto tree = detail::cayley_tree(g, gens);
  std::optional<std::vector<Elem>> found;
  detail::for_each_generator_image(g, h, gens, [&](std::span<const Elem> images) {
    found = detail::extend_homomorphism(g, h, gens, tree, images, true);
    return !found.has_value();
  });
  return found;
}

/// All subgroups, each exactly once, with the inclusion relation.
struct SubgroupLattice {
  std::vector<Subgroup> subgroups; // sorted by order, then members
  std::vector<std::vector<char>> contains; // contains[i][j]: subgroups[j] <= subgroups[i]

  std::size_t index_of(const Subgroup& s) const
  {
    auto it = std::lower_bound(subgroups.begin(), subgroups.end(), s);
    if (it == subgroups.end() || !(*it == s))
      throw input_error("subgroup not in lattice");
    return static_cast<std::size_t>(it - subgroups.begin());
  }
};

inline SubgroupLattice subgroup_lattice(const FiniteGroup& g, std::size_t order_bound = 120)
{
  if (g.order() > order_bound)
    throw bound_exceeded("subgroup_lattice: group order " + std::to_string(g.order()) +
                         " exceeds bound " + std::to_string(order_bound));
  struct Entry {
    Subgroup group;
    std::vector<Elem> gens;
  };
  std::map<std::vector<Elem>, std::size_t> seen;
  std::vector<Entry> entries;
  std::vector<Elem> cyclic_gens;
  for (Elem x = 0; x < g.order(); ++x) {
    Elem gen[1] = {x};
    auto c = closure(g, gen);
    if (seen.emplace(c.members, entries.size()).second) {
      entries.push_back({c, {x}});
      cyclic_gens.push_back(x);
    }
  }
  for (std::size_t head = 0; head < entries.size(); ++head) {
    for (auto x : cyclic_gens) {
      if (entries[head].group.contains(x))
        continue;
      auto gens = entries[head].gens;
      gens.push_back(x);
      auto joined = closure(g, gens);
      if (seen.emplace(joined.members, entries.size()).second)
        entries.push_back({std::move(joined), std::move(gens)});
    }
  }
  SubgroupLattice lattice;
  for (auto& e : entries)
    lattice.subgroups.push_back(std::move(e.group));
  std::sort(lattice.subgroups.begin(), lattice.subgroups.end());
  const std::size_t k = lattice.subgroups.size();
  lattice.contains.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& big = lattice.subgroups[i].members;
      const auto& small = lattice.subgroups[j].members;
      lattice.contains[i][j] = small.size() <= big.size() &&
                               std::includes(big.begin(), big.end(), small.begin(), small.end());
    }
  return lattice;
}

/// Central extension 1 -> Z -> cover -> G -> 1 with Z inside both the
/// centre and the commutator subgroup of the cover.
struct StemExtension {
  std::shared_ptr<const FiniteGroup> cover;
  std::vector<Elem> projection; // cover id -> G id
  std::vector<Elem> center_ids; // sorted cover ids of Z

  /// Throws input_error naming the first violated condition.
  void validate(const FiniteGroup& g) const
  {
    if (!cover)
      throw input_error("stem extension: missing cover group");
    const auto& c = *cover;
    if (projection.size() != c.order())
      throw input_error("stem extension: projection has wrong length");
    for (auto v : projection)
      if (v >= g.order())
        throw input_error("stem extension: projection image out of range");
    if (!is_homomorphism(c, g, projection))
      throw input_error("stem extension: projection is not a homomorphism");
    std::vector<char> hit(g.order(), 0);
    for (auto v : projection)
      hit[v] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw input_error("stem extension: projection is not surjective");
    std::vector<Elem> kernel;
    for (Elem x = 0; x < c.order(); ++x)
      if (projection[x] == FiniteGroup::identity())
        kernel.push_back(x);
    if (kernel != center_ids)
      throw input_error("stem extension: kernel of projection differs from the centre ids");
    for (auto z : center_ids)
      for (Elem x = 0; x < c.order(); ++x)
        if (c.mul(z, x) != c.mul(x, z))
          throw input_error("stem extension: Z is not central in the cover");
    auto derived = commutator_subgroup(c);
    for (auto z : center_ids)
      if (!derived.contains(z))
        throw input_error("stem extension: Z is not inside the commutator subgroup of the cover");
  }

  /// A fixed section G -> cover (smallest preimage id).
  std::vector<Elem> section() const
  {
    std::size_t base_order = projection.size() / std::max<std::size_t>(center_ids.size(), 1);
    std::vector<Elem> s(base_order, static_cast<Elem>(-1));
    for (Elem x = 0; x < projection.size(); ++x)
      if (s[projection[x]] == static_cast<Elem>(-1))
        s[projection[x]] = x;
    return s;
  }
};

} // namespace homcount
