#pragma once

// Finite Γ-sets: a group acting on points 0..m-1 on the left, with the
// decomposition into fixed points and free orbits used by the Rubik and
// zombie-circuit code.

#include "group.hpp"

#include <memory>

namespace homcount {

class GSetAction {
public:
  enum class OrbitKind { fixed, free, other };

  GSetAction() = default;

  /// Full action table: act[g * points + p] = g . p.
  GSetAction(std::shared_ptr<const FiniteGroup> group, std::size_t points, std::vector<std::uint32_t> act)
    : group_(std::move(group)), points_(points), act_(std::move(act))
  {
    if (!group_)
      throw input_error("G-set: missing group");
    if (act_.size() != group_->order() * points_)
      throw input_error("G-set: action table has wrong size");
    validate();
    decompose();
  }

  /// Extends one action row per generating element to the whole group and
  /// checks the result is an action.
  static GSetAction from_generator_rows(std::shared_ptr<const FiniteGroup> group, std::size_t points,
                                        const std::vector<Elem>& gens,
                                        const std::vector<std::vector<std::uint32_t>>& rows)
  {
    if (!group)
      throw input_error("G-set: missing group");
    if (gens.size() != rows.size())
      throw input_error("G-set: one action row is needed per generator");
    for (const auto& r : rows) {
      if (r.size() != points)
        throw input_error("G-set: action row has wrong length");
      Permutation check(r); // throws when the row is not a bijection
    }
    const auto n = group->order();
    std::vector<std::uint32_t> act(n * points);
    std::vector<char> known(n, 0);
    for (std::uint32_t p = 0; p < points; ++p)
      act[p] = p;
    known[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto x = queue[head];
        auto next = group->mul(x, gens[i]);
        if (known[next])
          continue;
        known[next] = 1;
        // (x s) . p = x . (s . p)
        for (std::uint32_t p = 0; p < points; ++p)
          act[next * points + p] = act[x * points + rows[i][p]];
        queue.push_back(next);
      }
    if (queue.size() != n)
      throw input_error("G-set: listed generators do not generate the group");
    return GSetAction(std::move(group), points, std::move(act));
  }

  /// `fixed` fixed points followed by `orbits` copies of Γ acting on itself
  /// by left multiplication: point fixed + o|Γ| + g is g times the section
  /// point of orbit o.
  static GSetAction free_orbits(std::shared_ptr<const FiniteGroup> group, std::size_t fixed, std::size_t orbits)
  {
    const auto n = group->order();
    const auto m = fixed + orbits * n;
    std::vector<std::uint32_t> act(n * m);
    for (Elem g = 0; g < n; ++g) {
      for (std::size_t p = 0; p < fixed; ++p)
        act[g * m + p] = static_cast<std::uint32_t>(p);
      for (std::size_t o = 0; o < orbits; ++o)
        for (Elem h = 0; h < n; ++h)
          act[g * m + fixed + o * n + h] = static_cast<std::uint32_t>(fixed + o * n + group->mul(g, h));
    }
    return GSetAction(std::move(group), m, std::move(act));
  }

  /// Diagonal action on k-tuples; tuple (x_1..x_k) is point sum x_j m^(k-j).
  GSetAction diagonal_power(std::size_t k) const
  {
    std::size_t m = 1;
    for (std::size_t i = 0; i < k; ++i)
      m *= points_;
    const auto n = group_->order();
    std::vector<std::uint32_t> act(n * m);
    std::vector<std::uint32_t> digits(k);
    for (Elem g = 0; g < n; ++g)
      for (std::size_t p = 0; p < m; ++p) {
        std::size_t rest = p;
        for (std::size_t j = k; j-- > 0;) {
          digits[j] = static_cast<std::uint32_t>(rest % points_);
          rest /= points_;
        }
        std::size_t image = 0;
        for (std::size_t j = 0; j < k; ++j)
          image = image * points_ + apply(g, digits[j]);
        act[g * m + p] = static_cast<std::uint32_t>(image);
      }
    return GSetAction(group_, m, std::move(act));
  }

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  std::size_t points() const { return points_; }
  std::uint32_t apply(Elem g, std::uint32_t p) const { return act_[static_cast<std::size_t>(g) * points_ + p]; }

  std::size_t orbit_count() const { return orbit_kind_.size(); }
  std::uint32_t orbit_of(std::uint32_t p) const { return orbit_of_[p]; }
  OrbitKind orbit_kind(std::size_t o) const { return orbit_kind_[o]; }
  /// Smallest point of the orbit; the chosen section representative.
  std::uint32_t section(std::size_t o) const { return section_[o]; }
  /// For a point p in a free orbit, the unique g with g . section = p.
  Elem offset(std::uint32_t p) const { return offset_[p]; }
  /// The point g . section(o) of a free orbit.
  std::uint32_t point_at(std::size_t o, Elem g) const { return apply(g, section_[o]); }

  const std::vector<std::uint32_t>& fixed_points() const { return fixed_points_; }
  const std::vector<std::uint32_t>& free_orbit_ids() const { return free_orbits_; }
  bool has_other_orbits() const { return has_other_; }

  /// Greedy generating set of Γ, used for equivariance checks.
  const std::vector<Elem>& group_generators() const { return generators_; }
  const AbelianizationMap& abelianization_map() const { return *abelianization_; }

  /// True when p commutes with every generator of Γ.
  bool is_equivariant(const Permutation& p) const
  {
    if (p.degree() != points_)
      return false;
    for (auto g : generators_)
      for (std::uint32_t x = 0; x < points_; ++x)
        if (p[apply(g, x)] != apply(g, p[x]))
          return false;
    return true;
  }

  /// The permutation of points induced by a group element.
  Permutation element_permutation(Elem g) const
  {
    std::vector<std::uint32_t> images(act_.begin() + static_cast<std::ptrdiff_t>(g * points_),
                                      act_.begin() + static_cast<std::ptrdiff_t>((g + 1) * points_));
    return Permutation(std::move(images));
  }

private:
  void validate() const
  {
    const auto n = group_->order();
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<char> seen(points_, 0);
      for (std::size_t p = 0; p < points_; ++p) {
        auto y = act_[g * points_ + p];
        if (y >= points_ || seen[y])
          throw input_error("G-set: element " + std::to_string(g) + " does not act bijectively");
        seen[y] = 1;
      }
    }
    for (std::uint32_t p = 0; p < points_; ++p)
      if (act_[p] != p)
        throw input_error("G-set: identity does not act trivially");
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h)
        for (std::uint32_t p = 0; p < points_; ++p)
          if (apply(group_->mul(g, h), p) != apply(g, apply(h, p)))
            throw input_error("G-set: action is not compatible with the product");
  }

  void decompose()
  {
    const auto n = group_->order();
    orbit_of_.assign(points_, static_cast<std::uint32_t>(-1));
    offset_.assign(points_, 0);
    for (std::uint32_t p = 0; p < points_; ++p) {
      if (orbit_of_[p] != static_cast<std::uint32_t>(-1))
        continue;
      auto o = static_cast<std::uint32_t>(section_.size());
      section_.push_back(p);
      std::size_t size = 0;
      bool free = true;
      for (Elem g = 0; g < n; ++g) {
        auto y = apply(g, p);
        if (orbit_of_[y] == static_cast<std::uint32_t>(-1)) {
          orbit_of_[y] = o;
          offset_[y] = g;
          ++size;
        } else {
          free = false;
        }
      }
      if (size == 1) {
        orbit_kind_.push_back(OrbitKind::fixed);
        fixed_points_.push_back(p);
      } else if (free) {
        orbit_kind_.push_back(OrbitKind::free);
        free_orbits_.push_back(o);
      } else {
        orbit_kind_.push_back(OrbitKind::other);
        has_other_ = true;
      }
    }
    // A trivial group makes every point both fixed and free; call them free.
    if (n == 1) {
      for (auto& kind : orbit_kind_)
        kind = OrbitKind::free;
      free_orbits_.clear();
      for (std::uint32_t o = 0; o < orbit_kind_.size(); ++o)
        free_orbits_.push_back(o);
      fixed_points_.clear();
    }
    generators_ = generating_set(*group_);
    abelianization_ = std::make_shared<AbelianizationMap>(abelianization(*group_));
  }

  std::shared_ptr<const FiniteGroup> group_;
  std::size_t points_ = 0;
  std::vector<std::uint32_t> act_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<Elem> offset_;
  std::vector<std::uint32_t> section_;
  std::vector<OrbitKind> orbit_kind_;
  std::vector<std::uint32_t> fixed_points_;
  std::vector<std::uint32_t> free_orbits_;
  bool has_other_ = false;
  std::vector<Elem> generators_;
  std::shared_ptr<const AbelianizationMap> abelianization_;
};

} // namespace homcount
