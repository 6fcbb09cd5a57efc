#pragma once

// Zombie circuits: Γ-equivariant circuits over an alphabet A with one
// Γ-fixed symbol z (the zombie) and free orbits otherwise, with gates in the
// Rubik group of the diagonal action on A^k. An input in (I ∪ {z})^n is
// satisfying when the output lies in (F ∪ {z})^n.
//
// compile_zsat turns a planar reversible circuit C over B = (I ∪ F)/Γ into
// such a circuit D with #D = |Γ| #C + 1.

#include "reversible.hpp"
#include "rubik.hpp"

namespace homcount {

/// Γ-set A with orbit roles. Orbits are named by their index in
/// act.free_orbit_ids(); the zombie is the unique fixed point.
struct ZAlphabet {
  std::shared_ptr<const FiniteGroup> gamma;
  GSetAction act;
  std::uint32_t zombie = 0;
  std::vector<std::size_t> init_orbits;
  std::vector<std::size_t> final_orbits;
  /// Warning orbits; the first two hold z1 and z2, the rest are the target
  /// of the misalignment map.
  std::vector<std::size_t> warning_orbits;
  /// Free orbits outside I, F and W.
  std::vector<std::size_t> scratch_orbits;

  /// 1 + 11|Γ| symbols: the zombie, then free orbits I = {0, 1},
  /// F = {2, 3}, W = {4..9} and one scratch orbit 10.
  static ZAlphabet minimal(std::shared_ptr<const FiniteGroup> gamma)
  {
    if (!gamma)
      throw input_error("ZAlphabet: missing group");
    ZAlphabet z;
    z.gamma = gamma;
    z.act = GSetAction::free_orbits(gamma, 1, 11);
    z.zombie = 0;
    z.init_orbits = {0, 1};
    z.final_orbits = {2, 3};
    z.warning_orbits = {4, 5, 6, 7, 8, 9};
    z.scratch_orbits = {10};
    z.validate();
    return z;
  }

  std::size_t orbit_size() const { return gamma->order(); }
  std::size_t free_orbit_count() const { return act.free_orbit_ids().size(); }

  /// Orbits of I ∪ F: I first, then the orbits of F not in I. Index j is
  /// the symbol j of B = (I ∪ F)/Γ.
  std::vector<std::size_t> data_orbits() const
  {
    std::vector<std::size_t> d = init_orbits;
    for (auto o : final_orbits)
      if (std::find(d.begin(), d.end(), o) == d.end())
        d.push_back(o);
    return d;
  }

  std::vector<std::uint32_t> b_init() const
  {
    std::vector<std::uint32_t> v(init_orbits.size());
    std::iota(v.begin(), v.end(), 0u);
    return v;
  }

  std::vector<std::uint32_t> b_final() const
  {
    auto d = data_orbits();
    std::vector<std::uint32_t> v;
    for (auto o : final_orbits)
      v.push_back(static_cast<std::uint32_t>(std::find(d.begin(), d.end(), o) - d.begin()));
    std::sort(v.begin(), v.end());
    return v;
  }

  std::uint32_t section(std::size_t orbit) const { return act.section(act.free_orbit_ids().at(orbit)); }
  std::uint32_t point(std::size_t orbit, Elem g) const { return act.point_at(act.free_orbit_ids().at(orbit), g); }

  /// Free-orbit index of a non-zombie point.
  std::size_t orbit_index(std::uint32_t p) const
  {
    const auto& free = act.free_orbit_ids();
    return static_cast<std::size_t>(std::find(free.begin(), free.end(), act.orbit_of(p)) - free.begin());
  }

  std::vector<std::uint32_t> points_of(const std::vector<std::size_t>& orbits) const
  {
    std::vector<std::uint32_t> pts;
    for (auto o : orbits)
      for (Elem g = 0; g < gamma->order(); ++g)
        pts.push_back(point(o, g));
    std::sort(pts.begin(), pts.end());
    return pts;
  }

  /// The inequalities |I|, |F| >= 2|Γ|, I != F, |A| >= 2|I ∪ F| + 3|Γ| + 1
  /// and the warning-alphabet requirements.
  void validate() const
  {
    if (!gamma || gamma->order() < 2)
      throw input_error("ZAlphabet: the group must be nontrivial");
    if (act.has_other_orbits())
      throw input_error("ZAlphabet: every orbit must be a fixed point or free");
    if (act.fixed_points().size() != 1 || act.fixed_points()[0] != zombie)
      throw input_error("ZAlphabet: there must be exactly one fixed point, the zombie");
    const auto n = free_orbit_count();
    std::vector<int> role(n, 0);
    auto claim = [&](const std::vector<std::size_t>& orbits, int r, const char* what) {
      for (auto o : orbits) {
        if (o >= n)
          throw input_error(std::string("ZAlphabet: ") + what + " names an unknown orbit");
        if (role[o] & r)
          throw input_error(std::string("ZAlphabet: ") + what + " repeats an orbit");
        role[o] |= r;
      }
    };
    claim(init_orbits, 1, "I");
    claim(final_orbits, 2, "F");
    claim(warning_orbits, 4, "W");
    claim(scratch_orbits, 8, "scratch");
    for (auto r : role)
      if ((r & 12) && (r & ~(r & 12)))
        throw input_error("ZAlphabet: W and scratch orbits must avoid I, F and each other");
    const auto gsize = gamma->order();
    const auto isize = init_orbits.size() * gsize, fsize = final_orbits.size() * gsize;
    const auto union_size = data_orbits().size() * gsize;
    if (isize < 2 * gsize || fsize < 2 * gsize)
      throw input_error("ZAlphabet: |I| and |F| must be at least 2|Γ|");
    auto sorted_i = init_orbits, sorted_f = final_orbits;
    std::sort(sorted_i.begin(), sorted_i.end());
    std::sort(sorted_f.begin(), sorted_f.end());
    if (sorted_i == sorted_f)
      throw input_error("ZAlphabet: I and F must differ");
    if (act.points() < 2 * union_size + 3 * gsize + 1)
      throw input_error("ZAlphabet: |A| must be at least 2|I ∪ F| + 3|Γ| + 1");
    if (warning_orbits.size() * gsize != union_size + 2 * gsize)
      throw input_error("ZAlphabet: |W| must equal |I ∪ F| + 2|Γ|");
  }
};

struct ZGate {
  std::uint32_t position = 0;
  std::uint32_t arity = 0;
  std::vector<std::uint32_t> table; // permutation of A^arity
};

struct ZsatInstance {
  ZAlphabet alphabet;
  std::size_t width = 0;
  std::vector<ZGate> gates;
  std::size_t main_gates = 0; // the rest is the postcomputation

  void apply(std::vector<std::uint32_t>& state) const
  {
    const auto q = alphabet.act.points();
    for (const auto& g : gates) {
      std::size_t idx = 0;
      for (std::uint32_t j = 0; j < g.arity; ++j)
        idx = idx * q + state[g.position + j];
      std::size_t out = g.table[idx];
      for (std::uint32_t j = g.arity; j-- > 0;) {
        state[g.position + j] = static_cast<std::uint32_t>(out % q);
        out /= q;
      }
    }
  }

  std::vector<std::uint32_t> eval(std::vector<std::uint32_t> x) const
  {
    if (x.size() != width)
      throw input_error("zsat: state has wrong width");
    apply(x);
    return x;
  }
};

/// Extends an equivariant partial injection of the Γ-set (partial[p] = -1
/// where undefined) to an element of its Rubik group. Orbits outside both
/// domain and image stay fixed; the others are paired in order. Parity and
/// the abelianized product are repaired on orbits for which `scratch`
/// holds.
inline Permutation extend_to_rubik(const std::vector<std::int64_t>& partial, const GSetAction& act,
                                   const std::function<bool(std::size_t free_orbit_index)>& scratch)
{
  const auto& g = act.group();
  const auto m = act.points();
  if (partial.size() != m)
    throw input_error("extend_to_rubik: partial map has wrong size");
  if (act.has_other_orbits())
    throw input_error("extend_to_rubik: the action has an orbit that is neither fixed nor free");
  std::vector<char> hit(m, 0);
  for (std::size_t p = 0; p < m; ++p) {
    if (partial[p] < 0)
      continue;
    if (static_cast<std::size_t>(partial[p]) >= m || hit[partial[p]])
      throw input_error("extend_to_rubik: partial map is not injective");
    hit[partial[p]] = 1;
    for (auto s : act.group_generators()) {
      auto sp = act.apply(s, static_cast<std::uint32_t>(p));
      if (partial[sp] < 0 || partial[sp] != act.apply(s, static_cast<std::uint32_t>(partial[p])))
        throw input_error("extend_to_rubik: partial map is not equivariant on a Γ-invariant domain");
    }
  }
  const auto& fixed = act.fixed_points();
  const auto& free = act.free_orbit_ids();
  std::vector<std::uint32_t> fixed_index(m, 0), free_index(act.orbit_count(), 0);
  for (std::uint32_t i = 0; i < fixed.size(); ++i)
    fixed_index[fixed[i]] = i;
  for (std::uint32_t i = 0; i < free.size(); ++i)
    free_index[free[i]] = i;

  auto pair_leftovers = [](std::vector<std::int64_t>& image, const std::vector<char>& target_used) {
    std::vector<std::uint32_t> from, to;
    for (std::uint32_t i = 0; i < image.size(); ++i) {
      if (image[i] >= 0)
        continue;
      if (!target_used[i])
        image[i] = i; // outside domain and image: fixed
      else
        from.push_back(i);
    }
    std::vector<char> used = target_used;
    for (std::uint32_t i = 0; i < image.size(); ++i)
      if (image[i] >= 0)
        used[image[i]] = 1;
    for (std::uint32_t i = 0; i < image.size(); ++i)
      if (!used[i])
        to.push_back(i);
    for (std::size_t j = 0; j < from.size(); ++j)
      image[from[j]] = to[j];
  };

  std::vector<std::int64_t> fixed_image(fixed.size(), -1);
  std::vector<char> fixed_used(fixed.size(), 0);
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (partial[fixed[i]] >= 0) {
      auto target = static_cast<std::uint32_t>(partial[fixed[i]]);
      if (act.orbit_kind(act.orbit_of(target)) != GSetAction::OrbitKind::fixed)
        throw input_error("extend_to_rubik: a fixed point is sent into a free orbit");
      fixed_image[i] = fixed_index[target];
      fixed_used[fixed_index[target]] = 1;
    }
  pair_leftovers(fixed_image, fixed_used);

  std::vector<std::int64_t> orbit_image(free.size(), -1);
  std::vector<char> orbit_used(free.size(), 0);
  std::vector<Elem> components(free.size(), FiniteGroup::identity());
  std::vector<char> forced(free.size(), 0);
  for (std::size_t i = 0; i < free.size(); ++i) {
    auto s = act.section(free[i]);
    if (partial[s] < 0)
      continue;
    auto target = static_cast<std::uint32_t>(partial[s]);
    auto o = act.orbit_of(target);
    if (act.orbit_kind(o) != GSetAction::OrbitKind::free)
      throw input_error("extend_to_rubik: a free orbit is sent onto a fixed point");
    orbit_image[i] = free_index[o];
    orbit_used[free_index[o]] = 1;
    components[i] = act.offset(target);
    forced[i] = 1;
  }
  pair_leftovers(orbit_image, orbit_used);

  std::vector<std::size_t> repair;
  for (std::size_t i = 0; i < free.size(); ++i)
    if (!forced[i] && scratch(i))
      repair.push_back(i);

  auto to_perm = [](const std::vector<std::int64_t>& v) {
    std::vector<std::uint32_t> u(v.begin(), v.end());
    return Permutation(std::move(u));
  };
  WreathCoordinates w{to_perm(fixed_image), to_perm(orbit_image), components};
  if (!w.fixed_perm.is_even()) {
    std::vector<std::size_t> loose;
    for (std::size_t i = 0; i < fixed.size(); ++i)
      if (partial[fixed[i]] < 0)
        loose.push_back(i);
    if (loose.size() < 2)
      throw input_error("extend_to_rubik: cannot repair the parity on fixed points");
    std::swap(fixed_image[loose[0]], fixed_image[loose[1]]);
    w.fixed_perm = to_perm(fixed_image);
  }
  if (!w.orbit_perm.is_even()) {
    if (repair.size() < 2)
      throw input_error("extend_to_rubik: fewer than 2 scratch orbits available to repair the orbit parity");
    std::swap(orbit_image[repair[repair.size() - 2]], orbit_image[repair.back()]);
    w.orbit_perm = to_perm(orbit_image);
  }
  const auto& ab = act.abelianization_map();
  Elem defect = sigma(w, act);
  if (defect != FiniteGroup::identity()) {
    if (repair.empty())
      throw input_error("extend_to_rubik: no scratch orbit available to repair the abelianized product");
    Elem want = ab.quotient.inv(defect);
    Elem h = 0;
    while (ab.projection[h] != want)
      ++h;
    w.components[repair.back()] = g.mul(w.components[repair.back()], h);
  }
  return wreath_element(act, w);
}

struct ZsatOptions {
  bool verify_gates = true; // rubik_membership on every emitted gate
  std::uint64_t max_points = WorkBounds{}.max_orbit_points;
};

namespace detail {

class ZsatCompiler {
public:
  ZsatCompiler(const ZAlphabet& z, const ZsatOptions& opts) : z_(z), opts_(opts), data_(z.data_orbits())
  {
    const auto q = z.act.points();
    data_index_.assign(q, -1);
    for (std::size_t j = 0; j < data_.size(); ++j)
      for (Elem g = 0; g < z.gamma->order(); ++g)
        data_index_[z.point(data_[j], g)] = static_cast<std::int64_t>(j);
    scratch_symbol_.assign(q, 0);
    warning_symbol_.assign(q, 0);
    for (auto p : z.points_of(z.scratch_orbits))
      scratch_symbol_[p] = 1;
    for (auto p : z.points_of(z.warning_orbits))
      warning_symbol_[p] = 1;
  }

  const GSetAction& power(std::size_t k)
  {
    auto it = powers_.find(k);
    if (it != powers_.end())
      return it->second;
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < k; ++i)
      size *= z_.act.points();
    if (size > opts_.max_points)
      throw bound_exceeded("compile_zsat: A^" + std::to_string(k) + " has " + std::to_string(size) +
                           " points, more than max-orbit-points " + std::to_string(opts_.max_points));
    return powers_.emplace(k, z_.act.diagonal_power(k)).first->second;
  }

  /// Main-computation gate for a gate table of B^k.
  ZGate main_gate(std::uint32_t position, std::size_t k, const std::vector<std::uint32_t>& gamma_table)
  {
    const auto& act = power(k);
    const auto q = z_.act.points();
    const auto b = data_.size();
    std::vector<std::int64_t> partial(act.points(), -1);
    std::vector<std::uint32_t> t(k), img(k), bsym(k);
    std::vector<Elem> off(k);
    for (std::size_t p = 0; p < act.points(); ++p) {
      decode(p, q, t);
      std::size_t zombies = 0;
      bool in_domain = true;
      for (auto s : t) {
        if (s == z_.zombie)
          ++zombies;
        else if (data_index_[s] < 0)
          in_domain = false;
      }
      if (!in_domain)
        continue;
      if (zombies > 0) { // cases 1 and 2: zombies and their neighbours stay
        partial[p] = static_cast<std::int64_t>(p);
        continue;
      }
      std::size_t bidx = 0;
      for (std::size_t j = 0; j < k; ++j) {
        bsym[j] = static_cast<std::uint32_t>(data_index_[t[j]]);
        off[j] = z_.act.offset(t[j]);
        bidx = bidx * b + bsym[j];
      }
      std::size_t out = gamma_table[bidx];
      for (std::size_t j = k; j-- > 0;) {
        img[j] = z_.point(data_[out % b], off[j]);
        out /= b;
      }
      partial[p] = static_cast<std::int64_t>(encode(img, q));
    }
    return finish(position, k, partial, true);
  }

  /// Postcomputation gate on a pair of neighbouring wires.
  ZGate post_gate(std::uint32_t position)
  {
    const auto& act = power(2);
    const auto q = z_.act.points();
    const auto z = z_.zombie;
    const auto z1 = z_.warning_orbits[0], z2 = z_.warning_orbits[1];
    std::vector<std::int64_t> partial(act.points(), -1);
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y) {
        const bool xd = data_index_[x] >= 0, yd = data_index_[y] >= 0;
        std::uint32_t a = x, b = y;
        if (x == z && y == z) {
        } else if (x == z && yd) {
          a = z_.point(z1, z_.act.offset(y));
        } else if (xd && y == z) {
          a = z_.point(z2, z_.act.offset(x));
          b = x;
        } else if (xd && yd) {
          if (z_.act.offset(x) != z_.act.offset(y)) // misaligned: β on the first symbol
            a = z_.point(z_.warning_orbits[2 + static_cast<std::size_t>(data_index_[x])], z_.act.offset(x));
        } else
          continue;
        partial[x * q + y] = static_cast<std::int64_t>(a) * q + b;
      }
    return finish(position, 2, partial, false);
  }

private:
  /// Main gates never see a warning symbol, so tuples containing one may
  /// also absorb the parity repair; a unary gate has only one scratch orbit.
  ZGate finish(std::uint32_t position, std::size_t k, const std::vector<std::int64_t>& partial, bool main)
  {
    const auto& act = power(k);
    const auto q = z_.act.points();
    std::vector<std::uint32_t> t(k);
    auto perm = extend_to_rubik(partial, act, [&](std::size_t orbit) {
      decode(act.section(act.free_orbit_ids()[orbit]), q, t);
      return std::any_of(t.begin(), t.end(),
                         [&](std::uint32_t s) { return scratch_symbol_[s] != 0 || (main && warning_symbol_[s] != 0); });
    });
    if (opts_.verify_gates && !rubik_membership(perm, act))
      throw verification_error("compile_zsat: an emitted gate is not in the Rubik group");
    return {position, static_cast<std::uint32_t>(k), perm.images()};
  }

  static void decode(std::size_t p, std::size_t q, std::vector<std::uint32_t>& t)
  {
    for (std::size_t j = t.size(); j-- > 0;) {
      t[j] = static_cast<std::uint32_t>(p % q);
      p /= q;
    }
  }

  static std::size_t encode(const std::vector<std::uint32_t>& t, std::size_t q)
  {
    std::size_t p = 0;
    for (auto s : t)
      p = p * q + s;
    return p;
  }

  const ZAlphabet& z_;
  ZsatOptions opts_;
  std::vector<std::size_t> data_;
  std::vector<std::int64_t> data_index_;
  std::vector<char> scratch_symbol_;
  std::vector<char> warning_symbol_;
  std::map<std::size_t, GSetAction> powers_;
};

} // namespace detail

/// `c` is a planar circuit over B = (I ∪ F)/Γ, symbol j being data orbit j.
inline ZsatInstance compile_zsat(const ReversibleCircuit& c, const ZAlphabet& z, const ZsatOptions& opts = {})
{
  z.validate();
  if (c.alphabet() != z.data_orbits().size())
    throw input_error("compile_zsat: circuit alphabet must have one symbol per orbit of I ∪ F");
  if (!c.is_planar())
    throw input_error("compile_zsat: circuit must be planar");
  if (c.width() == 0)
    throw input_error("compile_zsat: circuit has width 0");
  detail::ZsatCompiler compiler(z, opts);
  ZsatInstance inst{z, c.width(), {}, 0};
  for (const auto& g : c.gates())
    inst.gates.push_back(compiler.main_gate(g.wires[0], g.wires.size(), g.table));
  inst.main_gates = inst.gates.size();
  if (c.width() >= 2) {
    auto alpha = compiler.post_gate(0);
    for (std::uint32_t i = 0; i + 1 < c.width(); ++i) {
      alpha.position = i;
      inst.gates.push_back(alpha);
    }
  }
  return inst;
}

inline BigInt count_zsat(const ZsatInstance& inst, std::uint64_t max_enumeration = WorkBounds{}.max_enumeration)
{
  const auto& z = inst.alphabet;
  auto inputs = z.points_of(z.init_orbits);
  inputs.insert(inputs.begin(), z.zombie);
  std::vector<char> accept(z.act.points(), 0);
  accept[z.zombie] = 1;
  for (auto p : z.points_of(z.final_orbits))
    accept[p] = 1;
  const auto n = inst.width;
  BigInt work = ipow(BigInt(inputs.size()), n);
  if (work > max_enumeration)
    throw bound_exceeded("count_zsat: " + to_string(work) + " inputs exceed max-enumeration " +
                         std::to_string(max_enumeration));
  std::vector<std::size_t> choice(n, 0);
  std::vector<std::uint32_t> state(n);
  std::uint64_t count = 0;
  for (;;) {
    for (std::size_t w = 0; w < n; ++w)
      state[w] = inputs[choice[w]];
    inst.apply(state);
    count += std::all_of(state.begin(), state.end(), [&](std::uint32_t s) { return accept[s] != 0; });
    std::size_t w = 0;
    while (w < n && ++choice[w] == inputs.size())
      choice[w++] = 0;
    if (w == n)
      return count;
  }
}

/// RSAT instance over B matching the alphabet's I and F.
inline RsatInstance zsat_source_instance(const ReversibleCircuit& c, const ZAlphabet& z)
{
  return RsatInstance::uniform(c, z.b_init(), z.b_final());
}

} // namespace homcount
