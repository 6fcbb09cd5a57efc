#pragma once

// The chain CSAT -> RSAT1 -> RSAT2 -> RSAT3 -> RSAT4 (-> ZSAT) of
// count-preserving circuit transformations.
//
// RSAT1: bits, variable inputs and zero ancillas, decided by one output bit.
// RSAT2: bits, half the wires fixed to 0 at both ends, the other half free.
// RSAT3: RSAT_{A,I,F} with I, F disjoint and two symbols outside both.
// RSAT4: RSAT_{A,I,F} over a given alphabet with 2 <= |I|, |F| < |A|.

#include "boolean.hpp"
#include "zsat.hpp"

namespace homcount {

/// An alphabet 0..size-1 with initialization and finalization sets.
struct AlphabetSpec {
  std::size_t size = 0;
  std::vector<std::uint32_t> init;
  std::vector<std::uint32_t> final;

  void validate(const std::string& what) const
  {
    for (const auto* s : {&init, &final}) {
      auto sorted = *s;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error(what + ": init/final sets repeat a symbol");
      for (auto x : sorted)
        if (x >= size)
          throw input_error(what + ": init/final symbol outside the alphabet");
    }
  }
};

struct Rsat1 {
  RsatInstance instance;
  std::size_t variables = 0;
  std::size_t ancillas = 0;
  std::uint32_t output = 0;
};

struct Rsat2 {
  RsatInstance instance;
  std::vector<std::uint32_t> variable_wires;
  std::vector<std::uint32_t> fixed_wires;
};

namespace detail {

inline std::vector<std::uint32_t> bit_table(std::size_t k, const std::function<std::uint32_t(std::uint32_t)>& f)
{
  std::vector<std::uint32_t> t(std::size_t{1} << k);
  for (std::uint32_t i = 0; i < t.size(); ++i)
    t[i] = f(i);
  return t;
}

/// (x, y, a) -> (x, y, a + op(x, y)) with x the most significant bit.
inline std::vector<std::uint32_t> dilated_binary(BoolOp op)
{
  return bit_table(3, [op](std::uint32_t i) {
    bool x = (i >> 2) & 1u, y = (i >> 1) & 1u;
    return i ^ static_cast<std::uint32_t>(apply(op, x, y));
  });
}

/// (x, a) -> (x, a + op(x)).
inline std::vector<std::uint32_t> dilated_unary(BoolOp op)
{
  return bit_table(2, [op](std::uint32_t i) {
    bool x = (i >> 1) & 1u;
    return i ^ static_cast<std::uint32_t>(apply(op, x, false));
  });
}

inline std::vector<std::uint32_t> cnot() { return dilated_unary(BoolOp::copy); }
inline std::vector<std::uint32_t> not_gate() { return {1, 0}; }

} // namespace detail

/// Every gate becomes its reversible dilation onto a fresh zero ancilla:
/// AND and OR become three-wire gates (AND gives the Toffoli gate), NOT
/// gives (x, a) -> (x, a + x + 1) and COPY gives CNOT. Gate i writes wire
/// inputs + i, so wire numbers match the Boolean circuit.
inline Rsat1 dilate_to_reversible(const BooleanCircuit& c)
{
  const auto n = c.inputs(), k = c.gates().size();
  if (c.wire_count() == 0)
    throw input_error("dilate_to_reversible: circuit has no wires");
  ReversibleCircuit r(2, n + k);
  for (const auto& g : c.gates()) {
    if (arity(g.op) == 2 && g.in[0] != g.in[1])
      r.add_gate({g.in[0], g.in[1], g.out}, detail::dilated_binary(g.op));
    else if (arity(g.op) == 2) // op(x, x) = x
      r.add_gate({g.in[0], g.out}, detail::cnot());
    else
      r.add_gate({g.in[0], g.out}, detail::dilated_unary(g.op));
  }
  Rsat1 out{{std::move(r), {}, {}}, n, k, c.output()};
  out.instance.init.assign(n + k, {0, 1});
  for (std::size_t w = n; w < n + k; ++w)
    out.instance.init[w] = {0};
  out.instance.final.assign(n + k, {0, 1});
  out.instance.final[c.output()] = {1};
  return out;
}

/// C, then copy the decision bit onto a fresh ancilla b and negate b, then
/// C^-1. Satisfying inputs are those where every ancilla, b included, reads
/// 0 at the end. The register is padded to equal halves: with n > k + 1
/// by idle ancillas, with n < k + 1 by junk inputs copied onto the first
/// ancillas at the end.
inline Rsat2 uncompute_wrap(const Rsat1& r)
{
  const auto n = r.variables, k = r.ancillas;
  if (n == 0)
    throw input_error("uncompute_wrap: the circuit has no variable input");
  const auto half = std::max(n, k + 1);
  const auto width = 2 * half;
  const auto b = static_cast<std::uint32_t>(n + k);
  ReversibleCircuit c(2, width);
  for (const auto& g : r.instance.circuit.gates())
    c.add_gate(g.wires, g.table);
  c.add_gate({r.output, b}, detail::cnot());
  c.add_gate({b}, detail::not_gate());
  const auto undo = r.instance.circuit.inverse();
  for (const auto& g : undo.gates())
    c.add_gate(g.wires, g.table);
  Rsat2 out;
  for (std::uint32_t w = 0; w < n; ++w)
    out.variable_wires.push_back(w);
  for (std::uint32_t w = static_cast<std::uint32_t>(n); w <= b; ++w)
    out.fixed_wires.push_back(w);
  if (n > k + 1) {
    for (auto w = b + 1; w < width; ++w)
      out.fixed_wires.push_back(w);
  } else if (n < k + 1) {
    for (std::uint32_t j = 0; j < k + 1 - n; ++j) {
      auto junk = b + 1 + j;
      out.variable_wires.push_back(junk);
      c.add_gate({junk, static_cast<std::uint32_t>(n + j)}, detail::cnot());
    }
  }
  out.instance.circuit = std::move(c);
  out.instance.init.assign(width, {0, 1});
  out.instance.final.assign(width, {0, 1});
  for (auto w : out.fixed_wires)
    out.instance.init[w] = out.instance.final[w] = {0};
  return out;
}

namespace detail {

/// Parity of a permutation given as an image table.
inline bool table_is_even(const std::vector<std::uint32_t>& t) { return Permutation(t).is_even(); }

} // namespace detail

/// Pairs variable wire i with fixed wire i into a symbol of
/// A1 = Z/2 x Z/2 (id = variable bit + 2 * fixed bit), so I1 = F1 = {0, 1};
/// rewrites every bit gate as gates on at most two A1 symbols; then embeds
/// A1 into the target alphabet with every gate an even permutation, and
/// appends a unary permutation carrying the image of F1 into F.
///
/// Target symbols in I outside the image of I1 are never touched by a gate
/// and are sent outside F at the end, so they cannot finalize.
inline RsatInstance regroup_embed(const Rsat2& r, const AlphabetSpec& target)
{
  target.validate("regroup_embed");
  const auto q = target.size;
  std::vector<char> in_i(q, 0), in_f(q, 0);
  for (auto x : target.init)
    in_i[x] = 1;
  for (auto x : target.final) {
    if (in_i[x])
      throw input_error("regroup_embed: I and F must be disjoint");
    in_f[x] = 1;
  }
  if (target.init.size() < 2 || target.final.size() < 2)
    throw input_error("regroup_embed: I and F need at least 2 symbols");
  if (q < target.init.size() + target.final.size() + 2)
    throw input_error("regroup_embed: target alphabet needs 2 symbols outside I and F");
  const auto m = r.variable_wires.size();
  if (r.fixed_wires.size() != m)
    throw input_error("regroup_embed: RSAT2 instance must have as many fixed as variable wires");

  // bit wire -> (symbol, slot)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> loc(r.instance.circuit.width());
  for (std::uint32_t i = 0; i < m; ++i) {
    loc[r.variable_wires[i]] = {i, 0};
    loc[r.fixed_wires[i]] = {i, 1};
  }

  ReversibleCircuit a1(4, m);
  using Bits = std::vector<std::pair<std::uint32_t, std::uint32_t>>; // (index into symbols, slot)
  auto add_a1 = [&](const std::vector<std::uint32_t>& symbols, const Bits& bits, const std::vector<std::uint32_t>& table) {
    a1.add_gate(symbols, [&](const std::vector<std::uint32_t>& in) {
      std::vector<std::uint32_t> out = in;
      std::uint32_t idx = 0;
      for (const auto& [s, slot] : bits)
        idx = (idx << 1) | ((in[s] >> slot) & 1u);
      auto res = table[idx];
      for (std::size_t j = bits.size(); j-- > 0;) {
        const auto& [s, slot] = bits[j];
        out[s] = (out[s] & ~(1u << slot)) | ((res & 1u) << slot);
        res >>= 1;
      }
      return out;
    });
  };
  const std::vector<std::uint32_t> bit_swap{0, 2, 1, 3};
  for (const auto& g : r.instance.circuit.gates()) {
    std::vector<std::uint32_t> symbols;
    Bits bits;
    for (auto w : g.wires) {
      auto [s, slot] = loc[w];
      auto it = std::find(symbols.begin(), symbols.end(), s);
      if (it == symbols.end()) {
        symbols.push_back(s);
        it = symbols.end() - 1;
      }
      bits.emplace_back(static_cast<std::uint32_t>(it - symbols.begin()), slot);
    }
    if (symbols.size() <= 2) {
      add_a1(symbols, bits, g.table);
      continue;
    }
    if (symbols.size() != 3 || g.wires.size() != 3)
      throw input_error("regroup_embed: bit gates may touch at most three wires");
    // Move the third bit into the free slot of the first symbol, apply the
    // gate on two symbols, move it back.
    const auto p = symbols[0], s = symbols[2];
    const auto spare = 1 - bits[0].second;
    Bits exchange{{0, spare}, {1, bits[2].second}};
    add_a1({p, s}, exchange, bit_swap);
    add_a1({p, symbols[1]}, {bits[0], {1, bits[1].second}, {0, spare}}, g.table);
    add_a1({p, s}, exchange, bit_swap);
  }

  // iota: A1 -> A with iota(I1) inside I and the other two symbols outside I and F.
  std::vector<std::uint32_t> iota{target.init[0], target.init[1]};
  for (std::uint32_t x = 0; x < q && iota.size() < 4; ++x)
    if (!in_i[x] && !in_f[x])
      iota.push_back(x);
  std::vector<std::int64_t> back(q, -1);
  for (std::uint32_t s = 0; s < 4; ++s)
    back[iota[s]] = s;
  // Symbols that can never occur on a wire: neither in the image nor in I.
  std::vector<std::uint32_t> pool;
  for (std::uint32_t x = 0; x < q; ++x)
    if (back[x] < 0 && !in_i[x])
      pool.push_back(x);

  ReversibleCircuit out(q, m);
  for (const auto& g : a1.gates()) {
    const auto k = g.wires.size();
    std::vector<std::uint32_t> table;
    std::vector<std::uint32_t> digits(k), a1digits(k);
    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i)
      size *= q;
    table.resize(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
      out.decode(idx, digits);
      bool embedded = std::all_of(digits.begin(), digits.end(), [&](std::uint32_t x) { return back[x] >= 0; });
      if (!embedded) {
        table[idx] = static_cast<std::uint32_t>(idx);
        continue;
      }
      for (std::size_t j = 0; j < k; ++j)
        a1digits[j] = static_cast<std::uint32_t>(back[digits[j]]);
      a1.decode(g.table[a1.encode(a1digits)], a1digits);
      for (std::size_t j = 0; j < k; ++j)
        digits[j] = iota[a1digits[j]];
      table[idx] = static_cast<std::uint32_t>(out.encode(digits));
    }
    if (!detail::table_is_even(table)) {
      // Exchange two tuples that contain a never-occurring symbol.
      std::vector<std::uint32_t> d1(k, 0), d2(k, 0);
      if (k == 1) {
        d1[0] = pool.at(0);
        d2[0] = pool.at(1);
      } else {
        d1[0] = d2[0] = pool.at(0);
        d2[1] = 1;
      }
      std::swap(table[out.encode(d1)], table[out.encode(d2)]);
    }
    out.add_gate(g.wires, std::move(table));
  }

  // Final unary permutation: iota(F1) = iota(I1) onto the first two final
  // symbols, pool symbols onto the remaining final symbols, the rest
  // outside F.
  std::vector<std::int64_t> pi(q, -1);
  std::vector<char> taken(q, 0);
  pi[iota[0]] = target.final[0];
  pi[iota[1]] = target.final[1];
  std::size_t next_pool = 0;
  for (std::size_t j = 2; j < target.final.size(); ++j) {
    if (next_pool >= pool.size())
      throw input_error("regroup_embed: target alphabet too small");
    pi[pool[next_pool++]] = target.final[j];
  }
  for (auto x : target.final)
    taken[x] = 1;
  std::vector<std::uint32_t> outside;
  for (std::uint32_t x = 0; x < q; ++x)
    if (!in_f[x])
      outside.push_back(x);
  std::vector<std::uint32_t> outside_sources;
  std::size_t next_out = 0;
  for (std::uint32_t x = 0; x < q; ++x)
    if (pi[x] < 0) {
      pi[x] = outside[next_out++];
      outside_sources.push_back(x);
    }
  std::vector<std::uint32_t> pi_table(pi.begin(), pi.end());
  if (!detail::table_is_even(pi_table))
    std::swap(pi_table[outside_sources.at(0)], pi_table[outside_sources.at(1)]);
  for (std::uint32_t w = 0; w < m; ++w)
    out.add_gate({w}, pi_table);
  return RsatInstance::uniform(std::move(out), target.init, target.final);
}

/// The packing parameter k and the intermediate alphabet A^k with I^k and
/// |F|^k further symbols outside it.
struct PackingPlan {
  AlphabetSpec target;
  std::size_t k = 0;
  AlphabetSpec packed;
};

inline std::vector<std::uint32_t> tuples_over(const std::vector<std::uint32_t>& symbols, std::size_t q, std::size_t k)
{
  std::vector<std::uint32_t> out{0};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::uint32_t> next;
    for (auto prefix : out)
      for (auto s : symbols)
        next.push_back(static_cast<std::uint32_t>(prefix * q + s));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest k with |A|^k >= |I|^k + |F|^k + 2.
inline PackingPlan packing_plan(const AlphabetSpec& target, std::size_t max_packed = 1u << 16)
{
  target.validate("pack_alphabet");
  const auto q = target.size, i = target.init.size(), f = target.final.size();
  if (i < 2 || f < 2 || i >= q || f >= q)
    throw input_error("pack_alphabet: requires 2 <= |I|, |F| < |A|");
  PackingPlan plan{target, 0, {}};
  BigInt qk = 1, ik = 1, fk = 1;
  for (std::size_t k = 1;; ++k) {
    qk *= q;
    ik *= i;
    fk *= f;
    if (qk > max_packed)
      throw bound_exceeded("pack_alphabet: packed alphabet would exceed " + std::to_string(max_packed) + " symbols");
    if (qk >= ik + fk + 2) {
      plan.k = k;
      break;
    }
  }
  plan.packed.size = static_cast<std::size_t>(qk);
  plan.packed.init = tuples_over(target.init, q, plan.k);
  std::vector<char> in_i(plan.packed.size, 0);
  for (auto x : plan.packed.init)
    in_i[x] = 1;
  for (std::uint32_t x = 0; x < plan.packed.size && plan.packed.final.size() < static_cast<std::size_t>(fk); ++x)
    if (!in_i[x])
      plan.packed.final.push_back(x);
  return plan;
}

/// Each symbol of A^k becomes k wires over A; a final permutation of A^k on
/// every group of k wires carries F' onto F^k.
inline RsatInstance pack_alphabet(const RsatInstance& rsat3, const PackingPlan& plan)
{
  const auto& c = rsat3.circuit;
  const auto k = plan.k;
  const auto q = plan.target.size;
  if (c.alphabet() != plan.packed.size)
    throw input_error("pack_alphabet: circuit alphabet does not match the packing plan");
  for (std::size_t w = 0; w < c.width(); ++w) {
    auto i = rsat3.init[w], f = rsat3.final[w];
    std::sort(i.begin(), i.end());
    std::sort(f.begin(), f.end());
    if (i != plan.packed.init || f != plan.packed.final)
      throw input_error("pack_alphabet: init/final sets do not match the packing plan");
  }
  ReversibleCircuit out(q, c.width() * k);
  auto expand = [&](const std::vector<std::uint32_t>& wires) {
    std::vector<std::uint32_t> v;
    for (auto w : wires)
      for (std::uint32_t j = 0; j < k; ++j)
        v.push_back(static_cast<std::uint32_t>(w * k + j));
    return v;
  };
  for (const auto& g : c.gates())
    out.add_gate(expand(g.wires), g.table);
  const auto final_k = tuples_over(plan.target.final, q, k);
  std::vector<std::int64_t> tau(plan.packed.size, -1);
  std::vector<char> used(plan.packed.size, 0);
  for (std::size_t j = 0; j < final_k.size(); ++j) {
    tau[plan.packed.final[j]] = final_k[j];
    used[final_k[j]] = 1;
  }
  std::uint32_t next = 0;
  for (auto& t : tau)
    if (t < 0) {
      while (used[next])
        ++next;
      t = next++;
    }
  std::vector<std::uint32_t> tau_table(tau.begin(), tau.end());
  for (std::uint32_t w = 0; w < c.width(); ++w)
    out.add_gate(expand({w}), tau_table);
  return RsatInstance::uniform(std::move(out), plan.target.init, plan.target.final);
}

struct StageCount {
  std::string stage;
  BigInt count;
  BigInt expected;
  bool checked = true; // false when the stage was skipped
  bool ok = true;
};

struct ParsimonyReport {
  std::vector<StageCount> stages;
  bool ok = true;
};

struct PipelineOptions {
  std::uint64_t max_enumeration = WorkBounds{}.max_enumeration;
  /// Group for the ZSAT stage; no ZSAT stage when null.
  std::shared_ptr<const FiniteGroup> gamma;
  ZsatOptions zsat;
};

/// The RSAT4 target used in front of ZSAT: B = (I ∪ F)/Γ of the minimal
/// zombie alphabet, I = {0, 1}, F = {2, 3}.
inline AlphabetSpec zsat_data_alphabet() { return {4, {0, 1}, {2, 3}}; }

struct PipelineStages {
  Rsat1 rsat1;
  Rsat2 rsat2;
  PackingPlan plan;
  RsatInstance rsat3;
  RsatInstance rsat4; // planar
};

inline PipelineStages run_pipeline(const BooleanCircuit& c, const AlphabetSpec& target = zsat_data_alphabet())
{
  PipelineStages s;
  s.rsat1 = dilate_to_reversible(c);
  s.rsat2 = uncompute_wrap(s.rsat1);
  s.plan = packing_plan(target);
  s.rsat3 = regroup_embed(s.rsat2, s.plan.packed);
  auto packed = pack_alphabet(s.rsat3, s.plan);
  packed.circuit = planarize(packed.circuit);
  s.rsat4 = std::move(packed);
  return s;
}

/// Counts every stage by brute force: CSAT = RSAT1 = ... = RSAT4, and
/// ZSAT = |Γ| RSAT4 + 1 when a group is given.
inline ParsimonyReport verify_parsimony(const BooleanCircuit& c, const PipelineOptions& opts = {})
{
  ParsimonyReport rep;
  auto csat = count_csat(c, opts.max_enumeration);
  rep.stages.push_back({"CSAT", csat, csat, true, true});
  auto s = run_pipeline(c);
  auto add = [&](const std::string& name, const BigInt& count, const BigInt& expected) {
    rep.stages.push_back({name, count, expected, true, count == expected});
    rep.ok = rep.ok && count == expected;
  };
  add("RSAT1", count_rsat(s.rsat1.instance, opts.max_enumeration), csat);
  add("RSAT2", count_rsat(s.rsat2.instance, opts.max_enumeration), csat);
  add("RSAT3", count_rsat(s.rsat3, opts.max_enumeration), csat);
  auto rsat4 = count_rsat(s.rsat4, opts.max_enumeration);
  add("RSAT4", rsat4, csat);
  if (opts.gamma) {
    auto z = ZAlphabet::minimal(opts.gamma);
    auto inst = compile_zsat(s.rsat4.circuit, z, opts.zsat);
    add("ZSAT", count_zsat(inst, opts.max_enumeration), BigInt(opts.gamma->order()) * rsat4 + 1);
  }
  return rep;
}

} // namespace homcount
