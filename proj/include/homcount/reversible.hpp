#pragma once

// Reversible circuits over a finite alphabet 0..q-1. A gate acts on an
// ordered list of wires through a permutation of A^k; the tuple
// (x_1..x_k) has index sum x_j q^(k-j).

#include "errors.hpp"
#include "group_io.hpp"
#include "perm.hpp"

#include <functional>
#include <numeric>

namespace homcount {

struct ReversibleGate {
  std::vector<std::uint32_t> wires;
  std::vector<std::uint32_t> table; // size q^k
};

class ReversibleCircuit {
public:
  ReversibleCircuit() = default;
  ReversibleCircuit(std::size_t alphabet, std::size_t width) : alphabet_(alphabet), width_(width)
  {
    if (alphabet < 2)
      throw input_error("reversible circuit: alphabet needs at least 2 symbols");
  }

  std::size_t alphabet() const { return alphabet_; }
  std::size_t width() const { return width_; }
  const std::vector<ReversibleGate>& gates() const { return gates_; }

  void add_gate(std::vector<std::uint32_t> wires, std::vector<std::uint32_t> table)
  {
    if (wires.empty())
      throw input_error("reversible gate: no wires");
    std::vector<std::uint32_t> sorted = wires;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= width_)
      throw input_error("reversible gate: wires repeat or exceed the width");
    std::size_t size = 1;
    for (std::size_t i = 0; i < wires.size(); ++i)
      size *= alphabet_;
    if (table.size() != size)
      throw input_error("reversible gate: table size does not match alphabet^arity");
    Permutation check(table); // throws when not a bijection
    gates_.push_back({std::move(wires), std::move(table)});
  }

  void add_gate(std::vector<std::uint32_t> wires, const std::function<std::vector<std::uint32_t>(const std::vector<std::uint32_t>&)>& f)
  {
    const auto k = wires.size();
    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i)
      size *= alphabet_;
    std::vector<std::uint32_t> table(size);
    std::vector<std::uint32_t> in(k);
    for (std::size_t idx = 0; idx < size; ++idx) {
      decode(idx, in);
      auto out = f(in);
      table[idx] = static_cast<std::uint32_t>(encode(out));
    }
    add_gate(std::move(wires), std::move(table));
  }

  void append(const ReversibleCircuit& other)
  {
    if (other.alphabet_ != alphabet_ || other.width_ > width_)
      throw input_error("reversible circuit: cannot append a circuit over another alphabet or wider");
    for (const auto& g : other.gates_)
      gates_.push_back(g);
  }

  void apply(std::vector<std::uint32_t>& state) const
  {
    if (state.size() != width_)
      throw input_error("reversible circuit: state has wrong width");
    for (const auto& g : gates_)
      apply_gate(g, state);
  }

  std::vector<std::uint32_t> eval(std::vector<std::uint32_t> x) const
  {
    for (auto s : x)
      if (s >= alphabet_)
        throw input_error("reversible circuit: symbol outside the alphabet");
    apply(x);
    return x;
  }

  ReversibleCircuit inverse() const
  {
    ReversibleCircuit inv(alphabet_, width_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
      std::vector<std::uint32_t> t(it->table.size());
      for (std::uint32_t i = 0; i < t.size(); ++i)
        t[it->table[i]] = i;
      inv.gates_.push_back({it->wires, std::move(t)});
    }
    return inv;
  }

  /// Every gate acts on consecutive wires in increasing order.
  bool is_planar() const
  {
    for (const auto& g : gates_)
      for (std::size_t j = 1; j < g.wires.size(); ++j)
        if (g.wires[j] != g.wires[j - 1] + 1)
          return false;
    return true;
  }

  void decode(std::size_t idx, std::vector<std::uint32_t>& digits) const
  {
    for (std::size_t j = digits.size(); j-- > 0;) {
      digits[j] = static_cast<std::uint32_t>(idx % alphabet_);
      idx /= alphabet_;
    }
  }

  std::size_t encode(const std::vector<std::uint32_t>& digits) const
  {
    std::size_t idx = 0;
    for (auto d : digits)
      idx = idx * alphabet_ + d;
    return idx;
  }

private:
  void apply_gate(const ReversibleGate& g, std::vector<std::uint32_t>& state) const
  {
    std::size_t idx = 0;
    for (auto w : g.wires)
      idx = idx * alphabet_ + state[w];
    std::size_t out = g.table[idx];
    for (std::size_t j = g.wires.size(); j-- > 0;) {
      state[g.wires[j]] = static_cast<std::uint32_t>(out % alphabet_);
      out /= alphabet_;
    }
  }

  std::size_t alphabet_ = 2;
  std::size_t width_ = 0;
  std::vector<ReversibleGate> gates_;
};

inline std::vector<std::uint32_t> swap_table(std::size_t q)
{
  std::vector<std::uint32_t> t(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      t[a * q + b] = static_cast<std::uint32_t>(b * q + a);
  return t;
}

/// Same circuit with every gate on consecutive wires: each gate is
/// conjugated by adjacent SWAPs that bring its wires, in order, next to
/// its smallest wire.
inline ReversibleCircuit planarize(const ReversibleCircuit& c)
{
  ReversibleCircuit out(c.alphabet(), c.width());
  const auto swap = swap_table(c.alphabet());
  for (const auto& g : c.gates()) {
    const auto start = *std::min_element(g.wires.begin(), g.wires.end());
    std::vector<std::uint32_t> slot_of(c.width());
    std::iota(slot_of.begin(), slot_of.end(), 0u);
    std::vector<std::uint32_t> wire_at = slot_of;
    std::vector<std::uint32_t> swaps; // left slot of each adjacent swap
    for (std::size_t j = 0; j < g.wires.size(); ++j) {
      const auto target = static_cast<std::uint32_t>(start + j);
      for (auto s = slot_of[g.wires[j]]; s > target; --s) {
        swaps.push_back(s - 1);
        std::swap(wire_at[s - 1], wire_at[s]);
        slot_of[wire_at[s - 1]] = s - 1;
        slot_of[wire_at[s]] = s;
      }
    }
    for (auto s : swaps)
      out.add_gate({s, s + 1}, swap);
    std::vector<std::uint32_t> window(g.wires.size());
    std::iota(window.begin(), window.end(), start);
    out.add_gate(window, g.table);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
      out.add_gate({*it, *it + 1}, swap);
  }
  return out;
}

/// Satisfiability data per wire: allowed input symbols and accepted output
/// symbols. RSAT_{A,I,F} uses the same I and F on every wire.
struct RsatInstance {
  ReversibleCircuit circuit;
  std::vector<std::vector<std::uint32_t>> init;
  std::vector<std::vector<std::uint32_t>> final;

  static RsatInstance uniform(ReversibleCircuit c, const std::vector<std::uint32_t>& i, const std::vector<std::uint32_t>& f)
  {
    const auto n = c.width();
    return {std::move(c), std::vector<std::vector<std::uint32_t>>(n, i), std::vector<std::vector<std::uint32_t>>(n, f)};
  }

  void validate() const
  {
    const auto n = circuit.width();
    if (init.size() != n || final.size() != n)
      throw input_error("RSAT instance: one init and final set per wire is required");
    for (const auto* sets : {&init, &final})
      for (const auto& s : *sets)
        for (auto x : s)
          if (x >= circuit.alphabet())
            throw input_error("RSAT instance: init/final symbol outside the alphabet");
  }
};

/// Inputs in the product of the init sets whose output lies in the product
/// of the final sets.
inline BigInt count_rsat(const RsatInstance& inst, std::uint64_t max_enumeration = WorkBounds{}.max_enumeration)
{
  inst.validate();
  const auto n = inst.circuit.width();
  BigInt work = 1;
  for (const auto& s : inst.init)
    work *= s.size();
  if (work > max_enumeration)
    throw bound_exceeded("count_rsat: " + to_string(work) + " inputs exceed max-enumeration " +
                         std::to_string(max_enumeration));
  if (work == 0)
    return 0;
  std::vector<std::vector<char>> accept(n, std::vector<char>(inst.circuit.alphabet(), 0));
  for (std::size_t w = 0; w < n; ++w)
    for (auto x : inst.final[w])
      accept[w][x] = 1;
  // Inputs are evaluated in blocks, one column per wire. Output tables are
  // decoded to digits once, and a SWAP gate only exchanges two columns.
  struct Step {
    std::vector<std::uint32_t> wires;
    std::vector<std::uint32_t> digits;
    bool swap = false;
  };
  const std::size_t q = inst.circuit.alphabet();
  const auto swap = swap_table(q);
  std::vector<Step> steps;
  for (const auto& g : inst.circuit.gates()) {
    const auto k = g.wires.size();
    Step st{g.wires, {}, k == 2 && g.table == swap};
    if (!st.swap) {
      st.digits.resize(g.table.size() * k);
      for (std::size_t i = 0; i < g.table.size(); ++i) {
        std::size_t out = g.table[i];
        for (std::size_t j = k; j-- > 0;) {
          st.digits[i * k + j] = static_cast<std::uint32_t>(out % q);
          out /= q;
        }
      }
    }
    steps.push_back(std::move(st));
  }
  constexpr std::size_t block = 1024;
  std::vector<std::vector<std::uint32_t>> columns(n, std::vector<std::uint32_t>(block));
  std::vector<std::size_t> column_of(n);
  std::vector<std::size_t> choice(n, 0);
  std::vector<std::size_t> idx(block);
  std::uint64_t count = 0;
  bool done = false;
  while (!done) {
    std::size_t filled = 0;
    for (; filled < block && !done; ++filled) {
      for (std::size_t w = 0; w < n; ++w)
        columns[w][filled] = inst.init[w][choice[w]];
      std::size_t w = 0;
      while (w < n && ++choice[w] == inst.init[w].size())
        choice[w++] = 0;
      done = w == n;
    }
    std::iota(column_of.begin(), column_of.end(), std::size_t{0});
    for (const auto& st : steps) {
      if (st.swap) {
        std::swap(column_of[st.wires[0]], column_of[st.wires[1]]);
        continue;
      }
      const auto k = st.wires.size();
      std::fill(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(filled), 0);
      for (auto w : st.wires) {
        const auto& col = columns[column_of[w]];
        for (std::size_t i = 0; i < filled; ++i)
          idx[i] = idx[i] * q + col[i];
      }
      for (std::size_t j = 0; j < k; ++j) {
        auto& col = columns[column_of[st.wires[j]]];
        for (std::size_t i = 0; i < filled; ++i)
          col[i] = st.digits[idx[i] * k + j];
      }
    }
    for (std::size_t i = 0; i < filled; ++i) {
      bool ok = true;
      for (std::size_t w = 0; w < n && ok; ++w)
        ok = accept[w][columns[column_of[w]][i]] != 0;
      count += ok;
    }
  }
  return count;
}

/// Text format for uniform instances: `alphabet q`, `init ids`, `final
/// ids`, `width n`, then `gate <first wire> <k> <q^k images>` acting on
/// wires first..first+k-1.
inline RsatInstance parse_rsat(const std::string& text, const std::string& origin = "circuit")
{
  std::optional<std::size_t> q, n;
  std::vector<std::uint32_t> init, final;
  bool have_init = false, have_final = false;
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> gates;
  for (const auto& line : io::content_lines(text)) {
    auto words = io::split_words(line);
    auto where = origin + ": line '" + line + "'";
    auto rest = [&](std::size_t from) {
      std::vector<std::uint32_t> v;
      for (std::size_t i = from; i < words.size(); ++i)
        v.push_back(static_cast<std::uint32_t>(io::parse_uint(words[i], where)));
      return v;
    };
    if (words[0] == "alphabet" && words.size() == 2)
      q = io::parse_uint(words[1], where);
    else if (words[0] == "width" && words.size() == 2)
      n = io::parse_uint(words[1], where);
    else if (words[0] == "init") {
      init = rest(1);
      have_init = true;
    } else if (words[0] == "final") {
      final = rest(1);
      have_final = true;
    } else if (words[0] == "gate" && words.size() >= 3) {
      auto first = static_cast<std::uint32_t>(io::parse_uint(words[1], where));
      auto k = io::parse_uint(words[2], where);
      if (k == 0 || k > 8)
        throw input_error(where + ": gate arity must be between 1 and 8");
      std::vector<std::uint32_t> wires(k);
      std::iota(wires.begin(), wires.end(), first);
      gates.emplace_back(wires, rest(3));
    } else
      throw input_error(where + " is not recognized");
  }
  if (!q || !n || !have_init || !have_final)
    throw input_error(origin + ": needs alphabet, width, init and final lines");
  ReversibleCircuit c(*q, *n);
  for (auto& [w, t] : gates)
    c.add_gate(std::move(w), std::move(t));
  auto inst = RsatInstance::uniform(std::move(c), init, final);
  inst.validate();
  return inst;
}

inline RsatInstance load_rsat(const std::filesystem::path& path)
{
  return parse_rsat(io::read_file(path), path.string());
}

/// Writes a uniform instance with planar gates in the text format.
inline std::string format_rsat(const RsatInstance& inst)
{
  const auto& c = inst.circuit;
  if (!c.is_planar())
    throw input_error("format_rsat: the circuit must be planar");
  for (std::size_t w = 1; w < c.width(); ++w)
    if (inst.init[w] != inst.init[0] || inst.final[w] != inst.final[0])
      throw input_error("format_rsat: init and final sets must be the same on every wire");
  std::ostringstream out;
  out << "alphabet " << c.alphabet() << "\ninit";
  for (auto x : inst.init.empty() ? std::vector<std::uint32_t>{} : inst.init[0])
    out << ' ' << x;
  out << "\nfinal";
  for (auto x : inst.final.empty() ? std::vector<std::uint32_t>{} : inst.final[0])
    out << ' ' << x;
  out << "\nwidth " << c.width() << '\n';
  for (const auto& g : c.gates()) {
    out << "gate " << g.wires[0] << ' ' << g.wires.size();
    for (auto x : g.table)
      out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

} // namespace homcount
