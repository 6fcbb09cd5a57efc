#pragma once

// Boolean circuits over {AND, OR, NOT, COPY}. Wires 0..n-1 are inputs and
// each gate defines one new wire; wires may be read any number of times.
//
//   in 2
//   AND 0 1 -> 2
//   NOT 2 -> 3
//   out 3

#include "group_io.hpp"

namespace homcount {

enum class BoolOp { and_, or_, not_, copy };

inline std::string to_string(BoolOp op)
{
  switch (op) {
  case BoolOp::and_: return "AND";
  case BoolOp::or_: return "OR";
  case BoolOp::not_: return "NOT";
  case BoolOp::copy: return "COPY";
  }
  return "?";
}

inline std::size_t arity(BoolOp op) { return op == BoolOp::and_ || op == BoolOp::or_ ? 2 : 1; }

inline bool apply(BoolOp op, bool a, bool b)
{
  switch (op) {
  case BoolOp::and_: return a && b;
  case BoolOp::or_: return a || b;
  case BoolOp::not_: return !a;
  case BoolOp::copy: return a;
  }
  return false;
}

struct BoolGate {
  BoolOp op;
  std::vector<std::uint32_t> in;
  std::uint32_t out;
};

class BooleanCircuit {
public:
  explicit BooleanCircuit(std::size_t inputs = 0) : inputs_(inputs), output_(0) {}

  std::size_t inputs() const { return inputs_; }
  std::size_t wire_count() const { return inputs_ + gates_.size(); }
  const std::vector<BoolGate>& gates() const { return gates_; }
  std::uint32_t output() const { return output_; }

  /// Appends a gate and returns the wire it defines.
  std::uint32_t add(BoolOp op, std::vector<std::uint32_t> in)
  {
    if (in.size() != arity(op))
      throw input_error("boolean circuit: " + homcount::to_string(op) + " takes " + std::to_string(arity(op)) +
                        " inputs");
    for (auto w : in)
      if (w >= wire_count())
        throw input_error("boolean circuit: gate reads wire " + std::to_string(w) + " before it is defined");
    auto out = static_cast<std::uint32_t>(wire_count());
    gates_.push_back({op, std::move(in), out});
    return out;
  }

  void set_output(std::uint32_t w)
  {
    if (w >= wire_count())
      throw input_error("boolean circuit: output wire " + std::to_string(w) + " is not defined");
    output_ = w;
  }

  /// Bit i of `x` is input i.
  bool evaluate(std::uint64_t x) const
  {
    std::vector<char> v(wire_count());
    for (std::size_t i = 0; i < inputs_; ++i)
      v[i] = static_cast<char>((x >> i) & 1u);
    for (const auto& g : gates_)
      v[g.out] = apply(g.op, v[g.in[0]], g.in.size() > 1 ? v[g.in[1]] : false);
    return v[output_] != 0;
  }

private:
  std::size_t inputs_;
  std::vector<BoolGate> gates_;
  std::uint32_t output_;
};

inline BigInt count_csat(const BooleanCircuit& c, std::uint64_t max_enumeration = WorkBounds{}.max_enumeration)
{
  if (c.inputs() >= 63 || (std::uint64_t{1} << c.inputs()) > max_enumeration)
    throw bound_exceeded("count_csat: 2^" + std::to_string(c.inputs()) + " inputs exceed max-enumeration " +
                         std::to_string(max_enumeration));
  if (c.wire_count() == 0)
    throw input_error("count_csat: circuit has no wires");
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.inputs()); ++x)
    count += c.evaluate(x);
  return count;
}

/// Gate lines may name new wires in any order; they are renumbered so that
/// gate i defines wire inputs + i.
inline BooleanCircuit parse_boolean(const std::string& text, const std::string& origin = "circuit")
{
  std::optional<BooleanCircuit> c;
  std::map<std::uint64_t, std::uint32_t> wire;
  std::optional<std::uint64_t> out;
  for (const auto& line : io::content_lines(text)) {
    auto words = io::split_words(line);
    auto where = origin + ": line '" + line + "'";
    if (words[0] == "in" && words.size() == 2) {
      if (c)
        throw input_error(where + ": repeated 'in'");
      auto n = io::parse_uint(words[1], where);
      c.emplace(n);
      for (std::uint32_t i = 0; i < n; ++i)
        wire[i] = i;
      continue;
    }
    if (!c)
      throw input_error(where + ": 'in n' must come first");
    if (words[0] == "out" && words.size() == 2) {
      out = io::parse_uint(words[1], where);
      continue;
    }
    std::optional<BoolOp> op;
    for (auto candidate : {BoolOp::and_, BoolOp::or_, BoolOp::not_, BoolOp::copy})
      if (words[0] == homcount::to_string(candidate))
        op = candidate;
    const auto k = op ? arity(*op) : 0;
    if (!op || words.size() != k + 3 || words[k + 1] != "->")
      throw input_error(where + " is not recognized");
    std::vector<std::uint32_t> in;
    for (std::size_t i = 0; i < k; ++i) {
      auto it = wire.find(io::parse_uint(words[1 + i], where));
      if (it == wire.end())
        throw input_error(where + ": wire " + words[1 + i] + " is read before it is defined");
      in.push_back(it->second);
    }
    auto name = io::parse_uint(words[k + 2], where);
    if (wire.count(name))
      throw input_error(where + ": wire " + words[k + 2] + " is defined twice");
    wire[name] = c->add(*op, in);
  }
  if (!c || !out)
    throw input_error(origin + ": needs 'in' and 'out' lines");
  auto it = wire.find(*out);
  if (it == wire.end())
    throw input_error(origin + ": output wire is not defined");
  c->set_output(it->second);
  return *c;
}

inline BooleanCircuit load_boolean(const std::filesystem::path& path)
{
  return parse_boolean(io::read_file(path), path.string());
}

inline std::string format_boolean(const BooleanCircuit& c)
{
  std::ostringstream out;
  out << "in " << c.inputs() << '\n';
  for (const auto& g : c.gates()) {
    out << homcount::to_string(g.op);
    for (auto w : g.in)
      out << ' ' << w;
    out << " -> " << g.out << '\n';
  }
  out << "out " << c.output() << '\n';
  return out.str();
}

} // namespace homcount
