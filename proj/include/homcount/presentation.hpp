#pragma once

// Finite presentations <x_1..x_r | relators>. A word is a list of nonzero
// letters: +i is x_i, -i its inverse (1-based).

#include "complex.hpp"

#include <cctype>

namespace homcount {

using Word = std::vector<int>;

struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;

  void validate() const
  {
    for (const auto& r : relators)
      for (int letter : r)
        if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators)
          throw input_error("presentation: relator letter x" + std::to_string(std::abs(letter)) +
                            " names no generator");
  }
};

inline Word inverse_word(const Word& w)
{
  Word out(w.rbegin(), w.rend());
  for (auto& l : out)
    l = -l;
  return out;
}

/// Free and cyclic reduction.
inline Word reduce_word(const Word& w, bool cyclic = false)
{
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  if (cyclic) {
    std::size_t b = 0, e = out.size();
    while (e - b >= 2 && out[b] == -out[e - 1]) {
      ++b;
      --e;
    }
    out = Word(out.begin() + static_cast<std::ptrdiff_t>(b), out.begin() + static_cast<std::ptrdiff_t>(e));
  }
  return out;
}

/// Parses `x3 X1 x2` style words; whitespace between letters is optional,
/// and `1` or `e` stands for the empty word.
inline Word parse_word(const std::string& text, const std::string& origin = "word")
{
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if ((c == '1' || c == 'e') && (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'X')
      throw input_error(origin + ": expected a letter x<i> or X<i>, got '" + std::string(1, c) + "'");
    std::size_t start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i)
      throw input_error(origin + ": letter without a generator number");
    auto index = std::stoi(text.substr(start, i - start));
    if (index <= 0)
      throw input_error(origin + ": generator numbers are 1-based");
    w.push_back(c == 'x' ? index : -index);
  }
  return w;
}

inline std::string format_word(const Word& w)
{
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out += (i ? " " : "") + std::string(w[i] > 0 ? "x" : "X") + std::to_string(std::abs(w[i]));
  return out;
}

/// File: `gens r` then one relator per line.
inline Presentation parse_presentation(const std::string& text, const std::string& origin = "presentation")
{
  auto lines = io::content_lines(text);
  if (lines.empty())
    throw input_error(origin + ": empty presentation");
  auto header = io::split_words(lines[0]);
  if (header.size() != 2 || header[0] != "gens")
    throw input_error(origin + ": header must be 'gens <r>'");
  Presentation p;
  p.generators = io::parse_uint(header[1], origin + " generator count");
  for (std::size_t i = 1; i < lines.size(); ++i)
    p.relators.push_back(parse_word(lines[i], origin + " line " + std::to_string(i + 1)));
  p.validate();
  return p;
}

inline Presentation load_presentation(const std::filesystem::path& path)
{
  return parse_presentation(io::read_file(path), path.string());
}

inline std::string format_presentation(const Presentation& p)
{
  std::string out = "gens " + std::to_string(p.generators) + "\n";
  for (const auto& r : p.relators)
    out += format_word(r) + "\n";
  return out;
}

/// Edge-path presentation of pi_1(X, basepoint): a breadth-first spanning
/// tree of the 1-skeleton is contracted, every other edge (oriented from
/// lower to higher vertex) is a generator, and each triangle u<v<w gives
/// the relator e(uv) e(vw) e(uw)^-1.
struct ComplexPresentation {
  Presentation presentation;
  std::vector<int> edge_generator; // per simplex id: 0 for tree edges and non-edges
};

inline ComplexPresentation presentation_from_complex(const SimplicialComplex& x, std::uint32_t basepoint = 0)
{
  if (!x.is_connected())
    throw input_error("presentation_from_complex: complex is disconnected");
  if (basepoint >= x.vertex_count())
    throw input_error("presentation_from_complex: basepoint out of range");
  const auto nv = x.vertex_count();
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adjacent(nv);
  for (auto e : x.of_dimension(1)) {
    const auto& s = x.simplex(e);
    adjacent[s[0]].emplace_back(s[1], e);
    adjacent[s[1]].emplace_back(s[0], e);
  }
  for (auto& list : adjacent)
    std::sort(list.begin(), list.end());
  std::vector<char> seen(nv, 0), tree(x.size(), 0);
  std::vector<std::uint32_t> queue{basepoint};
  seen[basepoint] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto [w, e] : adjacent[queue[h]])
      if (!seen[w]) {
        seen[w] = 1;
        tree[e] = 1;
        queue.push_back(w);
      }
  ComplexPresentation out;
  out.edge_generator.assign(x.size(), 0);
  for (auto e : x.of_dimension(1))
    if (!tree[e])
      out.edge_generator[e] = static_cast<int>(++out.presentation.generators);
  for (auto t : x.of_dimension(2)) {
    const auto& s = x.simplex(t);
    Word r;
    auto push = [&](std::size_t e, int sign) {
      if (out.edge_generator[e])
        r.push_back(sign * out.edge_generator[e]);
    };
    push(x.edge_id(s[0], s[1]), 1);
    push(x.edge_id(s[1], s[2]), 1);
    push(x.edge_id(s[0], s[2]), -1);
    out.presentation.relators.push_back(std::move(r));
  }
  return out;
}

/// Tietze simplification: while some relator contains a generator exactly
/// once (and no other occurrence in that relator), solve for it, substitute
/// it everywhere and drop generator and relator. Hom sets into any group
/// are in bijection before and after, and images generate the same
/// subgroup. Empty relators are dropped.
inline Presentation simplify_presentation(Presentation p, std::size_t max_total_length = 20'000)
{
  p.validate();
  for (auto& r : p.relators)
    r = reduce_word(r, true);
  for (;;) {
    std::erase_if(p.relators, [](const Word& r) { return r.empty(); });
    // Shortest relator with a generator occurring exactly once.
    std::size_t best_rel = p.relators.size();
    int best_gen = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (best_rel != p.relators.size() && p.relators[i].size() >= p.relators[best_rel].size())
        continue;
      std::map<int, int> occurrences;
      for (int l : p.relators[i])
        ++occurrences[std::abs(l)];
      for (auto [g, c] : occurrences)
        if (c == 1) {
          best_rel = i;
          best_gen = g;
          break;
        }
    }
    if (best_rel == p.relators.size())
      break;
    const Word r = p.relators[best_rel];
    auto pos = static_cast<std::size_t>(
      std::find_if(r.begin(), r.end(), [&](int l) { return std::abs(l) == best_gen; }) - r.begin());
    Word u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    Word v(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    // u x^e v = 1  =>  x^e = u^-1 v^-1
    Word solved = inverse_word(u);
    auto vi = inverse_word(v);
    solved.insert(solved.end(), vi.begin(), vi.end());
    if (r[pos] < 0)
      solved = inverse_word(solved);
    solved = reduce_word(solved);
    auto solved_inv = inverse_word(solved);

    Presentation next;
    next.generators = p.generators - 1;
    std::size_t total = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i == best_rel)
        continue;
      Word w;
      for (int l : p.relators[i]) {
        if (std::abs(l) == best_gen) {
          const auto& sub = l > 0 ? solved : solved_inv;
          w.insert(w.end(), sub.begin(), sub.end());
        } else {
          w.push_back(l);
        }
      }
      for (auto& l : w)
        if (std::abs(l) > best_gen)
          l += l > 0 ? -1 : 1;
      w = reduce_word(w, true);
      total += w.size();
      next.relators.push_back(std::move(w));
    }
    if (total > max_total_length)
      break;
    p = std::move(next);
  }
  return p;
}

} // namespace homcount
