#pragma once

// Representations of closed surface groups
//
//   pi_1(S_g) = < a_1, b_1, ..., a_g, b_g | [a_1,b_1] ... [a_g,b_g] >,
//   [x, y] = x y x^-1 y^-1,
//
// stored as tuples (f(a_1), f(b_1), ..., f(a_g), f(b_g)). Generators are
// numbered a_i = 2i - 1, b_i = 2i in words. Mapping classes act through
// Dehn twist substitutions; a Heegaard gluing is a word in those twists.

#include "counting.hpp"

#include <random>
#include <span>
#include <unordered_map>

namespace homcount {

inline Elem surface_relation(const FiniteGroup& g, std::span<const Elem> t)
{
  if (t.size() % 2 != 0)
    throw input_error("surface tuple: odd number of entries");
  Elem r = FiniteGroup::identity();
  for (std::size_t i = 0; i < t.size(); i += 2)
    r = g.mul(r, g.commutator(t[i], t[i + 1]));
  return r;
}

struct SurfaceTuple {
  std::size_t genus = 0;
  std::vector<Elem> elems;
};

/// For each (a, c) the elements b with [a, b] = c.
class CommutatorSolutions {
public:
  explicit CommutatorSolutions(const FiniteGroup& g) : n_(g.order()), start_(n_ * n_ + 1, 0)
  {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        ++start_[a * n_ + g.commutator(a, b) + 1];
    for (std::size_t i = 1; i < start_.size(); ++i)
      start_[i] += start_[i - 1];
    sols_.resize(n_ * n_);
    auto fill = start_;
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        sols_[fill[a * n_ + g.commutator(a, b)]++] = b;
  }

  std::span<const Elem> solve(Elem a, Elem c) const
  {
    auto i = static_cast<std::size_t>(a) * n_ + c;
    return {sols_.data() + start_[i], start_[i + 1] - start_[i]};
  }

private:
  std::size_t n_;
  std::vector<std::size_t> start_;
  std::vector<Elem> sols_;
};

/// sch(f) for a perfect group G: the product of commutators of lifts to a
/// stem extension, an element of its central kernel.
class SchurInvariant {
public:
  SchurInvariant(const FiniteGroup& g, StemExtension ext) : g_(g), ext_(std::move(ext))
  {
    if (!is_perfect(g_))
      throw input_error("schur invariant: group " + g_.name() + " is not perfect");
    ext_.validate(g_);
    section_ = ext_.section();
  }

  const FiniteGroup& group() const { return g_; }
  const StemExtension& extension() const { return ext_; }

  Elem operator()(std::span<const Elem> t) const
  {
    std::vector<Elem> lifts(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= g_.order())
        throw input_error("schur invariant: tuple entry outside the group");
      lifts[i] = section_[t[i]];
    }
    return with_lifts(t, lifts);
  }

  /// Same invariant computed from caller-chosen lifts.
  Elem with_lifts(std::span<const Elem> t, std::span<const Elem> lifts) const
  {
    if (surface_relation(g_, t) != FiniteGroup::identity())
      throw input_error("schur invariant: tuple violates the surface relation");
    if (lifts.size() != t.size())
      throw input_error("schur invariant: one lift per entry is required");
    const auto& c = *ext_.cover;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (lifts[i] >= c.order() || ext_.projection[lifts[i]] != t[i])
        throw input_error("schur invariant: lift does not project to its entry");
    Elem r = FiniteGroup::identity();
    for (std::size_t i = 0; i < t.size(); i += 2)
      r = c.mul(r, c.commutator(lifts[i], lifts[i + 1]));
    if (!std::binary_search(ext_.center_ids.begin(), ext_.center_ids.end(), r))
      throw verification_error("schur invariant: product of lifted commutators left the centre");
    return r;
  }

  template <class Rng>
  std::vector<Elem> random_lifts(std::span<const Elem> t, Rng& rng) const
  {
    std::uniform_int_distribution<std::size_t> pick(0, ext_.center_ids.size() - 1);
    std::vector<Elem> lifts(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      lifts[i] = ext_.cover->mul(section_[t[i]], ext_.center_ids[pick(rng)]);
    return lifts;
  }

private:
  FiniteGroup g_;
  StemExtension ext_;
  std::vector<Elem> section_;
};

enum class RepFilter { all, surjective, schur_zero };

inline RepFilter parse_rep_filter(const std::string& s)
{
  if (s == "all")
    return RepFilter::all;
  if (s == "surjective")
    return RepFilter::surjective;
  if (s == "schur-zero")
    return RepFilter::schur_zero;
  throw input_error("representation filter must be all, surjective or schur-zero, not '" + s + "'");
}

/// Calls visit(tuple) for every tuple in R^_g(G), R_g(G) or R^0_g(G). The
/// first 2g - 1 entries are enumerated and b_g is solved from the relation.
template <class Visit>
void enumerate_reps(std::size_t genus, const FiniteGroup& g, RepFilter filter, Visit&& visit,
                    const SchurInvariant* schur = nullptr,
                    std::uint64_t max_enumeration = WorkBounds{}.max_enumeration)
{
  if (genus == 0)
    throw input_error("enumerate_reps: genus must be at least 1");
  if (filter == RepFilter::schur_zero && !schur)
    throw input_error("enumerate_reps: schur-zero filter needs a stem extension");
  if (schur && schur->group().table() != g.table())
    throw input_error("enumerate_reps: stem extension belongs to a different group");
  auto work = ipow(BigInt(g.order()), 2 * genus - 1);
  if (work > max_enumeration)
    throw bound_exceeded("enumerate_reps: |G|^(2g-1) = " + to_string(work) + " exceeds max-enumeration " +
                         std::to_string(max_enumeration));
  CommutatorSolutions sols(g);
  const auto n = 2 * genus;
  std::vector<Elem> t(n, 0);
  // prefix[i]: product of the commutators of pairs before pair i
  std::vector<Elem> prefix(genus + 1, FiniteGroup::identity());
  std::function<void(std::size_t)> descend = [&](std::size_t pos) {
    if (pos == n - 1) {
      auto need = g.inv(prefix[genus - 1]);
      for (Elem b : sols.solve(t[n - 2], need)) {
        t[n - 1] = b;
        if (filter != RepFilter::all && !generates(g, t))
          continue;
        if (filter == RepFilter::schur_zero && (*schur)(t) != FiniteGroup::identity())
          continue;
        visit(static_cast<const std::vector<Elem>&>(t));
      }
      return;
    }
    for (Elem x = 0; x < g.order(); ++x) {
      t[pos] = x;
      if (pos % 2 == 1)
        prefix[pos / 2 + 1] = g.mul(prefix[pos / 2], g.commutator(t[pos - 1], x));
      descend(pos + 1);
    }
  };
  descend(0);
}

inline BigInt count_reps(std::size_t genus, const FiniteGroup& g, RepFilter filter,
                         const SchurInvariant* schur = nullptr,
                         std::uint64_t max_enumeration = WorkBounds{}.max_enumeration)
{
  std::uint64_t count = 0;
  enumerate_reps(genus, g, filter, [&](const std::vector<Elem>&) { ++count; }, schur, max_enumeration);
  return count;
}

/// Uniform sample from R^_g(G) by rejection on the number of solutions
/// for b_g.
template <class Rng>
std::vector<Elem> random_rep(std::size_t genus, const FiniteGroup& g, const CommutatorSolutions& sols, Rng& rng)
{
  if (genus == 0)
    throw input_error("random_rep: genus must be at least 1");
  std::uniform_int_distribution<Elem> any(0, static_cast<Elem>(g.order() - 1));
  std::vector<Elem> t(2 * genus);
  for (;;) {
    Elem r = FiniteGroup::identity();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      t[i] = any(rng);
      if (i % 2 == 1)
        r = g.mul(r, g.commutator(t[i - 1], t[i]));
    }
    auto s = sols.solve(t[t.size() - 2], g.inv(r));
    if (s.empty() || any(rng) >= s.size())
      continue;
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    t.back() = s[pick(rng)];
    return t;
  }
}

/// Dehn twist about a_i, b_i (1 <= i <= g) or c_i (1 <= i < g), the curve
/// c_i meeting b_i and b_{i+1} once each, or the inverse twist.
struct TwistLetter {
  char curve = 'a';
  std::size_t index = 1;
  bool inverse = false;

  bool operator==(const TwistLetter&) const = default;
};

inline std::string to_string(const TwistLetter& l)
{
  return std::string(1, l.curve) + std::to_string(l.index) + (l.inverse ? "'" : "");
}

inline std::string format_twist_word(const std::vector<TwistLetter>& w)
{
  std::string out;
  for (const auto& l : w)
    out += (out.empty() ? "" : " ") + to_string(l);
  return out;
}

inline void check_letter(const TwistLetter& l, std::size_t genus)
{
  auto bad = [&](const std::string& why) {
    return input_error("twist " + to_string(l) + " at genus " + std::to_string(genus) + ": " + why);
  };
  if (l.curve != 'a' && l.curve != 'b' && l.curve != 'c')
    throw bad("curve must be a, b or c");
  if (l.index == 0 || l.index > genus)
    throw bad("index out of range");
  if (l.curve == 'c' && l.index == genus)
    throw bad("c_i needs i < g");
}

inline std::vector<TwistLetter> parse_twist_word(const std::string& text, std::size_t genus,
                                                 const std::string& origin = "word")
{
  std::vector<TwistLetter> w;
  for (const auto& tok : io::split_words(text)) {
    TwistLetter l;
    std::string body = tok;
    if (!body.empty() && body.back() == '\'') {
      l.inverse = true;
      body.pop_back();
    }
    if (body.size() < 2 || !std::all_of(body.begin() + 1, body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw input_error(origin + ": '" + tok + "' is not a twist name like a1, b2' or c1");
    l.curve = body[0];
    l.index = io::parse_uint(body.substr(1), origin + ": twist index");
    check_letter(l, genus);
    w.push_back(l);
  }
  return w;
}

inline std::vector<TwistLetter> inverse_twist_word(const std::vector<TwistLetter>& w)
{
  std::vector<TwistLetter> out(w.rbegin(), w.rend());
  for (auto& l : out)
    l.inverse = !l.inverse;
  return out;
}

/// a_1..a_g, b_1..b_g, c_1..c_{g-1}.
inline std::vector<TwistLetter> standard_twists(std::size_t genus)
{
  std::vector<TwistLetter> out;
  for (char curve : {'a', 'b', 'c'})
    for (std::size_t i = 1; i <= genus; ++i)
      if (curve != 'c' || i < genus)
        out.push_back({curve, i, false});
  return out;
}

/// Images of the 2g generators under the twist substitution. A tuple f is
/// sent to f composed with the substitution.
///   a_i:  b_i -> b_i a_i
///   b_i:  a_i -> a_i b_i^-1
///   c_i:  with w = a_i a_{i+1}, every slot x of pairs i, i+1 goes to
///         w^-1 x' w where a_i' = a_i, b_i' = a_{i+1} a_i b_i,
///         a_{i+1}' = a_{i+1}, b_{i+1}' = a_i a_{i+1} b_{i+1}
/// Each fixes the relator word exactly.
inline std::vector<Word> twist_images(const TwistLetter& l, std::size_t genus)
{
  check_letter(l, genus);
  std::vector<Word> img(2 * genus);
  for (std::size_t j = 0; j < img.size(); ++j)
    img[j] = {static_cast<int>(j + 1)};
  const int a = static_cast<int>(2 * l.index - 1), b = a + 1;
  switch (l.curve) {
  case 'a':
    img[b - 1] = l.inverse ? Word{b, -a} : Word{b, a};
    break;
  case 'b':
    img[a - 1] = l.inverse ? Word{a, b} : Word{a, -b};
    break;
  default: {
    const int a2 = a + 2, b2 = a + 3;
    if (!l.inverse) {
      img[a - 1] = {-a2, -a, a, a, a2};
      img[b - 1] = {-a2, -a, a2, a, b, a, a2};
      img[a2 - 1] = {-a2, -a, a2, a, a2};
      img[b2 - 1] = {b2, a, a2};
    } else {
      // w = A A' in the new entries; a_i = w A w^-1, a_{i+1} = w A' w^-1,
      // b_i = (a_{i+1} a_i)^-1 w B w^-1, b_{i+1} = B' w^-1
      img[a - 1] = {a, a2, a, -a2, -a};
      img[b - 1] = {a, a2, -a, -a2, b, -a2, -a};
      img[a2 - 1] = {a, a2, a2, -a2, -a};
      img[b2 - 1] = {b2, -a2, -a};
    }
    for (auto& w : img)
      w = reduce_word(w);
  }
  }
  return img;
}

namespace detail {

inline Elem eval_word(const FiniteGroup& g, const Word& w, std::span<const Elem> t)
{
  Elem r = FiniteGroup::identity();
  for (int l : w) {
    Elem x = t[static_cast<std::size_t>(std::abs(l) - 1)];
    r = g.mul(r, l > 0 ? x : g.inv(x));
  }
  return r;
}

inline Word substitute(const Word& w, const std::vector<Word>& img)
{
  Word out;
  for (int l : w) {
    const auto& x = img[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l > 0)
      out.insert(out.end(), x.begin(), x.end());
    else {
      auto inv = inverse_word(x);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce_word(out);
}

} // namespace detail

/// Applies a twist word to surface tuples, letters left to right.
class TwistAction {
public:
  TwistAction(const FiniteGroup& g, std::size_t genus) : g_(g), genus_(genus)
  {
    if (genus == 0)
      throw input_error("twist action: genus must be at least 1");
  }

  std::size_t genus() const { return genus_; }

  void apply(const TwistLetter& l, std::vector<Elem>& t) const
  {
    if (t.size() != 2 * genus_)
      throw input_error("twist action: tuple has " + std::to_string(t.size()) + " entries, expected " +
                        std::to_string(2 * genus_));
    const auto& img = images(l);
    scratch_.resize(t.size());
    for (std::size_t j = 0; j < t.size(); ++j)
      scratch_[j] = detail::eval_word(g_, img[j], t);
    t.swap(scratch_);
  }

  void apply(const std::vector<TwistLetter>& w, std::vector<Elem>& t) const
  {
    for (const auto& l : w)
      apply(l, t);
  }

  const std::vector<Word>& images(const TwistLetter& l) const
  {
    auto key = to_string(l);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, twist_images(l, genus_)).first;
    return it->second;
  }

private:
  const FiniteGroup& g_;
  std::size_t genus_;
  mutable std::map<std::string, std::vector<Word>> cache_;
  mutable std::vector<Elem> scratch_;
};

inline SurfaceTuple mcg_apply(const FiniteGroup& g, const std::vector<TwistLetter>& w, SurfaceTuple f)
{
  if (f.elems.size() != 2 * f.genus)
    throw input_error("mcg_apply: tuple length does not match its genus");
  if (surface_relation(g, f.elems) != FiniteGroup::identity())
    throw input_error("mcg_apply: tuple violates the surface relation");
  for (const auto& l : w)
    check_letter(l, f.genus);
  TwistAction(g, f.genus).apply(w, f.elems);
  return f;
}

/// Action on H_1(S_g) in the basis a_1, b_1, ..., a_g, b_g; column j holds
/// the image of generator j under the composed substitution.
inline std::vector<std::vector<BigInt>> h1_matrix(const std::vector<TwistLetter>& w, std::size_t genus)
{
  const auto n = 2 * genus;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  for (const auto& l : w) {
    auto img = twist_images(l, genus);
    std::vector<std::vector<BigInt>> s(n, std::vector<BigInt>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
      for (int x : img[j])
        s[static_cast<std::size_t>(std::abs(x) - 1)][j] += x > 0 ? 1 : -1;
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j)
            next[i][j] += m[i][k] * s[k][j];
    m = std::move(next);
  }
  return m;
}

/// The word acts as the identity on H_1.
inline bool is_torelli(const std::vector<TwistLetter>& w, std::size_t genus)
{
  auto m = h1_matrix(w, genus);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0))
        return false;
  return true;
}

/// Gluing file:
///   genus 2
///   word a1 b2' c1
/// A missing or bare `word` line is the identity gluing.
struct HeegaardGluing {
  std::size_t genus = 1;
  std::vector<TwistLetter> word;
};

inline HeegaardGluing parse_gluing(const std::string& text, const std::string& origin = "gluing")
{
  std::optional<std::size_t> genus;
  std::optional<std::string> word;
  for (const auto& line : io::content_lines(text)) {
    auto words = io::split_words(line);
    if (words[0] == "genus" && words.size() == 2 && !genus)
      genus = io::parse_uint(words[1], origin + ": genus");
    else if (words[0] == "word" && !word)
      word = line.substr(line.find("word") + 4);
    else
      throw input_error(origin + ": line '" + line + "' is not recognized");
  }
  if (!genus || *genus == 0)
    throw input_error(origin + ": needs 'genus g' with g >= 1");
  return {*genus, parse_twist_word(word.value_or(""), *genus, origin)};
}

inline HeegaardGluing load_gluing(const std::filesystem::path& path)
{
  return parse_gluing(io::read_file(path), path.string());
}

inline std::string format_gluing(const HeegaardGluing& h)
{
  return "genus " + std::to_string(h.genus) + "\nword " + format_twist_word(h.word) + "\n";
}

/// pi_1 of the glued manifold on generators x_i = b_i: the initial
/// handlebody kills every a_i, the final one every image of a_i under the
/// inverse gluing word.
inline Presentation heegaard_presentation(const HeegaardGluing& h, std::size_t max_word_length = 1'000'000)
{
  const auto n = 2 * h.genus;
  std::vector<Word> images(n);
  for (std::size_t j = 0; j < n; ++j)
    images[j] = {static_cast<int>(j + 1)};
  auto inv = inverse_twist_word(h.word);
  // The tuple action of l_1 ... l_m is f o s_1 o ... o s_m, so the
  // generator images are built from the last letter outward.
  for (auto it = inv.rbegin(); it != inv.rend(); ++it) {
    auto s = twist_images(*it, h.genus);
    for (auto& w : images) {
      w = detail::substitute(w, s);
      if (w.size() > max_word_length)
        throw bound_exceeded("heegaard_presentation: relator longer than " + std::to_string(max_word_length));
    }
  }
  Presentation p;
  p.generators = h.genus;
  for (std::size_t i = 0; i < h.genus; ++i) {
    Word r;
    for (int l : images[2 * i])
      if (std::abs(l) % 2 == 0)
        r.push_back(l > 0 ? l / 2 : -(-l / 2));
    p.relators.push_back(reduce_word(r, true));
  }
  return p;
}

/// #H(M, G) for the glued manifold M: tuples with f(a_i) = 1 whose image
/// under the inverse gluing word also kills every a_i. Surjectivity is
/// read off the b entries and #Q is confirmed by canonical orbit members.
inline HomCount heegaard_count(const HeegaardGluing& h, const FiniteGroup& g,
                               std::uint64_t max_enumeration = WorkBounds{}.max_enumeration,
                               std::size_t aut_bound = WorkBounds{}.max_group_order)
{
  for (const auto& l : h.word)
    check_letter(l, h.genus);
  auto work = ipow(BigInt(g.order()), h.genus);
  if (work > max_enumeration)
    throw bound_exceeded("heegaard_count: |G|^g = " + to_string(work) + " exceeds max-enumeration " +
                         std::to_string(max_enumeration));
  auto auts = automorphisms(g, aut_bound);
  TwistAction act(g, h.genus);
  auto inv = inverse_twist_word(h.word);
  HomCount out;
  out.automorphisms = auts.size();
  std::uint64_t homs = 0, surj = 0, canonical = 0;
  std::vector<Elem> b(h.genus, 0), t, moved(h.genus);
  for (;;) {
    t.assign(2 * h.genus, FiniteGroup::identity());
    for (std::size_t i = 0; i < h.genus; ++i)
      t[2 * i + 1] = b[i];
    act.apply(inv, t);
    bool ok = true;
    for (std::size_t i = 0; i < h.genus && ok; ++i)
      ok = t[2 * i] == FiniteGroup::identity();
    if (ok) {
      ++homs;
      if (generates(g, b)) {
        ++surj;
        bool least = true;
        for (const auto& phi : auts) {
          for (std::size_t i = 0; i < h.genus; ++i)
            moved[i] = phi[b[i]];
          if (moved < b) {
            least = false;
            break;
          }
        }
        canonical += least;
      }
    }
    std::size_t i = h.genus;
    while (i > 0 && ++b[i - 1] == g.order())
      b[--i] = 0;
    if (i == 0)
      break;
  }
  out.homs = homs;
  out.surjections = surj;
  out.canonical_surjections = canonical;
  if (out.surjections % out.automorphisms != 0)
    throw verification_error("heegaard_count: surjections not divisible by |Aut(G)|");
  out.quotients = out.surjections / out.automorphisms;
  if (out.quotients != out.canonical_surjections)
    throw verification_error("heegaard_count: quotient count differs from canonical orbit representatives");
  return out;
}

struct OrbitRow {
  std::size_t size = 0;
  std::size_t seeds = 0;
  std::optional<Elem> schur; // unset when no extension is given or classes mix
  bool schur_mixed = false;
  std::string surjective; // all, none or mixed
  bool aut_closed = false;
};

struct OrbitReport {
  std::size_t genus = 0;
  std::size_t seeds = 0;
  std::vector<OrbitRow> orbits;
  bool transitive = false; // all seeds in one orbit
  bool schur_separated = true; // no orbit mixes Schur classes
};

/// Breadth-first orbits of the seed tuples under the given twists (orbits
/// of a finite set under bijections, so inverses are not needed).
inline OrbitReport orbit_report(const std::vector<std::vector<Elem>>& seeds, const std::vector<TwistLetter>& gens,
                                std::size_t genus, const FiniteGroup& g, const SchurInvariant* schur = nullptr,
                                std::uint64_t max_points = WorkBounds{}.max_orbit_points,
                                std::size_t aut_bound = WorkBounds{}.max_group_order)
{
  if (ipow(BigInt(g.order()), 2 * genus) >= BigInt(1) << 63)
    throw bound_exceeded("orbit_report: |G|^(2g) does not fit a 64-bit key");
  for (const auto& l : gens)
    check_letter(l, genus);
  auto key = [&](const std::vector<Elem>& t) {
    std::uint64_t k = 0;
    for (auto x : t)
      k = k * g.order() + x;
    return k;
  };
  auto unkey = [&](std::uint64_t k) {
    std::vector<Elem> t(2 * genus);
    for (std::size_t i = t.size(); i-- > 0;) {
      t[i] = static_cast<Elem>(k % g.order());
      k /= g.order();
    }
    return t;
  };
  for (const auto& s : seeds)
    if (s.size() != 2 * genus || surface_relation(g, s) != FiniteGroup::identity())
      throw input_error("orbit_report: seed is not a genus-" + std::to_string(genus) + " surface tuple");
  auto auts = automorphisms(g, aut_bound);
  TwistAction act(g, genus);
  std::unordered_map<std::uint64_t, std::size_t> orbit_of;
  OrbitReport rep;
  rep.genus = genus;
  rep.seeds = seeds.size();
  std::vector<std::uint64_t> members, frontier;
  for (const auto& s : seeds) {
    auto k0 = key(s);
    if (auto it = orbit_of.find(k0); it != orbit_of.end()) {
      ++rep.orbits[it->second].seeds;
      continue;
    }
    const auto id = rep.orbits.size();
    orbit_of.emplace(k0, id);
    members.assign(1, k0);
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (const auto& l : gens) {
        auto t = unkey(members[head]);
        act.apply(l, t);
        auto k = key(t);
        if (orbit_of.emplace(k, id).second) {
          members.push_back(k);
          if (orbit_of.size() > max_points)
            throw bound_exceeded("orbit_report: more than " + std::to_string(max_points) + " tuples visited");
        }
      }
    }
    OrbitRow row;
    row.size = members.size();
    row.seeds = 1;
    bool any_surj = false, any_not = false, closed = true;
    std::optional<Elem> first_schur;
    std::vector<Elem> moved(2 * genus);
    for (auto k : members) {
      auto t = unkey(k);
      (generates(g, t) ? any_surj : any_not) = true;
      if (schur) {
        auto s = (*schur)(t);
        if (!first_schur)
          first_schur = s;
        else if (*first_schur != s)
          row.schur_mixed = true;
      }
      for (std::size_t a = 1; a < auts.size() && closed; ++a) {
        for (std::size_t i = 0; i < t.size(); ++i)
          moved[i] = auts[a][t[i]];
        auto it = orbit_of.find(key(moved));
        closed = it != orbit_of.end() && it->second == id;
      }
    }
    if (!row.schur_mixed)
      row.schur = first_schur;
    rep.schur_separated = rep.schur_separated && !row.schur_mixed;
    row.surjective = any_surj && any_not ? "mixed" : any_surj ? "all" : "none";
    row.aut_closed = closed;
    rep.orbits.push_back(row);
  }
  rep.transitive = rep.orbits.size() == 1;
  return rep;
}

} // namespace homcount
