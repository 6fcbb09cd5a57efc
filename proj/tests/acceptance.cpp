// Acceptance run: one PASS/FAIL line per criterion, each under its time
// limit. Expected values come from the small oracles below, not from the
// library routines under test.

#include "test_support.hpp"

#include <homcount/cocycle_dp.hpp>
#include <homcount/mobius.hpp>
#include <homcount/pipeline.hpp>
#include <homcount/rubik.hpp>
#include <homcount/surfaces.hpp>
#include <homcount/triangulations.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace homcount;
using namespace homcount::testing;
namespace tri = homcount::triangulations;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why)
  {
    if (ok)
      detail = why;
    ok = false;
  }
};

std::shared_ptr<const FiniteGroup> shared(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// ---- oracles ----

std::uint64_t commuting_pairs(const FiniteGroup& g)
{
  std::uint64_t total = 0;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      total += g.mul(a, b) == g.mul(b, a);
  return total;
}

// Size of the subgroup generated by all commutators, by closure.
std::size_t derived_order(const FiniteGroup& g)
{
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{FiniteGroup::identity()}, gens;
  in[0] = 1;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      Elem x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  return members.size();
}

std::uint64_t truth_table_count(const BooleanCircuit& c)
{
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.inputs()); ++x) {
    std::vector<int> v;
    for (std::size_t i = 0; i < c.inputs(); ++i)
      v.push_back(static_cast<int>((x >> i) & 1u));
    for (const auto& g : c.gates()) {
      int a = v[g.in[0]], b = g.in.size() > 1 ? v[g.in[1]] : 0;
      switch (g.op) {
      case BoolOp::and_: v.push_back(a & b); break;
      case BoolOp::or_: v.push_back(a | b); break;
      case BoolOp::not_: v.push_back(1 - a); break;
      case BoolOp::copy: v.push_back(a); break;
      }
    }
    count += static_cast<std::uint64_t>(v[c.output()]);
  }
  return count;
}

BigInt factorial(std::size_t n)
{
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

SimplexOrdering random_sweep(const SimplicialComplex& x, std::mt19937_64& rng)
{
  std::vector<std::uint32_t> key(x.vertex_count());
  std::iota(key.begin(), key.end(), 0u);
  std::shuffle(key.begin(), key.end(), rng);
  return tri::sweep_ordering(x, key);
}

// ---- criteria ----

void criterion1(Outcome& out)
{
  std::vector<std::pair<std::string, SimplicialComplex>> cases{{"disk", tri::disk()},
                                                                {"sphere", tri::sphere()},
                                                                {"rp2", tri::projective_plane()},
                                                                {"torus", tri::torus7()},
                                                                {"genus2", tri::genus2()}};
  std::mt19937_64 rng(101);
  for (int i = 0; i < 16; ++i)
    cases.emplace_back("random" + std::to_string(i), tri::random_2complex(rng, 40));
  std::vector<FiniteGroup> groups{cyclic(2), cyclic(3), symmetric3(), alternating4()};
  for (const auto& [name, x] : cases) {
    auto p = presentation_from_complex(x).presentation;
    for (const auto& g : groups) {
      auto brute = count_homs(p, g);
      for (const auto& ord : {greedy_ordering(x), random_sweep(x, rng)}) {
        auto dp = dp_count_homs(x, ord, g).homs;
        if (dp != brute)
          out.fail(name + " into " + g.name() + ": dp " + to_string(dp) + ", brute force " + to_string(brute));
      }
    }
  }
  out.detail = out.ok ? std::to_string(cases.size()) + " complexes x 4 groups x 2 orderings" : out.detail;
}

void criterion2(Outcome& out)
{
  auto x = tri::torus7();
  auto p = presentation_from_complex(x).presentation;
  auto pres = load_presentation(data_dir() / "torus.pres");
  std::ostringstream msg;
  for (const auto& g : {symmetric3(), alternating5()}) {
    BigInt expected = commuting_pairs(g);
    BigInt dp = dp_count_homs(x, greedy_ordering(x), g).homs;
    BigInt brute = count_homs(pres, g), brute_cx = count_homs(p, g);
    if (dp != expected || brute != expected || brute_cx != expected)
      out.fail(g.name() + ": oracle " + to_string(expected) + ", dp " + to_string(dp) + ", brute force " +
               to_string(brute) + "/" + to_string(brute_cx));
    msg << g.name() << "=" << expected << ' ';
  }
  if (out.ok)
    out.detail = msg.str() + "(oracle: sum of centralizer orders)";
}

void criterion3(Outcome& out)
{
  auto p = load_presentation(data_dir() / "poincare.pres");
  auto g = alternating5();
  // oracle: direct search over pairs for s^3 = t^5 = (st)^2
  std::uint64_t homs = 0, onto = 0;
  for (Elem s = 0; s < g.order(); ++s)
    for (Elem t = 0; t < g.order(); ++t) {
      Elem s3 = g.mul(g.mul(s, s), s), t5 = g.pow(t, 5), st = g.mul(s, t);
      if (s3 == t5 && s3 == g.mul(st, st)) {
        ++homs;
        onto += generates(g, std::vector<Elem>{s, t});
      }
    }
  auto c = count_all(p, g);
  auto table = quotient_counts_via_inversion(g, [&](const FiniteGroup& j) { return count_homs(p, j); });
  if (c.homs != homs || c.surjections != onto)
    out.fail("count_all gives " + to_string(c.homs) + "/" + to_string(c.surjections) + ", oracle " +
             std::to_string(homs) + "/" + std::to_string(onto));
  if (c.homs != 121 || c.surjections != 120 || c.quotients != 1)
    out.fail("expected 121 homs, 120 surjections, 1 quotient");
  if (!table.consistent || table.rows.back().quotients != 1 || table.rows.front().quotients != 1)
    out.fail("lattice inversion inconsistent");
  for (std::size_t i = 1; i + 1 < table.rows.size(); ++i)
    if (table.rows[i].quotients != 0)
      out.fail("proper subgroup of order " + std::to_string(table.rows[i].subgroup.order()) + " has a quotient");
  BigInt identity_sum = c.surjections * 1 + 1;
  if (identity_sum != c.homs)
    out.fail("121 != 120 * 1 + 1");
  if (out.ok)
    out.detail = "homs=121 surjections=120 Q(A5)=1, " + std::to_string(table.rows.size() - 2) +
                 " proper nontrivial subgroups with Q=0";
}

// Every circuit with n inputs and `gates` gates, AND/OR operands unordered,
// output on the last wire; circuits equal after permuting inputs are kept once.
void enumerate_family(std::size_t n, std::size_t gates, const std::function<void(const BooleanCircuit&)>& visit)
{
  struct G {
    BoolOp op;
    std::uint32_t a, b;
  };
  std::vector<G> cur;
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto key = [&](const std::vector<std::uint32_t>& q) {
    std::vector<std::uint32_t> k;
    for (const auto& g : cur) {
      auto m = [&](std::uint32_t w) { return w < n ? q[w] : w; };
      bool binary = g.op == BoolOp::and_ || g.op == BoolOp::or_;
      std::uint32_t a = m(g.a), b = binary ? m(g.b) : 0;
      if (binary && a > b)
        std::swap(a, b);
      k.insert(k.end(), {static_cast<std::uint32_t>(g.op), a, b});
    }
    return k;
  };
  std::function<void()> rec = [&]() {
    if (cur.size() == gates) {
      auto mine = key(perms[0]);
      for (std::size_t i = 1; i < perms.size(); ++i)
        if (key(perms[i]) < mine)
          return;
      BooleanCircuit c(n);
      for (const auto& g : cur) {
        if (g.op == BoolOp::and_ || g.op == BoolOp::or_)
          c.add(g.op, {g.a, g.b});
        else
          c.add(g.op, {g.a});
      }
      c.set_output(static_cast<std::uint32_t>(c.wire_count() - 1));
      visit(c);
      return;
    }
    auto w = static_cast<std::uint32_t>(n + cur.size());
    for (BoolOp op : {BoolOp::and_, BoolOp::or_})
      for (std::uint32_t a = 0; a < w; ++a)
        for (std::uint32_t b = a; b < w; ++b) {
          cur.push_back({op, a, b});
          rec();
          cur.pop_back();
        }
    for (BoolOp op : {BoolOp::not_, BoolOp::copy})
      for (std::uint32_t a = 0; a < w; ++a) {
        cur.push_back({op, a, 0});
        rec();
        cur.pop_back();
      }
  };
  rec();
}

void criterion4(Outcome& out)
{
  std::uint64_t circuits = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t gates = 0; gates <= 4; ++gates)
      enumerate_family(n, gates, [&](const BooleanCircuit& c) {
        ++circuits;
        auto rep = verify_parsimony(c);
        BigInt truth = truth_table_count(c);
        if (!rep.ok || rep.stages.front().count != truth) {
          std::string why = "circuit\n" + format_boolean(c) + "stage counts:";
          for (const auto& s : rep.stages)
            why += " " + s.stage + "=" + to_string(s.count);
          out.fail(why + " truth table " + to_string(truth));
        }
      });
  if (circuits != 333107)
    out.fail("family has " + std::to_string(circuits) + " circuits, expected 333107");
  if (out.ok)
    out.detail = std::to_string(circuits) + " circuits, stages CSAT RSAT1 RSAT2 RSAT3 RSAT4";
}

ReversibleCircuit random_planar(std::size_t q, std::size_t width, std::size_t gates, std::mt19937_64& rng)
{
  ReversibleCircuit c(q, width);
  auto perm = [&](std::size_t size) {
    std::vector<std::uint32_t> t(size);
    std::iota(t.begin(), t.end(), 0u);
    std::shuffle(t.begin(), t.end(), rng);
    return t;
  };
  for (std::size_t i = 0; i < gates; ++i) {
    if (rng() % 3 != 0) {
      auto w = static_cast<std::uint32_t>(rng() % (width - 1));
      c.add_gate({w, w + 1}, perm(q * q));
    } else
      c.add_gate({static_cast<std::uint32_t>(rng() % width)}, perm(q));
  }
  return c;
}

// Brute-force #RSAT over B = {0,1,2,3}, I = {0,1}, F = {2,3}, by direct
// gate application on every input word.
std::uint64_t rsat_oracle(const ReversibleCircuit& c)
{
  const auto w = c.width();
  std::uint64_t count = 0;
  std::vector<std::uint32_t> s(w);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << w); ++x) {
    for (std::size_t i = 0; i < w; ++i)
      s[i] = (x >> i) & 1u;
    for (const auto& g : c.gates()) {
      std::uint32_t idx = 0;
      for (auto wire : g.wires)
        idx = idx * 4 + s[wire];
      auto img = g.table[idx];
      for (std::size_t k = g.wires.size(); k-- > 0;) {
        s[g.wires[k]] = img % 4;
        img /= 4;
      }
    }
    count += std::all_of(s.begin(), s.end(), [](std::uint32_t v) { return v == 2 || v == 3; });
  }
  return count;
}

void criterion5(Outcome& out)
{
  std::mt19937_64 rng(505);
  std::size_t instances = 0;
  for (auto g : {cyclic(2), cyclic(3)}) {
    auto gamma = shared(g);
    auto z = ZAlphabet::minimal(gamma);
    for (std::size_t width : {2u, 3u})
      for (int trial = 0; trial < 7; ++trial) {
        auto c = random_planar(4, width, 2 + rng() % 5, rng);
        BigInt rsat = rsat_oracle(c);
        BigInt zsat = count_zsat(compile_zsat(c, z));
        ++instances;
        if (zsat != BigInt(g.order()) * rsat + 1)
          out.fail(g.name() + " width " + std::to_string(width) + ": #ZSAT " + to_string(zsat) + ", #RSAT " +
                   to_string(rsat));
      }
  }
  if (out.ok)
    out.detail = std::to_string(instances) + " instances, #ZSAT = |G| #RSAT + 1";
}

void criterion6(Outcome& out)
{
  std::vector<FiniteGroup> gammas{cyclic(2), cyclic(3), cyclic(4), klein4(), cyclic(5), cyclic(6), symmetric3()};
  {
    auto act = GSetAction::free_orbits(shared(cyclic(2)), 0, 7);
    auto order = PermutationGroup(act.points(), standard_rubik_generators(act)).order();
    if (order != 161280)
      out.fail("Rub(7, Z/2) generated order " + to_string(order));
  }
  std::mt19937_64 rng(606);
  std::size_t instances = 0, premises = 0;
  for (const auto& g : gammas) {
    auto act = GSetAction::free_orbits(shared(g), 0, 7);
    auto standard = standard_rubik_generators(act);
    // |Rub(n, G)| = |G|^n / |G_ab| * n!/2
    BigInt rub = ipow(BigInt(g.order()), 7) / (g.order() / derived_order(g)) * factorial(7) / 2;
    std::vector<std::vector<Permutation>> sets{standard};
    for (int k = 0; k < 3; ++k) {
      std::vector<Permutation> gens;
      for (std::size_t i = 0; i < 2 + rng() % 2; ++i) {
        Permutation p(act.points());
        for (int j = 0; j < 25; ++j)
          p = p * standard[rng() % standard.size()];
        gens.push_back(p);
      }
      sets.push_back(gens);
    }
    for (const auto& gens : sets) {
      auto rep = rubik_surjectivity_check(gens, act);
      ++instances;
      bool i = rep.orbit_action_contains_alt, ii = rep.alt_quotient_excluded;
      premises += i && ii;
      if (rep.rubik_order != rub)
        out.fail(g.name() + ": Rubik order " + to_string(rep.rubik_order) + ", formula " + to_string(rub));
      if (rep.generates_rubik != (rep.generated_order == rub))
        out.fail(g.name() + ": generates_rubik flag disagrees with the generated order");
      if (i && ii && rep.generated_order != rub)
        out.fail(g.name() + ": (i) and (ii) hold but the generated order is " + to_string(rep.generated_order));
    }
  }
  if (premises < 10)
    out.fail("only " + std::to_string(premises) + " instances satisfy (i) and (ii)");
  if (out.ok)
    out.detail = "|Rub(7,Z/2)|=161280, " + std::to_string(instances) + " instances, " + std::to_string(premises) +
                 " with (i) and (ii), all generate Rub";
}

void criterion7(Outcome& out, std::string& note)
{
  auto g = load_group(data_dir() / "a5.grp");
  auto ext = load_extension(data_dir() / "sl25-ext.ext");
  SchurInvariant sch(g, ext);
  const auto& cover = *ext.cover;
  CommutatorSolutions sols(g);
  std::mt19937_64 rng(707);
  std::vector<std::vector<Elem>> preimages(g.order());
  for (Elem x = 0; x < cover.order(); ++x)
    preimages[ext.projection[x]].push_back(x);
  // oracle: product of commutators of freshly drawn lifts in the cover
  auto lifted = [&](const std::vector<Elem>& t) {
    Elem r = FiniteGroup::identity();
    std::vector<Elem> l;
    for (auto x : t)
      l.push_back(preimages[x][rng() % preimages[x].size()]);
    for (std::size_t i = 0; i < l.size(); i += 2)
      r = cover.mul(r, cover.commutator(l[i], l[i + 1]));
    return r;
  };
  std::size_t violations = 0;
  for (int i = 0; i < 100; ++i) {
    auto t = random_rep(2, g, sols, rng);
    auto s = sch(t);
    if (std::find(ext.center_ids.begin(), ext.center_ids.end(), s) == ext.center_ids.end())
      ++violations;
    for (int j = 0; j < 100; ++j)
      violations += lifted(t) != s || sch.with_lifts(t, sch.random_lifts(t, rng)) != s;
  }
  for (int i = 0; i < 100; ++i) {
    auto f1 = random_rep(1 + rng() % 2, g, sols, rng), f2 = random_rep(1 + rng() % 2, g, sols, rng);
    auto both = f1;
    both.insert(both.end(), f2.begin(), f2.end());
    violations += sch(both) != cover.mul(sch(f1), sch(f2));
  }
  TwistAction act(g, 2);
  auto gens = standard_twists(2);
  auto all = gens;
  for (const auto& l : gens)
    all.push_back(inverse_twist_word({l}).front());
  for (int i = 0; i < 10000; ++i) {
    auto t = random_rep(2, g, sols, rng);
    auto s = sch(t);
    for (const auto& l : all) {
      auto u = t;
      act.apply(l, u);
      violations += surface_relation(g, u) != FiniteGroup::identity() || sch(u) != s;
    }
  }
  if (violations)
    out.fail(std::to_string(violations) + " violations");
  else
    out.detail = "10000 re-lifts, 100 concatenations, 10000 tuples x " + std::to_string(all.size()) + " twists";

  // recorded only: orbit structure of the standard twists on R_2(A5) and R0_2(A5)
  std::vector<std::vector<Elem>> seeds;
  enumerate_reps(2, g, RepFilter::surjective, [&](const std::vector<Elem>& t) { seeds.push_back(t); }, &sch);
  auto rep = orbit_report(seeds, gens, 2, g, &sch);
  std::size_t zero_orbits = 0;
  for (const auto& o : rep.orbits)
    zero_orbits += !o.schur_mixed && o.schur == FiniteGroup::identity();
  note = "g=2 A5: |R_2|=" + std::to_string(rep.seeds) + " in " + std::to_string(rep.orbits.size()) +
         " orbits, R0_2 in " + std::to_string(zero_orbits) + " orbit(s), Schur separates orbits: " +
         (rep.schur_separated ? "yes" : "no");
}

void criterion8(Outcome& out)
{
  std::ostringstream msg;
  for (const auto& g : {symmetric3(), alternating5()})
    for (std::size_t genus = 1; genus <= 3; ++genus) {
      HeegaardGluing h{genus, {}};
      auto c = heegaard_count(h, g);
      BigInt expected = ipow(BigInt(g.order()), genus);
      if (c.homs != expected)
        out.fail(g.name() + " genus " + std::to_string(genus) + ": " + to_string(c.homs) + ", expected " +
                 to_string(expected));
    }
  auto a5 = alternating5();
  std::uint64_t fifth_roots = 0; // oracle: x^5 = 1 in A5
  for (Elem x = 0; x < a5.order(); ++x)
    fifth_roots += a5.pow(x, 5) == FiniteGroup::identity();
  auto lens = heegaard_count(load_gluing(data_dir() / "lens5.glu"), a5);
  auto by_presentation = count_homs(heegaard_presentation(load_gluing(data_dir() / "lens5.glu")), a5);
  if (lens.homs != fifth_roots || by_presentation != fifth_roots || fifth_roots != 25)
    out.fail("lens: " + to_string(lens.homs) + " and " + to_string(by_presentation) + ", oracle " +
             std::to_string(fifth_roots));
  if (out.ok)
    out.detail = "|G|^g for g<=3 (S3, A5), lens b1^5 gives 25";
}

IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng)
{
  IntegerMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    u(i, i) = 1;
  for (int step = 0; step < 12 && n > 1; ++step) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b)
      continue;
    long c = static_cast<long>(rng() % 5) - 2;
    for (std::size_t j = 0; j < n; ++j)
      u(a, j) += c * u(b, j);
  }
  return u;
}

// gcd of the 1x1 minors, for the first invariant factor
BigInt entry_gcd(const IntegerMatrix& m)
{
  BigInt g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      g = boost::multiprecision::gcd(g, BigInt(abs(m(i, j))));
  return g;
}

void criterion9(Outcome& out)
{
  auto fmt = [](const SimplicialComplex& x) {
    auto h = homology(x);
    std::string s;
    for (std::size_t k = 0; k <= 2 && k < h.size(); ++k)
      s += (k ? "," : "") + format_homology_group(h[k]);
    return s;
  };
  if (auto s = fmt(tri::sphere()); s != "Z,0,Z")
    out.fail("S2: " + s);
  if (auto s = format_homology_group(homology(tri::projective_plane())[1]); s != "Z/2")
    out.fail("RP2 H1: " + s);
  if (auto s = format_homology_group(homology(tri::torus7())[1]); s != "Z^2")
    out.fail("torus H1: " + s);
  std::mt19937_64 rng(909);
  int trials = 0;
  for (; trials < 200; ++trials) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = static_cast<long>(rng() % 11) - 5;
    auto d = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if ((d[i] == 0 && d[i + 1] != 0) || (d[i] != 0 && d[i + 1] % d[i] != 0))
        out.fail("divisibility chain broken");
    if (!d.empty() && d[0] != entry_gcd(m))
      out.fail("first invariant factor is not the gcd of the entries");
    if (smith_normal_form(random_unimodular(rows, rng) * m * random_unimodular(cols, rng)) != d)
      out.fail("invariant factors change under unimodular multiplication");
  }
  if (out.ok)
    out.detail = "S2=(Z,0,Z) H1(RP2)=Z/2 H1(T2)=Z^2, " + std::to_string(trials) + " SNF trials";
}

} // namespace

int main()
{
  using clock = std::chrono::steady_clock;
  std::string orbit_note;
  struct Criterion {
    int id;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
    {1, 300, criterion1}, {2, 60, criterion2},  {3, 120, criterion3},
    {4, 300, criterion4}, {5, 600, criterion5}, {6, 300, criterion6},
    {7, 600, [&](Outcome& o) { criterion7(o, orbit_note); }},
    {8, 60, criterion8},  {9, 60, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (secs > c.limit_s)
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << o.detail << " ("
              << static_cast<long>(secs * 1000) << " ms, limit " << c.limit_s << " s)" << std::endl;
  }
  if (!orbit_note.empty())
    std::cout << "INFO " << orbit_note << std::endl;
  return failures == 0 ? 0 : 1;
}
