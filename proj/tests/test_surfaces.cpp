#include "test_support.hpp"

#include <homcount/surfaces.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace homcount;
using namespace homcount::testing;

namespace {

FiniteGroup a5() { return load_group(data_dir() / "a5.grp"); }
StemExtension sl25() { return load_extension(data_dir() / "sl25-ext.ext"); }

// #{(a, b) : [a, b] = c} for every c, straight from the multiplication table.
std::vector<std::uint64_t> commutator_fibres(const FiniteGroup& g)
{
  std::vector<std::uint64_t> n(g.order(), 0);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      ++n[g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))];
  return n;
}

std::uint64_t commuting_pairs(const FiniteGroup& g)
{
  std::uint64_t n = 0;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      n += g.mul(a, b) == g.mul(b, a);
  return n;
}

std::vector<std::vector<TwistLetter>> letters_and_inverses(std::size_t genus)
{
  std::vector<std::vector<TwistLetter>> out;
  for (auto l : standard_twists(genus)) {
    out.push_back({l});
    l.inverse = true;
    out.push_back({l});
  }
  return out;
}

} // namespace

TEST(SurfaceReps, GenusOneCountsCommutingPairs)
{
  for (auto g : {symmetric3(), a5(), cyclic(4)}) {
    EXPECT_EQ(count_reps(1, g, RepFilter::all), commuting_pairs(g)) << g.name();
    bool trivial = false;
    enumerate_reps(1, g, RepFilter::all, [&](const std::vector<Elem>& t) {
      trivial = trivial || (t[0] == 0 && t[1] == 0);
      EXPECT_EQ(surface_relation(g, t), FiniteGroup::identity());
    });
    EXPECT_TRUE(trivial);
  }
  EXPECT_EQ(count_reps(1, symmetric3(), RepFilter::all), 18);
  EXPECT_EQ(count_reps(1, symmetric3(), RepFilter::surjective), 0);
  EXPECT_EQ(count_reps(1, cyclic(4), RepFilter::surjective), 12);
}

TEST(SurfaceReps, GenusTwoMatchesCommutatorConvolution)
{
  for (auto g : {symmetric3(), load_group(data_dir() / "a4.grp"), a5()}) {
    auto n = commutator_fibres(g);
    std::uint64_t expected = 0;
    for (Elem c = 0; c < g.order(); ++c)
      expected += n[c] * n[g.inv(c)];
    EXPECT_EQ(count_reps(2, g, RepFilter::all), expected) << g.name();
  }
}

TEST(SurfaceReps, FiltersAndBounds)
{
  auto g = symmetric3();
  std::uint64_t surj = 0;
  enumerate_reps(2, g, RepFilter::all, [&](const std::vector<Elem>& t) { surj += generates(g, t); });
  EXPECT_EQ(count_reps(2, g, RepFilter::surjective), surj);
  EXPECT_THROW(count_reps(2, g, RepFilter::schur_zero), input_error);
  EXPECT_THROW(count_reps(3, a5(), RepFilter::all, nullptr, 1000), bound_exceeded);
  EXPECT_THROW(count_reps(0, g, RepFilter::all), input_error);
  EXPECT_EQ(parse_rep_filter("schur-zero"), RepFilter::schur_zero);
  EXPECT_THROW(parse_rep_filter("some"), input_error);

  auto a = a5();
  SchurInvariant sch(a, sl25());
  std::uint64_t zero = 0, other = 0;
  enumerate_reps(2, a, RepFilter::surjective,
                 [&](const std::vector<Elem>& t) { (sch(t) == FiniteGroup::identity() ? zero : other) += 1; });
  EXPECT_EQ(count_reps(2, a, RepFilter::schur_zero, &sch), zero);
  EXPECT_GT(zero, 0u);
  EXPECT_GT(other, 0u);
}

TEST(SchurInvariant, BasicValuesAndLiftIndependence)
{
  auto g = a5();
  SchurInvariant sch(g, sl25());
  EXPECT_EQ(sch(std::vector<Elem>(4, 0)), FiniteGroup::identity());
  CommutatorSolutions sols(g);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    auto t = random_rep(2, g, sols, rng);
    auto s = sch(t);
    for (int j = 0; j < 20; ++j)
      EXPECT_EQ(sch.with_lifts(t, sch.random_lifts(t, rng)), s);
    // all a_i trivial
    auto handle = t;
    handle[0] = handle[2] = 0;
    EXPECT_EQ(sch(handle), FiniteGroup::identity());
  }
  for (int i = 0; i < 30; ++i) {
    auto f1 = random_rep(1 + rng() % 2, g, sols, rng), f2 = random_rep(1 + rng() % 2, g, sols, rng);
    auto both = f1;
    both.insert(both.end(), f2.begin(), f2.end());
    EXPECT_EQ(sch(both), sl25().cover->mul(sch(f1), sch(f2)));
  }
}

TEST(SchurInvariant, Rejections)
{
  auto g = a5();
  EXPECT_THROW(SchurInvariant(symmetric3(), sl25()), input_error);
  auto broken = sl25();
  std::swap(broken.projection[1], broken.projection[2]);
  EXPECT_THROW(SchurInvariant(g, broken), input_error);
  auto wrong_center = sl25();
  wrong_center.center_ids = {0};
  EXPECT_THROW(SchurInvariant(g, wrong_center), input_error);
  SchurInvariant sch(g, sl25());
  CommutatorSolutions sols(g);
  std::mt19937_64 rng(22);
  std::vector<Elem> bad;
  do {
    bad = {static_cast<Elem>(rng() % 60), static_cast<Elem>(rng() % 60)};
  } while (surface_relation(g, bad) == FiniteGroup::identity());
  EXPECT_THROW(sch(bad), input_error);
  auto t = random_rep(1, g, sols, rng);
  auto lifts = sch.random_lifts(t, rng);
  lifts[0] = sl25().cover->mul(lifts[0], lifts[0] == 0 ? 1 : lifts[0]);
  if (sl25().projection[lifts[0]] != t[0])
    EXPECT_THROW(sch.with_lifts(t, lifts), input_error);
}

TEST(Twists, SubstitutionExamples)
{
  auto g = symmetric3();
  SurfaceTuple f{1, {1, g.mul(1, 1)}};
  ASSERT_EQ(surface_relation(g, f.elems), FiniteGroup::identity());
  EXPECT_EQ(mcg_apply(g, {}, f).elems, f.elems);
  auto twisted = mcg_apply(g, parse_twist_word("a1", 1), f);
  EXPECT_EQ(twisted.elems, (std::vector<Elem>{1, g.mul(g.mul(1, 1), 1)}));
  EXPECT_THROW(mcg_apply(g, parse_twist_word("a1", 1), SurfaceTuple{1, {1, 2}}), input_error);
  EXPECT_THROW(parse_twist_word("c1", 1), input_error);
  EXPECT_THROW(parse_twist_word("a3", 2), input_error);
  EXPECT_THROW(parse_twist_word("d1", 2), input_error);
  EXPECT_THROW(parse_twist_word("a", 2), input_error);
  auto w = parse_twist_word("a1 b2' c1", 2);
  EXPECT_EQ(format_twist_word(w), "a1 b2' c1");
  EXPECT_EQ(format_twist_word(inverse_twist_word(w)), "c1' b2 a1'");
  EXPECT_EQ(standard_twists(2).size(), 5u);
  EXPECT_EQ(standard_twists(3).size(), 8u);
}

TEST(Twists, PreserveTheRelationValueOnEveryTuple)
{
  auto g = symmetric3();
  TwistAction act(g, 2);
  std::vector<Elem> t(4), u;
  for (std::size_t code = 0; code < 6 * 6 * 6 * 6; ++code) {
    auto c = code;
    for (auto& x : t) {
      x = static_cast<Elem>(c % 6);
      c /= 6;
    }
    const auto r = surface_relation(g, t);
    for (const auto& w : letters_and_inverses(2)) {
      u = t;
      act.apply(w, u);
      EXPECT_EQ(surface_relation(g, u), r);
      act.apply(inverse_twist_word(w), u);
      EXPECT_EQ(u, t);
    }
  }
}

TEST(Twists, BijectiveOnRepresentationsAndPreserveClasses)
{
  auto g = a5();
  SchurInvariant sch(g, sl25());
  // Injective on R^_1(A5) and R^_2(S3), both finite, so bijective.
  for (const auto& [group, genus] : {std::pair{a5(), std::size_t{1}}, std::pair{symmetric3(), std::size_t{2}}}) {
    TwistAction act(group, genus);
    for (const auto& w : letters_and_inverses(genus)) {
      std::set<std::vector<Elem>> image;
      std::uint64_t count = 0;
      enumerate_reps(genus, group, RepFilter::all, [&](const std::vector<Elem>& t) {
        auto u = t;
        act.apply(w, u);
        EXPECT_EQ(surface_relation(group, u), FiniteGroup::identity());
        image.insert(u);
        ++count;
      });
      EXPECT_EQ(image.size(), count) << format_twist_word(w);
    }
  }
  CommutatorSolutions sols(g);
  std::mt19937_64 rng(23);
  TwistAction act(g, 2);
  auto auts = automorphisms(g);
  for (int i = 0; i < 300; ++i) {
    auto t = random_rep(2, g, sols, rng);
    for (const auto& w : letters_and_inverses(2)) {
      auto u = t;
      act.apply(w, u);
      EXPECT_EQ(sch(u), sch(t));
      EXPECT_EQ(generates(g, u), generates(g, t));
      const auto& phi = auts[rng() % auts.size()];
      std::vector<Elem> moved(t.size()), moved_u(t.size());
      for (std::size_t j = 0; j < t.size(); ++j)
        moved[j] = phi[t[j]];
      act.apply(w, moved);
      for (std::size_t j = 0; j < t.size(); ++j)
        moved_u[j] = phi[u[j]];
      EXPECT_EQ(moved, moved_u);
    }
  }
}

TEST(Twists, HomologyAction)
{
  EXPECT_TRUE(is_torelli({}, 2));
  EXPECT_FALSE(is_torelli(parse_twist_word("a1", 2), 2));
  EXPECT_TRUE(is_torelli(parse_twist_word("a1 c1 a1'", 2), 2) == is_torelli(parse_twist_word("c1", 2), 2));
  EXPECT_TRUE(is_torelli(parse_twist_word("b2 c1 c1' b2'", 2), 2));
  auto m = h1_matrix(parse_twist_word("c1", 2), 2);
  // b_1 and b_2 each pick up a_1 + a_2
  std::vector<std::vector<BigInt>> expected{{1, 1, 0, 1}, {0, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}};
  EXPECT_EQ(m, expected);
  // The twists about a_1 and b_1 satisfy the braid relation on homology,
  // so (a_1 b_1)^6 acts trivially.
  EXPECT_EQ(h1_matrix(parse_twist_word("a1 b1 a1", 1), 1), h1_matrix(parse_twist_word("b1 a1 b1", 1), 1));
  std::vector<TwistLetter> six;
  for (int i = 0; i < 6; ++i)
    for (auto l : parse_twist_word("a1 b1", 2))
      six.push_back(l);
  EXPECT_TRUE(is_torelli(six, 2));
}

TEST(Heegaard, IdentityGluingCountsFreeGroupHoms)
{
  for (auto g : {symmetric3(), a5()})
    for (std::size_t genus = 1; genus <= 3; ++genus) {
      BigInt expected = ipow(BigInt(g.order()), genus);
      EXPECT_EQ(heegaard_count({genus, {}}, g).homs, expected) << g.name() << " genus " << genus;
    }
}

TEST(Heegaard, LensSpaceFromFifthPowerTwist)
{
  auto g = a5();
  std::uint64_t fifth_roots = 0;
  for (Elem x = 0; x < g.order(); ++x)
    fifth_roots += g.pow(x, 5) == FiniteGroup::identity();
  auto h = parse_gluing("genus 1\nword b1 b1 b1 b1 b1\n");
  auto c = heegaard_count(h, g);
  EXPECT_EQ(c.homs, fifth_roots);
  EXPECT_EQ(c.homs, 25);
  EXPECT_EQ(c.surjections, 0);
  EXPECT_EQ(format_presentation(heegaard_presentation(h)), format_presentation(parse_presentation("gens 1\nx1 x1 x1 x1 x1\n")));
  // twisting about the meridian extends over the handlebody
  EXPECT_EQ(heegaard_count(parse_gluing("genus 1\nword a1 a1 a1 a1 a1\n"), g).homs, 60);
}

TEST(Heegaard, AgreesWithPresentationCounts)
{
  std::mt19937_64 rng(24);
  for (auto g : {symmetric3(), a5()})
    for (std::size_t genus : {1u, 2u})
      for (int trial = 0; trial < 8; ++trial) {
        auto gens = standard_twists(genus);
        HeegaardGluing h{genus, {}};
        for (int i = 0; i < 6; ++i) {
          auto l = gens[rng() % gens.size()];
          l.inverse = rng() % 2;
          h.word.push_back(l);
        }
        auto c = heegaard_count(h, g);
        auto p = heegaard_presentation(h);
        EXPECT_EQ(c.homs, count_homs(p, g)) << format_gluing(h);
        EXPECT_EQ(c.surjections, count_surjections(p, g)) << format_gluing(h);
        // meridian twists at either end do not change the manifold
        auto h2 = h;
        h2.word.insert(h2.word.begin(), TwistLetter{'a', 1, false});
        h2.word.push_back(TwistLetter{'a', genus, true});
        EXPECT_EQ(heegaard_count(h2, g).homs, c.homs) << format_gluing(h2);
      }
}

TEST(Heegaard, GluingFiles)
{
  auto h = parse_gluing("# lens\ngenus 2\nword a1 c1' b2\n");
  EXPECT_EQ(h.genus, 2u);
  EXPECT_EQ(parse_gluing(format_gluing(h)).word, h.word);
  EXPECT_TRUE(parse_gluing("genus 3\n").word.empty());
  EXPECT_TRUE(parse_gluing("genus 3\nword\n").word.empty());
  EXPECT_THROW(parse_gluing("word a1\n"), input_error);
  EXPECT_THROW(parse_gluing("genus 0\n"), input_error);
  EXPECT_THROW(parse_gluing("genus 1\nword c1\n"), input_error);
  EXPECT_THROW(parse_gluing("genus 1\ntwist a1\n"), input_error);
  EXPECT_THROW(heegaard_count({1, {}}, a5(), 10), bound_exceeded);
  EXPECT_EQ(heegaard_count(load_gluing(data_dir() / "lens5.glu"), a5()).homs, 25);
}

TEST(Orbits, TrivialSeedAndPartition)
{
  auto g = a5();
  auto rep = orbit_report({{0, 0, 0, 0}}, standard_twists(2), 2, g);
  ASSERT_EQ(rep.orbits.size(), 1u);
  EXPECT_EQ(rep.orbits[0].size, 1u);
  EXPECT_EQ(rep.orbits[0].surjective, "none");
  EXPECT_TRUE(rep.orbits[0].aut_closed);

  auto s3 = symmetric3();
  std::vector<std::vector<Elem>> all;
  enumerate_reps(1, s3, RepFilter::all, [&](const std::vector<Elem>& t) { all.push_back(t); });
  auto r1 = orbit_report(all, standard_twists(1), 1, s3);
  std::size_t total = 0, seeds = 0;
  for (const auto& o : r1.orbits) {
    total += o.size;
    seeds += o.seeds;
    EXPECT_NE(o.surjective, "mixed");
  }
  EXPECT_EQ(total, all.size());
  EXPECT_EQ(seeds, all.size());
  EXPECT_FALSE(r1.transitive);

  SchurInvariant sch(g, sl25());
  CommutatorSolutions sols(g);
  std::mt19937_64 rng(25);
  std::vector<std::vector<Elem>> seeds2;
  while (seeds2.size() < 3) {
    auto t = random_rep(2, g, sols, rng);
    if (generates(g, t))
      seeds2.push_back(t);
  }
  auto r2 = orbit_report(seeds2, standard_twists(2), 2, g, &sch);
  EXPECT_TRUE(r2.schur_separated);
  for (const auto& o : r2.orbits) {
    EXPECT_EQ(o.surjective, "all");
    EXPECT_TRUE(o.schur.has_value());
  }
  EXPECT_THROW(orbit_report(seeds2, standard_twists(2), 2, g, &sch, 10), bound_exceeded);
  EXPECT_THROW(orbit_report({{1, 2}}, standard_twists(1), 1, g), input_error);
}
