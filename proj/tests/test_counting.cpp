#include "test_support.hpp"

#include <homcount/cocycle_dp.hpp>
#include <homcount/counting.hpp>
#include <homcount/mobius.hpp>
#include <homcount/triangulations.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace homcount;
using namespace homcount::testing;
namespace tri = homcount::triangulations;

namespace {

std::size_t commuting_pairs(const FiniteGroup& g)
{
  std::size_t total = 0;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      total += g.mul(a, b) == g.mul(b, a);
  return total;
}

// #{(a, b) : [a, b] = c} for every c.
std::vector<std::uint64_t> commutator_fibres(const FiniteGroup& g)
{
  std::vector<std::uint64_t> n(g.order(), 0);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      ++n[g.commutator(a, b)];
  return n;
}

// Direct evaluation of relators over all generator tuples, no pruning.
std::uint64_t naive_hom_count(const Presentation& p, const FiniteGroup& g)
{
  std::vector<Elem> images(p.generators, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators) {
      Elem acc = FiniteGroup::identity();
      for (int l : r) {
        Elem x = images[static_cast<std::size_t>(std::abs(l) - 1)];
        acc = g.mul(acc, l > 0 ? x : g.inv(x));
      }
      ok = ok && acc == FiniteGroup::identity();
    }
    count += ok;
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == g.order())
      images[i++] = 0;
    if (i == images.size())
      return count;
  }
}

std::vector<FiniteGroup> dp_groups() { return {cyclic(2), cyclic(3), symmetric3(), alternating4()}; }

SimplexOrdering random_sweep(const SimplicialComplex& x, std::mt19937_64& rng)
{
  std::vector<std::uint32_t> key(x.vertex_count());
  std::iota(key.begin(), key.end(), 0u);
  std::shuffle(key.begin(), key.end(), rng);
  return tri::sweep_ordering(x, key);
}

Presentation poincare() { return load_presentation(data_dir() / "poincare.pres"); }

} // namespace

TEST(HomCounting, TorusMatchesCommutingPairs)
{
  auto p = load_presentation(data_dir() / "torus.pres");
  for (const auto& g : {symmetric3(), alternating5(), alternating4(), klein4()})
    EXPECT_EQ(count_homs(p, g), commuting_pairs(g));
  EXPECT_EQ(commuting_pairs(symmetric3()), 18u);
  EXPECT_EQ(commuting_pairs(alternating5()), 300u);
}

TEST(HomCounting, PoincareSphereIntoA5)
{
  auto a5 = alternating5();
  auto p = poincare();
  EXPECT_EQ(naive_hom_count(p, a5), 121u);
  auto c = count_all(p, a5);
  EXPECT_EQ(c.homs, 121);
  EXPECT_EQ(c.surjections, 120);
  EXPECT_EQ(c.automorphisms, 120u);
  EXPECT_EQ(c.quotients, 1);
  EXPECT_EQ(c.canonical_surjections, 1);
}

TEST(HomCounting, FreeGroupOfRankOne)
{
  auto p = load_presentation(data_dir() / "free1.pres");
  auto c = count_all(p, cyclic(3));
  EXPECT_EQ(c.homs, 3);
  EXPECT_EQ(c.surjections, 2);
  EXPECT_EQ(c.quotients, 1);
  EXPECT_EQ(count_quotients(p, symmetric3()), 0);
}

TEST(HomCounting, GenusTwoIntoA5ByCommutatorFibres)
{
  auto a5 = alternating5();
  auto fibres = commutator_fibres(a5);
  std::uint64_t expected = 0;
  for (Elem c = 0; c < a5.order(); ++c)
    expected += fibres[c] * fibres[a5.inv(c)];
  auto p = load_presentation(data_dir() / "genus2.pres");
  EXPECT_EQ(count_homs(p, a5), expected);
  EXPECT_EQ(count_homs(p, symmetric3()), [&] {
    auto f = commutator_fibres(symmetric3());
    std::uint64_t e = 0;
    for (Elem c = 0; c < 6; ++c)
      e += f[c] * f[symmetric3().inv(c)];
    return e;
  }());
}

TEST(HomCounting, PruningAndSimplificationAgreeWithNaiveCount)
{
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = tri::random_2complex(rng, 25);
    auto p = presentation_from_complex(x).presentation;
    for (const auto& g : {cyclic(2), symmetric3()}) {
      if (ipow(BigInt(g.order()), p.generators) > 2'000'000)
        continue;
      CountOptions raw;
      raw.simplify = false;
      auto naive = naive_hom_count(p, g);
      EXPECT_EQ(count_homs(p, g, raw), naive);
      EXPECT_EQ(count_homs(p, g), naive);
    }
  }
}

TEST(HomCounting, EnumerationBound)
{
  Presentation free5{5, {}};
  CountOptions small;
  small.max_enumeration = 1000;
  EXPECT_THROW(count_homs(free5, alternating5(), small), bound_exceeded);
  EXPECT_EQ(count_homs(free5, cyclic(2), small), 32);
}

TEST(CocycleDp, AgreesWithBruteForceOnStandardComplexes)
{
  std::vector<SimplicialComplex> cases{tri::disk(), tri::sphere(), tri::projective_plane(), tri::torus7(),
                                       tri::grid_torus(3, 3)};
  for (const auto& x : cases) {
    auto p = presentation_from_complex(x).presentation;
    for (const auto& g : dp_groups()) {
      auto brute = count_homs(p, g);
      DpOptions full;
      full.mode = DpMode::full;
      EXPECT_EQ(dp_count_homs(x, greedy_ordering(x), g).homs, brute);
      // Without the gauge the states carry |G|^(v-1) times more weight;
      // kept to small groups.
      if (g.order() <= 3)
        EXPECT_EQ(dp_count_homs(x, greedy_ordering(x), g, full).homs, brute);
      EXPECT_EQ(dp_count_homs(x, x.default_ordering(), g).homs, brute);
    }
  }
}

TEST(CocycleDp, ProjectivePlaneCountsInvolutions)
{
  auto x = tri::projective_plane();
  for (const auto& g : dp_groups()) {
    std::uint64_t squares_to_one = 0;
    for (Elem a = 0; a < g.order(); ++a)
      squares_to_one += g.mul(a, a) == FiniteGroup::identity();
    EXPECT_EQ(dp_count_homs(x, greedy_ordering(x), g).homs, squares_to_one);
  }
}

TEST(CocycleDp, RandomComplexesAndOrderings)
{
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = tri::random_2complex(rng);
    auto p = presentation_from_complex(x).presentation;
    for (const auto& g : dp_groups()) {
      auto brute = count_homs(p, g);
      auto ord = random_sweep(x, rng);
      DpOptions full;
      full.mode = DpMode::full;
      auto gauge = dp_count_homs(x, ord, g);
      EXPECT_EQ(gauge.homs, brute);
      auto all = dp_count_homs(x, ord, g, full);
      EXPECT_EQ(all.homs, brute);
      EXPECT_EQ(all.cocycles, brute * ipow(BigInt(g.order()), x.vertex_count() - 1));
      if (g.order() <= 3) {
        DpOptions eager;
        eager.defer_edges = false;
        EXPECT_EQ(dp_count_homs(x, ord, g, eager).homs, brute);
        eager.mode = DpMode::full;
        EXPECT_EQ(dp_count_homs(x, ord, g, eager).homs, brute);
      }
    }
  }
}

TEST(CocycleDp, GenusTwoAgainstCommutatorFibres)
{
  auto x = tri::genus2();
  for (const auto& g : {symmetric3(), alternating4()}) {
    auto fibres = commutator_fibres(g);
    std::uint64_t expected = 0;
    for (Elem c = 0; c < g.order(); ++c)
      expected += fibres[c] * fibres[g.inv(c)];
    EXPECT_EQ(dp_count_homs(x, greedy_ordering(x), g).homs, expected);
  }
}

TEST(CocycleDp, TorusIntoA5)
{
  auto x = tri::torus7();
  EXPECT_EQ(dp_count_homs(x, greedy_ordering(x), alternating5()).homs, commuting_pairs(alternating5()));
  auto grid = tri::grid_torus(3, 6);
  EXPECT_EQ(dp_count_homs(grid, tri::grid_column_sweep(grid, 3, 6), symmetric3()).homs,
            commuting_pairs(symmetric3()));
}

TEST(CocycleDp, RejectsBadInputAndEnforcesStateBound)
{
  SimplicialComplex split(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(dp_count_homs(split, split.default_ordering(), cyclic(2)), input_error);
  auto x = tri::torus7();
  DpOptions tight;
  tight.max_states = 10;
  EXPECT_THROW(dp_count_homs(x, x.default_ordering(), alternating5(), tight), bound_exceeded);
}

TEST(Inversion, CyclicQuotientsOfTheIntegers)
{
  auto p = load_presentation(data_dir() / "free1.pres");
  for (const auto& g : {cyclic(4), symmetric3(), klein4(), alternating4()}) {
    auto table = quotient_counts_via_inversion(g, [&](const FiniteGroup& j) { return count_homs(p, j); });
    EXPECT_TRUE(table.consistent);
    for (const auto& row : table.rows) {
      auto sub = subgroup_as_group(g, row.subgroup).group;
      bool cyclic_sub = false;
      for (Elem a = 0; a < sub.order(); ++a)
        cyclic_sub = cyclic_sub || sub.element_order(a) == sub.order();
      EXPECT_EQ(row.quotients, cyclic_sub ? 1 : 0);
    }
  }
}

TEST(Inversion, AgreesWithDirectQuotientCounts)
{
  auto p = load_presentation(data_dir() / "torus.pres");
  auto g = alternating4();
  auto table = quotient_counts_via_inversion(g, [&](const FiniteGroup& j) { return count_homs(p, j); });
  EXPECT_TRUE(table.consistent);
  for (const auto& row : table.rows)
    EXPECT_EQ(row.quotients, count_quotients(p, subgroup_as_group(g, row.subgroup).group));
}

TEST(Inversion, PoincareSphereHasOnlyTrivialAndA5Quotients)
{
  auto p = poincare();
  auto table = quotient_counts_via_inversion(alternating5(), [&](const FiniteGroup& j) { return count_homs(p, j); });
  EXPECT_TRUE(table.consistent);
  EXPECT_EQ(table.total_homs, 121);
  EXPECT_EQ(table.rows.front().quotients, 1);
  EXPECT_EQ(table.rows.back().quotients, 1);
  for (std::size_t i = 1; i + 1 < table.rows.size(); ++i)
    EXPECT_EQ(table.rows[i].quotients, 0);
  auto hq = check_hq(table);
  EXPECT_TRUE(hq.applicable);
  EXPECT_TRUE(hq.holds);
  std::size_t fresh = 0;
  for (const auto& row : table.rows)
    fresh += !row.cached;
  EXPECT_LT(fresh, table.rows.size());
}
