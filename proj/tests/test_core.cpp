#include <gtest/gtest.h>

#include <random>

#include "matroid/catalog.hpp"
#include "matroid/named.hpp"
#include "oracles.hpp"

using namespace matroid;
using oracle::make;

namespace {

namespace n5e = n5_elements;

std::vector<Matroid> small_zoo() {
  std::vector<Matroid> zoo{uniform(0, 2), uniform(1, 3), uniform(2, 4), uniform(3, 3), uniform(2, 5),
                           n5().matroid,  mk4(),         k23(),         l_family(1).matroid,
                           direct_sum(uniform(1, 2), uniform(1, 2)),
                           make(3, {{0}, {1, 2}})};
  return zoo;
}

}  // namespace

TEST(Subset, BasicOperations) {
  Subset a = Subset::of({0, 2, 5});
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a.to_string(), "{0,2,5}");
  EXPECT_EQ((a - Subset::of({2})).to_string(), "{0,5}");
  EXPECT_TRUE(a.includes(Subset::of({0, 5})));
  EXPECT_EQ(a.lowest(), 0);
  EXPECT_EQ(Subset::full(4).bits(), 0xFu);
  EXPECT_EQ(a.elements(), (std::vector<int>{0, 2, 5}));
  EXPECT_THROW(Subset::singleton(kMaxElements), InputError);
}

TEST(Subset, CanonicalOrderIsSizeThenBits) {
  EXPECT_LT(Subset::of({3}), Subset::of({0, 1}));
  EXPECT_LT(Subset::of({0, 1}), Subset::of({0, 2}));
}

TEST(CircuitFamily, RejectsNonAntichainAndEmpty) {
  EXPECT_THROW(CircuitFamily({Subset::of({0, 1}), Subset::of({0, 1, 2})}), InputError);
  EXPECT_THROW(CircuitFamily({Subset{}}), InputError);
  EXPECT_THROW(CircuitFamily({Subset::of({0}), Subset::of({0})}), InputError);
}

TEST(Matroid, RejectsEliminationFailure) {
  EXPECT_THROW(make(3, {{0, 1}, {0, 2}}), InvalidMatroid);
  EXPECT_THROW(make(2, {{0, 2}}), InputError);
}

TEST(Matroid, RankExamples) {
  EXPECT_EQ(uniform(2, 4).rank(Subset::of({0, 1, 2})), 2);
  EXPECT_EQ(n5().matroid.rank(), 2);
  for (const auto& m : small_zoo()) EXPECT_EQ(m.rank(Subset{}), 0);
}

TEST(Matroid, RankMatchesBruteForce) {
  for (const auto& m : small_zoo())
    for (std::uint32_t s = 0; s < (1u << m.size()); ++s)
      ASSERT_EQ(m.rank(Subset(s)), oracle::rank(m, Subset(s))) << Subset(s);
}

TEST(Matroid, ClosureExamples) {
  EXPECT_EQ(uniform(2, 4).closure(Subset::of({0})), Subset::of({0}));
  const Matroid n = n5().matroid;
  EXPECT_EQ(n.closure(Subset::singleton(n5e::e1)), Subset::of({n5e::e1, n5e::f1}));
  for (const auto& m : small_zoo()) {
    EXPECT_EQ(m.closure(m.ground()), m.ground());
    for (std::uint32_t s = 0; s < (1u << m.size()); ++s) ASSERT_EQ(m.closure(Subset(s)), oracle::closure(m, Subset(s)));
  }
}

TEST(Matroid, FlatsExamples) {
  EXPECT_EQ(uniform(2, 4).flats().size(), 6u);
  const Matroid n = n5().matroid;
  std::vector<Subset> expected{Subset{}, Subset::of({n5e::e}), Subset::of({n5e::e1, n5e::f1}),
                               Subset::of({n5e::e2, n5e::f2}), n.ground()};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(n.flats(), expected);
  auto loops = uniform(0, 2).flats();
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_EQ(loops[0], Subset::full(2));
}

TEST(Matroid, FlatsMatchBruteForce) {
  for (const auto& m : small_zoo()) {
    std::vector<Subset> expected;
    for (std::uint32_t s = 0; s < (1u << m.size()); ++s)
      if (oracle::closure(m, Subset(s)) == Subset(s)) expected.push_back(Subset(s));
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(m.flats(), expected);
  }
}

TEST(Matroid, Connectivity) {
  EXPECT_TRUE(n5().matroid.is_connected());
  EXPECT_FALSE(direct_sum(uniform(1, 2), uniform(1, 2)).is_connected());
  EXPECT_TRUE(uniform(1, 1).is_connected());
  EXPECT_TRUE(Matroid().is_connected());
  EXPECT_EQ(direct_sum(uniform(1, 2), uniform(1, 2)).components().blocks.size(), 2u);
}

TEST(Matroid, DualExamples) {
  EXPECT_EQ(uniform(2, 4).dual(), uniform(2, 4));
  EXPECT_TRUE(oracle::isomorphic(mk4().dual(), mk4()));
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) EXPECT_EQ(uniform(r, n).dual(), uniform(n - r, n));
}

TEST(Matroid, DualMatchesCobasisOracle) {
  for (const auto& m : small_zoo()) {
    const Matroid d = m.dual();
    EXPECT_EQ(d.circuits().members(), oracle::dual_circuits(m));
    EXPECT_EQ(d.dual(), m);
    EXPECT_EQ(d.rank(), m.size() - m.rank());
  }
}

TEST(Matroid, MinorExamples) {
  const Matroid k4 = mk4();
  for (int e = 0; e < 6; ++e) EXPECT_TRUE(oracle::isomorphic(contract_elements(k4, Subset::singleton(e)), n5().matroid));
  EXPECT_EQ(minor(k4, Subset{}, Subset{}).matroid, k4);
  EXPECT_TRUE(oracle::isomorphic(delete_elements(n5().matroid, Subset::singleton(n5e::e)),
                                 direct_sum(uniform(1, 2), uniform(1, 2))));
  EXPECT_THROW(minor(k4, Subset::of({0}), Subset::of({0, 1})), InputError);
}

TEST(Matroid, MinorMatchesDefinition) {
  // Contraction circuits are the minimal nonempty C - X; deletion keeps circuits avoiding X.
  for (const auto& m : small_zoo())
    for (std::uint32_t x = 0; x < (1u << m.size()); ++x) {
      const Subset set(x);
      std::vector<Subset> shrunk;
      for (Subset c : m.circuits())
        if (!(c - set).empty()) shrunk.push_back(c - set);
      auto contracted = minor(m, set, Subset{});
      std::vector<Subset> expected;
      for (Subset c : oracle::minimal(shrunk)) expected.push_back(relabel(c, contracted.new_of_old));
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(contracted.matroid.circuits().members(), expected);

      auto deleted = minor(m, Subset{}, set);
      expected.clear();
      for (Subset c : m.circuits())
        if (!c.intersects(set)) expected.push_back(relabel(c, deleted.new_of_old));
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(deleted.matroid.circuits().members(), expected);
    }
}

TEST(Matroid, SeriesClasses) {
  for (Subset b : n5().matroid.series_classes().blocks) EXPECT_EQ(b.size(), 1);
  ASSERT_EQ(uniform(2, 3).series_classes().blocks.size(), 1u);
  ASSERT_EQ(uniform(3, 4).series_classes().blocks.size(), 1u);
  EXPECT_EQ(uniform(3, 4).series_classes().blocks[0].size(), 4);
}

TEST(Matroid, SeriesPairIffEveryCircuitThroughXContainsY) {
  for (const auto& m : small_zoo()) {
    if (!m.is_connected() || m.size() < 2) continue;
    for (int x = 0; x < m.size(); ++x)
      for (int y = 0; y < m.size(); ++y) {
        if (x == y) continue;
        bool every = true;
        for (Subset c : m.circuits())
          if (c.contains(x) && !c.contains(y)) every = false;
        EXPECT_EQ(m.is_series_pair(x, y), every);
      }
  }
}

TEST(Matroid, ContractionInSeriesPairDecomposes) {
  // For a series pair {f,g}: circuits of M/g are the circuits avoiding g, plus C - g for circuits through g.
  for (const auto& m : small_zoo())
    for (int f = 0; f < m.size(); ++f)
      for (int g = 0; g < m.size(); ++g) {
        if (f == g || !m.is_series_pair(f, g)) continue;
        auto con = minor(m, Subset::singleton(g), Subset{});
        std::vector<Subset> expected;
        for (Subset c : m.circuits()) expected.push_back(relabel(c.without(g), con.new_of_old));
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(con.matroid.circuits().members(), expected);
      }
}

TEST(Matroid, StrongEliminationOnConstructedMatroids) {
  for (const auto& m : small_zoo()) {
    const auto& cs = m.circuits().members();
    for (Subset c1 : cs)
      for (Subset c2 : cs) {
        if (c1 == c2) continue;
        for (int e : c1 & c2)
          for (int f : c1 - c2) {
            bool ok = false;
            for (Subset c3 : cs)
              if (c3.contains(f) && (c1 | c2).without(e).includes(c3)) ok = true;
            EXPECT_TRUE(ok);
          }
      }
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(are_isomorphic(series_uniform(3, 3).matroid, n5().matroid));
  EXPECT_FALSE(are_isomorphic(uniform(1, 3), uniform(2, 3)));
  EXPECT_TRUE(are_isomorphic(g_family(3).matroid, g_family(5).matroid));
}

TEST(Isomorphism, KeyInvariantUnderRelabelling) {
  std::mt19937 rng(7);
  CatalogSpec spec;
  spec.family = CatalogFamily::graphic;
  spec.max_edges = 6;
  auto entries = collect_catalog(spec);
  for (const auto& m : small_zoo()) entries.push_back({m, "zoo", std::nullopt});
  for (const auto& entry : entries) {
    const Matroid& m = entry.matroid;
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 100; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Subset> cs;
      for (Subset c : m.circuits()) cs.push_back(relabel(c, perm));
      const Matroid p(m.size(), CircuitFamily(cs));
      ASSERT_EQ(canonical_key(p), canonical_key(m)) << entry.source;
    }
  }
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
  CatalogSpec spec;
  spec.family = CatalogFamily::graphic;
  spec.max_edges = 6;
  spec.dedup = false;
  auto entries = collect_catalog(spec);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i; j < entries.size(); ++j) {
      const Matroid &a = entries[i].matroid, &b = entries[j].matroid;
      if (a.size() != b.size() || a.rank() != b.rank() || a.circuits().size() != b.circuits().size()) continue;
      ASSERT_EQ(are_isomorphic(a, b), oracle::isomorphic(a, b)) << entries[i].source << " vs " << entries[j].source;
    }
}

TEST(Binary, Examples) {
  EXPECT_FALSE(is_binary(uniform(2, 4)));
  EXPECT_TRUE(is_binary(mk4()));
  EXPECT_FALSE(is_binary(free_extension(direct_sum(uniform(2, 3), uniform(2, 3))).matroid));
  EXPECT_TRUE(is_binary(uniform(1, 4)));
  EXPECT_FALSE(is_binary(uniform(2, 5)));
}

TEST(Binary, CrossCheckAgrees) {
  for (auto family : {CatalogFamily::graphic, CatalogFamily::uniform, CatalogFamily::named}) {
    CatalogSpec spec;
    spec.family = family;
    spec.max_edges = 7;
    spec.max_n = 7;
    for_each_catalog_matroid(spec, [](const CatalogEntry& e) {
      ASSERT_EQ(is_binary(e.matroid), has_cycle_symmetric_difference_property(e.matroid)) << e.source;
    });
  }
}

TEST(Binary, GraphicAndGf2AreBinary) {
  CatalogSpec spec;
  spec.family = CatalogFamily::binary;
  spec.max_rank = 3;
  spec.max_cols = 6;
  for_each_catalog_matroid(spec, [](const CatalogEntry& e) { ASSERT_TRUE(is_binary(e.matroid)) << e.source; });
}
