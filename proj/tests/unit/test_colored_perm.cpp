#include <gtest/gtest.h>

#include <random>
#include <set>

#include "grid.hpp"
#include "oracles.hpp"
#include "wreathstat/colored_perm.hpp"

using namespace wreathstat;

namespace {

ColoredPermutation W(const char* text, int r) { return parse_window(text, r); }

}  // namespace

TEST(ParseWindow, ReadsLettersAndColors) {
  auto g = parse_window("[4^1 1 2^1 3^1]", GroupSpec(2, 4));
  std::vector<Letter> want{{4, 1}, {1, 0}, {2, 1}, {3, 1}};
  EXPECT_TRUE(std::equal(g.window().begin(), g.window().end(), want.begin(), want.end()));

  auto h = W("[1^3 4^0 2^1 3^0 6^2 5^1]", 4);
  EXPECT_EQ(h.size(), 6);
  EXPECT_EQ(h.colors(), (std::vector<int>{3, 0, 1, 0, 2, 1}));
  EXPECT_EQ(h.letters(), (std::vector<int>{1, 4, 2, 3, 6, 5}));
}

TEST(ParseWindow, NegativeAliasForSigned) {
  EXPECT_EQ(W("[-2 1]", 2), W("[2^1 1]", 2));
}

TEST(ParseWindow, RejectsMalformed) {
  EXPECT_THROW(W("[1 1]", 2), std::invalid_argument);
  EXPECT_THROW(W("[1^2 2]", 2), std::invalid_argument);
  EXPECT_THROW(W("[1 3]", 2), std::invalid_argument);
  EXPECT_THROW(W("1 2", 2), std::invalid_argument);
  EXPECT_THROW(W("[1^x 2]", 2), std::invalid_argument);
  EXPECT_THROW(parse_window("[1 2]", GroupSpec(2, 3)), std::invalid_argument);
  EXPECT_THROW(W("[-1 2]", 3), std::invalid_argument);
}

TEST(ParseWindow, FormatRoundTrip) {
  for (auto [r, n] : testgrid::small_groups())
    for (const auto& g : enumerate_group(GroupSpec(r, n))) EXPECT_EQ(parse_window(format_window(g), r), g);
}

TEST(Compose, WorkedExample) {
  EXPECT_EQ(compose(W("[4^1 1 2^1 3^1]", 2), W("[3 1^1 4^1 2]", 2)), W("[2^1 4 3 1]", 2));
}

TEST(Compose, MatchesMatrixProductExhaustivelyForZ3S2) {
  auto G = oracle::group(3, 2);
  for (const auto& g : G)
    for (const auto& h : G) EXPECT_EQ(compose(g, h), oracle::compose(g, h));
}

TEST(Compose, MatchesMatrixProductSampledZ3S3) {
  auto G = oracle::group(3, 3);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
  for (int i = 0; i < 4000; ++i) {
    const auto& g = G[pick(rng)];
    const auto& h = G[pick(rng)];
    ASSERT_EQ(compose(g, h), oracle::compose(g, h)) << format_window(g) << " o " << format_window(h);
  }
}

TEST(Compose, GroupAxioms) {
  for (auto [r, n] : {std::pair{2, 3}, {3, 2}}) {
    auto G = enumerate_group(GroupSpec(r, n));
    auto e = ColoredPermutation::identity(GroupSpec(r, n));
    for (std::size_t i = 0; i < G.size(); ++i) {
      const auto& g = G[i];
      EXPECT_EQ(compose(g, e), g);
      EXPECT_EQ(compose(e, g), g);
      EXPECT_TRUE(compose(g, inverse(g)).is_identity());
      EXPECT_TRUE(compose(inverse(g), g).is_identity());
      for (std::size_t j = 0; j < G.size(); ++j) {
        const auto& h = G[j];
        const auto& k = G[(7 * i + j) % G.size()];
        EXPECT_EQ(compose(compose(g, h), k), compose(g, compose(h, k)));
      }
    }
  }
}

TEST(Inverse, WorkedExamples) {
  EXPECT_EQ(inverse(W("[4^1 1 2^1 3^1]", 2)), W("[2 3^1 4^1 1^1]", 2));
  EXPECT_EQ(inverse(W("[1^3 4^0 2^1 3^0 6^2 5^1]", 4)), W("[1^1 3^3 4^0 2^0 6^3 5^2]", 4));
}

TEST(Inverse, MatchesConjugateTranspose) {
  for (auto [r, n] : testgrid::small_groups())
    for (const auto& g : enumerate_group(GroupSpec(r, n))) {
      EXPECT_EQ(inverse(g), oracle::inverse(g));
      EXPECT_EQ(inverse(inverse(g)), g);
    }
}

TEST(Decompose, WorkedExamples) {
  auto f = decompose(W("[4^1 1^1 5 3^1 6 2]", 2));
  EXPECT_EQ(f.increasing, W("[1^1 3^1 4^1 2 5 6]", 2));
  EXPECT_EQ(f.plain.letters(), (std::vector<int>{3, 1, 5, 2, 6, 4}));

  auto h = decompose(W("[1^3 4^0 2^1 3^0 6^2 5^1]", 4));
  EXPECT_EQ(h.plain.letters(), (std::vector<int>{1, 6, 3, 5, 2, 4}));
}

TEST(Decompose, ProductAndIncreasingFactor) {
  for (auto [r, n] : testgrid::small_groups())
    for (const auto& g : enumerate_group(GroupSpec(r, n))) {
      auto f = decompose(g);
      EXPECT_TRUE(f.plain.is_color_free());
      EXPECT_EQ(oracle::compose(f.increasing, f.plain), g);
      EXPECT_TRUE(oracle::interior_descents(f.increasing, OrderFlavor::wreath).empty());
    }
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_group(GroupSpec(2, n))) {
      auto f = decompose(g, OrderFlavor::natural);
      EXPECT_EQ(oracle::compose(f.increasing, f.plain), g);
      EXPECT_TRUE(oracle::interior_descents(f.increasing, OrderFlavor::natural).empty());
    }
}

TEST(Decompose, UniqueFactorization) {
  // Each element is hit exactly once by increasing o plain.
  for (auto [r, n] : {std::pair{2, 3}, {3, 2}, {2, 4}}) {
    GroupSpec spec(r, n);
    std::set<ColoredPermutation> seen;
    auto inc = enumerate_increasing(spec);
    for (const auto& rho : inc)
      for (const auto& pi : all_permutations(n)) seen.insert(compose(rho, ColoredPermutation::from_plain(spec, pi)));
    EXPECT_EQ(seen.size(), *spec.order());
  }
}

TEST(GroupSpec, Order) {
  EXPECT_EQ(GroupSpec(4, 6).order(), 2949120u);
  EXPECT_EQ(GroupSpec(1, 5).order(), 120u);
  EXPECT_FALSE(GroupSpec(10, 30).order().has_value());
  EXPECT_THROW(GroupSpec(0, 2), std::invalid_argument);
  EXPECT_THROW(GroupSpec(2, 0), std::invalid_argument);
}

TEST(Enumeration, MatchesOracleSetAndOrder) {
  for (auto [r, n] : testgrid::small_groups()) {
    GroupSpec spec(r, n);
    auto got = enumerate_group(spec);
    auto want = oracle::group(r, n);
    EXPECT_EQ(got.size(), *spec.order());
    EXPECT_EQ(got, want);
    std::set<ColoredPermutation> uniq(got.begin(), got.end());
    EXPECT_EQ(uniq.size(), got.size());
  }
}

TEST(Enumeration, IncreasingElements) {
  EXPECT_EQ(enumerate_increasing(GroupSpec(2, 2)).size(), 4u);
  EXPECT_EQ(enumerate_increasing(GroupSpec(2, 3), OrderFlavor::wreath, true).size(), 4u);
  auto inc6 = enumerate_increasing(GroupSpec(2, 6));
  EXPECT_NE(std::find(inc6.begin(), inc6.end(), W("[1^1 3^1 4^1 2 5 6]", 2)), inc6.end());
  for (auto [r, n] : testgrid::small_groups()) {
    GroupSpec spec(r, n);
    std::size_t want = 0;
    for (const auto& g : oracle::group(r, n))
      if (oracle::interior_descents(g, OrderFlavor::wreath).empty()) ++want;
    auto inc = enumerate_increasing(spec);
    EXPECT_EQ(inc.size(), want);
    std::size_t rn = 1;
    for (int i = 0; i < n; ++i) rn *= static_cast<std::size_t>(r);
    EXPECT_EQ(inc.size(), rn);
  }
}

TEST(Enumeration, TypeD) {
  for (int n = 1; n <= 4; ++n) {
    auto d = enumerate_type_d(n);
    EXPECT_EQ(d, oracle::type_d(n));
    for (const auto& g : d) EXPECT_TRUE(is_in_D(g));
  }
  EXPECT_TRUE(is_in_D(W("[2^1 4^1 5^0 1^1 3^1]", 2)));
  EXPECT_FALSE(is_in_D(W("[2^1 1]", 2)));
}

TEST(Enumeration, AllPermutationsLexicographic) {
  auto p = all_permutations(4);
  EXPECT_EQ(p.size(), 24u);
  EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
}

TEST(ReverseNegatives, WorkedExampleAndInvolution) {
  EXPECT_EQ(reverse_negative_entries(W("[2^1 4^1 5^0 1^1 3^1]", 2)), W("[3^1 1^1 5^0 4^1 2^1]", 2));
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_group(GroupSpec(2, n))) {
      auto h = reverse_negative_entries(g);
      EXPECT_EQ(h.colors(), g.colors());
      EXPECT_EQ(reverse_negative_entries(h), g);
    }
}
