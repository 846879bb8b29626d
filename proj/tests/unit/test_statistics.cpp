#include <gtest/gtest.h>

#include "grid.hpp"
#include "oracles.hpp"
#include "wreathstat/colored_perm.hpp"
#include "wreathstat/statistics.hpp"

using namespace wreathstat;

namespace {

ColoredPermutation W(const char* text, int r) { return parse_window(text, r); }

const char* kSix = "[1^3 4^0 2^1 3^0 6^2 5^1]";
const char* kThm = "[1^1 2^3 5^0 3^0 4^1 6^0]";
const char* kD5 = "[2^1 4^1 5^0 1^1 3^1]";

std::vector<int> ints(std::initializer_list<int> v) { return v; }

int sum_from(const std::vector<int>& a, int i) {
  int s = 0;
  for (std::size_t j = static_cast<std::size_t>(i - 1); j < a.size(); ++j) s += a[j];
  return s;
}

}  // namespace

TEST(LetterOrder, WreathAndSteingrimssonChains) {
  std::vector<Letter> wreath{{1, 2}, {2, 2}, {3, 2}, {1, 1}, {2, 1}, {3, 1}, {1, 0}, {2, 0}, {3, 0}};
  std::vector<Letter> stein{{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}};
  for (std::size_t i = 0; i + 1 < wreath.size(); ++i) {
    EXPECT_TRUE(letter_less(wreath[i], wreath[i + 1], OrderFlavor::wreath));
    EXPECT_FALSE(letter_less(wreath[i + 1], wreath[i], OrderFlavor::wreath));
    EXPECT_TRUE(letter_less(stein[i], stein[i + 1], OrderFlavor::steingrimsson));
  }
  EXPECT_TRUE(letter_less({3, 1}, {1, 1}, OrderFlavor::natural));
  EXPECT_TRUE(letter_less({1, 1}, {3, 1}, OrderFlavor::naturalD));
  EXPECT_TRUE(letter_less({3, 1}, {1, 0}, OrderFlavor::naturalD));
}

TEST(LetterOrder, FlavorNames) {
  for (auto f : {OrderFlavor::wreath, OrderFlavor::steingrimsson, OrderFlavor::natural, OrderFlavor::naturalD})
    EXPECT_EQ(order_flavor_from_string(to_string(f)), f);
  EXPECT_THROW(order_flavor_from_string("bogus"), std::invalid_argument);
}

TEST(Classical, DesAndMaj) {
  std::vector<int> pi{1, 6, 3, 5, 2, 4};
  EXPECT_EQ(classical_descents(pi), ints({2, 4}));
  EXPECT_EQ(classical_maj(pi), 6);
  EXPECT_EQ(classical_des(pi), 2);
  EXPECT_THROW(classical_maj(W("[2^1 1]", 2)), std::invalid_argument);
}

TEST(DescentSet, WorkedExamples) {
  EXPECT_EQ(descent_set(W("[3^2 2^0 1^1]", 3), OrderFlavor::wreath), ints({0, 2}));
  EXPECT_EQ(descent_set(W("[2^2 3^2 1^1]", 3), OrderFlavor::steingrimsson), ints({2, 3}));
  EXPECT_EQ(descent_set(W("[3^1 2 1^1 4^1]", 2), OrderFlavor::natural), ints({0, 2, 3}));
  EXPECT_EQ(type_a_descents(W(kSix, 4)), ints({2, 4}));
  EXPECT_EQ(type_a_major(W(kSix, 4)), 6);
  EXPECT_EQ(type_a_descents(W(kD5, 2), OrderFlavor::naturalD), ints({3}));
}

TEST(DescentSet, RejectsFlavorOutsideDomain) {
  EXPECT_THROW(descent_set(W("[2^1 1]", 3), OrderFlavor::natural), std::invalid_argument);
  EXPECT_THROW(descent_set(W("[2^1 1]", 2), OrderFlavor::naturalD), std::invalid_argument);
}

TEST(NegCol, WorkedExample) {
  auto g = W(kSix, 4);
  EXPECT_EQ(neg_set(g), ints({1, 3, 5, 6}));
  EXPECT_EQ(neg(g), 4);
  EXPECT_EQ(col(g), 7);
}

TEST(NegativeStatistics, WorkedExample) {
  auto g = W(kSix, 4);
  auto nn = nneg_multiset(inverse(g));
  EXPECT_EQ(nn.expanded(), ints({1, 2, 2, 2, 5, 5, 5, 6, 6}));
  EXPECT_EQ(nn.multiplicity(5), 3);
  EXPECT_EQ(nn.multiplicity(5), (4 - g.color(6)) % 4);
  EXPECT_EQ(ndes_multiset(g).expanded(), ints({1, 2, 2, 2, 2, 4, 5, 5, 5, 6, 6}));
  EXPECT_EQ(ndes(g), 11);
  EXPECT_EQ(nmajor(g), 40);
}

TEST(PositionMultiset, UnionAddsMultiplicities) {
  auto a = PositionMultiset::from_set(ints({1, 3}));
  PositionMultiset b;
  b.add(3, 2);
  b.add(2);
  auto u = a + b;
  EXPECT_EQ(u.expanded(), ints({1, 2, 3, 3, 3}));
  EXPECT_EQ(u.cardinality(), 5);
  EXPECT_EQ(u.sum(), 12);
  b.add(5, 0);
  EXPECT_EQ(b.multiplicity(5), 0);
}

TEST(ColorChanges, WorkedExamples) {
  auto cc = color_changes(W(kSix, 4));
  EXPECT_EQ(cc.a, ints({3, 3, 1, 2, 1, 1}));
  EXPECT_EQ(cc.ch(), 11);
  EXPECT_EQ(cc.ch_ceil(), 3);
  std::vector<int> c{4, 1, 2, 3, 0, 1, 1, 3, 1};
  EXPECT_EQ(color_changes(c, 5).a, ints({3, 4, 4, 3, 4, 0, 3, 2, 1}));
}

TEST(ColorChanges, PartialSumRuleExample) {
  std::vector<int> c{4, 1, 2, 3, 0, 1, 1, 3, 1};
  auto d = color_change_descents(c, 5);
  EXPECT_EQ(d, ints({2, 3, 5, 7}));
  auto a = color_changes(c, 5).a;
  // i = 4: 13 = 3 + 5 * 2
  EXPECT_EQ(sum_from(a, 4), 13);
  EXPECT_EQ(c[3], 3);
  EXPECT_EQ(std::count_if(d.begin(), d.end(), [](int j) { return j >= 4; }), 2);
}

TEST(FlagStatistics, WorkedExamples) {
  EXPECT_EQ(fdes(W(kSix, 4)), 11);
  EXPECT_EQ(fmajor(W(kSix, 4)), 31);
  EXPECT_EQ(fdes(W(kThm, 4)), 13);
  EXPECT_EQ(fmajor(W(kThm, 4)), 37);
  EXPECT_EQ(fmajor(W(kD5, 2)), 10);
  EXPECT_EQ(des(W(kD5, 2)), 2);
  auto rev = W("[3^1 1^1 5^0 4^1 2^1]", 2);
  EXPECT_EQ(natfmaj(rev), 10);
  EXPECT_EQ(natdes(rev), 2);
}

TEST(TypeD, WorkedExample) {
  auto g = W(kD5, 2);
  EXPECT_EQ(dndes_multiset(g).expanded(), ints({1, 2, 3, 3}));
  EXPECT_EQ(dnmajor(g), 9);
  EXPECT_EQ(dndes(g), 4);
  EXPECT_THROW(dndes_multiset(W("[2^1 1]", 2)), std::invalid_argument);
}

TEST(Classify, WorkedExample) {
  auto causes = classify_descents(W(kThm, 4));
  ASSERT_EQ(causes.size(), 6u);
  EXPECT_EQ(causes[0], DescentCause::zero);
  EXPECT_EQ(causes[1], DescentCause::colorChange);
  EXPECT_EQ(causes[2], DescentCause::none);
  EXPECT_EQ(causes[3], DescentCause::standard);
  EXPECT_EQ(causes[4], DescentCause::colorChange);
  EXPECT_EQ(causes[5], DescentCause::none);
}

class EveryElement : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(EveryElement, DescentSetsMatchOracle) {
  auto [r, n] = GetParam();
  for (const auto& g : enumerate_group(GroupSpec(r, n))) {
    EXPECT_EQ(descent_set(g, OrderFlavor::wreath), oracle::descents(g, OrderFlavor::wreath));
    EXPECT_EQ(descent_set(g, OrderFlavor::steingrimsson), oracle::descents(g, OrderFlavor::steingrimsson));
    EXPECT_EQ(type_a_descents(g), oracle::interior_descents(g, OrderFlavor::wreath));
    EXPECT_EQ(type_a_descents(g, OrderFlavor::steingrimsson),
              oracle::interior_descents(g, OrderFlavor::steingrimsson));
    EXPECT_EQ(des(g), static_cast<int>(oracle::descents(g, OrderFlavor::wreath).size()));
    EXPECT_EQ(stdes(g), static_cast<int>(oracle::descents(g, OrderFlavor::steingrimsson).size()));
    if (r == 2) {
      EXPECT_EQ(descent_set(g, OrderFlavor::natural), oracle::descents(g, OrderFlavor::natural));
      EXPECT_EQ(natmaj(g), oracle::sum(oracle::descents(g, OrderFlavor::natural)));
    }
    if (g.is_color_free()) EXPECT_EQ(type_a_descents(g), classical_descents(g.letters()));
  }
}

TEST_P(EveryElement, NegativeAndFlagStatisticsMatchOracle) {
  auto [r, n] = GetParam();
  for (const auto& g : enumerate_group(GroupSpec(r, n))) {
    auto want = oracle::ndes_list(g);
    EXPECT_EQ(ndes_multiset(g).expanded(), want);
    EXPECT_EQ(ndes(g), static_cast<int>(want.size()));
    EXPECT_EQ(nmajor(g), oracle::sum(want));
    EXPECT_EQ(fdes(g), oracle::fdes(g));
    EXPECT_EQ(fmajor(g), oracle::fmajor(g));
    EXPECT_EQ(col(g), oracle::col(g));
    int negs = 0;
    for (int j = 1; j <= n; ++j) negs += g.color(j) != 0;
    EXPECT_EQ(neg(g), negs);
    if (r == 2) EXPECT_EQ(natfmaj(g), 2 * oracle::sum(oracle::interior_descents(g, OrderFlavor::natural)) + neg(g));
  }
}

// Sign-representation equations, read with both the decomposition's plain
// part and the window's underlying permutation.
TEST_P(EveryElement, SignRepresentationEquations) {
  auto [r, n] = GetParam();
  for (const auto& g : enumerate_group(GroupSpec(r, n))) {
    auto a = color_changes(g).a;
    int sum_a = 0, weighted_a = 0;
    for (int j = 1; j <= n; ++j) {
      sum_a += a[j - 1];
      weighted_a += j * a[j - 1];
    }
    for (const auto& pi : {decompose(g).plain.letters(), g.letters()}) {
      int std_count = 0, std_major = 0;
      for (int j : classical_descents(pi))
        if (a[j - 1] == 0) {
          ++std_count;
          std_major += j;
        }
      EXPECT_EQ(fdes(g), r * std_count + sum_a);
      EXPECT_EQ(fmajor(g), r * std_major + weighted_a);
      EXPECT_EQ(des(g), color_changes(g).ch_ceil() + std_count);
    }
    auto ccd = color_change_descents(g.colors(), r);
    EXPECT_EQ(weighted_a, col(g) + r * oracle::sum(ccd));
    for (int i = 1; i <= n; ++i) {
      auto above = std::count_if(ccd.begin(), ccd.end(), [&](int j) { return j >= i; });
      EXPECT_EQ(sum_from(a, i), g.color(i) + r * static_cast<int>(above));
    }
  }
}

TEST_P(EveryElement, ClassificationAgreesWithDescentSet) {
  auto [r, n] = GetParam();
  for (const auto& g : enumerate_group(GroupSpec(r, n))) {
    auto causes = classify_descents(g);
    auto ds = descent_set(g, OrderFlavor::wreath);
    std::vector<int> tagged, cc;
    for (int j = 0; j < n; ++j) {
      if (causes[j] != DescentCause::none) tagged.push_back(j);
      if (causes[j] == DescentCause::colorChange) cc.push_back(j);
    }
    EXPECT_EQ(tagged, ds);
    EXPECT_EQ(causes[0] == DescentCause::zero, g.color(1) != 0);
    for (int j = 1; j < n; ++j) {
      bool standard = g.color(j) == g.color(j + 1) && g.letter(j) > g.letter(j + 1);
      EXPECT_EQ(causes[j] == DescentCause::standard, standard);
    }
    EXPECT_EQ(cc, color_change_descents(g.colors(), r));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, EveryElement, ::testing::ValuesIn(testgrid::small_groups()),
                         [](const auto& info) {
                           return "r" + std::to_string(info.param.first) + "n" + std::to_string(info.param.second);
                         });

TEST(TypeD, DirectFormAndOracle) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& g : enumerate_type_d(n)) {
      EXPECT_EQ(dndes_multiset(g), dndes_multiset_direct(g));
      // DNatDes in the integer order with left sentinel -e_2 pi(2).
      std::vector<int> v{-signed_value(g.at(2))};
      for (int j = 1; j <= n; ++j) v.push_back(signed_value(g.at(j)));
      std::vector<int> want;
      for (int j = 0; j < n; ++j)
        if (v[j] > v[j + 1]) want.push_back(j);
      EXPECT_EQ(descent_set(g, OrderFlavor::naturalD), want);
      EXPECT_EQ(dnatdes(g), static_cast<int>(want.size()));
      EXPECT_EQ(type_a_descents(g, OrderFlavor::naturalD), oracle::interior_descents(g, OrderFlavor::naturalD));
      EXPECT_EQ(dnmajor(g), static_cast<int>(dndes_multiset(g).sum()));
    }
}
