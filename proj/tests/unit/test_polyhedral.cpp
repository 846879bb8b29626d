#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "wreathstat/colored_perm.hpp"
#include "wreathstat/polyhedral.hpp"

using namespace wreathstat;

namespace {

std::vector<mpq_class> Q(std::initializer_list<std::pair<int, int>> v) {
  std::vector<mpq_class> x;
  for (auto [p, q] : v) {
    mpq_class a(p, q);
    a.canonicalize();
    x.push_back(a);
  }
  return x;
}

std::vector<mpq_class> to_q(const IntVector& v) {
  std::vector<mpq_class> x;
  for (long long c : v) x.emplace_back(static_cast<long>(c));
  return x;
}

// Every integer vector with entries in [lo, hi].
std::vector<IntVector> box_points(int n, int lo, int hi) {
  std::vector<IntVector> out;
  IntVector v(static_cast<std::size_t>(n), lo);
  while (true) {
    out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == hi) v[static_cast<std::size_t>(k--)] = lo;
    if (k < 0) break;
    ++v[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<std::vector<long long>> all_scalings(int n, int r) {
  return {unit_scaling(n), wreath_scaling(n, r), type_d_scaling(n)};
}

}  // namespace

TEST(Simplex, UnsignedInequalities) {
  std::vector<int> pi{2, 1};
  auto s = HalfOpenSimplex::unsigned_simplex(pi, 1);
  EXPECT_EQ(s.describe(), "0 <= x1 < x2 <= 1");
  EXPECT_EQ(s.strict_positions(), (std::vector<int>{1}));
}

TEST(Simplex, SignedInequalitiesWorkedExample) {
  auto s = HalfOpenSimplex::signed_simplex(parse_window("[2^1 3^0 1^1]", 2));
  EXPECT_EQ(s.describe(), "0 < -x2 <= x3 < -x1 <= 1");
}

TEST(Locate, NineDimensionalExample) {
  auto x = Q({{2, 10}, {1, 10}, {2, 10}, {3, 10}, {1, 10}, {1, 10}, {3, 10}, {3, 10}, {2, 10}});
  auto res = locate(x, 9, 1);
  EXPECT_EQ(res.pi, (std::vector<int>{4, 7, 8, 1, 3, 9, 2, 5, 6}));
  EXPECT_TRUE(res.simplex.contains(x));
}

TEST(Locate, RandomPointsHitExactlyOneSimplex) {
  std::mt19937 rng(2024);
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 2; ++r) {
      auto simplices = triangulate_cube(n, r);
      std::uniform_int_distribution<int> num(0, 6 * r);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<mpq_class> x;
        for (int i = 0; i < n; ++i) x.emplace_back(num(rng), 6);
        for (auto& v : x) v.canonicalize();
        auto res = locate(x, n, r);
        int hits = 0;
        for (const auto& s : simplices) {
          bool in = s.contains(x);
          hits += in;
          if (s.label() == res.simplex.label()) EXPECT_TRUE(in);
        }
        EXPECT_EQ(hits, 1);
      }
    }
  }
}

TEST(Locate, RejectsOutsidePoints) {
  EXPECT_THROW(locate(Q({{3, 2}}), 1, 1), std::invalid_argument);
  EXPECT_THROW(locate(Q({{1, 2}}), 2, 1), std::invalid_argument);
}

TEST(Triangulation, CubeLatticePointsCoveredOnce) {
  for (auto [n, r] : {std::pair{3, 2}, {2, 3}, {4, 1}}) {
    auto simplices = triangulate_cube(n, r);
    for (const auto& p : box_points(n, 0, r)) {
      int hits = 0;
      for (const auto& s : simplices) hits += s.contains(to_q(p));
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(Triangulation, SignedCubeLatticePointsCoveredOnce) {
  for (int n = 1; n <= 3; ++n) {
    auto simplices = triangulate_signed_cube(n);
    EXPECT_EQ(simplices.size(), *GroupSpec(2, n).order());
    for (const auto& p : box_points(n, -1, 1)) {
      int hits = 0;
      for (const auto& s : simplices) hits += s.contains(to_q(p));
      EXPECT_EQ(hits, 1);
    }
    // Scaled points too, via half-integers.
    for (const auto& p : box_points(n, -2, 2)) {
      std::vector<mpq_class> x;
      for (long long c : p) x.emplace_back(static_cast<long>(c), 2);
      for (auto& v : x) v.canonicalize();
      int hits = 0;
      for (const auto& s : simplices) hits += s.contains(x);
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(Cone, DeterminantsOfScalings) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& pi : all_permutations(n)) {
      auto s = HalfOpenSimplex::unsigned_simplex(pi, 1);
      EXPECT_EQ(abs(determinant(cone_over(s))), 1);
      for (int r = 1; r <= 4; ++r) {
        mpz_class rn;
        mpz_ui_pow_ui(rn.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
        EXPECT_EQ(abs(determinant(cone_over(s, wreath_scaling(n, r)))), rn);
      }
      if (n >= 2) EXPECT_EQ(abs(determinant(cone_over(s, type_d_scaling(n)))), mpz_class(1) << (n - 1));
    }
}

TEST(Cone, ParallelepipedExample) {
  // 0 <= x3 < x2 < x1 with generators 2v1, 2v2, 3v3.
  SimplicialCone c({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}, {2, 2, 3}, {true, true, false});
  EXPECT_EQ(abs(determinant(c)), 12);
  std::set<IntVector> interior{{2, 1, 0}, {3, 2, 1}, {4, 3, 2}};
  std::set<IntVector> shifted{{4, 2, 0}, {5, 3, 1}, {6, 4, 2}, {3, 1, 0}, {3, 2, 0},
                              {4, 3, 1}, {5, 3, 2}, {5, 4, 2}, {4, 2, 1}};
  for (auto method : {ShiftMethod::whole, ShiftMethod::offBoundary}) {
    auto pts = fpp_points(c, method);
    std::set<IntVector> got(pts.begin(), pts.end());
    std::set<IntVector> closed;
    for (const auto& p : closed_fpp_points(c)) closed.insert(p);
    std::set<IntVector> common, fresh;
    for (const auto& p : got) (closed.count(p) ? common : fresh).insert(p);
    EXPECT_EQ(common, interior);
    EXPECT_EQ(fresh, shifted);
  }
}

TEST(Cone, UnimodularHalfOpenExample) {
  HalfOpenSimplex s("I={1}", {{1, 1}, {2, 1}}, {true, false}, 1);
  auto e = sigma_rational(cone_over(s));
  EXPECT_EQ(e.numerator, Polynomial::monomial(Monomial{{VarId::z(0), 1}, {VarId::z(1), 1}}));
  std::vector<Monomial> want{Monomial::var(VarId::z(0)), Monomial{{VarId::z(0), 1}, {VarId::z(1), 1}},
                             Monomial{{VarId::z(0), 1}, {VarId::z(1), 1}, {VarId::z(2), 1}}};
  auto got = e.denominator;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(expand(e, 2), sigma_bruteforce(s, 2));
}

TEST(Cone, WreathNumeratorSize) {
  std::vector<int> pi{1, 6, 3, 5, 2, 4};
  auto c = cone_over(HalfOpenSimplex::unsigned_simplex(pi, 1), wreath_scaling(6, 4));
  EXPECT_EQ(fpp_points(c, ShiftMethod::whole).size(), 4096u);
  EXPECT_EQ(sigma_rational(c).numerator.size(), 4096u);
}

TEST(Cone, UnitCubeSeries) {
  auto s = sigma_cube_bruteforce(2, 1, 2);
  Polynomial want;
  for (int k = 0; k <= 2; ++k)
    want += q_integer(k + 1, VarId::z(1)) * q_integer(k + 1, VarId::z(2)) * Polynomial::var(VarId::z(0), k);
  EXPECT_EQ(s.poly, want);
}

TEST(Cone, PointMonomial) {
  IntVector p{2, 1, -1, 0};
  EXPECT_EQ(point_monomial(p),
            (Monomial{{VarId::z(0), 2}, {VarId::z(1), 1}, {VarId::w(2), 1}, {VarId::s(), 1}}));
}

// Rational form agrees with brute-force enumeration for every cone over
// every simplex, all scalings and both shift methods.
TEST(Cone, RationalMatchesBruteForce) {
  const int K = 3;
  for (int n = 1; n <= 4; ++n)
    for (const auto& pi : all_permutations(n)) {
      auto s = HalfOpenSimplex::unsigned_simplex(pi, 1);
      auto brute = sigma_bruteforce(s, K);
      for (const auto& sc : all_scalings(n, 3)) {
        auto c = cone_over(s, sc);
        EXPECT_EQ(expand(sigma_rational(c, ShiftMethod::whole), K), brute);
        EXPECT_EQ(expand(sigma_rational(c, ShiftMethod::offBoundary), K), brute);
      }
    }
}

TEST(Cone, ShiftMethodsAgreeAndCountIsDeterminant) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r)
      for (const auto& s : triangulate_cube(n, r))
        for (const auto& sc : all_scalings(n, r)) {
          auto c = cone_over(s, sc);
          auto whole = fpp_points(c, ShiftMethod::whole);
          auto off = fpp_points(c, ShiftMethod::offBoundary);
          EXPECT_EQ(whole, off);
          mpz_class d = abs(determinant(c));
          EXPECT_EQ(mpz_class(static_cast<unsigned long>(whole.size())), d);
          auto closed = closed_fpp_points(c);
          EXPECT_EQ(closed, closed_fpp_points_hnf(c));
          EXPECT_EQ(mpz_class(static_cast<unsigned long>(closed.size())), d);
        }
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : triangulate_signed_cube(n)) {
      auto c = cone_over(s);
      EXPECT_EQ(fpp_points(c, ShiftMethod::whole), fpp_points(c, ShiftMethod::offBoundary));
      EXPECT_EQ(abs(determinant(c)), 1);
    }
}

TEST(Cone, GeneralConeHalfOpenPointsSatisfyOpenFacets) {
  // Non-scaled-unimodular base: points must have lambda_j in (0, 1] on open
  // facets and [0, 1) on closed ones.
  SimplicialCone c({{1, 0, 0}, {1, 2, 0}, {1, 1, 3}}, {1, 1, 2}, {true, false, true});
  EXPECT_FALSE(c.is_scaled_unimodular());
  auto whole = fpp_points(c, ShiftMethod::whole);
  auto off = fpp_points(c, ShiftMethod::offBoundary);
  EXPECT_EQ(whole, off);
  EXPECT_EQ(mpz_class(static_cast<unsigned long>(whole.size())), abs(determinant(c)));
  EXPECT_EQ(closed_fpp_points(c), closed_fpp_points_hnf(c));
}

TEST(Cone, TriangulationSumsToCube) {
  const int K = 3;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      TruncatedSeries total(Polynomial(), K);
      for (const auto& s : triangulate_cube(n, r)) total += expand(sigma_rational(cone_over(s)), K);
      EXPECT_EQ(total, sigma_cube_bruteforce(n, r, K));
    }
  for (int n = 1; n <= 3; ++n) {
    TruncatedSeries total(Polynomial(), K);
    for (const auto& s : triangulate_signed_cube(n)) total += expand(sigma_rational(cone_over(s)), K);
    EXPECT_EQ(total, sigma_signed_cube_bruteforce(n, K));
  }
}
