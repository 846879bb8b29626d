#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wreathstat/colored_perm.hpp"
#include "wreathstat/series.hpp"

namespace wreathstat {

using IntVector = std::vector<long long>;

/// One link L_j = sign * x_coordinate of a descending chain.
struct ChainLink {
  int coordinate = 1;  // 1-based
  int sign = 1;        // +1 or -1
};

/// Half-open simplex  scale >= L_1 >= L_2 >= ... >= L_n >= 0.
///
/// strict[j-1] turns L_j >= L_{j+1} into L_j > L_{j+1} (L_{n+1} = 0). The top
/// bound is always weak.
class HalfOpenSimplex {
 public:
  HalfOpenSimplex(std::string label, std::vector<ChainLink> chain, std::vector<bool> strict,
                  int scale);

  /// Delta_pi inside [0,scale]^n: x_pi(1) >= ... >= x_pi(n), strict at Des(pi).
  static HalfOpenSimplex unsigned_simplex(std::span<const int> pi, int scale);
  /// Delta_(pi,eps) inside [-1,1]^n, strict where the natural descent set asks.
  static HalfOpenSimplex signed_simplex(const ColoredPermutation& g);

  const std::string& label() const { return label_; }
  int dim() const { return static_cast<int>(chain_.size()); }
  int scale() const { return scale_; }
  const std::vector<ChainLink>& chain() const { return chain_; }
  const std::vector<bool>& strict() const { return strict_; }
  /// 1-based chain positions that are strict.
  std::vector<int> strict_positions() const;

  bool contains(std::span<const mpq_class> x) const;
  /// Membership of the integer point x in height * simplex.
  bool contains_scaled(std::span<const long long> x, long long height) const;

  /// Inequality chain written bottom-up, e.g. `0 < -x2 <= x3 < -x1 <= 1`.
  std::string describe() const;

 private:
  std::string label_;
  std::vector<ChainLink> chain_;
  std::vector<bool> strict_;
  int scale_;
};

/// Simplices Delta_pi partitioning [0,r]^n, pi in lexicographic order.
std::vector<HalfOpenSimplex> triangulate_cube(int n, int r);

/// Simplices Delta_(pi,eps) partitioning [-1,1]^n, in group enumeration order of B_n.
std::vector<HalfOpenSimplex> triangulate_signed_cube(int n);

struct LocateResult {
  std::vector<int> pi;
  HalfOpenSimplex simplex;
};

/// Finds the simplex of triangulate_cube(n, r) holding x.
LocateResult locate(std::span<const mpq_class> x, int n, int r);

/// Simplicial cone in R^{n+1} (coordinate 0 is the grading coordinate).
///
/// Generator j is scaling[j] * base[j]; open[j] removes the facet opposite
/// generator j.
class SimplicialCone {
 public:
  SimplicialCone(std::vector<IntVector> base, std::vector<long long> scaling, std::vector<bool> open,
                 std::optional<HalfOpenSimplex> source = std::nullopt);

  int dim() const { return static_cast<int>(base_.size()); }
  const std::vector<IntVector>& base() const { return base_; }
  const std::vector<long long>& scaling() const { return scaling_; }
  const std::vector<bool>& open() const { return open_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  const std::optional<HalfOpenSimplex>& source() const { return source_; }

  /// |det(base)| == 1.
  bool is_scaled_unimodular() const;

 private:
  std::vector<IntVector> base_;
  std::vector<long long> scaling_;
  std::vector<bool> open_;
  std::vector<IntVector> generators_;
  std::optional<HalfOpenSimplex> source_;
};

/// Cone over a simplex: base[j] = e_0 + scale * sum_{l<=j} sign_l e_{coord_l}.
SimplicialCone cone_over(const HalfOpenSimplex& s, std::vector<long long> scaling);
SimplicialCone cone_over(const HalfOpenSimplex& s);

/// Scalings used by the identities: all ones, (1, r, ..., r), (1, 2, ..., 2, 1).
std::vector<long long> unit_scaling(int n);
std::vector<long long> wreath_scaling(int n, int r);
std::vector<long long> type_d_scaling(int n);

/// Determinant of the matrix with the given vectors as columns.
mpz_class determinant(const std::vector<IntVector>& columns);
mpz_class determinant(const SimplicialCone& c);

/// Lattice points of the closed parallelepiped spanned by the generators,
/// sorted lexicographically.
std::vector<IntVector> closed_fpp_points(const SimplicialCone& c);
/// Same set from coset representatives of a Hermite basis; works for any cone.
std::vector<IntVector> closed_fpp_points_hnf(const SimplicialCone& c);

enum class ShiftMethod { offBoundary, whole };

/// Lattice points of the half-open parallelepiped, sorted lexicographically.
///
/// offBoundary moves each closed point p off every open facet it lies on by
/// adding that facet's generator. whole translates the closed parallelepiped
/// at once: by sum_{open j} base[j] for scaled-unimodular cones, otherwise by
/// an infinitesimal multiple of sum_{open j} generator[j].
std::vector<IntVector> fpp_points(const SimplicialCone& c, ShiftMethod method);

/// z0^{x_0} times z_i^{x_i} for x_i > 0 and s * w_i^{-x_i} for x_i < 0.
Monomial point_monomial(std::span<const long long> p);

RationalExpr sigma_rational(const SimplicialCone& c, ShiftMethod method = ShiftMethod::whole);

/// Brute-force integer-point transform from the H-description, x_0 <= K.
TruncatedSeries sigma_bruteforce(const HalfOpenSimplex& s, int K);
/// Uses the cone's source simplex; throws if the cone has none.
TruncatedSeries sigma_bruteforce(const SimplicialCone& c, int K);
/// Every lattice point of cone([0,r]^n) up to height K.
TruncatedSeries sigma_cube_bruteforce(int n, int r, int K);
/// Every lattice point of cone([-1,1]^n) up to height K.
TruncatedSeries sigma_signed_cube_bruteforce(int n, int K);

}  // namespace wreathstat
