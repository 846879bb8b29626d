#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wreathstat/colored_perm.hpp"
#include "wreathstat/errors.hpp"
#include "wreathstat/series.hpp"

namespace wreathstat {

enum class IdentityId {
  eulerianA,
  carlitz,
  multivariateA,
  wreathEulerian,
  wreathNeg,
  wreathFlag,
  wreathNegMulti,
  wreathFlagMulti,
  wreathFlagRk,
  wreathFlagRkMulti,
  chowGessel,
  chowGesselFlag,
  bNaturalMulti,
  bFlagMulti,
  dEulerian,
  dNeg,
  dNegMulti,
};

std::string_view to_string(IdentityId id);
IdentityId identity_from_string(std::string_view s);
const std::vector<IdentityId>& all_identities();

LhsKind lhs_of(IdentityId id);

/// Descent statistic used by the univariate wreath identity.
enum class DescentVariant { wreath, steingrimsson, natural };
std::string_view to_string(DescentVariant v);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct RhsOptions {
  /// Bumps one statistic by +1 in every numerator term: 0 is the grading
  /// statistic (t or z0), 1 the q / z1 exponent, 2 the sign exponent s.
  std::optional<int> mutate_statistic;
  /// wreathEulerian only; unset means "every applicable variant" in verify.
  std::optional<DescentVariant> variant;
  std::uint64_t budget = kDefaultBudget;
};

/// Number of statistics that a mutation may target for this identity.
int mutable_statistics(IdentityId id);

/// Throws std::invalid_argument when (r, n) is outside the identity's domain
/// and BudgetExceeded when the indexing set is larger than `budget`.
void check_parameters(IdentityId id, GroupSpec spec, std::uint64_t budget = kDefaultBudget);

/// Right-hand side as rational terms, one per distinct denominator, sorted
/// by denominator. Numerators are assembled from permutation statistics.
std::vector<RationalExpr> rhs_terms(IdentityId id, GroupSpec spec, const RhsOptions& opts = {});
TruncatedSeries rhs_series(IdentityId id, GroupSpec spec, int K, const RhsOptions& opts = {});

/// Multivariate identities also have a construction from integer-point
/// transforms of half-open cones.
bool has_polyhedral_rhs(IdentityId id);
std::vector<RationalExpr> rhs_terms_polyhedral(IdentityId id, GroupSpec spec);
TruncatedSeries rhs_series_polyhedral(IdentityId id, GroupSpec spec, int K);

TruncatedSeries lhs_for(IdentityId id, GroupSpec spec, int K);

struct Mismatch {
  Monomial monomial;
  mpz_class lhs;
  mpz_class rhs;
};

/// Smallest monomial (ascending order) whose coefficients differ.
std::optional<Mismatch> first_mismatch(const Polynomial& lhs, const Polynomial& rhs);

struct IdentityReport {
  IdentityId id;
  GroupSpec spec;
  int K = 0;
  bool match = false;
  std::optional<Mismatch> mismatch;
  std::chrono::duration<double, std::milli> elapsed{};
};

IdentityReport verify(IdentityId id, GroupSpec spec, int K, const RhsOptions& opts = {});

enum class StatPair {
  ndesNmajor,
  fdesFmajor,
  desFmajor,
  natdesNatfmaj,
  stdesOnly,
  desOnly,
  dndesDnmajor,
  dnatdesOnly,
  desAMajorA,
};

std::string_view to_string(StatPair p);
StatPair stat_pair_from_string(std::string_view s);
const std::vector<StatPair>& all_stat_pairs();

/// sum over the group (D_n for the type-D pairs) of t^{stat1} q^{stat2}.
Polynomial distribution(GroupSpec spec, StatPair pair, std::uint64_t budget = kDefaultBudget);

struct GridPoint {
  GroupSpec spec;
  int K = 0;
};

/// Parameter grid the acceptance suite runs for each identity.
std::vector<GridPoint> acceptance_grid(IdentityId id);

}  // namespace wreathstat
