#pragma once

// Borel-Weil-Bott for line bundles and parabolic weights: lambda + rho is
// either singular (all cohomology vanishes) or regular, in which case the
// cohomology is concentrated in degree l(w), the number of positive coroots
// pairing negatively with lambda + rho.

#include "mcm/rootsys.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace mcm {

struct CohomologyProfile {
  enum class Kind { Singular, NonzeroInDegree };

  Kind kind = Kind::Singular;
  /// NonzeroInDegree: the degree q = l(w).
  std::size_t degree = 0;
  /// Singular: index into RootSystem::positive_roots of a root beta with
  /// <lambda + rho, beta^vee> = 0 (the first one in the stored order).
  std::size_t witness = 0;

  static CohomologyProfile singular(std::size_t witness_root);
  static CohomologyProfile nonzero_in_degree(std::size_t q);

  bool is_singular() const { return kind == Kind::Singular; }
  bool concentrated_in(std::size_t q) const { return !is_singular() && degree == q; }

  friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

std::string to_string(const CohomologyProfile& p);

/// Index of the first positive root whose coroot is orthogonal to Lambda.
/// Throws InvalidArgument on a dimension mismatch.
std::optional<std::size_t> singular_witness(const RootSystem& rs, const RationalVector& Lambda);
bool is_singular(const RootSystem& rs, const RationalVector& Lambda);

/// #{beta in Phi+ : <Lambda, beta^vee> < 0}. Lambda must be regular.
std::size_t weyl_length_to_dominant(const RootSystem& rs, const RationalVector& Lambda);

/// Profile of the line bundle with weight lambda (rho is added here).
CohomologyProfile cohomology_profile(const RootSystem& rs, const RationalVector& lambda);

}  // namespace mcm
