#pragma once

// Stabilizer weights and the parabolic weight families attached to them.
//
// A stabilizer weight V of H induces a bundle on G/H; pushing it down to G/P
// splits it into line-bundle-like summands indexed by an integer parameter
// (j in every type). Each summand's highest weight is affine in j:
//
//   A_n:      ((lambda - j)/2, lambda_1, ..., lambda_{n-1}, (lambda + j)/2),  j = lambda mod 2
//   C_n:      (-j, lambda_1, ..., lambda_{n-1}),                          j = lambda_0 mod 2
//   B_n, D_n: ((lambda - j)/2, (-lambda - j)/2, lambda_1, ..., lambda_{n-2}),
//             j = lambda mod 2, or lambda + 1 mod 2 on the Spin sublattice
//   E, F, G:  lambda + (j/2) theta,  j such that the weight is integral

#include "mcm/bwb.hpp"
#include "mcm/rootsys.hpp"

#include <string>
#include <variant>
#include <vector>

namespace mcm {

/// A_n: lambda in Z and lambda_1 >= ... >= lambda_{n-1}, taken modulo the
/// shift (lambda, lambda_i) -> (lambda + 2t, lambda_i + t).
struct WeightA {
  long lambda = 0;
  std::vector<long> lambdas;
  friend bool operator==(const WeightA&, const WeightA&) = default;
};

/// C_n: lambda_0 in Z/2 and lambda_1 >= ... >= lambda_{n-1} >= 0.
struct WeightC {
  int lambda0 = 0;
  std::vector<long> lambdas;
  friend bool operator==(const WeightC&, const WeightC&) = default;
};

/// B_n / D_n: lambda >= 0 and n - 2 Levi coordinates, all integral or (spin)
/// all in Z + 1/2.
struct WeightOrthogonal {
  long lambda = 0;
  std::vector<Rational> lambdas;
  bool spin = false;
  friend bool operator==(const WeightOrthogonal&, const WeightOrthogonal&) = default;
};

/// E, F, G: coefficients over the Levi fundamental weights varpi_i.
struct WeightExceptional {
  std::vector<long> coeffs;
  friend bool operator==(const WeightExceptional&, const WeightExceptional&) = default;
};

using StabilizerWeight = std::variant<WeightA, WeightC, WeightOrthogonal, WeightExceptional>;

std::string to_string(const StabilizerWeight& w);

/// The zero weight of the right shape for kind (the structure sheaf).
StabilizerWeight zero_weight(const SimpleType& kind);

/// Throws InvalidArgument naming the first violated shape or dominance
/// condition.
void validate_weight(const SimpleType& kind, const StabilizerWeight& w);
bool levi_dominant_check(const SimpleType& kind, const StabilizerWeight& w);

/// A_n representative with lambda_{n-1} = 0 (identity for n = 1).
WeightA canonicalize(const WeightA& w);

struct ParamInterval {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const ParamInterval&, const ParamInterval&) = default;
};

/// member(j) = base + j * direction for j = residue (mod 2).
struct WeightFamily {
  RationalVector base;
  RationalVector direction;
  int residue = 0;
  std::string parameter_name = "j";

  bool admissible(long j) const;
  /// Throws InvalidArgument when j is outside the congruence class.
  RationalVector member(long j) const;
  /// No admissibility check.
  RationalVector member_unchecked(long j) const;
  /// Smallest admissible param >= j, largest admissible param <= j.
  long admissible_at_or_above(long j) const;
  long admissible_at_or_below(long j) const;
};

/// d = 1 + |Phi+| - |(Phi^natural)+|.
long min_orbit_dim(const SimpleType& kind);
long min_orbit_dim(const RootSystem& rs, const LeviData& levi);

/// The family of kind's stabilizer weight w (validated).
WeightFamily weight_family(const RootSystem& rs, const LeviData& levi, const StabilizerWeight& w);

RationalVector family_member(const SimpleType& kind, const StabilizerWeight& w, long param);

/// [lo, hi] outside of which every admissible member + rho pairs with all
/// complement coroots with one strict sign. The bound is
/// ceil(P0 / s) + 2, with P0 the largest |<base + rho, beta^vee>| and s the
/// smallest |<direction, beta^vee>| over complement roots beta; the margin of
/// two guarantees that the extreme admissible params inside the interval are
/// already strictly in the monotone regime.
ParamInterval scan_range(const RootSystem& rs, const LeviData& levi, const WeightFamily& family);
ParamInterval scan_range(const SimpleType& kind, const StabilizerWeight& w);

/// Integral weight sum_i coeffs_i varpi_i of an exceptional Levi.
RationalVector levi_weight(const LeviData& levi, const std::vector<long>& coeffs);

}  // namespace mcm
