#pragma once

// Closed-form MCM criteria for the classical types, plus the line-bundle
// checks on the cotangent bundle of projective space.
//
// Every gap set below is coded from its set comprehension as stated, without
// algebraic simplification, so that transcription slips surface in the
// oracle cross-check instead of being absorbed by it. Spin gap sets live in
// Z + 1/2; they are handled by doubling every quantity.

#include "mcm/families.hpp"

#include <optional>
#include <vector>

namespace mcm {

/// A gap set. The B and D sets are stored doubled (2N), flagged by
/// `doubled`, so that Spin weights need no separate code.
struct GapSet {
  std::vector<long> elements;
  bool doubled = false;
};

GapSet gap_set_A(int n, const WeightA& w);
GapSet gap_set_C(int n, const WeightC& w);
GapSet gap_set_D(int n, const WeightOrthogonal& w);
GapSet gap_set_B(int n, const WeightOrthogonal& w);

/// n >= 2; n = 1 has no closed form (every weight is MCM there).
bool mcm_closed_A(int n, const WeightA& w);
bool mcm_closed_C(int n, const WeightC& w);
/// n >= 3; integral or Spin according to w.spin.
bool mcm_closed_D(int n, const WeightOrthogonal& w);
bool mcm_closed_B(int n, const WeightOrthogonal& w);

/// Dispatch on kind; nullopt where no closed form exists (A1, B2, exceptional).
std::optional<bool> mcm_closed_form(const SimpleType& kind, const StabilizerWeight& w);

/// O(mD) on the A_n minimal orbit closure is MCM iff -n <= m <= n.
bool mcm_divisor_A(int n, long m);

struct CotangentVanishing {
  /// H^i(T*P^n, O(m)) = 0 for 1 <= i <= n - 1.
  bool h_mid_all_zero = false;
  /// Whenever the middle vanishes, H^n vanishes as well (true otherwise).
  bool h_top_zero_when_mid_zero = true;
  /// First symmetric degree j where H^{n-1}(S^j T(m)) was shown nonzero, and
  /// a lower bound for its dimension.
  std::optional<long> witness_degree;
  Integer witness_dimension = 0;
};

/// Vanishing pattern of O(m) pulled back to T*P^n, read off the twisted
/// symmetric powers of the Euler sequence degree by degree. n >= 2.
CotangentVanishing cotangent_line_bundle_vanishing(int n, long m);

}  // namespace mcm
