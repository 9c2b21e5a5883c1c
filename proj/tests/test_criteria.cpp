#include <doctest.h>

#include "mcm/criteria.hpp"
#include "mcm/engine.hpp"

using namespace mcm;

namespace {

const Rational half = make_rational(1, 2);

bool oracle(const SimpleType& kind, const StabilizerWeight& w) {
  return McmOracle(kind).decide(w, false).is_mcm;
}

}  // namespace

TEST_CASE("type A") {
  CHECK(mcm_closed_A(2, WeightA{2, {0}}));
  CHECK_FALSE(mcm_closed_A(2, WeightA{3, {0}}));
  for (long lambda = -6; lambda <= 6; ++lambda) {
    CAPTURE(lambda);
    const bool expected = lambda >= 0 && lambda <= 2;
    CHECK(mcm_closed_A(3, WeightA{lambda, {1, 0}}) == expected);
    CHECK(oracle({Family::A, 3}, WeightA{lambda, {1, 0}}) == expected);
  }
  CHECK_THROWS_AS(mcm_closed_A(1, WeightA{0, {}}), InvalidArgument);
  CHECK_FALSE(mcm_closed_form({Family::A, 1}, WeightA{0, {}}).has_value());
  // Every A1 weight is MCM: the minimal orbit closure is a surface.
  for (long lambda = -9; lambda <= 9; ++lambda) CHECK(oracle({Family::A, 1}, WeightA{lambda, {}}));
}

TEST_CASE("type C") {
  CHECK(mcm_closed_C(2, WeightC{0, {0}}));
  CHECK(mcm_closed_C(2, WeightC{0, {1}}));
  CHECK_FALSE(mcm_closed_C(2, WeightC{1, {1}}));
  for (const auto& w : {WeightC{0, {0}}, WeightC{0, {1}}, WeightC{1, {1}}})
    CHECK(oracle({Family::C, 2}, w) == mcm_closed_C(2, w));
}

TEST_CASE("type D") {
  CHECK(mcm_closed_D(3, WeightOrthogonal{0, {0}, false}));
  CHECK(mcm_closed_D(4, WeightOrthogonal{0, {0, 0}, false}));
  for (const auto& [n, w] : std::vector<std::pair<int, WeightOrthogonal>>{
           {3, {1, {1}, false}},
           {4, {1, {1, 0}, false}},
           {4, {1, {1, -1}, false}},
           {4, {0, {half, half}, true}},
           {4, {1, {half, -half}, true}},
           {5, {2, {make_rational(3, 2), half, -half}, true}}}) {
    CAPTURE(n);
    CAPTURE(to_string(w));
    CHECK(mcm_closed_D(n, w) == oracle({Family::D, n}, w));
  }
  // D3 = A3: the sign of lambda_1 is a diagram symmetry.
  for (long l = 0; l <= 3; ++l)
    for (long x = 1; x <= 4; ++x) {
      const WeightOrthogonal plus{l, {Rational(x)}, false}, minus{l, {Rational(-x)}, false};
      CHECK(mcm_closed_D(3, plus) == mcm_closed_D(3, minus));
      CHECK(oracle({Family::D, 3}, minus) == mcm_closed_D(3, minus));
    }
}

TEST_CASE("type B") {
  CHECK(mcm_closed_B(3, WeightOrthogonal{0, {0}, false}));
  CHECK(mcm_closed_B(4, WeightOrthogonal{0, {0, 0}, false}));
  for (const auto& [n, w] : std::vector<std::pair<int, WeightOrthogonal>>{
           {3, {2, {1}, false}},
           {4, {2, {1, 1}, false}},
           {4, {1, {half, half}, true}},
           {3, {0, {half}, true}},
           {5, {1, {make_rational(5, 2), half, half}, true}}}) {
    CAPTURE(n);
    CAPTURE(to_string(w));
    CHECK(mcm_closed_B(n, w) == oracle({Family::B, n}, w));
  }
  CHECK_FALSE(mcm_closed_form({Family::B, 2}, WeightOrthogonal{0, {}, false}).has_value());
  CHECK_THROWS_AS(mcm_closed_B(3, WeightOrthogonal{0, {-1}, false}), InvalidArgument);
}

TEST_CASE("gap sets of the zero weight") {
  // Structure sheaf: the gap sets must leave the MCM test passing.
  for (int n = 2; n <= 6; ++n) {
    CHECK(mcm_closed_A(n, WeightA{0, std::vector<long>(n - 1, 0)}));
    CHECK(mcm_closed_C(n, WeightC{0, std::vector<long>(n - 1, 0)}));
  }
  for (int n = 3; n <= 6; ++n) {
    CHECK(mcm_closed_B(n, WeightOrthogonal{0, std::vector<Rational>(n - 2, Rational(0)), false}));
    CHECK(mcm_closed_D(n, WeightOrthogonal{0, std::vector<Rational>(n - 2, Rational(0)), false}));
  }
}

TEST_CASE("divisors on the A_n minimal orbit closure") {
  CHECK(mcm_divisor_A(4, 4));
  CHECK_FALSE(mcm_divisor_A(4, 5));
  CHECK(mcm_divisor_A(2, -2));
  for (int n = 2; n <= 5; ++n)
    for (long m = -n - 2; m <= n + 2; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      // O(mD) is the weight (lambda = m; 0, ..., 0).
      const bool expected = -n <= m && m <= n;
      CHECK(mcm_divisor_A(n, m) == expected);
      CHECK(oracle({Family::A, n}, WeightA{m, std::vector<long>(n - 1, 0)}) == expected);
    }
  CHECK_THROWS_AS(mcm_divisor_A(1, 0), InvalidArgument);
}

TEST_CASE("line bundles on the cotangent bundle of projective space") {
  auto v = cotangent_line_bundle_vanishing(2, -2);
  CHECK(v.h_mid_all_zero);

  v = cotangent_line_bundle_vanishing(3, -4);
  CHECK_FALSE(v.h_mid_all_zero);
  REQUIRE(v.witness_degree.has_value());
  CHECK(*v.witness_degree == 1);
  CHECK(v.witness_dimension == 1);

  v = cotangent_line_bundle_vanishing(2, 0);
  CHECK(v.h_mid_all_zero);
  CHECK(v.h_top_zero_when_mid_zero);

  for (int n = 2; n <= 6; ++n)
    for (long m = -12; m <= 12; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto r = cotangent_line_bundle_vanishing(n, m);
      CHECK(r.h_mid_all_zero == (m >= -n));
      CHECK(r.h_top_zero_when_mid_zero);
      if (!r.h_mid_all_zero) {
        // Nonvanishing shows up by j = -n - m, where it has at least
        // C(-m - 1, n) dimensions.
        REQUIRE(r.witness_degree.has_value());
        CHECK(*r.witness_degree <= -n - m);
        CHECK(r.witness_dimension >= 1);
        if (*r.witness_degree == -n - m) {
          Integer binom;
          mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(-m - 1),
                       static_cast<unsigned long>(n));
          CHECK(r.witness_dimension >= binom);
        }
      }
      const bool both = r.h_mid_all_zero && cotangent_line_bundle_vanishing(n, -m).h_mid_all_zero;
      CHECK(both == mcm_divisor_A(n, m));
    }
  CHECK_THROWS_AS(cotangent_line_bundle_vanishing(1, 0), InvalidArgument);
}
