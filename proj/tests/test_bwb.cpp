#include <doctest.h>

#include "mcm/bwb.hpp"
#include "weyl_brute_force.hpp"

#include <random>

using namespace mcm;

namespace {

RationalVector q(std::initializer_list<Rational> xs) { return RationalVector(xs); }

}  // namespace

TEST_CASE("singularity") {
  auto a2 = build_root_system({Family::A, 2});
  CHECK_FALSE(is_singular(a2, a2.rho));
  auto w = singular_witness(a2, q({1, 1, 0}));
  REQUIRE(w.has_value());
  CHECK(a2.positive_roots[*w] == q({1, -1, 0}));

  auto c2 = build_root_system({Family::C, 2});
  auto wc = singular_witness(c2, q({1, -1}));
  REQUIRE(wc.has_value());
  CHECK(c2.positive_roots[*wc] == q({1, 1}));
  CHECK_THROWS_AS(is_singular(c2, q({1, 2, 3})), InvalidArgument);
}

TEST_CASE("Weyl length") {
  auto a2 = build_root_system({Family::A, 2});
  CHECK(weyl_length_to_dominant(a2, q({2, 1, 0})) == 0);
  CHECK(weyl_length_to_dominant(a2, q({0, 1, 2})) == 3);
  CHECK(weyl_length_to_dominant(a2, q({1, 2, 0})) == 1);
  CHECK_THROWS_AS(weyl_length_to_dominant(a2, q({1, 1, 0})), InvalidArgument);
}

TEST_CASE("cohomology profiles") {
  auto a2 = build_root_system({Family::A, 2});
  CHECK(cohomology_profile(a2, q({0, 0, 0})) == CohomologyProfile::nonzero_in_degree(0));
  auto p = cohomology_profile(a2, q({0, 0, 1}));
  REQUIRE(p.is_singular());
  CHECK(a2.positive_roots[p.witness] == q({0, 1, -1}));

  // lambda = -2 rho makes lambda + rho = -rho, antidominant.
  auto g2 = build_root_system({Family::G, 2});
  CHECK(cohomology_profile(g2, Rational(-2) * g2.rho) == CohomologyProfile::nonzero_in_degree(6));
  CHECK(to_string(CohomologyProfile::nonzero_in_degree(6)) == "H^6");
  CHECK(to_string(CohomologyProfile::singular(0)) == "singular");
}

TEST_CASE("Weyl length agrees with brute-force orbit enumeration up to rank 4") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  for (const auto& t : brute::small_types()) {
    CAPTURE(to_string(t));
    auto rs = build_root_system(t);
    int tested = 0;
    while (tested < 500) {
      // Random rational point of the root span.
      RationalVector Lambda = zero_vector(rs.ambient_dim);
      for (const auto& a : rs.simple_roots) Lambda += make_rational(num(gen), den(gen)) * a;
      if (is_singular(rs, Lambda)) continue;
      ++tested;
      const std::size_t l = weyl_length_to_dominant(rs, Lambda);
      const auto walk = brute::walk(rs, Lambda);
      CHECK(l == walk.length);
      CHECK(walk.orbit_size == brute::weyl_order(t));
      // Complement under the longest element.
      CHECK(l + weyl_length_to_dominant(rs, Rational(-1) * Lambda) == rs.num_positive_roots());
    }
  }
}

TEST_CASE("components orthogonal to the root span do not matter") {
  // E6 and E7 sit inside R^8; shifting by a vector orthogonal to every root
  // must leave the profile unchanged.
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> num(-9, 9);
  for (auto t : {SimpleType{Family::E, 6}, SimpleType{Family::E, 7}, SimpleType{Family::A, 3}}) {
    CAPTURE(to_string(t));
    auto rs = build_root_system(t);
    // The orthogonal complement of the simple roots.
    std::vector<RationalVector> basis;
    for (std::size_t k = 0; k < rs.ambient_dim; ++k) {
      RationalVector v = unit_vector(rs.ambient_dim, k);
      for (const auto& b : basis) v = v - (dot(v, b) / dot(b, b)) * b;
      std::vector<RationalVector> span = rs.simple_roots;
      // Project away the root span via Gram-Schmidt on the simple roots.
      std::vector<RationalVector> ortho;
      for (auto a : span) {
        for (const auto& o : ortho) a = a - (dot(a, o) / dot(o, o)) * o;
        ortho.push_back(a);
      }
      for (const auto& o : ortho) v = v - (dot(v, o) / dot(o, o)) * o;
      if (!is_zero(v)) basis.push_back(v);
    }
    REQUIRE(basis.size() == rs.ambient_dim - rs.rank());
    for (int trial = 0; trial < 100; ++trial) {
      RationalVector lambda = zero_vector(rs.ambient_dim);
      for (const auto& a : rs.simple_roots) lambda += make_rational(num(gen), 2) * a;
      RationalVector shifted = lambda;
      for (const auto& b : basis) shifted += make_rational(num(gen), 3) * b;
      CHECK(cohomology_profile(rs, lambda) == cohomology_profile(rs, shifted));
    }
  }
}
