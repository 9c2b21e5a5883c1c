#pragma once

// Exact realizations of the simple root systems and of the Levi subsystem
// orthogonal to the highest root.
//
// Classical types use the usual epsilon coordinates with Bourbaki ordering:
//   A_n  in R^{n+1}:  alpha_i = e_i - e_{i+1}
//   B_n  in R^n:      alpha_i = e_i - e_{i+1}, alpha_n = e_n
//   C_n  in R^n:      alpha_i = e_i - e_{i+1}, alpha_n = 2 e_n
//   D_n  in R^n:      alpha_i = e_i - e_{i+1}, alpha_n = e_{n-1} + e_n
// E6 and E7 live inside R^8 (E6 on x6 = x7 = -x8, E7 on x7 = -x8) and share
// the E8 simple roots alpha_1..alpha_6 / alpha_1..alpha_7. F4 lives in R^4 and
// G2 in the plane x1 + x2 + x3 = 0 of R^3. The exceptional simple-root lists
// are fixed so that Levi fundamental-weight coefficients line up with the
// reference classification tables.

#include "mcm/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcm {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
/// Accepts one of "ABCDEFG" (case-insensitive).
Family parse_family(std::string_view s);

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Validates (family, rank): A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8},
/// F n=4, G n=2. Throws InvalidArgument naming the violated constraint.
SimpleType make_simple_type(Family family, int rank);
bool is_admissible(Family family, int rank);
bool is_exceptional(const SimpleType& t);
bool is_classical(const SimpleType& t);

std::string to_string(const SimpleType& t);

/// Components of a type after the usual low-rank identifications
/// (B1 = C1 = A1, C2 = B2, D2 = A1+A1, D3 = A3, A0/D1 empty). Unlike
/// make_simple_type this accepts degenerate ranks, which is what is needed to
/// read off tables such as "A1 + B_{n-2}" at small n.
std::vector<SimpleType> normalized_components(Family family, int rank);
std::string to_string(const std::vector<SimpleType>& components);

/// An immutable root datum. Positive roots are sorted by
/// (height, lexicographic ambient coordinates).
struct RootSystem {
  SimpleType kind;
  std::size_t ambient_dim = 0;
  std::vector<RationalVector> simple_roots;
  std::vector<RationalVector> simple_coroots;
  /// cartan[i][j] = <alpha_i, alpha_j^vee>.
  std::vector<std::vector<long>> cartan;

  std::vector<RationalVector> positive_roots;
  std::vector<RationalVector> positive_coroots;
  /// root_coefficients[b][i]: beta = sum_i c_i alpha_i.
  std::vector<std::vector<long>> root_coefficients;
  /// coroot_matrix[b][i]: beta^vee = sum_i c_i alpha_i^vee.
  std::vector<std::vector<long>> coroot_matrix;

  std::size_t theta_index = 0;
  RationalVector theta;
  RationalVector theta_covector;
  RationalVector rho;

  std::size_t rank() const { return simple_roots.size(); }
  std::size_t num_positive_roots() const { return positive_roots.size(); }

  /// Index of v in positive_roots, if v is a positive root.
  std::optional<std::size_t> positive_index(const RationalVector& v) const;
  /// True if v or -v is a positive root.
  bool is_root(const RationalVector& v) const;
};

struct LeviData {
  /// Indices (into RootSystem::simple_roots) of the Levi simple roots
  /// beta_1, beta_2, ... in the conventional order.
  std::vector<std::size_t> simple_indices;
  std::vector<RationalVector> simple_roots_levi;
  /// Simple roots not orthogonal to theta.
  std::vector<std::size_t> non_levi_simple_indices;

  std::vector<std::size_t> positive_indices_levi;
  std::vector<RationalVector> positive_roots_levi;
  std::vector<std::size_t> complement_indices;
  std::vector<RationalVector> complement_roots;

  /// Components read off the Levi Cartan matrix, sorted.
  std::vector<SimpleType> classified_type;
  /// varpi_i: <varpi_i, beta_j^vee> = delta_ij, varpi_i in span(beta).
  std::vector<RationalVector> fundamental_weights;

  std::size_t rank() const { return simple_indices.size(); }
};

RootSystem build_root_system(const SimpleType& kind);

const RationalVector& highest_root(const RootSystem& rs);
const RationalVector& rho(const RootSystem& rs);

/// 2 beta / (beta, beta); throws InvalidArgument if beta is not a root of rs.
RationalVector coroot(const RootSystem& rs, const RationalVector& beta);

/// <lambda, beta^vee> given the coroot beta^vee directly: the ambient inner
/// product. Throws InvalidArgument on dimension mismatch.
Rational pair(std::span<const Rational> lambda, std::span<const Rational> beta_covector);

/// Coefficients of theta^vee over the simple coroots.
std::vector<long> theta_covector_simple_expansion(const RootSystem& rs);

LeviData levi_subsystem(const RootSystem& rs);

/// 1-based, as in varpi_1 ... varpi_r. Throws InvalidArgument when out of range.
const RationalVector& levi_fundamental_weight(const LeviData& levi, std::size_t i);

/// Connected components of a Cartan matrix, each identified by its Dynkin
/// diagram and reported in normalized form.
std::vector<SimpleType> classify_cartan(const std::vector<std::vector<long>>& cartan);

}  // namespace mcm
