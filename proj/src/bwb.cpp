#include "mcm/bwb.hpp"

namespace mcm {

CohomologyProfile CohomologyProfile::singular(std::size_t witness_root) {
  CohomologyProfile p;
  p.kind = Kind::Singular;
  p.witness = witness_root;
  return p;
}

CohomologyProfile CohomologyProfile::nonzero_in_degree(std::size_t q) {
  CohomologyProfile p;
  p.kind = Kind::NonzeroInDegree;
  p.degree = q;
  return p;
}

std::string to_string(const CohomologyProfile& p) {
  if (p.is_singular()) return "singular";
  return "H^" + std::to_string(p.degree);
}

namespace {

void require_ambient(const RootSystem& rs, const RationalVector& v) {
  if (v.size() != rs.ambient_dim)
    throw InvalidArgument("weight has " + std::to_string(v.size()) + " coordinates, " +
                          to_string(rs.kind) + " needs " + std::to_string(rs.ambient_dim));
}

}  // namespace

std::optional<std::size_t> singular_witness(const RootSystem& rs, const RationalVector& Lambda) {
  require_ambient(rs, Lambda);
  for (std::size_t b = 0; b < rs.num_positive_roots(); ++b)
    if (sgn(dot(Lambda, rs.positive_coroots[b])) == 0) return b;
  return std::nullopt;
}

bool is_singular(const RootSystem& rs, const RationalVector& Lambda) {
  return singular_witness(rs, Lambda).has_value();
}

std::size_t weyl_length_to_dominant(const RootSystem& rs, const RationalVector& Lambda) {
  require_ambient(rs, Lambda);
  std::size_t negative = 0;
  for (const auto& c : rs.positive_coroots) {
    const int s = sgn(dot(Lambda, c));
    if (s == 0) throw InvalidArgument("weight " + to_string(Lambda) + " is singular");
    negative += s < 0;
  }
  return negative;
}

CohomologyProfile cohomology_profile(const RootSystem& rs, const RationalVector& lambda) {
  require_ambient(rs, lambda);
  const RationalVector Lambda = lambda + rs.rho;
  std::size_t negative = 0;
  for (std::size_t b = 0; b < rs.num_positive_roots(); ++b) {
    const int s = sgn(dot(Lambda, rs.positive_coroots[b]));
    if (s == 0) return CohomologyProfile::singular(b);
    negative += s < 0;
  }
  return CohomologyProfile::nonzero_in_degree(negative);
}

}  // namespace mcm
