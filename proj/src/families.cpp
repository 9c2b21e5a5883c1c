#include "mcm/families.hpp"

#include <algorithm>
#include <sstream>

namespace mcm {

namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    if constexpr (std::is_same_v<T, Rational>)
      os << xs[i].get_str();
    else
      os << xs[i];
  }
  return os.str();
}

template <class T>
std::string with_levi_part(const std::string& head, const std::vector<T>& xs) {
  return xs.empty() ? head : head + ";" + join(xs);
}

[[noreturn]] void reject(const SimpleType& kind, const std::string& why) {
  throw InvalidArgument("invalid " + to_string(kind) + " weight: " + why);
}

void require_size(const SimpleType& kind, std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    reject(kind, std::string("expected ") + std::to_string(want) + " " + what + ", got " +
                     std::to_string(got));
}

template <class T>
void require_nonincreasing(const SimpleType& kind, const std::vector<T>& xs, std::size_t upto) {
  for (std::size_t i = 0; i + 1 < upto && i + 1 < xs.size(); ++i)
    if (xs[i] < xs[i + 1])
      reject(kind, "lambda_" + std::to_string(i + 1) + " < lambda_" + std::to_string(i + 2) +
                       " violates lambda_1 >= lambda_2 >= ...");
}

bool is_half_odd(const Rational& x) { return x.get_den() == 2; }

long mod2(long x) { return ((x % 2) + 2) % 2; }

}  // namespace

std::string to_string(const StabilizerWeight& w) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, WeightA>)
          return with_levi_part(std::to_string(v.lambda), v.lambdas);
        else if constexpr (std::is_same_v<T, WeightC>)
          return with_levi_part(std::to_string(v.lambda0), v.lambdas);
        else if constexpr (std::is_same_v<T, WeightOrthogonal>)
          return with_levi_part(std::to_string(v.lambda), v.lambdas);
        else
          return join(v.coeffs);
      },
      w);
}

StabilizerWeight zero_weight(const SimpleType& kind) {
  make_simple_type(kind.family, kind.rank);
  const auto n = static_cast<std::size_t>(kind.rank);
  switch (kind.family) {
    case Family::A: return WeightA{0, std::vector<long>(n - 1, 0)};
    case Family::C: return WeightC{0, std::vector<long>(n - 1, 0)};
    case Family::B:
    case Family::D: return WeightOrthogonal{0, std::vector<Rational>(n - 2, Rational(0)), false};
    default: {
      auto levi = levi_subsystem(build_root_system(kind));
      return WeightExceptional{std::vector<long>(levi.rank(), 0)};
    }
  }
}

void validate_weight(const SimpleType& kind, const StabilizerWeight& w) {
  make_simple_type(kind.family, kind.rank);
  const auto n = static_cast<std::size_t>(kind.rank);
  switch (kind.family) {
    case Family::A: {
      auto* a = std::get_if<WeightA>(&w);
      if (!a) reject(kind, "expected lambda;lambda_1,...,lambda_{n-1}");
      require_size(kind, a->lambdas.size(), n - 1, "Levi coordinates");
      require_nonincreasing(kind, a->lambdas, a->lambdas.size());
      return;
    }
    case Family::C: {
      auto* c = std::get_if<WeightC>(&w);
      if (!c) reject(kind, "expected lambda_0;lambda_1,...,lambda_{n-1}");
      require_size(kind, c->lambdas.size(), n - 1, "Levi coordinates");
      if (c->lambda0 != 0 && c->lambda0 != 1) reject(kind, "lambda_0 must be 0 or 1 (it lives in Z/2)");
      require_nonincreasing(kind, c->lambdas, c->lambdas.size());
      if (!c->lambdas.empty() && c->lambdas.back() < 0)
        reject(kind, "lambda_{n-1} must be >= 0");
      return;
    }
    case Family::B:
    case Family::D: {
      auto* o = std::get_if<WeightOrthogonal>(&w);
      if (!o) reject(kind, "expected lambda;lambda_1,...,lambda_{n-2}");
      require_size(kind, o->lambdas.size(), n - 2, "Levi coordinates");
      if (o->lambda < 0) reject(kind, "lambda must be >= 0");
      for (std::size_t i = 0; i < o->lambdas.size(); ++i) {
        const auto& x = o->lambdas[i];
        if (o->spin ? !is_half_odd(x) : !is_integer(x))
          reject(kind, "lambda_" + std::to_string(i + 1) + " = " + x.get_str() +
                           (o->spin ? " is not in Z + 1/2 (Spin sublattice needs all half-integers)"
                                    : " is not an integer (use all half-integers for Spin)"));
      }
      if (kind.family == Family::B) {
        require_nonincreasing(kind, o->lambdas, o->lambdas.size());
        if (!o->lambdas.empty() && sgn(o->lambdas.back()) < 0)
          reject(kind, "lambda_{n-2} must be >= 0");
      } else if (n >= 4) {
        require_nonincreasing(kind, o->lambdas, n - 3);
        if (o->lambdas[n - 4] < abs(o->lambdas[n - 3]))
          reject(kind, "lambda_{n-3} >= |lambda_{n-2}| fails");
      }
      return;
    }
    default: {
      auto* e = std::get_if<WeightExceptional>(&w);
      if (!e) reject(kind, "expected comma-separated varpi coefficients");
      const std::size_t r = static_cast<std::size_t>(kind.rank) - 1;
      require_size(kind, e->coeffs.size(), r, "varpi coefficients");
      for (std::size_t i = 0; i < r; ++i)
        if (e->coeffs[i] < 0) reject(kind, "coefficient " + std::to_string(i + 1) + " is negative");
      return;
    }
  }
}

bool levi_dominant_check(const SimpleType& kind, const StabilizerWeight& w) {
  try {
    validate_weight(kind, w);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

WeightA canonicalize(const WeightA& w) {
  if (w.lambdas.empty()) return w;
  const long t = w.lambdas.back();
  WeightA out{w.lambda - 2 * t, w.lambdas};
  for (auto& x : out.lambdas) x -= t;
  return out;
}

bool WeightFamily::admissible(long j) const { return mod2(j) == residue; }

RationalVector WeightFamily::member_unchecked(long j) const {
  return base + Rational(j) * direction;
}

RationalVector WeightFamily::member(long j) const {
  if (!admissible(j))
    throw InvalidArgument(parameter_name + " = " + std::to_string(j) + " is not admissible: " +
                          parameter_name + " must be " + (residue ? "odd" : "even"));
  return member_unchecked(j);
}

long WeightFamily::admissible_at_or_above(long j) const { return admissible(j) ? j : j + 1; }

long WeightFamily::admissible_at_or_below(long j) const { return admissible(j) ? j : j - 1; }

long min_orbit_dim(const RootSystem& rs, const LeviData& levi) {
  return 1 + static_cast<long>(rs.num_positive_roots()) -
         static_cast<long>(levi.positive_roots_levi.size());
}

long min_orbit_dim(const SimpleType& kind) {
  auto rs = build_root_system(kind);
  return min_orbit_dim(rs, levi_subsystem(rs));
}

RationalVector levi_weight(const LeviData& levi, const std::vector<long>& coeffs) {
  if (coeffs.size() != levi.rank())
    throw InvalidArgument("expected " + std::to_string(levi.rank()) + " varpi coefficients");
  RationalVector v = zero_vector(levi.fundamental_weights.empty()
                                     ? 0
                                     : levi.fundamental_weights[0].size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) v += Rational(coeffs[i]) * levi.fundamental_weights[i];
  return v;
}

WeightFamily weight_family(const RootSystem& rs, const LeviData& levi, const StabilizerWeight& w) {
  validate_weight(rs.kind, w);
  const std::size_t dim = rs.ambient_dim;
  const Rational half(1, 2);
  WeightFamily f;
  f.base = zero_vector(dim);
  f.direction = zero_vector(dim);
  switch (rs.kind.family) {
    case Family::A: {
      const auto& a = std::get<WeightA>(w);
      f.base[0] = half * a.lambda;
      f.base[dim - 1] = half * a.lambda;
      for (std::size_t i = 0; i < a.lambdas.size(); ++i) f.base[i + 1] = a.lambdas[i];
      f.direction[0] = -half;
      f.direction[dim - 1] = half;
      f.residue = static_cast<int>(mod2(a.lambda));
      break;
    }
    case Family::C: {
      const auto& c = std::get<WeightC>(w);
      for (std::size_t i = 0; i < c.lambdas.size(); ++i) f.base[i + 1] = c.lambdas[i];
      f.direction[0] = -1;
      f.residue = c.lambda0;
      break;
    }
    case Family::B:
    case Family::D: {
      const auto& o = std::get<WeightOrthogonal>(w);
      f.base[0] = half * o.lambda;
      f.base[1] = -half * o.lambda;
      for (std::size_t i = 0; i < o.lambdas.size(); ++i) f.base[i + 2] = o.lambdas[i];
      f.direction[0] = -half;
      f.direction[1] = -half;
      // The first two coordinates must share the integrality of the rest.
      f.residue = static_cast<int>(mod2(o.lambda + (o.spin ? 1 : 0)));
      break;
    }
    default: {
      const auto& e = std::get<WeightExceptional>(w);
      f.base = levi_weight(levi, e.coeffs);
      f.direction = half * rs.theta;
      // J is one residue class mod 2: the one making every simple-coroot
      // pairing integral.
      auto integral = [&](long j) {
        const RationalVector v = f.member_unchecked(j);
        return std::all_of(rs.simple_coroots.begin(), rs.simple_coroots.end(),
                           [&](const RationalVector& c) { return is_integer(dot(v, c)); });
      };
      const bool even = integral(0), odd = integral(1);
      if (even == odd)
        throw InternalError("integrality set of " + to_string(rs.kind) + " weight " +
                            to_string(w) + " is not a single residue class");
      f.residue = odd ? 1 : 0;
      break;
    }
  }
  return f;
}

RationalVector family_member(const SimpleType& kind, const StabilizerWeight& w, long param) {
  auto rs = build_root_system(kind);
  auto levi = levi_subsystem(rs);
  return weight_family(rs, levi, w).member(param);
}

ParamInterval scan_range(const RootSystem& rs, const LeviData& levi, const WeightFamily& family) {
  const RationalVector shifted = family.base + rs.rho;
  Rational p0 = 0;
  std::optional<Rational> slope;
  for (std::size_t b : levi.complement_indices) {
    const auto& co = rs.positive_coroots[b];
    p0 = std::max(p0, Rational(abs(dot(shifted, co))));
    const Rational s = abs(dot(family.direction, co));
    if (sgn(s) == 0)
      throw InternalError("family direction is orthogonal to a complement coroot of " +
                          to_string(rs.kind));
    if (!slope || s < *slope) slope = s;
  }
  if (!slope) throw InternalError("empty complement in " + to_string(rs.kind));
  const long hi = to_long(Rational(ceil(p0 / *slope))) + 2;
  return {-hi, hi};
}

ParamInterval scan_range(const SimpleType& kind, const StabilizerWeight& w) {
  auto rs = build_root_system(kind);
  auto levi = levi_subsystem(rs);
  return scan_range(rs, levi, weight_family(rs, levi, w));
}

}  // namespace mcm
