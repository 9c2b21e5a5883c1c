#include "mcm/criteria.hpp"

#include <algorithm>
#include <set>

namespace mcm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

bool contains(const std::vector<long>& xs, long x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Doubled Levi coordinates, 1-based: L[i] = 2 lambda_i.
std::vector<long> doubled(const std::vector<Rational>& xs) {
  std::vector<long> out{0};
  for (const auto& x : xs) out.push_back(to_long(Rational(2) * x));
  return out;
}

void check_orthogonal(const char* family, int n, const WeightOrthogonal& w) {
  require(n >= 3, std::string(family) + " closed form needs n >= 3");
  validate_weight({family[0] == 'B' ? Family::B : Family::D, n}, w);
}

// dim H^n(P^n, O(d)).
Integer top_cohomology_dim(int n, long d) {
  if (d > -n - 1) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(-d - 1), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long top, int n) {
  if (top < n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

GapSet gap_set_A(int n, const WeightA& w) {
  require(n >= 2, "A closed form needs n >= 2");
  validate_weight({Family::A, n}, w);
  const auto& l = w.lambdas;
  auto lam = [&](int i) { return l[static_cast<std::size_t>(i - 1)]; };
  GapSet g;
  // A = {N in Z : lambda_{n-1} + 1 < N < lambda_1 + n - 1, N != lambda_i + n - i,
  //      N != (lambda + n)/2}
  for (long N = lam(n - 1) + 2; N < lam(1) + n - 1; ++N) {
    bool excluded = false;
    for (int i = 1; i <= n - 1; ++i) excluded |= N == lam(i) + n - i;
    excluded |= 2 * N == w.lambda + n;
    if (!excluded) g.elements.push_back(N);
  }
  return g;
}

bool mcm_closed_A(int n, const WeightA& w) {
  const GapSet A = gap_set_A(n, w);
  const auto& l = w.lambdas;
  auto lam = [&](int i) { return l[static_cast<std::size_t>(i - 1)]; };
  const long lambda = w.lambda;

  if (lam(1) == lam(n - 1)) {
    const long mu = lam(1);
    return 2 * mu - n <= lambda && lambda <= 2 * mu + n;
  }
  int M = 1, m = n - 1;
  for (int i = 1; i <= n - 1; ++i)
    if (lam(i) == lam(1)) M = i;
  for (int i = n - 1; i >= 1; --i)
    if (lam(i) == lam(n - 1)) m = i;
  if (!(lam(n - 1) + lam(M) - M <= lambda && lambda <= lam(1) + lam(m) + n - m)) return false;
  // lambda in the intersection over alpha in A of {lambda_i + alpha - i}.
  for (long alpha : A.elements) {
    bool hit = false;
    for (int i = 1; i <= n - 1; ++i) hit |= lambda == lam(i) + alpha - i;
    if (!hit) return false;
  }
  return true;
}

GapSet gap_set_C(int n, const WeightC& w) {
  require(n >= 2, "C closed form needs n >= 2");
  validate_weight({Family::C, n}, w);
  const auto& l = w.lambdas;
  auto lam = [&](int i) { return l[static_cast<std::size_t>(i - 1)]; };
  GapSet g;
  // A = {N in Z : |N| < lambda_1 + n - 1, N != 0, N != +-(lambda_i + n - i)}
  const long bound = lam(1) + n - 1;
  for (long N = -bound + 1; N < bound; ++N) {
    if (N == 0) continue;
    bool excluded = false;
    for (int i = 1; i <= n - 1; ++i) excluded |= N == lam(i) + n - i || N == -(lam(i) + n - i);
    if (!excluded) g.elements.push_back(N);
  }
  return g;
}

bool mcm_closed_C(int n, const WeightC& w) {
  const GapSet A = gap_set_C(n, w);
  const long target = ((n - w.lambda0) % 2 + 2) % 2;
  for (long k : A.elements)
    if (((k % 2) + 2) % 2 == target) return false;
  return true;
}

GapSet gap_set_D(int n, const WeightOrthogonal& w) {
  check_orthogonal("D", n, w);
  const auto L = doubled(w.lambdas);
  const long Lam = 2 * w.lambda;
  GapSet g;
  g.doubled = true;
  // A = {N in Z + lambda_1 : -lambda_1 - 2n + 4 <= N <= lambda + lambda_1 - 1,
  //      N != lambda_i - i - 1, N != -lambda_i - 2n + 3 + i}, all doubled.
  for (long K = -L[1] - 4 * n + 8; K <= Lam + L[1] - 2; K += 2) {
    bool excluded = false;
    for (int i = 1; i <= n - 2; ++i)
      excluded |= K == L[i] - 2 * i - 2 || K == -L[i] - 4 * n + 6 + 2 * i;
    if (!excluded) g.elements.push_back(K);
  }
  return g;
}

bool mcm_closed_D(int n, const WeightOrthogonal& w_in) {
  // For n = 3 the chain lambda_1 >= ... >= |lambda_{n-2}| degenerates to
  // lambda_1 >= 0, yet every lambda_1 is a dominant weight of the stabilizer.
  // The sign change of the last coordinate fixes theta and rho and permutes
  // the positive roots, so it preserves the verdict: reduce to lambda_1 >= 0.
  WeightOrthogonal w = w_in;
  if (n == 3 && w.lambdas.size() == 1 && sgn(w.lambdas[0]) < 0) w.lambdas[0] = -w.lambdas[0];
  const GapSet A = gap_set_D(n, w);
  const auto L = doubled(w.lambdas);
  const long Lam = 2 * w.lambda;
  // lambda in the intersection over k in A of
  //   U_i {k - lambda_i + i, k + 2n - 4 + lambda_i - i} U {2k + 2n - 3}.
  for (long K : A.elements) {
    std::vector<long> allowed;
    for (int i = 1; i <= n - 2; ++i) {
      allowed.push_back(K - L[i] + 2 * i);
      allowed.push_back(K + 4 * n - 8 + L[i] - 2 * i);
    }
    allowed.push_back(2 * K + 4 * n - 6);
    if (!contains(allowed, Lam)) return false;
  }
  return true;
}

GapSet gap_set_B(int n, const WeightOrthogonal& w) {
  check_orthogonal("B", n, w);
  const auto L = doubled(w.lambdas);
  const long Lam = 2 * w.lambda;
  GapSet g;
  g.doubled = true;
  // A = {N in Z + lambda_1 : -lambda_1 - 2n + 3 <= N <= lambda + lambda_1 - 1,
  //      N != lambda_i - 1 - i, N != -lambda_i - 2n + 2 + i (, N != 1/2 - n for Spin)}.
  for (long K = -L[1] - 4 * n + 6; K <= Lam + L[1] - 2; K += 2) {
    bool excluded = false;
    for (int i = 1; i <= n - 2; ++i)
      excluded |= K == L[i] - 2 - 2 * i || K == -L[i] - 4 * n + 4 + 2 * i;
    if (w.spin) excluded |= K == 1 - 2 * n;
    if (!excluded) g.elements.push_back(K);
  }
  return g;
}

bool mcm_closed_B(int n, const WeightOrthogonal& w) {
  const GapSet A = gap_set_B(n, w);
  const auto L = doubled(w.lambdas);
  const long Lam = 2 * w.lambda;
  // lambda in the intersection over k in A of
  //   U_i {k - lambda_i + i, k + lambda_i + 2n - 3 - i} U {2k + 2n - 2 (, k + n - 3/2 for Spin)}.
  for (long K : A.elements) {
    std::vector<long> allowed;
    for (int i = 1; i <= n - 2; ++i) {
      allowed.push_back(K - L[i] + 2 * i);
      allowed.push_back(K + L[i] + 4 * n - 6 - 2 * i);
    }
    allowed.push_back(2 * K + 4 * n - 4);
    if (w.spin) allowed.push_back(K + 2 * n - 3);
    if (!contains(allowed, Lam)) return false;
  }
  return true;
}

std::optional<bool> mcm_closed_form(const SimpleType& kind, const StabilizerWeight& w) {
  validate_weight(kind, w);
  switch (kind.family) {
    case Family::A:
      if (kind.rank < 2) return std::nullopt;
      return mcm_closed_A(kind.rank, std::get<WeightA>(w));
    case Family::C: return mcm_closed_C(kind.rank, std::get<WeightC>(w));
    case Family::B:
      if (kind.rank < 3) return std::nullopt;
      return mcm_closed_B(kind.rank, std::get<WeightOrthogonal>(w));
    case Family::D: return mcm_closed_D(kind.rank, std::get<WeightOrthogonal>(w));
    default: return std::nullopt;
  }
}

bool mcm_divisor_A(int n, long m) {
  require(n >= 2, "divisor criterion needs n >= 2");
  return -n <= m && m <= n;
}

CotangentVanishing cotangent_line_bundle_vanishing(int n, long m) {
  require(n >= 2, "cotangent vanishing needs n >= 2");
  // 0 -> O(j-1+m)^C(j+n-1,n) -> O(j+m)^C(j+n,n) -> S^j T(m) -> 0 gives
  // 0 -> H^{n-1}(S^j T(m)) -> H^n(O(j-1+m))^a -> H^n(O(j+m))^b -> H^n(S^j T(m)) -> 0.
  // Beyond j = max(0, -m) + 1 both H^n terms vanish.
  CotangentVanishing out;
  bool mid_nonzero = false, undetermined = false, top_nonzero = false;
  const long last = std::max(0L, -m) + 1;
  for (long j = 0; j <= last; ++j) {
    const Integer ha = binomial(j + n - 1, n) * top_cohomology_dim(n, j - 1 + m);
    const Integer hb = binomial(j + n, n) * top_cohomology_dim(n, j + m);
    if (ha == 0) {
      top_nonzero |= hb != 0;
    } else if (ha > hb) {
      if (!mid_nonzero) {
        out.witness_degree = j;
        out.witness_dimension = ha - hb;
      }
      mid_nonzero = true;
    } else {
      undetermined = true;
    }
  }
  if (!mid_nonzero && undetermined)
    throw InternalError("H^" + std::to_string(n - 1) + "(T*P^" + std::to_string(n) + ", O(" +
                        std::to_string(m) + ")) is not determined by dimensions alone");
  out.h_mid_all_zero = !mid_nonzero;
  out.h_top_zero_when_mid_zero = mid_nonzero || !top_nonzero;
  return out;
}

}  // namespace mcm
