#include "mcm/rational.hpp"

#include <cctype>
#include <sstream>

namespace mcm {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  if (pos == s.size()) return false;
  for (std::size_t i = pos; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  Integer num, den = 1;
  auto slash = s.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(s, num)
                : parse_integer(s.substr(0, slash), num) &&
                      parse_integer(s.substr(slash + 1), den) && den > 0;
  if (!ok) throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw InternalError("expected a machine integer, got " + q.get_str());
  return q.get_num().get_si();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

RationalVector zero_vector(std::size_t dim) { return RationalVector(dim, Rational(0)); }

RationalVector unit_vector(std::size_t dim, std::size_t i) {
  RationalVector v = zero_vector(dim);
  v.at(i) = 1;
  return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw InvalidArgument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  RationalVector r = a;
  r += b;
  return r;
}

RationalVector& operator+=(RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch in vector sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch in vector difference");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::vector<RationalVector> invert(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("matrix is not square");
  std::vector<RationalVector> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = unit_vector(n, i);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw InvalidArgument("matrix is singular");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational p = m[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace mcm
