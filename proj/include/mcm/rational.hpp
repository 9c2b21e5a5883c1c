#pragma once

// Exact rational scalars and ambient-coordinate vectors.
//
// Everything in the library is computed with GMP rationals; mpq_class keeps
// values canonical (reduced, positive denominator), so == is structural.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcm {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for inputs outside an operation's contract (bad type, bad weight,
/// wrong dimension, ...). The CLI maps this to exit status 2.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

Rational make_rational(long num, long den = 1);

/// Parses "3", "-7", "1/2", "-5/2". Rejects anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(std::span<const Rational> v);

bool is_integer(const Rational& q);
/// Requires is_integer(q); throws InternalError otherwise.
long to_long(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

RationalVector zero_vector(std::size_t dim);
RationalVector unit_vector(std::size_t dim, std::size_t i);

/// Euclidean inner product; throws InvalidArgument on dimension mismatch.
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
RationalVector& operator+=(RationalVector& a, const RationalVector& b);

bool is_zero(std::span<const Rational> v);

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
/// Throws InvalidArgument if the matrix is singular or not square.
std::vector<RationalVector> invert(std::vector<RationalVector> m);

}  // namespace mcm
