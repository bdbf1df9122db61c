#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstab {

using Rational = mpq_class;
using Integer = mpz_class;
using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

/// Malformed input or violated precondition. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check or optimality certificate failed. Always a bug;
/// maps to CLI exit code 3.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

int sign(const Rational& q);
int sign(std::int64_t v);

/// Exact conversion; throws InputError when the value is not an integer
/// fitting in 64 bits.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const Integer& z);

RatVec to_rational(const IntVec& v);

/// Primitive integral vector on the ray R_{>0}·v. Zero maps to zero.
IntVec primitive_on_ray(const RatVec& v);

Rational dot(const RatVec& x, const RatVec& y);

std::int64_t factorial(int n);

}  // namespace gitstab
