#pragma once

// Exact arithmetic primitives shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tca {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when textual or JSON input does not parse.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "num/den", or plain "num" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // zero unless 0 <= k <= n; n may be negative (generalized)
Integer falling_factorial(const Integer& x, unsigned k);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// (-1)^k
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

Rational rational_pow(const Rational& base, unsigned exp);

}  // namespace tca
