#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace kappa {

// GMP rationals are canonicalized after every arithmetic operation, so a
// Rational is always in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// "num/den" form, denominator always present ("3/1").
std::string to_fraction_string(const Rational& r);

// Shortest form: "3" for integers, "1/24" otherwise.
std::string to_string(const Rational& r);

// Accepts "a", "-a", "a/b"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

struct RationalHash {
    std::size_t operator()(const Rational& r) const;
};

}  // namespace kappa
