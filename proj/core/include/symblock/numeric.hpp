#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "symblock/error.hpp"

namespace symblock {

// Exact arithmetic is delegated to GMP. mpq_class is kept canonical
// (reduced, positive denominator) by construction, which is exactly the
// Rational contract we need.
using Int = mpz_class;
using Rat = mpq_class;

/// p-adic valuation of a non-zero integer.
long p_valuation_int(const Int& n, long p);

/// p-adic valuation of a rational: v(num) - v(den). Zero is reported
/// through `infinite`.
struct Valuation {
    bool infinite = false;
    long value = 0;

    bool operator==(const Valuation&) const = default;
};

Valuation p_valuation(const Rat& q, long p);

/// Legendre's formula: v_p(n!).
long factorial_valuation(long n, long p);

Int binomial(long n, long k);
Int factorial(long n);

/// Renders "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

/// Complete factorization of |n| (trial division + Pollard rho).
/// Returns (prime, exponent) pairs with primes increasing. n must be nonzero.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

/// All positive divisors of |n|, built from factorize(). Throws
/// CapExceededError if there would be more than `cap` of them.
std::vector<Int> divisors(const Int& n, std::size_t cap = 2'000'000);

}  // namespace symblock
