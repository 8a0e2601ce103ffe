#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace quadgenus {

using Integer = mpz_class;

/// Parses a decimal integer of arbitrary size. A leading '+' or '-' is
/// accepted; anything else that is not a digit raises InvalidInput.
Integer parse_integer(std::string_view text);

std::string to_string(Integer const & n);

/// Floor of the square root of n >= 0.
Integer isqrt(Integer const & n);

bool is_perfect_square(Integer const & n);

bool fits_int64(Integer const & n);

/// Converts n to int64_t, raising InvalidInput when it does not fit.
std::int64_t to_int64(Integer const & n);

struct PrimePower
{
    Integer prime;
    unsigned exponent = 0;
};

/// Factors |n| by trial division. Returns primes in ascending order; an
/// empty list for |n| = 1. Rejects n = 0.
std::vector<PrimePower> factor_trial(Integer const & n);

/// Same as factor_trial for machine-size input.
std::vector<std::pair<std::int64_t, unsigned>> factor_small(std::int64_t n);

/// Squarefree kernel with the sign of n kept, e.g. 840 -> 210, -12 -> -3.
Integer squarefree_kernel(Integer const & n);

bool is_squarefree(Integer const & n);

bool is_prime(Integer const & n);

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m);

/// Nonnegative remainder of a modulo m > 0.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Integer mod_floor(Integer const & a, Integer const & m);

} // namespace quadgenus
