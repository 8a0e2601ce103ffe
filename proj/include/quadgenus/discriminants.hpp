#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quadgenus/integer.hpp"

namespace quadgenus {

/*
 * An element of the group of quadratic discriminants: either the unit 1
 * (the trivial extension) or the discriminant of a quadratic field, i.e.
 * d = 1 mod 4 squarefree, or d = 4m with m = 2, 3 mod 4 squarefree.
 */
class Discriminant
{
  public:
    /// Validates `value`; throws InvalidInput if it is not 1 or fundamental.
    static Discriminant from_integer(Integer const & value);
    static Discriminant unit() { return Discriminant(Integer(1)); }

    Integer const & value() const { return value_; }
    bool is_unit() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    Integer abs_value() const { return abs(value_); }
    bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }

    friend bool operator==(Discriminant const &, Discriminant const &) = default;

  private:
    explicit Discriminant(Integer value) : value_(std::move(value)) {}
    Integer value_;

    friend class PrimeDiscriminant;
    friend Discriminant disc_mul(Discriminant const &, Discriminant const &);
};

/// One of -4, 8, -8, p (p = 1 mod 4 prime) or -q (q = 3 mod 4 prime).
class PrimeDiscriminant
{
  public:
    static PrimeDiscriminant from_integer(Integer const & value);

    Integer const & value() const { return value_; }
    /// The single rational prime dividing the value.
    Integer const & prime() const { return prime_; }
    int sign() const { return sgn(value_); }
    Discriminant as_discriminant() const { return Discriminant(value_); }

    friend bool operator==(PrimeDiscriminant const & x, PrimeDiscriminant const & y)
    {
        return x.value_ == y.value_;
    }

  private:
    PrimeDiscriminant(Integer value, Integer prime)
        : value_(std::move(value)), prime_(std::move(prime)) {}
    Integer value_;
    Integer prime_;
};

/*
 * Factorization d = d_1 ... d_r d_{r+1} ... d_t into prime discriminants.
 * Negative factors come first; each sign block is sorted by absolute value.
 */
struct PrimeDiscriminantFactorization
{
    std::vector<PrimeDiscriminant> factors;
    std::size_t negative_count = 0;  // r

    std::size_t size() const { return factors.size(); }  // t
    Integer product() const;
};

/// True iff n = 1 or n is a fundamental discriminant. Rejects n = 0.
bool is_fundamental(Integer const & n);

/// Discriminant of Q(sqrt(a)); a need not be squarefree. Squares give 1.
Discriminant disc_of_sqrt(Integer const & a);

/// Group law: the discriminant of Q(sqrt(d1 d2)).
Discriminant disc_mul(Discriminant const & d1, Discriminant const & d2);

PrimeDiscriminantFactorization factor_prime_discriminants(Discriminant const & d);

/// Prime discriminant attached to a rational prime p: p* = (-1)^((p-1)/2) p
/// for odd p. Rejects p = 2 (three candidates) and non-primes.
PrimeDiscriminant odd_prime_discriminant(Integer const & p);

/*
 * All fundamental discriminants with 1 < |d| <= bound, ordered by |d|
 * ascending and negative before positive on ties.
 */
std::vector<Discriminant> fundamental_discriminants_up_to(std::int64_t bound);

/// Squarefree m with 1 < |m| <= bound plus m = -1, in the same order.
std::vector<Integer> squarefree_radicands_up_to(std::int64_t bound);

} // namespace quadgenus
