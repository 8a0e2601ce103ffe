#pragma once

#include <cstdint>
#include <string_view>

#include "quadgenus/discriminants.hpp"
#include "quadgenus/integer.hpp"

namespace quadgenus {

/// A value in {-1, 0, +1}.
class SymbolValue
{
  public:
    constexpr SymbolValue() = default;
    /// Throws InvalidInput outside {-1, 0, 1}.
    explicit SymbolValue(int v);

    static constexpr SymbolValue plus_one() { return SymbolValue(1, tag{}); }
    static constexpr SymbolValue minus_one() { return SymbolValue(-1, tag{}); }
    static constexpr SymbolValue zero() { return SymbolValue(0, tag{}); }

    constexpr int value() const { return value_; }

    friend constexpr SymbolValue operator*(SymbolValue x, SymbolValue y)
    {
        return SymbolValue(x.value_ * y.value_, tag{});
    }
    SymbolValue & operator*=(SymbolValue o)
    {
        value_ *= o.value_;
        return *this;
    }
    friend constexpr bool operator==(SymbolValue, SymbolValue) = default;

  private:
    struct tag {};
    constexpr SymbolValue(int v, tag) : value_(v) {}
    int value_ = 1;
};

enum class SplittingType { split, inert, ramified };

std::string_view to_string(SplittingType s);

/// Jacobi symbol (a/n) for odd n >= 1, by binary reciprocity.
SymbolValue jacobi(Integer const & a, Integer const & n);
int jacobi(std::int64_t a, std::int64_t n);

/*
 * Kronecker symbol (d/n): completely multiplicative in n, equal to the
 * Jacobi symbol at odd primes, and at 2 given by d mod 8. The sign of n is
 * ignored, (d/n) = (d/-n); the sign is carried by kronecker_infinity.
 */
SymbolValue kronecker(Discriminant const & d, Integer const & n);
SymbolValue kronecker(Discriminant const & d, std::int64_t n);

/// +1 for n > 0, -1 for n < 0. Rejects 0.
SymbolValue kronecker_infinity(Integer const & n);

/// How the prime p behaves in the quadratic field of discriminant d != 1.
SplittingType splitting_type(Discriminant const & d, Integer const & p);

} // namespace quadgenus
