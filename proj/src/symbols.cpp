#include "quadgenus/symbols.hpp"

#include <bit>
#include <cstdint>

#include "quadgenus/errors.hpp"

namespace quadgenus {

namespace {

// Binary Jacobi algorithm: strip factors of 2 using (2/n), swap with
// reciprocity, reduce. Never factors n.
template <typename T>
int jacobi_impl(T a, T n)
{
    a %= n;
    if (a < 0)
        a += n;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            T const r = n % 8;
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

// (d/2) for d = 0, 1 mod 4.
int kronecker_at_two(int d_mod_8)
{
    switch (d_mod_8) {
    case 1:
    case 7:
        return 1;
    case 3:
    case 5:
        return -1;
    default:
        return 0;
    }
}

} // namespace

SymbolValue::SymbolValue(int v) : value_(v)
{
    if (v < -1 || v > 1)
        throw InvalidInput("symbol value out of range: " + std::to_string(v));
}

std::string_view to_string(SplittingType s)
{
    switch (s) {
    case SplittingType::split:
        return "split";
    case SplittingType::inert:
        return "inert";
    case SplittingType::ramified:
        return "ramified";
    }
    return "?";
}

int jacobi(std::int64_t a, std::int64_t n)
{
    if (n <= 0 || n % 2 == 0)
        throw InvalidInput("Jacobi symbol needs an odd positive modulus, got " + std::to_string(n));
    return jacobi_impl<std::int64_t>(a, n);
}

SymbolValue jacobi(Integer const & a, Integer const & n)
{
    if (sgn(n) <= 0 || mpz_even_p(n.get_mpz_t()))
        throw InvalidInput("Jacobi symbol needs an odd positive modulus, got " + to_string(n));
    if (fits_int64(a) && fits_int64(n))
        return SymbolValue(jacobi_impl<std::int64_t>(to_int64(a), to_int64(n)));
    return SymbolValue(jacobi_impl<Integer>(a, n));
}

SymbolValue kronecker(Discriminant const & d, std::int64_t n)
{
    if (n == 0)
        throw InvalidInput("Kronecker symbol at 0");
    if (!fits_int64(d.value()) || n == INT64_MIN)
        return kronecker(d, Integer(n));
    std::int64_t const dv = to_int64(d.value());
    std::uint64_t m = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    int result = 1;
    if (m % 2 == 0) {
        int const at_two = kronecker_at_two(static_cast<int>(mod_floor(dv, 8)));
        if (at_two == 0)
            return SymbolValue::zero();
        int twos = std::countr_zero(m);
        m >>= twos;
        if (twos % 2 == 1)
            result = at_two;
    }
    return SymbolValue(result * jacobi_impl<std::int64_t>(dv, static_cast<std::int64_t>(m)));
}

SymbolValue kronecker(Discriminant const & d, Integer const & n)
{
    if (sgn(n) == 0)
        throw InvalidInput("Kronecker symbol at 0");
    if (fits_int64(d.value()) && fits_int64(n) && n != Integer(INT64_MIN))
        return kronecker(d, to_int64(n));
    Integer m = abs(n);
    int result = 1;
    if (mpz_even_p(m.get_mpz_t())) {
        int const at_two =
            kronecker_at_two(static_cast<int>(mpz_fdiv_ui(d.value().get_mpz_t(), 8)));
        if (at_two == 0)
            return SymbolValue::zero();
        auto const twos = mpz_scan1(m.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), twos);
        if (twos % 2 == 1)
            result = at_two;
    }
    return SymbolValue(result * jacobi_impl<Integer>(d.value(), m));
}

SymbolValue kronecker_infinity(Integer const & n)
{
    if (sgn(n) == 0)
        throw InvalidInput("infinite Kronecker symbol at 0");
    return sgn(n) > 0 ? SymbolValue::plus_one() : SymbolValue::minus_one();
}

SplittingType splitting_type(Discriminant const & d, Integer const & p)
{
    if (d.is_unit())
        throw InvalidInput("discriminant 1 has no quadratic field");
    if (!is_prime(p))
        throw InvalidInput("not a positive prime: " + to_string(p));
    switch (kronecker(d, p).value()) {
    case 1:
        return SplittingType::split;
    case -1:
        return SplittingType::inert;
    default:
        return SplittingType::ramified;
    }
}

} // namespace quadgenus
