#include "quadgenus/integer.hpp"

#include <cctype>
#include <limits>

#include "quadgenus/errors.hpp"

namespace quadgenus {

Integer parse_integer(std::string_view text)
{
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty())
        throw InvalidInput("not an integer: '" + std::string(text) + "'");
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw InvalidInput("not an integer: '" + std::string(text) + "'");
    }
    Integer n(std::string(digits), 10);
    return negative ? Integer(-n) : n;
}

std::string to_string(Integer const & n)
{
    return n.get_str(10);
}

Integer isqrt(Integer const & n)
{
    if (sgn(n) < 0)
        throw InvalidInput("square root of a negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(Integer const & n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool fits_int64(Integer const & n)
{
    static Integer const lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static Integer const hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return n >= lo && n <= hi;
}

std::int64_t to_int64(Integer const & n)
{
    if (!fits_int64(n))
        throw InvalidInput("integer too large: " + to_string(n));
    // mpz_get_si covers long, which is 64 bits on the supported targets.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return static_cast<std::int64_t>(mpz_get_si(n.get_mpz_t()));
}

std::vector<PrimePower> factor_trial(Integer const & n)
{
    if (sgn(n) == 0)
        throw InvalidInput("cannot factor 0");
    Integer m = abs(n);
    std::vector<PrimePower> out;
    if (fits_int64(m)) {
        for (auto const & [p, e] : factor_small(to_int64(m)))
            out.push_back({Integer(std::to_string(p)), e});
        return out;
    }
    auto pull = [&](Integer const & p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e > 0)
            out.push_back({p, e});
    };
    pull(2);
    for (Integer p = 3; p * p <= m; p += 2)
        pull(p);
    if (m > 1)
        out.push_back({m, 1});
    return out;
}

std::vector<std::pair<std::int64_t, unsigned>> factor_small(std::int64_t n)
{
    if (n == 0)
        throw InvalidInput("cannot factor 0");
    std::uint64_t m = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    std::vector<std::pair<std::int64_t, unsigned>> out;
    auto pull = [&](std::uint64_t p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(static_cast<std::int64_t>(p), e);
    };
    pull(2);
    pull(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p * p <= m; p += 6) {
        pull(p);
        pull(p + 2);
    }
    if (m > 1)
        out.emplace_back(static_cast<std::int64_t>(m), 1);
    return out;
}

Integer squarefree_kernel(Integer const & n)
{
    Integer k = 1;
    for (auto const & pe : factor_trial(n)) {
        if (pe.exponent % 2 == 1)
            k *= pe.prime;
    }
    return sgn(n) < 0 ? Integer(-k) : k;
}

bool is_squarefree(Integer const & n)
{
    for (auto const & pe : factor_trial(n)) {
        if (pe.exponent > 1)
            return false;
    }
    return true;
}

bool is_prime(Integer const & n)
{
    if (n < 2)
        return false;
    if (n < Integer(1) << 32) {
        auto f = factor_small(to_int64(n));
        return f.size() == 1 && f[0].second == 1;
    }
    // Baillie-PSW plus Miller-Rabin rounds; no known counterexamples.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m)
{
    std::int64_t result = 1 % m;
    base = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

Integer mod_floor(Integer const & a, Integer const & m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (sgn(r) < 0)
        r += abs(m);
    return r;
}

} // namespace quadgenus
