#include "quadgenus/discriminants.hpp"

#include <algorithm>

#include "quadgenus/errors.hpp"

namespace quadgenus {

namespace {

// Sieve of squarefree flags for 0..bound.
std::vector<bool> squarefree_sieve(std::int64_t bound)
{
    std::vector<bool> sf(static_cast<std::size_t>(bound) + 1, true);
    for (std::int64_t p = 2; p * p <= bound; ++p) {
        for (std::int64_t k = p * p; k <= bound; k += p * p)
            sf[static_cast<std::size_t>(k)] = false;
    }
    return sf;
}

bool fundamental_from_sieve(std::int64_t d, std::vector<bool> const & sf)
{
    std::int64_t const m4 = mod_floor(d, 4);
    auto const a = static_cast<std::size_t>(d < 0 ? -d : d);
    if (m4 == 1)
        return sf[a];
    if (m4 == 0) {
        std::int64_t const m = d / 4;
        std::int64_t const r = mod_floor(m, 4);
        return (r == 2 || r == 3) && sf[a / 4];
    }
    return false;
}

} // namespace

Discriminant Discriminant::from_integer(Integer const & value)
{
    if (sgn(value) == 0 || !is_fundamental(value))
        throw InvalidInput("not a fundamental discriminant: " + to_string(value));
    return Discriminant(value);
}

PrimeDiscriminant PrimeDiscriminant::from_integer(Integer const & value)
{
    if (value == -4 || value == 8 || value == -8)
        return PrimeDiscriminant(value, Integer(2));
    Integer const p = abs(value);
    if (is_prime(p) && p != 2) {
        bool const p_is_1_mod_4 = mod_floor(p, Integer(4)) == 1;
        if ((sgn(value) > 0) == p_is_1_mod_4)
            return PrimeDiscriminant(value, p);
    }
    throw InvalidInput("not a prime discriminant: " + to_string(value));
}

Integer PrimeDiscriminantFactorization::product() const
{
    Integer p = 1;
    for (auto const & f : factors)
        p *= f.value();
    return p;
}

bool is_fundamental(Integer const & n)
{
    if (sgn(n) == 0)
        throw InvalidInput("0 is not a discriminant");
    if (n == 1)
        return true;
    Integer const r = mod_floor(n, Integer(4));
    if (r == 1)
        return is_squarefree(n);
    if (r == 0) {
        Integer const m = n / 4;
        Integer const rm = mod_floor(m, Integer(4));
        return (rm == 2 || rm == 3) && is_squarefree(m);
    }
    return false;
}

Discriminant disc_of_sqrt(Integer const & a)
{
    if (sgn(a) == 0)
        throw InvalidInput("Q(sqrt(0)) is not a field");
    Integer const k = squarefree_kernel(a);
    if (k == 1)
        return Discriminant::unit();
    if (mod_floor(k, Integer(4)) == 1)
        return Discriminant::from_integer(k);
    return Discriminant::from_integer(4 * k);
}

Discriminant disc_mul(Discriminant const & d1, Discriminant const & d2)
{
    // d = 4^e m with m squarefree, so the kernel of d1 d2 is m1 m2 / gcd(m1, m2)^2.
    auto squarefree_part = [](Integer const & d) {
        return mpz_divisible_ui_p(d.get_mpz_t(), 4) ? Integer(d / 4) : d;
    };
    Integer const m1 = squarefree_part(d1.value());
    Integer const m2 = squarefree_part(d2.value());
    Integer g;
    mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    Integer const k = m1 * m2 / (g * g);
    if (k == 1)
        return Discriminant::unit();
    return Discriminant(mod_floor(k, Integer(4)) == 1 ? k : Integer(4 * k));
}

PrimeDiscriminant odd_prime_discriminant(Integer const & p)
{
    if (p == 2 || !is_prime(p))
        throw InvalidInput("not an odd prime: " + to_string(p));
    return PrimeDiscriminant::from_integer(mod_floor(p, Integer(4)) == 1 ? p : Integer(-p));
}

PrimeDiscriminantFactorization factor_prime_discriminants(Discriminant const & d)
{
    PrimeDiscriminantFactorization out;
    if (d.is_unit())
        return out;

    Integer odd_product = 1;
    for (auto const & pe : factor_trial(d.value())) {
        if (pe.prime == 2)
            continue;
        if (pe.exponent != 1)
            throw InternalCheckFailed("discriminant not squarefree at an odd prime");
        auto f = odd_prime_discriminant(pe.prime);
        odd_product *= f.value();
        out.factors.push_back(std::move(f));
    }
    if (d.value() != odd_product) {
        // The quotient is the 2-part and must be one of -4, 8, -8.
        if (!mpz_divisible_p(d.value().get_mpz_t(), odd_product.get_mpz_t()))
            throw InternalCheckFailed("odd part does not divide discriminant");
        out.factors.push_back(PrimeDiscriminant::from_integer(d.value() / odd_product));
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](PrimeDiscriminant const & x, PrimeDiscriminant const & y) {
                  if (x.sign() != y.sign())
                      return x.sign() < y.sign();
                  return abs(x.value()) < abs(y.value());
              });
    out.negative_count = static_cast<std::size_t>(
        std::count_if(out.factors.begin(), out.factors.end(),
                      [](PrimeDiscriminant const & f) { return f.sign() < 0; }));
    return out;
}

std::vector<Discriminant> fundamental_discriminants_up_to(std::int64_t bound)
{
    std::vector<Discriminant> out;
    if (bound < 2)
        return out;
    auto const sf = squarefree_sieve(bound);
    for (std::int64_t a = 2; a <= bound; ++a) {
        for (std::int64_t d : {-a, a}) {
            if (fundamental_from_sieve(d, sf))
                out.push_back(Discriminant::from_integer(Integer(std::to_string(d))));
        }
    }
    return out;
}

std::vector<Integer> squarefree_radicands_up_to(std::int64_t bound)
{
    std::vector<Integer> out;
    if (bound < 1)
        return out;
    out.emplace_back(-1);
    auto const sf = squarefree_sieve(bound);
    for (std::int64_t a = 2; a <= bound; ++a) {
        if (!sf[static_cast<std::size_t>(a)])
            continue;
        out.emplace_back(std::to_string(-a));
        out.emplace_back(std::to_string(a));
    }
    return out;
}

} // namespace quadgenus
