#include "quadgenus/characters.hpp"

#include <numeric>

#include "quadgenus/errors.hpp"

namespace quadgenus {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t old_r = mod_floor(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t const q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1)
        throw InternalCheckFailed("no inverse modulo " + std::to_string(m));
    return mod_floor(old_s, m);
}

// y = x mod q, y = 1 mod (m / q).
std::int64_t crt_lift(std::int64_t x, std::int64_t q, std::int64_t m)
{
    std::int64_t const rest = m / q;
    if (rest == 1)
        return mod_floor(x, m);
    std::int64_t const t = mulmod(mod_floor(x - 1, q), inverse_mod(rest % q, q), q);
    return mod_floor(1 + static_cast<std::int64_t>(static_cast<__int128>(rest) * t % m), m);
}

std::int64_t int_pow(std::int64_t base, unsigned e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

} // namespace

std::int64_t smallest_primitive_root(std::int64_t p, unsigned k)
{
    if (p < 3 || k == 0)
        throw InvalidInput("primitive roots are taken modulo odd prime powers");
    auto const order_factors = factor_small(p - 1);
    for (std::int64_t g = 2;; ++g) {
        bool ok = true;
        for (auto const & [q, e] : order_factors) {
            if (powmod(g, static_cast<std::uint64_t>((p - 1) / q), p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok && k >= 2 && powmod(g, static_cast<std::uint64_t>(p - 1), p * p) == 1)
            ok = false;
        if (ok)
            return g;
    }
}

std::vector<std::int64_t> unit_group_generators(std::int64_t modulus)
{
    if (modulus < 1)
        throw InvalidInput("modulus must be positive, got " + std::to_string(modulus));
    std::vector<std::int64_t> gens;
    if (modulus == 1)
        return gens;
    for (auto const & [p, e] : factor_small(modulus)) {
        std::int64_t const q = int_pow(p, e);
        if (p == 2) {
            if (e >= 2)
                gens.push_back(crt_lift(-1, q, modulus));
            if (e >= 3)
                gens.push_back(crt_lift(5, q, modulus));
        } else {
            gens.push_back(crt_lift(smallest_primitive_root(p, e), q, modulus));
        }
    }
    return gens;
}

QuadraticDirichletCharacter
QuadraticDirichletCharacter::from_generator_values(std::int64_t modulus,
                                                   std::span<int const> values)
{
    QuadraticDirichletCharacter chi;
    chi.modulus_ = modulus;
    chi.generators_ = unit_group_generators(modulus);
    if (values.size() != chi.generators_.size()) {
        throw InvalidInput("modulus " + std::to_string(modulus) + " needs "
                           + std::to_string(chi.generators_.size())
                           + " generator values, got " + std::to_string(values.size()));
    }
    for (int v : values) {
        if (v != 1 && v != -1)
            throw InvalidInput("character values must be +1 or -1");
    }
    chi.values_.assign(values.begin(), values.end());

    std::size_t next = 0;
    if (modulus > 1) {
        for (auto const & [p, e] : factor_small(modulus)) {
            LocalPart part{p, e};
            if (p == 2) {
                if (e >= 2)
                    part.minus_one_value = values[next++];
                if (e >= 3)
                    part.five_value = values[next++];
            } else {
                part.value = values[next++];
            }
            chi.parts_.push_back(part);
        }
    }
    return chi;
}

QuadraticDirichletCharacter QuadraticDirichletCharacter::principal(std::int64_t modulus)
{
    std::vector<int> ones(unit_group_generators(modulus).size(), 1);
    return from_generator_values(modulus, ones);
}

SymbolValue QuadraticDirichletCharacter::operator()(std::int64_t n) const
{
    std::int64_t const r = mod_floor(n, modulus_);
    if (std::gcd(r, modulus_) != 1)
        return SymbolValue::zero();
    int v = 1;
    for (auto const & part : parts_) {
        if (part.prime == 2) {
            if (part.minus_one_value == -1 && r % 4 == 3)
                v = -v;
            if (part.five_value == -1 && (r % 8 == 3 || r % 8 == 5))
                v = -v;
        } else if (part.value == -1) {
            // A quadratic character of a cyclic group is trivial or the
            // Legendre symbol.
            v *= jacobi(r % part.prime, part.prime);
        }
    }
    return SymbolValue(v);
}

SymbolValue QuadraticDirichletCharacter::operator()(Integer const & n) const
{
    return (*this)(to_int64(mod_floor(n, Integer(modulus_))));
}

std::vector<SymbolValue> QuadraticDirichletCharacter::period() const
{
    std::vector<SymbolValue> out;
    out.reserve(static_cast<std::size_t>(modulus_));
    for (std::int64_t n = 1; n <= modulus_; ++n)
        out.push_back((*this)(n));
    return out;
}

SymbolValue char_value(QuadraticDirichletCharacter const & chi, std::int64_t n)
{
    return chi(n);
}

bool chars_equivalent(QuadraticDirichletCharacter const & chi1,
                      QuadraticDirichletCharacter const & chi2)
{
    std::int64_t const l = std::lcm(chi1.modulus(), chi2.modulus());
    for (std::int64_t n = 1; n <= l; ++n) {
        if (std::gcd(n, l) != 1)
            continue;
        if (chi1(n) != chi2(n))
            return false;
    }
    return true;
}

Conductor conductor(QuadraticDirichletCharacter const & chi)
{
    std::int64_t f = 1;
    for (auto const & part : chi.parts_) {
        if (part.prime == 2) {
            if (part.five_value == -1)
                f *= 8;
            else if (part.minus_one_value == -1)
                f *= 4;
        } else if (part.value == -1) {
            f *= part.prime;
        }
    }
    return Conductor{f};
}

bool is_primitive(QuadraticDirichletCharacter const & chi)
{
    return conductor(chi).value == chi.modulus();
}

QuadraticDirichletCharacter primitive_part(QuadraticDirichletCharacter const & chi)
{
    std::vector<int> values;
    for (auto const & part : chi.parts_) {
        if (part.prime == 2) {
            if (part.five_value == -1) {
                values.push_back(part.minus_one_value);
                values.push_back(-1);
            } else if (part.minus_one_value == -1) {
                values.push_back(-1);
            }
        } else if (part.value == -1) {
            values.push_back(-1);
        }
    }
    return QuadraticDirichletCharacter::from_generator_values(conductor(chi).value, values);
}

std::vector<QuadraticDirichletCharacter> quadratic_characters(std::int64_t modulus)
{
    std::size_t const k = unit_group_generators(modulus).size();
    if (k >= 31)
        throw InvalidInput("too many quadratic characters modulo " + std::to_string(modulus));
    std::vector<QuadraticDirichletCharacter> out;
    std::vector<int> values(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        for (std::size_t i = 0; i < k; ++i)
            values[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(QuadraticDirichletCharacter::from_generator_values(modulus, values));
    }
    return out;
}

std::vector<QuadraticDirichletCharacter> primitive_quadratic_characters(std::int64_t conductor)
{
    if (conductor < 1)
        throw InvalidInput("conductor must be positive");
    std::vector<std::vector<int>> two_part_choices{{}};
    std::size_t odd_count = 0;
    if (conductor > 1) {
        for (auto const & [p, e] : factor_small(conductor)) {
            if (p == 2) {
                if (e == 2)
                    two_part_choices = {{-1}};
                else if (e == 3)
                    two_part_choices = {{1, -1}, {-1, -1}};
                else
                    return {};
            } else if (e > 1) {
                return {};
            } else {
                ++odd_count;
            }
        }
    }
    std::vector<QuadraticDirichletCharacter> out;
    for (auto values : two_part_choices) {
        values.insert(values.end(), odd_count, -1);
        out.push_back(QuadraticDirichletCharacter::from_generator_values(conductor, values));
    }
    return out;
}

QuadraticDirichletCharacter kronecker_to_dirichlet(Discriminant const & d)
{
    std::int64_t const m = to_int64(d.abs_value());
    std::vector<int> values;
    for (std::int64_t g : unit_group_generators(m)) {
        int const v = kronecker(d, g).value();
        if (v == 0)
            throw InternalCheckFailed("Kronecker symbol vanished at a unit");
        values.push_back(v);
    }
    return QuadraticDirichletCharacter::from_generator_values(m, values);
}

Discriminant dirichlet_to_kronecker(QuadraticDirichletCharacter const & chi)
{
    Conductor const f = conductor(chi);
    if (f.value != chi.modulus()) {
        throw InvalidInput("character modulo " + std::to_string(chi.modulus())
                           + " is not primitive (conductor " + std::to_string(f.value) + ")");
    }

    Integer value = 1;
    for (auto const & part : chi.parts_) {
        if (part.prime == 2) {
            if (part.five_value == -1)
                value *= part.minus_one_value == -1 ? -8 : 8;
            else if (part.minus_one_value == -1)
                value *= -4;
        } else if (part.value == -1) {
            value *= odd_prime_discriminant(Integer(part.prime)).value();
        }
    }

    Discriminant d = Discriminant::unit();
    try {
        d = Discriminant::from_integer(value);
    } catch (InvalidInput const &) {
        throw InternalCheckFailed("local factors multiply to a non-discriminant " + to_string(value));
    }
    for (std::int64_t n = 1; n <= chi.modulus(); ++n) {
        if (kronecker(d, n) != chi(n)) {
            throw InternalCheckFailed("Kronecker character of " + to_string(value)
                                      + " disagrees with the input at n = " + std::to_string(n));
        }
    }
    return d;
}

Conductor field_conductor(Discriminant const & d)
{
    if (d.is_unit())
        throw InvalidInput("discriminant 1 has no quadratic field");
    return Conductor{to_int64(d.abs_value())};
}

bool is_field_modular(Discriminant const & d, std::int64_t modulus)
{
    if (modulus < 1)
        throw InvalidInput("modulus must be positive");
    return modulus % to_int64(d.abs_value()) == 0;
}

} // namespace quadgenus
