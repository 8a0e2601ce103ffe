#include "quadgenus/genus.hpp"

#include <algorithm>
#include <set>

#include "quadgenus/errors.hpp"

namespace quadgenus {

namespace {

void require_nontrivial(Discriminant const & d)
{
    if (d.is_unit())
        throw InvalidInput("discriminant 1 has no quadratic field");
}

GenusCharacterVector character_vector(PrimeDiscriminantFactorization const & fact,
                                      Integer const & abs_disc,
                                      BinaryQuadraticForm const & cls)
{
    Integer const norm = represented_value_coprime_to(cls, abs_disc).value;
    GenusCharacterVector out;
    for (auto const & f : fact.factors) {
        SymbolValue const v = kronecker(f.as_discriminant(), norm);
        if (v == SymbolValue::zero())
            throw InternalCheckFailed("genus character vanished on a coprime norm");
        out.values.push_back(v);
    }
    return out;
}

void check_class_form(Discriminant const & d, BinaryQuadraticForm const & cls)
{
    if (cls.discriminant() != d.value())
        throw InvalidInput("form discriminant " + to_string(cls.discriminant())
                           + " does not match " + to_string(d.value()));
}

} // namespace

std::vector<Integer> GenusFieldDescription::strict_radicands() const
{
    std::vector<Integer> out;
    for (auto const & g : strict_generators)
        out.push_back(squarefree_kernel(g.value()));
    return out;
}

Integer GenusFieldDescription::strict_degree() const
{
    Integer deg = 1;
    mpz_mul_2exp(deg.get_mpz_t(), deg.get_mpz_t(), strict_generators.size());
    return deg;
}

std::vector<PrimeDiscriminant> genus_field_strict(Discriminant const & d)
{
    require_nontrivial(d);
    return factor_prime_discriminants(d).factors;
}

std::vector<Integer> genus_field_ordinary(Discriminant const & d)
{
    require_nontrivial(d);
    auto const fact = factor_prime_discriminants(d);
    std::vector<Integer> out;
    if (d.sign() < 0) {
        for (auto const & f : fact.factors)
            out.push_back(squarefree_kernel(f.value()));
    } else {
        // Pair the first negative factor with every other negative one.
        std::size_t const r = fact.negative_count;
        for (std::size_t j = 1; j < r; ++j)
            out.push_back(squarefree_kernel(fact.factors[0].value() * fact.factors[j].value()));
        for (std::size_t j = r; j < fact.size(); ++j)
            out.push_back(squarefree_kernel(fact.factors[j].value()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GenusFieldDescription genus_field(Discriminant const & d)
{
    return {genus_field_strict(d), genus_field_ordinary(d)};
}

SymbolValue GenusCharacterVector::product() const
{
    SymbolValue p = SymbolValue::plus_one();
    for (auto v : values)
        p *= v;
    return p;
}

SymbolValue genus_character(Discriminant const & d, std::size_t j, BinaryQuadraticForm const & cls)
{
    require_nontrivial(d);
    check_class_form(d, cls);
    auto const fact = factor_prime_discriminants(d);
    if (j < 1 || j > fact.size()) {
        throw InvalidInput("genus character index " + std::to_string(j) + " out of range 1.."
                           + std::to_string(fact.size()));
    }
    Integer const norm = represented_value_coprime_to(cls, d.abs_value()).value;
    SymbolValue const v = kronecker(fact.factors[j - 1].as_discriminant(), norm);
    if (v == SymbolValue::zero())
        throw InternalCheckFailed("genus character vanished on a coprime norm");
    return v;
}

GenusCharacterVector genus_character_vector(Discriminant const & d, BinaryQuadraticForm const & cls)
{
    require_nontrivial(d);
    check_class_form(d, cls);
    return character_vector(factor_prime_discriminants(d), d.abs_value(), cls);
}

std::uint64_t number_of_genera(Discriminant const & d)
{
    require_nontrivial(d);
    std::size_t const t = factor_prime_discriminants(d).size();
    return std::uint64_t{1} << (t - 1);
}

PrincipalGenusReport verify_principal_genus(NarrowClassGroup const & group)
{
    Discriminant const & d = group.discriminant();
    auto const fact = factor_prime_discriminants(d);
    Integer const abs_disc = d.abs_value();

    PrincipalGenusReport report;
    report.discriminant = d.value();
    report.class_number = group.order();
    report.t = fact.size();

    std::set<std::size_t> squares, kernel;
    std::set<std::vector<int>> image;
    bool products_ok = true;
    for (std::size_t i = 0; i < group.order(); ++i) {
        squares.insert(group.multiply(i, i));
        auto vec = character_vector(fact, abs_disc, group.element(i));
        std::vector<int> key;
        bool all_plus = true;
        for (auto v : vec.values) {
            key.push_back(v.value());
            all_plus = all_plus && v == SymbolValue::plus_one();
        }
        if (all_plus)
            kernel.insert(i);
        if (vec.product() != SymbolValue::plus_one())
            products_ok = false;
        image.insert(std::move(key));
        report.class_vectors.push_back(std::move(vec));
    }
    report.squares_count = squares.size();
    report.kernel_count = kernel.size();
    report.image_count = image.size();
    report.kernel_equals_squares = squares == kernel;
    report.image_has_expected_size = image.size() == (std::size_t{1} << (report.t - 1));
    report.image_in_product_kernel = products_ok;
    return report;
}

PrincipalGenusReport verify_principal_genus(Discriminant const & d)
{
    require_nontrivial(d);
    return verify_principal_genus(narrow_class_group(d));
}

bool odd_class_number(Integer const & m)
{
    if (sgn(m) == 0 || m == 1)
        throw InvalidInput("m must differ from 0 and 1");
    if (!is_squarefree(m))
        throw InvalidInput("not squarefree: " + to_string(m));
    auto const primes = factor_trial(m);
    auto is_3_mod_4 = [](Integer const & p) { return mod_floor(p, Integer(4)) == 3; };
    if (sgn(m) < 0) {
        if (m == -1 || m == -2)
            return true;
        return primes.size() == 1 && is_3_mod_4(primes[0].prime);
    }
    if (primes.size() == 1)
        return true;
    if (primes.size() != 2)
        return false;
    // pq with p = 2 or p = 3 mod 4, and q = 3 mod 4
    Integer const & p = primes[0].prime;
    Integer const & q = primes[1].prime;
    return (p == 2 || is_3_mod_4(p)) && is_3_mod_4(q);
}

std::vector<QuarticSplittingFactorization> quartic_splitting_factorizations(Discriminant const & d)
{
    require_nontrivial(d);
    auto const fact = factor_prime_discriminants(d);
    std::size_t const t = fact.size();
    if (t >= 63)
        throw InvalidInput("too many prime discriminant factors");

    std::vector<QuarticSplittingFactorization> out;
    std::uint64_t const full = (std::uint64_t{1} << t) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        Integer v1 = 1, v2 = 1;
        for (std::size_t j = 0; j < t; ++j)
            ((mask >> j) & 1 ? v1 : v2) *= fact.factors[j].value();
        if (abs(v1) >= abs(v2))
            continue;
        Discriminant const d1 = Discriminant::from_integer(v1);
        Discriminant const d2 = Discriminant::from_integer(v2);
        bool ok = true;
        for (std::size_t j = 0; j < t && ok; ++j) {
            Discriminant const & other = (mask >> j) & 1 ? d2 : d1;
            ok = kronecker(other, fact.factors[j].prime()) == SymbolValue::plus_one();
        }
        if (ok)
            out.push_back({d1, d2});
    }
    std::sort(out.begin(), out.end(), [](auto const & x, auto const & y) {
        auto const ax = x.d1.abs_value(), ay = y.d1.abs_value();
        return ax != ay ? ax < ay : x.d1.value() < y.d1.value();
    });
    return out;
}

std::size_t count_quartic_splittings_with_trivial(Discriminant const & d)
{
    return quartic_splitting_factorizations(d).size() + 1;
}

} // namespace quadgenus
