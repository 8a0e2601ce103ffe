#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quadgenus/discriminants.hpp"
#include "quadgenus/forms.hpp"
#include "quadgenus/symbols.hpp"

namespace quadgenus {

/*
 * Genus fields by their radicands. The strict genus field is generated by
 * the square roots of the prime discriminants dividing d; the ordinary one
 * is its maximal real subfield when d > 0 and equals it when d < 0.
 */
struct GenusFieldDescription
{
    std::vector<PrimeDiscriminant> strict_generators;
    /// Squarefree, sorted ascending.
    std::vector<Integer> ordinary_radicands;

    /// Squarefree kernels of the strict generators, e.g. 8 -> 2, -4 -> -1.
    std::vector<Integer> strict_radicands() const;
    /// Degree of the strict genus field over Q, 2^t.
    Integer strict_degree() const;
};

std::vector<PrimeDiscriminant> genus_field_strict(Discriminant const & d);
std::vector<Integer> genus_field_ordinary(Discriminant const & d);
GenusFieldDescription genus_field(Discriminant const & d);

/// (chi_1(c), ..., chi_t(c)), indexed like factor_prime_discriminants(d).
struct GenusCharacterVector
{
    std::vector<SymbolValue> values;

    SymbolValue product() const;
    friend bool operator==(GenusCharacterVector const &, GenusCharacterVector const &) = default;
};

/// chi_j(c) = (d_j / N) for a positive value N of the class coprime to d. j is 1-based.
SymbolValue genus_character(Discriminant const & d, std::size_t j,
                            BinaryQuadraticForm const & cls);
GenusCharacterVector genus_character_vector(Discriminant const & d,
                                            BinaryQuadraticForm const & cls);

/// 2^(t - 1).
std::uint64_t number_of_genera(Discriminant const & d);

struct PrincipalGenusReport
{
    Integer discriminant;
    std::size_t class_number = 0;  // h+
    std::size_t t = 0;
    std::size_t squares_count = 0;
    std::size_t kernel_count = 0;
    std::size_t image_count = 0;
    /// One vector per class, in NarrowClassGroup element order.
    std::vector<GenusCharacterVector> class_vectors;

    bool kernel_equals_squares = false;
    bool image_has_expected_size = false;   // |image| = 2^(t-1)
    bool image_in_product_kernel = false;   // every image vector multiplies to +1

    bool passed() const
    {
        return kernel_equals_squares && image_has_expected_size && image_in_product_kernel;
    }
};

PrincipalGenusReport verify_principal_genus(Discriminant const & d);
PrincipalGenusReport verify_principal_genus(NarrowClassGroup const & group);

/// Pattern match on m for odd class number of Q(sqrt(m)) in the usual sense.
bool odd_class_number(Integer const & m);

struct QuarticSplittingFactorization
{
    Discriminant d1;
    Discriminant d2;
};

/*
 * Unordered nontrivial coprime factorizations d = d1 d2 such that every
 * prime dividing d1 splits in Q(sqrt(d2)) and vice versa; |d1| < |d2|.
 */
std::vector<QuarticSplittingFactorization> quartic_splitting_factorizations(Discriminant const & d);

/// Same count, with the trivial pair {1, d} included.
std::size_t count_quartic_splittings_with_trivial(Discriminant const & d);

} // namespace quadgenus
