#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "quadgenus/discriminants.hpp"
#include "quadgenus/integer.hpp"

namespace quadgenus {

/// The form a x^2 + b x y + c y^2.
struct BinaryQuadraticForm
{
    Integer a;
    Integer b;
    Integer c;

    BinaryQuadraticForm() = default;
    BinaryQuadraticForm(Integer a_, Integer b_, Integer c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    Integer discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    Integer operator()(Integer const & x, Integer const & y) const
    {
        return a * x * x + b * x * y + c * y * y;
    }

    friend bool operator==(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g)
    {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }
};

/// Lexicographic on (a, b, c); only used to key containers.
struct FormLess
{
    bool operator()(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g) const;
};

std::ostream & operator<<(std::ostream & os, BinaryQuadraticForm const & f);

/// (1, 0, -D/4) or (1, 1, (1 - D)/4), reduced.
BinaryQuadraticForm principal_form(Integer const & disc);

/// (a, -b, c), the inverse class.
BinaryQuadraticForm opposite(BinaryQuadraticForm const & f);

/*
 * D < 0: |b| <= a <= c, and b >= 0 when |b| = a or a = c.
 * D > 0: 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
 */
bool is_reduced(BinaryQuadraticForm const & f);

/// One step of the indefinite reduction operator (proper equivalence).
BinaryQuadraticForm rho(BinaryQuadraticForm const & f);

/*
 * Reduced representative of f's proper equivalence class. Unique for
 * D < 0; for D > 0 some member of the class's reduction cycle. Rejects
 * imprimitive forms, square discriminants and negative definite forms.
 */
BinaryQuadraticForm reduce(BinaryQuadraticForm const & f);

/// The rho-cycle of reduce(f). D > 0 only.
std::vector<BinaryQuadraticForm> reduction_cycle(BinaryQuadraticForm const & f);

/// Deterministic class representative: the reduced form for D < 0, the
/// cycle member minimising (|a|, a, b) for D > 0.
BinaryQuadraticForm canonical_form(BinaryQuadraticForm const & f);

bool equivalent(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g);

/// Gauss composition of two primitive forms of equal discriminant; reduced output.
BinaryQuadraticForm compose(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g);

/// Every reduced primitive form of discriminant d (d != 1, |d| < 2^62).
std::vector<BinaryQuadraticForm> reduced_forms(Discriminant const & d);

/*
 * Cl+(d) as proper equivalence classes of primitive forms. Element 0 is
 * the principal class; the rest follow in (|a|, a, b) order of their
 * canonical forms.
 */
class NarrowClassGroup
{
  public:
    Discriminant const & discriminant() const { return disc_; }
    std::size_t order() const { return elements_.size(); }
    std::vector<BinaryQuadraticForm> const & elements() const { return elements_; }
    BinaryQuadraticForm const & element(std::size_t i) const { return elements_.at(i); }
    /// Elementary divisors n_1 | n_2 | ... with every n_i > 1.
    std::vector<std::int64_t> const & invariants() const { return invariants_; }

    std::size_t identity() const { return 0; }
    /// Class index of any primitive form of this discriminant.
    std::size_t index_of(BinaryQuadraticForm const & f) const;
    std::size_t multiply(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;
    std::size_t power(std::size_t i, std::uint64_t n) const;
    std::size_t element_order(std::size_t i) const;
    std::size_t exponent() const;

    /// Number of cyclic factors of even order, resp. of order divisible by 4.
    std::size_t two_rank() const;
    std::size_t four_rank() const;

  private:
    friend NarrowClassGroup narrow_class_group(Discriminant const & d);
    explicit NarrowClassGroup(Discriminant d) : disc_(std::move(d)) {}

    Discriminant disc_;
    std::vector<BinaryQuadraticForm> elements_;
    std::vector<std::int64_t> invariants_;
    std::map<BinaryQuadraticForm, std::size_t, FormLess> reduced_index_;
};

/// Rejects d = 1 (and anything that is not a Discriminant to begin with).
NarrowClassGroup narrow_class_group(Discriminant const & d);

struct RepresentedValue
{
    Integer value;
    Integer x;
    Integer y;
};

/*
 * Smallest positive f(x, y) coprime to modulus, searching shells of
 * growing max(|x|, |y|) in lexicographic (x, y) order. For definite forms
 * this is the minimum over all of Z^2; for indefinite forms it is the
 * minimum over the first shell that contains a qualifying value.
 */
RepresentedValue represented_value_coprime_to(BinaryQuadraticForm const & f,
                                              Integer const & modulus);

/// The first `count` distinct qualifying values in search order.
std::vector<RepresentedValue> represented_values_coprime_to(BinaryQuadraticForm const & f,
                                                            Integer const & modulus,
                                                            std::size_t count);

/// Norm of the fundamental unit of Q(sqrt(d0)): (-1)^(period of the
/// continued fraction of sqrt(d0)). d0 > 1 squarefree.
int fundamental_unit_norm(Integer const & d0);

/// Continued fraction period length of sqrt(n), n > 1 not a square.
std::size_t sqrt_continued_fraction_period(Integer const & n);

/// Class number in the usual sense, from h+ and the fundamental unit norm.
std::size_t ordinary_class_number(Discriminant const & d, NarrowClassGroup const & group);
std::size_t ordinary_class_number(Discriminant const & d);

/// Smith normal form diagonal (absolute values) of a square integer matrix.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m);

} // namespace quadgenus
