#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "quadgenus/discriminants.hpp"
#include "quadgenus/symbols.hpp"

namespace quadgenus {

/*
 * Canonical generators of (Z/mZ)^x, each lifted to a residue in [0, m) that
 * is 1 modulo every other prime-power part of m. Order: the 2-part first
 * (-1 for 4 | m, then 5 for 8 | m), then one primitive root (the smallest)
 * per odd prime power, by ascending prime. Every generator has even order.
 */
std::vector<std::int64_t> unit_group_generators(std::int64_t modulus);

/// Smallest primitive root modulo p^k for an odd prime p.
std::int64_t smallest_primitive_root(std::int64_t p, unsigned k);

struct Conductor
{
    std::int64_t value = 1;
    friend bool operator==(Conductor, Conductor) = default;
};

/*
 * A homomorphism (Z/mZ)^x -> {+1, -1}, stored as its values on the
 * canonical generators. Evaluation at integers sharing a factor with m
 * gives 0; negative integers evaluate through their residue class.
 */
class QuadraticDirichletCharacter
{
  public:
    /// Values must be +1 or -1, one per generator of unit_group_generators(m).
    static QuadraticDirichletCharacter from_generator_values(std::int64_t modulus,
                                                             std::span<int const> values);
    static QuadraticDirichletCharacter principal(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    std::vector<std::int64_t> const & generators() const { return generators_; }
    std::vector<int> const & generator_values() const { return values_; }

    SymbolValue operator()(std::int64_t n) const;
    SymbolValue operator()(Integer const & n) const;

    /// Values at 1, 2, ..., m.
    std::vector<SymbolValue> period() const;

    friend bool operator==(QuadraticDirichletCharacter const &,
                           QuadraticDirichletCharacter const &) = default;

  private:
    QuadraticDirichletCharacter() = default;

    struct LocalPart
    {
        std::int64_t prime;
        unsigned exponent;
        int minus_one_value = 1;  // 2-part only
        int five_value = 1;       // 2-part only, 8 | m
        int value = 1;            // odd primes: value on the primitive root

        friend bool operator==(LocalPart const &, LocalPart const &) = default;
    };

    std::int64_t modulus_ = 1;
    std::vector<std::int64_t> generators_;
    std::vector<int> values_;
    std::vector<LocalPart> parts_;

    friend Conductor conductor(QuadraticDirichletCharacter const & chi);
    friend QuadraticDirichletCharacter primitive_part(QuadraticDirichletCharacter const & chi);
    friend Discriminant dirichlet_to_kronecker(QuadraticDirichletCharacter const & chi);
};

SymbolValue char_value(QuadraticDirichletCharacter const & chi, std::int64_t n);

/// Agreement on one period of lcm(m1, m2) at integers coprime to m1 m2.
bool chars_equivalent(QuadraticDirichletCharacter const & chi1,
                      QuadraticDirichletCharacter const & chi2);

/// Smallest defining modulus, read off the local parts: an odd prime
/// contributes p when its value is -1; the 2-part contributes 1, 4 or 8.
Conductor conductor(QuadraticDirichletCharacter const & chi);

bool is_primitive(QuadraticDirichletCharacter const & chi);

/// The primitive character modulo conductor(chi) that induces chi.
QuadraticDirichletCharacter primitive_part(QuadraticDirichletCharacter const & chi);

/// All 2^k quadratic characters mod m; bit i of the index selects -1 on generator i.
std::vector<QuadraticDirichletCharacter> quadratic_characters(std::int64_t modulus);

/// The primitive quadratic characters of conductor exactly N (zero, one or two).
std::vector<QuadraticDirichletCharacter> primitive_quadratic_characters(std::int64_t conductor);

/// n -> (d/n) as a character modulo |d|. The unit discriminant gives the principal character mod 1.
QuadraticDirichletCharacter kronecker_to_dirichlet(Discriminant const & d);

/*
 * The unique fundamental discriminant d with (d/n) = chi(n) for n > 0
 * coprime to d. Throws InvalidInput if chi is not primitive. The result is
 * checked against chi on a full period before it is returned.
 */
Discriminant dirichlet_to_kronecker(QuadraticDirichletCharacter const & chi);

/// Conductor of the quadratic field, |d|. Rejects d = 1.
Conductor field_conductor(Discriminant const & d);

/// Whether the field of discriminant d lies in Q(zeta_N), i.e. |d| divides N.
bool is_field_modular(Discriminant const & d, std::int64_t modulus);

} // namespace quadgenus
