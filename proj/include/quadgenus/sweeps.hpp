#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadgenus/characters.hpp"
#include "quadgenus/discriminants.hpp"

namespace quadgenus {

enum class SweepKind { principal_genus, dirichlet_lemma, theorem1, redei };

/// "pgt", "dirichlet-lemma", "theorem1", "redei".
std::optional<SweepKind> parse_sweep_kind(std::string_view name);
std::string_view to_string(SweepKind kind);

struct SweepFailure
{
    std::string item;
    std::string detail;
};

struct SweepSummary
{
    SweepKind kind;
    std::int64_t bound = 0;
    std::size_t checked = 0;
    /// In ascending item order, independent of the number of jobs.
    std::vector<SweepFailure> failures;
};

/*
 * Runs one invariant over every item up to `bound`:
 *   pgt              fundamental |d| <= bound, principal genus exact sequence
 *   dirichlet-lemma  fundamental |d| <= bound and primitive characters of
 *                    conductor <= bound, both round trips
 *   theorem1         squarefree m, |m| <= bound, classifier vs class number parity
 *   redei            fundamental |d| <= bound, C4 splittings vs 4-rank of Cl+
 */
SweepSummary run_sweep(SweepKind kind, std::int64_t bound, unsigned jobs = 1);

// Single-item checks; nullopt on success, otherwise a description of the failure.
std::optional<std::string> check_principal_genus(Discriminant const & d);
std::optional<std::string> check_discriminant_round_trip(Discriminant const & d);
std::optional<std::string> check_character_round_trip(QuadraticDirichletCharacter const & chi);
std::optional<std::string> check_theorem1(Integer const & m);
std::optional<std::string> check_redei(Discriminant const & d);

} // namespace quadgenus
