#include "quadgenus/sweeps.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "quadgenus/errors.hpp"
#include "quadgenus/forms.hpp"
#include "quadgenus/genus.hpp"

namespace quadgenus {

namespace {

using Check = std::function<std::optional<std::string>()>;

struct Item
{
    std::string label;
    Check check;
};

std::optional<std::string> run_guarded(Check const & check)
{
    try {
        return check();
    } catch (std::exception const & e) {
        return std::string("exception: ") + e.what();
    }
}

std::vector<std::optional<std::string>> run_items(std::vector<Item> const & items, unsigned jobs)
{
    std::vector<std::optional<std::string>> results(items.size());
    if (jobs <= 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i)
            results[i] = run_guarded(items[i].check);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++)
            results[i] = run_guarded(items[i].check);
    };
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
    pool.clear();  // joins
    return results;
}

std::string label(Discriminant const & d)
{
    return "D=" + to_string(d.value());
}

} // namespace

std::optional<SweepKind> parse_sweep_kind(std::string_view name)
{
    if (name == "pgt")
        return SweepKind::principal_genus;
    if (name == "dirichlet-lemma")
        return SweepKind::dirichlet_lemma;
    if (name == "theorem1")
        return SweepKind::theorem1;
    if (name == "redei")
        return SweepKind::redei;
    return std::nullopt;
}

std::string_view to_string(SweepKind kind)
{
    switch (kind) {
    case SweepKind::principal_genus:
        return "pgt";
    case SweepKind::dirichlet_lemma:
        return "dirichlet-lemma";
    case SweepKind::theorem1:
        return "theorem1";
    case SweepKind::redei:
        return "redei";
    }
    return "?";
}

std::optional<std::string> check_principal_genus(Discriminant const & d)
{
    auto const report = verify_principal_genus(d);
    if (report.passed())
        return std::nullopt;
    std::string msg = "h+=" + std::to_string(report.class_number) + " t=" + std::to_string(report.t);
    if (!report.kernel_equals_squares)
        msg += " kernel(" + std::to_string(report.kernel_count) + ")!=squares("
               + std::to_string(report.squares_count) + ")";
    if (!report.image_has_expected_size)
        msg += " |image|=" + std::to_string(report.image_count);
    if (!report.image_in_product_kernel)
        msg += " image vector with product -1";
    return msg;
}

std::optional<std::string> check_discriminant_round_trip(Discriminant const & d)
{
    auto const chi = kronecker_to_dirichlet(d);
    if (conductor(chi).value != to_int64(d.abs_value()))
        return "conductor " + std::to_string(conductor(chi).value) + " != |D|";
    auto const back = dirichlet_to_kronecker(chi);
    if (!(back == d))
        return "round trip gave " + to_string(back.value());
    return std::nullopt;
}

std::optional<std::string> check_character_round_trip(QuadraticDirichletCharacter const & chi)
{
    auto const d = dirichlet_to_kronecker(chi);
    auto const again = kronecker_to_dirichlet(d);
    if (!chars_equivalent(again, chi))
        return "character of " + to_string(d.value()) + " is not equivalent to the input";
    return std::nullopt;
}

std::optional<std::string> check_theorem1(Integer const & m)
{
    Discriminant const d = disc_of_sqrt(m);
    auto const group = narrow_class_group(d);
    std::size_t const h = ordinary_class_number(d, group);
    bool const predicted = odd_class_number(m);
    if (predicted != (h % 2 == 1))
        return "classifier says " + std::string(predicted ? "odd" : "even") + ", h=" + std::to_string(h);
    if (sgn(m) > 0) {
        bool const genus_is_k = genus_field_ordinary(d).size() == 1;
        if (genus_is_k != predicted)
            return "ordinary genus field has " + std::to_string(genus_field_ordinary(d).size())
                   + " radicands";
    }
    return std::nullopt;
}

std::optional<std::string> check_redei(Discriminant const & d)
{
    auto const group = narrow_class_group(d);
    auto const splittings = quartic_splitting_factorizations(d);
    std::size_t const r4 = group.four_rank();
    if (splittings.empty() != (r4 == 0))
        return std::to_string(splittings.size()) + " splittings but 4-rank " + std::to_string(r4);
    if (splittings.size() + 1 != (std::size_t{1} << r4))
        return std::to_string(splittings.size() + 1) + " splittings with trivial, expected 2^"
               + std::to_string(r4);
    return std::nullopt;
}

SweepSummary run_sweep(SweepKind kind, std::int64_t bound, unsigned jobs)
{
    if (bound < 1)
        throw InvalidInput("sweep bound must be positive");

    std::vector<Item> items;
    switch (kind) {
    case SweepKind::principal_genus:
        for (auto const & d : fundamental_discriminants_up_to(bound))
            items.push_back({label(d), [d] { return check_principal_genus(d); }});
        break;
    case SweepKind::redei:
        for (auto const & d : fundamental_discriminants_up_to(bound))
            items.push_back({label(d), [d] { return check_redei(d); }});
        break;
    case SweepKind::theorem1:
        for (auto const & m : squarefree_radicands_up_to(bound))
            items.push_back({"m=" + to_string(m), [m] { return check_theorem1(m); }});
        break;
    case SweepKind::dirichlet_lemma:
        for (auto const & d : fundamental_discriminants_up_to(bound))
            items.push_back({label(d), [d] { return check_discriminant_round_trip(d); }});
        for (std::int64_t n = 1; n <= bound; ++n) {
            for (auto const & chi : primitive_quadratic_characters(n)) {
                std::string values;
                for (int v : chi.generator_values())
                    values += (values.empty() ? "" : ",") + std::to_string(v);
                items.push_back({"chi mod " + std::to_string(n) + " [" + values + "]",
                                 [chi] { return check_character_round_trip(chi); }});
            }
        }
        break;
    }

    auto const results = run_items(items, jobs);
    SweepSummary summary{kind, bound, items.size(), {}};
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (results[i])
            summary.failures.push_back({items[i].label, *results[i]});
    }
    return summary;
}

} // namespace quadgenus
