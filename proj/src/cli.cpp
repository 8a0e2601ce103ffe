#include "quadgenus/cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadgenus/characters.hpp"
#include "quadgenus/discriminants.hpp"
#include "quadgenus/errors.hpp"
#include "quadgenus/forms.hpp"
#include "quadgenus/genus.hpp"
#include "quadgenus/sweeps.hpp"
#include "quadgenus/symbols.hpp"

namespace quadgenus::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options
{
    bool json = false;
    unsigned max_factor_bits = 30;
    unsigned jobs = 1;
    std::int64_t bound = 0;
    std::int64_t max_bound = 100000;
};

struct Outcome
{
    json result = json::object();
    std::string text;
    int code = exit_ok;
};

json json_int(Integer const & n)
{
    if (fits_int64(n))
        return to_int64(n);
    return to_string(n);
}

json json_form(BinaryQuadraticForm const & f)
{
    return json::array({json_int(f.a), json_int(f.b), json_int(f.c)});
}

std::string sign_str(int v)
{
    return v > 0 ? "+1" : v < 0 ? "-1" : "0";
}

std::string form_str(BinaryQuadraticForm const & f)
{
    std::ostringstream os;
    os << f;
    return os.str();
}

template <typename Range, typename Fn>
std::string join(Range const & items, std::string const & sep, Fn && fmt)
{
    std::string out;
    for (auto const & x : items) {
        if (!out.empty())
            out += sep;
        out += fmt(x);
    }
    return out;
}

std::string product_str(std::vector<PrimeDiscriminant> const & factors)
{
    if (factors.empty())
        return "(empty product)";
    return join(factors, " · ", [](auto const & f) { return to_string(f.value()); });
}

std::string structure_str(std::vector<std::int64_t> const & invariants)
{
    if (invariants.empty())
        return "trivial";
    return join(invariants, " x ", [](std::int64_t n) { return "C" + std::to_string(n); });
}

// Typed access to the positional arguments of one command, echoing what
// was parsed into the record's "inputs".
class Args
{
  public:
    Args(std::map<std::string, std::string> const & raw, Options const & opts, json & inputs)
        : raw_(raw), opts_(opts), inputs_(inputs) {}

    bool has(std::string const & name) const { return raw_.count(name) != 0; }

    Integer integer(std::string const & name)
    {
        Integer n = parse_integer(raw_.at(name));
        inputs_[name] = json_int(n);
        return n;
    }

    // Integers that will be factored by trial division.
    Integer guarded(std::string const & name)
    {
        Integer n = integer(name);
        std::size_t const bits = sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
        if (bits > opts_.max_factor_bits) {
            throw InvalidInput(name + " has " + std::to_string(bits) + " bits, above --max-factor-bits="
                               + std::to_string(opts_.max_factor_bits));
        }
        return n;
    }

    std::int64_t small(std::string const & name) { return to_int64(guarded(name)); }

    Discriminant discriminant(std::string const & name)
    {
        return Discriminant::from_integer(guarded(name));
    }

    BinaryQuadraticForm form(std::string const & a, std::string const & b, std::string const & c)
    {
        return {integer(a), integer(b), integer(c)};
    }

    // Comma-separated +1/-1 list; "none" or an absent argument is empty.
    std::vector<int> signs(std::string const & name)
    {
        std::vector<int> out;
        auto it = raw_.find(name);
        if (it != raw_.end() && it->second != "none" && !it->second.empty()) {
            std::stringstream ss(it->second);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                Integer const v = parse_integer(tok);
                if (v != 1 && v != -1)
                    throw InvalidInput("character values must be +1 or -1, got '" + tok + "'");
                out.push_back(v == 1 ? 1 : -1);
            }
        }
        inputs_[name] = out;
        return out;
    }

    QuadraticDirichletCharacter character(std::string const & modulus, std::string const & values)
    {
        std::int64_t const m = small(modulus);
        auto const v = signs(values);
        return QuadraticDirichletCharacter::from_generator_values(m, v);
    }

    Options const & options() const { return opts_; }

  private:
    std::map<std::string, std::string> const & raw_;
    Options const & opts_;
    json & inputs_;
};

struct Command
{
    std::string name;
    std::string help;
    std::vector<std::string> params;
    std::size_t required;
    std::function<Outcome(Args &)> handler;
};

std::string character_label(QuadraticDirichletCharacter const & chi)
{
    return "chi_" + to_string(dirichlet_to_kronecker(primitive_part(chi)).value());
}

json character_json(QuadraticDirichletCharacter const & chi)
{
    json values = json::array();
    for (auto v : chi.period())
        values.push_back(v.value());
    return {{"label", character_label(chi)},
            {"generator_values", chi.generator_values()},
            {"values", values},
            {"conductor", conductor(chi).value},
            {"primitive", is_primitive(chi)}};
}

Outcome cmd_is_fundamental(Args & args)
{
    Integer const n = args.guarded("n");
    bool const yes = is_fundamental(n);
    Outcome o;
    o.result["fundamental"] = yes;
    o.text = to_string(n) + (yes ? " is" : " is not") + " a fundamental discriminant\n";
    return o;
}

Outcome cmd_disc_of_sqrt(Args & args)
{
    Integer const a = args.guarded("a");
    Discriminant const d = disc_of_sqrt(a);
    Outcome o;
    o.result["discriminant"] = json_int(d.value());
    o.text = "Q(sqrt(" + to_string(a) + ")) has discriminant " + to_string(d.value()) + "\n";
    return o;
}

Outcome cmd_disc_mul(Args & args)
{
    Discriminant const d1 = args.discriminant("d1");
    Discriminant const d2 = args.discriminant("d2");
    Discriminant const d = disc_mul(d1, d2);
    Outcome o;
    o.result["product"] = json_int(d.value());
    o.text = to_string(d1.value()) + " * " + to_string(d2.value()) + " = " + to_string(d.value()) + "\n";
    return o;
}

Outcome cmd_factor(Args & args)
{
    Discriminant const d = args.discriminant("d");
    auto const fact = factor_prime_discriminants(d);
    Outcome o;
    json factors = json::array();
    for (auto const & f : fact.factors)
        factors.push_back(json_int(f.value()));
    o.result["factors"] = factors;
    o.result["r"] = fact.negative_count;
    o.result["t"] = fact.size();
    o.text = to_string(d.value()) + " = " + product_str(fact.factors) + "\nr = "
             + std::to_string(fact.negative_count) + ", t = " + std::to_string(fact.size()) + "\n";
    return o;
}

Outcome cmd_jacobi(Args & args)
{
    Integer const a = args.integer("a");
    Integer const n = args.integer("n");
    int const v = jacobi(a, n).value();
    Outcome o;
    o.result["value"] = v;
    o.text = "(" + to_string(a) + "/" + to_string(n) + ") = " + sign_str(v) + "\n";
    return o;
}

Outcome cmd_kronecker(Args & args)
{
    Discriminant const d = args.discriminant("d");
    Integer const n = args.integer("n");
    int const v = kronecker(d, n).value();
    Outcome o;
    o.result["value"] = v;
    o.text = "(" + to_string(d.value()) + "/" + to_string(n) + ") = " + sign_str(v) + "\n";
    return o;
}

Outcome cmd_kronecker_infinity(Args & args)
{
    Integer const n = args.integer("n");
    int const v = kronecker_infinity(n).value();
    Outcome o;
    o.result["value"] = v;
    o.text = "(inf/" + to_string(n) + ") = " + sign_str(v) + "\n";
    return o;
}

Outcome cmd_splitting(Args & args)
{
    Discriminant const d = args.discriminant("d");
    Integer const p = args.guarded("p");
    SplittingType const s = splitting_type(d, p);
    Outcome o;
    o.result["kronecker"] = kronecker(d, p).value();
    o.result["splitting"] = std::string(to_string(s));
    o.text = to_string(p) + " is " + std::string(to_string(s)) + " in the field of discriminant "
             + to_string(d.value()) + "\n";
    return o;
}

Outcome cmd_char_table(Args & args)
{
    std::int64_t const m = args.small("m");
    auto const gens = unit_group_generators(m);
    auto const chars = quadratic_characters(m);
    Outcome o;
    o.result["modulus"] = m;
    o.result["generators"] = gens;
    json rows = json::array();
    for (auto const & chi : chars)
        rows.push_back(character_json(chi));
    o.result["characters"] = rows;

    std::size_t const width = std::max<std::size_t>(2, std::to_string(m).size()) + 1;
    std::size_t label_width = 4;
    for (auto const & chi : chars)
        label_width = std::max(label_width, character_label(chi).size());
    std::ostringstream os;
    os << "quadratic characters modulo " << m << " (generators: "
       << (gens.empty() ? std::string("none") : join(gens, ", ", [](auto g) { return std::to_string(g); }))
       << ")\n";
    os << std::left << std::setw(static_cast<int>(label_width)) << "" << std::right;
    for (std::int64_t n = 1; n <= m; ++n)
        os << std::setw(static_cast<int>(width)) << n;
    os << "  conductor  primitive\n";
    for (auto const & chi : chars) {
        os << std::left << std::setw(static_cast<int>(label_width)) << character_label(chi) << std::right;
        for (auto v : chi.period())
            os << std::setw(static_cast<int>(width)) << sign_str(v.value());
        os << "  " << std::setw(9) << conductor(chi).value << "  " << (is_primitive(chi) ? "yes" : "no")
           << "\n";
    }
    o.text = os.str();
    return o;
}

Outcome cmd_conductor(Args & args)
{
    auto const chi = args.character("m", "values");
    Outcome o;
    o.result["conductor"] = conductor(chi).value;
    o.result["primitive"] = is_primitive(chi);
    o.text = "conductor " + std::to_string(conductor(chi).value)
             + (is_primitive(chi) ? " (primitive)\n" : " (not primitive)\n");
    return o;
}

Outcome cmd_char_equiv(Args & args)
{
    auto const chi1 = args.character("m1", "values1");
    auto const chi2 = args.character("m2", "values2");
    bool const eq = chars_equivalent(chi1, chi2);
    Outcome o;
    o.result["equivalent"] = eq;
    o.text = eq ? "equivalent\n" : "not equivalent\n";
    return o;
}

Outcome cmd_to_kronecker(Args & args)
{
    auto const chi = args.character("m", "values");
    Discriminant const d = dirichlet_to_kronecker(chi);
    Outcome o;
    o.result["discriminant"] = json_int(d.value());
    o.text = "chi(n) = (" + to_string(d.value()) + "/n)\n";
    return o;
}

Outcome cmd_to_dirichlet(Args & args)
{
    Discriminant const d = args.discriminant("d");
    auto const chi = kronecker_to_dirichlet(d);
    Outcome o;
    o.result["modulus"] = chi.modulus();
    o.result["generators"] = chi.generators();
    o.result["generator_values"] = chi.generator_values();
    o.result["conductor"] = conductor(chi).value;
    auto const fmt = [](auto v) { return std::to_string(v); };
    o.text = "modulus " + std::to_string(chi.modulus()) + "\ngenerators " + join(chi.generators(), ",", fmt)
             + "\nvalues " + join(chi.generator_values(), ",", [](int v) { return sign_str(v); })
             + "\nconductor " + std::to_string(conductor(chi).value) + "\n";
    return o;
}

Outcome cmd_field_conductor(Args & args)
{
    Discriminant const d = args.discriminant("d");
    Outcome o;
    std::int64_t const f = field_conductor(d).value;
    o.result["conductor"] = f;
    o.text = "conductor " + std::to_string(f) + "\n";
    if (args.has("N")) {
        std::int64_t const n = to_int64(args.integer("N"));
        bool const modular = is_field_modular(d, n);
        o.result["modular"] = modular;
        o.text += std::string(modular ? "contained" : "not contained") + " in Q(zeta_" + std::to_string(n)
                  + ")\n";
    }
    return o;
}

Outcome cmd_class_group(Args & args)
{
    Discriminant const d = args.discriminant("d");
    auto const group = narrow_class_group(d);
    std::size_t const h = ordinary_class_number(d, group);
    Outcome o;
    o.result["narrow_class_number"] = group.order();
    o.result["invariants"] = group.invariants();
    o.result["class_number"] = h;
    json elements = json::array();
    for (auto const & f : group.elements())
        elements.push_back(json_form(f));
    o.result["elements"] = elements;

    std::ostringstream os;
    os << "Cl+(" << d.value() << "): order " << group.order() << ", structure "
       << structure_str(group.invariants()) << "\n";
    os << "class number h = " << h << "\n";
    for (std::size_t i = 0; i < group.order(); ++i)
        os << "  [" << i << "] " << group.element(i) << "\n";
    o.text = os.str();
    return o;
}

Outcome cmd_reduce(Args & args)
{
    auto const f = args.form("a", "b", "c");
    auto const r = reduce(f);
    auto const canon = canonical_form(f);
    Outcome o;
    o.result["reduced"] = json_form(r);
    o.result["canonical"] = json_form(canon);
    o.text = "reduced " + form_str(r) + "\ncanonical " + form_str(canon) + "\n";
    if (sgn(f.discriminant()) > 0) {
        json cycle = json::array();
        auto const forms = reduction_cycle(f);
        for (auto const & g : forms)
            cycle.push_back(json_form(g));
        o.result["cycle"] = cycle;
        o.text += "cycle " + join(forms, " ", form_str) + "\n";
    }
    return o;
}

Outcome cmd_equivalent(Args & args)
{
    auto const f = args.form("a1", "b1", "c1");
    auto const g = args.form("a2", "b2", "c2");
    bool const eq = equivalent(f, g);
    Outcome o;
    o.result["equivalent"] = eq;
    o.text = eq ? "equivalent\n" : "not equivalent\n";
    return o;
}

Outcome cmd_compose(Args & args)
{
    auto const f = args.form("a1", "b1", "c1");
    auto const g = args.form("a2", "b2", "c2");
    auto const h = compose(f, g);
    Outcome o;
    o.result["form"] = json_form(h);
    o.result["canonical"] = json_form(canonical_form(h));
    o.text = form_str(h) + "\n";
    return o;
}

Outcome cmd_represent(Args & args)
{
    auto const f = args.form("a", "b", "c");
    Integer const m = args.integer("M");
    auto const r = represented_value_coprime_to(f, m);
    Outcome o;
    o.result["value"] = json_int(r.value);
    o.result["x"] = json_int(r.x);
    o.result["y"] = json_int(r.y);
    o.text = to_string(r.value) + " = f(" + to_string(r.x) + ", " + to_string(r.y) + ")\n";
    return o;
}

Outcome cmd_unit_norm(Args & args)
{
    Integer const d0 = args.guarded("d0");
    int const norm = fundamental_unit_norm(d0);
    std::size_t const period = sqrt_continued_fraction_period(d0);
    Outcome o;
    o.result["norm"] = norm;
    o.result["period"] = period;
    o.text = "N(eps) = " + sign_str(norm) + " (continued fraction period " + std::to_string(period) + ")\n";
    return o;
}

Outcome cmd_genus_field(Args & args)
{
    Discriminant const d = args.discriminant("d");
    auto const g = genus_field(d);
    auto const strict = g.strict_radicands();
    Outcome o;
    json gens = json::array(), rads = json::array(), ord = json::array();
    for (auto const & p : g.strict_generators)
        gens.push_back(json_int(p.value()));
    for (auto const & r : strict)
        rads.push_back(json_int(r));
    for (auto const & r : g.ordinary_radicands)
        ord.push_back(json_int(r));
    o.result["strict_generators"] = gens;
    o.result["strict_radicands"] = rads;
    o.result["strict_degree"] = json_int(g.strict_degree());
    o.result["ordinary_radicands"] = ord;
    auto const sqrt_list = [](std::vector<Integer> const & rs) {
        return "Q(" + join(rs, ", ", [](Integer const & r) { return "sqrt(" + to_string(r) + ")"; }) + ")";
    };
    o.text = "strict genus field:   " + sqrt_list(strict) + "  [prime discriminants "
             + join(g.strict_generators, ", ", [](auto const & p) { return to_string(p.value()); })
             + "; degree " + to_string(g.strict_degree()) + "]\n"
             + "ordinary genus field: " + sqrt_list(g.ordinary_radicands) + "\n";
    return o;
}

Outcome cmd_genus_chars(Args & args)
{
    Discriminant const d = args.discriminant("d");
    auto const group = narrow_class_group(d);
    auto const fact = factor_prime_discriminants(d);
    auto const report = verify_principal_genus(group);
    Outcome o;
    json factors = json::array();
    for (auto const & f : fact.factors)
        factors.push_back(json_int(f.value()));
    o.result["factors"] = factors;
    o.result["t"] = fact.size();
    o.result["genera"] = number_of_genera(d);
    json classes = json::array();
    for (std::size_t i = 0; i < group.order(); ++i) {
        json vals = json::array();
        for (auto v : report.class_vectors[i].values)
            vals.push_back(v.value());
        classes.push_back({{"form", json_form(group.element(i))}, {"characters", vals}});
    }
    o.result["classes"] = classes;
    o.result["kernel_equals_squares"] = report.kernel_equals_squares;
    o.result["image_size"] = report.image_count;
    o.result["image_products_trivial"] = report.image_in_product_kernel;
    o.result["passed"] = report.passed();

    std::ostringstream os;
    os << "D = " << d.value() << " = " << product_str(fact.factors) << ", t = " << fact.size()
       << ", genera = " << number_of_genera(d) << "\n";
    std::size_t fw = 10;
    for (auto const & f : group.elements())
        fw = std::max(fw, form_str(f).size() + 2);
    os << std::left << std::setw(static_cast<int>(fw)) << "class" << std::right;
    for (auto const & f : fact.factors)
        os << std::setw(6) << to_string(f.value());
    os << "\n";
    for (std::size_t i = 0; i < group.order(); ++i) {
        os << std::left << std::setw(static_cast<int>(fw)) << form_str(group.element(i)) << std::right;
        for (auto v : report.class_vectors[i].values)
            os << std::setw(6) << sign_str(v.value());
        os << "\n";
    }
    os << "kernel(X) = squares: " << (report.kernel_equals_squares ? "yes" : "NO")
       << "; |image(X)| = " << report.image_count << (report.image_has_expected_size ? "" : " (UNEXPECTED)")
       << "; image products +1: " << (report.image_in_product_kernel ? "yes" : "NO") << "\n";
    o.text = os.str();
    if (!report.passed())
        o.code = exit_check_failed;
    return o;
}

Outcome cmd_odd_class(Args & args)
{
    Integer const m = args.guarded("m");
    bool const odd = odd_class_number(m);
    Outcome o;
    o.result["odd"] = odd;
    o.text = "Q(sqrt(" + to_string(m) + ")) has " + (odd ? "odd" : "even") + " class number\n";
    return o;
}

Outcome cmd_quartic_splittings(Args & args)
{
    Discriminant const d = args.discriminant("d");
    auto const pairs = quartic_splitting_factorizations(d);
    Outcome o;
    json list = json::array();
    std::ostringstream os;
    for (auto const & p : pairs) {
        list.push_back(json::array({json_int(p.d1.value()), json_int(p.d2.value())}));
        os << to_string(p.d1.value()) << " * " << to_string(p.d2.value()) << "\n";
    }
    o.result["factorizations"] = list;
    o.result["count_with_trivial"] = count_quartic_splittings_with_trivial(d);
    if (pairs.empty())
        os << "none\n";
    o.text = os.str();
    return o;
}

std::vector<Command> const & commands()
{
    static std::vector<Command> const table{
        {"is-fundamental", "test whether n is 1 or a fundamental discriminant", {"n"}, 1, cmd_is_fundamental},
        {"disc-of-sqrt", "discriminant of Q(sqrt(a))", {"a"}, 1, cmd_disc_of_sqrt},
        {"disc-mul", "group law on discriminants", {"d1", "d2"}, 2, cmd_disc_mul},
        {"factor", "factor into prime discriminants", {"d"}, 1, cmd_factor},
        {"jacobi", "Jacobi symbol (a/n), n odd positive", {"a", "n"}, 2, cmd_jacobi},
        {"kronecker", "Kronecker symbol (d/n)", {"d", "n"}, 2, cmd_kronecker},
        {"kronecker-inf", "infinite Kronecker symbol (sign of n)", {"n"}, 1, cmd_kronecker_infinity},
        {"splitting", "splitting type of the prime p", {"d", "p"}, 2, cmd_splitting},
        {"char-table", "all quadratic characters mod m with values on 1..m", {"m"}, 1, cmd_char_table},
        {"conductor", "conductor of the character given by generator values", {"m", "values"}, 1,
         cmd_conductor},
        {"char-equiv", "compare two characters", {"m1", "values1", "m2", "values2"}, 4, cmd_char_equiv},
        {"to-kronecker", "discriminant of a primitive quadratic character", {"m", "values"}, 1,
         cmd_to_kronecker},
        {"to-dirichlet", "Kronecker character of d as a Dirichlet character", {"d"}, 1, cmd_to_dirichlet},
        {"field-conductor", "conductor of the quadratic field; optionally test K in Q(zeta_N)", {"d", "N"}, 1,
         cmd_field_conductor},
        {"class-group", "narrow class group via binary quadratic forms", {"d"}, 1, cmd_class_group},
        {"reduce", "reduce the form (a, b, c)", {"a", "b", "c"}, 3, cmd_reduce},
        {"equivalent", "proper equivalence of two forms", {"a1", "b1", "c1", "a2", "b2", "c2"}, 6,
         cmd_equivalent},
        {"compose", "composition of two forms", {"a1", "b1", "c1", "a2", "b2", "c2"}, 6, cmd_compose},
        {"represent", "smallest positive value coprime to M", {"a", "b", "c", "M"}, 4, cmd_represent},
        {"unit-norm", "norm of the fundamental unit of Q(sqrt(d0))", {"d0"}, 1, cmd_unit_norm},
        {"genus-field", "strict and ordinary genus fields", {"d"}, 1, cmd_genus_field},
        {"genus-chars", "genus character table on Cl+ and principal genus check", {"d"}, 1, cmd_genus_chars},
        {"odd-class", "odd class number classifier for Q(sqrt(m))", {"m"}, 1, cmd_odd_class},
        {"quartic-splittings", "coprime factorizations with mutual splitting", {"d"}, 1,
         cmd_quartic_splittings},
    };
    return table;
}

Outcome cmd_verify(std::string const & kind_name, Options const & opts, json & inputs, std::ostream & err)
{
    inputs["kind"] = kind_name;
    inputs["bound"] = opts.bound;
    auto const kind = parse_sweep_kind(kind_name);
    if (!kind)
        throw InvalidInput("unknown verify kind '" + kind_name + "' (pgt, dirichlet-lemma, theorem1, redei)");
    if (opts.bound < 1)
        throw InvalidInput("--bound must be positive");
    if (opts.bound > opts.max_bound) {
        throw InvalidInput("--bound " + std::to_string(opts.bound) + " exceeds --max-bound "
                           + std::to_string(opts.max_bound));
    }

    auto const start = std::chrono::steady_clock::now();
    auto const summary = run_sweep(*kind, opts.bound, opts.jobs);
    std::chrono::duration<double> const elapsed = std::chrono::steady_clock::now() - start;
    err << "verify " << kind_name << ": " << std::fixed << std::setprecision(2) << elapsed.count() << " s\n";

    std::string const noun = *kind == SweepKind::theorem1        ? "radicands"
                             : *kind == SweepKind::dirichlet_lemma ? "items"
                                                                   : "discriminants";
    Outcome o;
    o.result["checked"] = summary.checked;
    json failures = json::array();
    std::ostringstream os;
    for (auto const & f : summary.failures) {
        failures.push_back({{"item", f.item}, {"detail", f.detail}});
        os << "FAIL " << f.item << ": " << f.detail << "\n";
    }
    o.result["failures"] = failures;
    os << "checked " << summary.checked << " " << noun << ", " << summary.failures.size() << " failures\n";
    o.text = os.str();
    if (!summary.failures.empty())
        o.code = exit_check_failed;
    return o;
}

void emit(std::ostream & out, std::ostream & err, Options const & opts, std::string const & command,
          json const & inputs, Outcome const & outcome, std::string const & status)
{
    if (opts.json) {
        json record{{"command", command}, {"inputs", inputs}, {"result", outcome.result}, {"status", status}};
        out << record.dump() << "\n";
        return;
    }
    if (status == "ok")
        out << outcome.text;
    else if (outcome.result.contains("error"))
        err << "error: " << outcome.result["error"].get<std::string>() << "\n";
    else
        out << outcome.text;
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    Options opts;
    CLI::App app{"Genus theory of quadratic number fields", "quadgenus"};
    app.add_flag("--json", opts.json, "one JSON record per line");
    app.add_option("--max-factor-bits", opts.max_factor_bits, "largest input bit length to factor")
        ->capture_default_str();
    app.add_option("--jobs", opts.jobs, "worker threads for verify sweeps")->capture_default_str();
    app.require_subcommand(1);

    std::map<std::string, std::map<std::string, std::string>> raw;
    std::map<CLI::App *, Command const *> by_app;
    for (auto const & cmd : commands()) {
        auto * sub = app.add_subcommand(cmd.name, cmd.help);
        sub->fallthrough();
        for (std::size_t i = 0; i < cmd.params.size(); ++i) {
            std::string const & p = cmd.params[i];
            auto * opt = sub->add_option_function<std::string>(
                p, [&raw, &cmd, p](std::string const & v) { raw[cmd.name][p] = v; }, p);
            if (i < cmd.required)
                opt->required();
        }
        by_app[sub] = &cmd;
    }
    std::string verify_kind;
    auto * verify = app.add_subcommand("verify", "range sweep: pgt, dirichlet-lemma, theorem1, redei");
    verify->fallthrough();
    verify->add_option("kind", verify_kind, "pgt | dirichlet-lemma | theorem1 | redei")->required();
    verify->add_option("--bound", opts.bound, "largest |D| (or |m|) to check")->required();
    verify->add_option("--max-bound", opts.max_bound, "resource guard for --bound")->capture_default_str();

    std::vector<char const *> argv{"quadgenus"};
    for (auto const & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::CallForAllHelp const &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_invalid_input;
    }

    auto const selected = app.get_subcommands();
    std::string const command = selected.front()->get_name();
    json inputs = json::object();
    Outcome outcome;
    std::string status = "ok";
    try {
        if (selected.front() == verify) {
            outcome = cmd_verify(verify_kind, opts, inputs, err);
        } else {
            Command const & cmd = *by_app.at(selected.front());
            Args a(raw[cmd.name], opts, inputs);
            outcome = cmd.handler(a);
        }
        if (outcome.code == exit_check_failed)
            status = "internal-check-failed";
    } catch (InternalCheckFailed const & e) {
        outcome = Outcome{};
        outcome.result["error"] = e.what();
        outcome.code = exit_check_failed;
        status = "internal-check-failed";
    } catch (std::invalid_argument const & e) {
        outcome = Outcome{};
        outcome.result["error"] = e.what();
        outcome.code = exit_invalid_input;
        status = "invalid-input";
    }
    emit(out, err, opts, command, inputs, outcome, status);
    return outcome.code;
}

} // namespace quadgenus::cli
