#include "quadgenus/forms.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <tuple>

#include "quadgenus/errors.hpp"

namespace quadgenus {

namespace {

Integer gcd3(Integer const & x, Integer const & y, Integer const & z)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    return g;
}

void check_form(BinaryQuadraticForm const & f)
{
    Integer const disc = f.discriminant();
    if (is_perfect_square(disc))
        throw InvalidInput("square discriminant " + to_string(disc));
    if (!f.is_primitive())
        throw InvalidInput("form is not primitive");
    if (sgn(disc) < 0 && sgn(f.a) < 0)
        throw InvalidInput("negative definite form");
}

void check_same_discriminant(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g)
{
    if (f.discriminant() != g.discriminant())
        throw InvalidInput("forms have different discriminants");
}

// Ordering key for canonical representatives.
auto class_key(BinaryQuadraticForm const & f)
{
    return std::make_tuple(Integer(abs(f.a)), f.a, f.b);
}

bool key_less(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g)
{
    return class_key(f) < class_key(g);
}

BinaryQuadraticForm reduce_definite(BinaryQuadraticForm f)
{
    Integer const disc = f.discriminant();
    auto normalize = [&] {
        Integer const two_a = 2 * f.a;
        Integer r = mod_floor(f.b, two_a);
        if (r > f.a)
            r -= two_a;
        f.b = r;
        f.c = (f.b * f.b - disc) / (4 * f.a);
    };
    normalize();
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize();
    }
    if (f.a == f.c && sgn(f.b) < 0)
        f.b = -f.b;
    return f;
}

BinaryQuadraticForm reduce_indefinite(BinaryQuadraticForm f)
{
    // rho reaches a reduced form after O(log) steps; the cap only guards
    // against a broken invariant.
    for (int steps = 0; steps < 100000; ++steps) {
        if (is_reduced(f))
            return f;
        f = rho(f);
    }
    throw InternalCheckFailed("indefinite reduction did not terminate");
}

std::int64_t int_gcd3(std::int64_t x, std::int64_t y, std::int64_t z)
{
    return std::gcd(std::gcd(x, y), z);
}

} // namespace

bool BinaryQuadraticForm::is_primitive() const
{
    return gcd3(a, b, c) == 1;
}

bool FormLess::operator()(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g) const
{
    return std::tie(f.a, f.b, f.c) < std::tie(g.a, g.b, g.c);
}

std::ostream & operator<<(std::ostream & os, BinaryQuadraticForm const & f)
{
    return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
}

BinaryQuadraticForm principal_form(Integer const & disc)
{
    Integer const r = mod_floor(disc, Integer(4));
    if (r != 0 && r != 1)
        throw InvalidInput("not a discriminant: " + to_string(disc));
    Integer const b = r;
    return reduce(BinaryQuadraticForm(1, b, (b * b - disc) / 4));
}

BinaryQuadraticForm opposite(BinaryQuadraticForm const & f)
{
    return {f.a, -f.b, f.c};
}

bool is_reduced(BinaryQuadraticForm const & f)
{
    Integer const disc = f.discriminant();
    if (sgn(disc) < 0) {
        Integer const abs_b = abs(f.b);
        if (!(abs_b <= f.a && f.a <= f.c))
            return false;
        if ((abs_b == f.a || f.a == f.c) && sgn(f.b) < 0)
            return false;
        return true;
    }
    // sqrt(D) is irrational, so x < sqrt(D) iff x <= isqrt(D) for integers x.
    Integer const s = isqrt(disc);
    Integer const two_a = 2 * abs(f.a);
    return sgn(f.b) > 0 && f.b <= s && two_a + f.b > s && two_a - f.b <= s;
}

BinaryQuadraticForm rho(BinaryQuadraticForm const & f)
{
    Integer const disc = f.discriminant();
    Integer const s = isqrt(disc);
    Integer const abs_c = abs(f.c);
    Integer const two_c = 2 * abs_c;
    Integer r;
    if (abs_c <= s) {
        // r = -b mod 2|c| with sqrt(D) - 2|c| < r < sqrt(D)
        r = s - mod_floor(s + f.b, two_c);
    } else {
        // r = -b mod 2|c| with -|c| < r <= |c|
        r = mod_floor(-f.b, two_c);
        if (r > abs_c)
            r -= two_c;
    }
    return {f.c, r, (r * r - disc) / (4 * f.c)};
}

BinaryQuadraticForm reduce(BinaryQuadraticForm const & f)
{
    check_form(f);
    if (sgn(f.discriminant()) < 0)
        return reduce_definite(f);
    return reduce_indefinite(f);
}

std::vector<BinaryQuadraticForm> reduction_cycle(BinaryQuadraticForm const & f)
{
    if (sgn(f.discriminant()) < 0)
        throw InvalidInput("reduction cycles are for indefinite forms");
    BinaryQuadraticForm const start = reduce(f);
    std::vector<BinaryQuadraticForm> cycle{start};
    for (BinaryQuadraticForm g = rho(start); !(g == start); g = rho(g)) {
        if (!is_reduced(g))
            throw InternalCheckFailed("rho left the set of reduced forms");
        cycle.push_back(g);
    }
    return cycle;
}

BinaryQuadraticForm canonical_form(BinaryQuadraticForm const & f)
{
    if (sgn(f.discriminant()) < 0)
        return reduce(f);
    auto cycle = reduction_cycle(f);
    return *std::min_element(cycle.begin(), cycle.end(), key_less);
}

bool equivalent(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g)
{
    check_same_discriminant(f, g);
    if (sgn(f.discriminant()) < 0)
        return reduce(f) == reduce(g);
    BinaryQuadraticForm const target = reduce(g);
    auto const cycle = reduction_cycle(f);
    return std::find(cycle.begin(), cycle.end(), target) != cycle.end();
}

BinaryQuadraticForm compose(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g)
{
    check_same_discriminant(f, g);
    check_form(f);
    check_form(g);
    Integer const disc = f.discriminant();

    // u a1 + v a2 + w s = d = gcd(a1, a2, s), s = (b1 + b2) / 2
    Integer const s = (f.b + g.b) / 2;
    Integer g1, u1, v1;
    mpz_gcdext(g1.get_mpz_t(), u1.get_mpz_t(), v1.get_mpz_t(), f.a.get_mpz_t(), g.a.get_mpz_t());
    Integer d, x, w;
    mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), w.get_mpz_t(), g1.get_mpz_t(), s.get_mpz_t());
    Integer const v = x * v1;

    Integer const a3 = f.a * g.a / (d * d);
    Integer b3 = g.b + 2 * (g.a / d) * (v * (s - g.b) - w * g.c);
    b3 = mod_floor(b3, 2 * a3);
    Integer const num = b3 * b3 - disc;
    if (!mpz_divisible_p(num.get_mpz_t(), Integer(4 * a3).get_mpz_t()))
        throw InternalCheckFailed("composition produced a non-integral form");
    return reduce(BinaryQuadraticForm(a3, b3, num / (4 * a3)));
}

std::vector<BinaryQuadraticForm> reduced_forms(Discriminant const & d)
{
    if (d.is_unit())
        throw InvalidInput("discriminant 1 has no forms");
    Integer const abs_d = d.abs_value();
    if (!fits_int64(4 * abs_d))
        throw InvalidInput("discriminant too large for form enumeration");
    std::int64_t const disc = to_int64(d.value());
    std::int64_t const parity = disc & 1;
    std::vector<BinaryQuadraticForm> out;

    if (disc < 0) {
        for (std::int64_t a = 1; 3 * a * a <= -disc; ++a) {
            std::int64_t b = -a + 1;
            if (mod_floor(b, 2) != parity)
                ++b;
            for (; b <= a; b += 2) {
                std::int64_t const num = b * b - disc;
                if (num % (4 * a) != 0)
                    continue;
                std::int64_t const c = num / (4 * a);
                if (c < a || (c == a && b < 0))
                    continue;
                if (int_gcd3(a, b, c) != 1)
                    continue;
                out.emplace_back(a, b, c);
            }
        }
        return out;
    }

    std::int64_t const s = to_int64(isqrt(d.value()));
    for (std::int64_t a = 1; a <= s; ++a) {
        std::int64_t b = std::max<std::int64_t>({1, s - 2 * a + 1, 2 * a - s});
        if (mod_floor(b, 2) != parity)
            ++b;
        for (; b <= s; b += 2) {
            std::int64_t const num = disc - b * b;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t const c = num / (4 * a);
            if (int_gcd3(a, b, c) != 1)
                continue;
            out.emplace_back(a, b, -c);
            out.emplace_back(-a, b, c);
        }
    }
    return out;
}

std::size_t NarrowClassGroup::index_of(BinaryQuadraticForm const & f) const
{
    if (f.discriminant() != disc_.value())
        throw InvalidInput("form has discriminant " + to_string(f.discriminant())
                           + ", expected " + to_string(disc_.value()));
    auto it = reduced_index_.find(reduce(f));
    if (it == reduced_index_.end())
        throw InternalCheckFailed("reduced form missing from class table");
    return it->second;
}

std::size_t NarrowClassGroup::multiply(std::size_t i, std::size_t j) const
{
    return index_of(compose(elements_.at(i), elements_.at(j)));
}

std::size_t NarrowClassGroup::inverse(std::size_t i) const
{
    return index_of(opposite(elements_.at(i)));
}

std::size_t NarrowClassGroup::power(std::size_t i, std::uint64_t n) const
{
    std::size_t result = identity();
    std::size_t base = i;
    while (n > 0) {
        if (n & 1)
            result = multiply(result, base);
        base = multiply(base, base);
        n >>= 1;
    }
    return result;
}

std::size_t NarrowClassGroup::element_order(std::size_t i) const
{
    std::size_t k = 1;
    for (std::size_t p = i; p != identity(); p = multiply(p, i))
        ++k;
    return k;
}

std::size_t NarrowClassGroup::exponent() const
{
    return invariants_.empty() ? 1 : static_cast<std::size_t>(invariants_.back());
}

std::size_t NarrowClassGroup::two_rank() const
{
    return static_cast<std::size_t>(
        std::count_if(invariants_.begin(), invariants_.end(), [](auto n) { return n % 2 == 0; }));
}

std::size_t NarrowClassGroup::four_rank() const
{
    return static_cast<std::size_t>(
        std::count_if(invariants_.begin(), invariants_.end(), [](auto n) { return n % 4 == 0; }));
}

NarrowClassGroup narrow_class_group(Discriminant const & d)
{
    NarrowClassGroup group(d);
    auto const forms = reduced_forms(d);

    // Partition reduced forms into classes.
    std::vector<std::vector<BinaryQuadraticForm>> classes;
    if (d.sign() < 0) {
        for (auto const & f : forms)
            classes.push_back({f});
    } else {
        std::set<BinaryQuadraticForm, FormLess> const all(forms.begin(), forms.end());
        std::set<BinaryQuadraticForm, FormLess> seen;
        for (auto const & f : forms) {
            if (seen.count(f))
                continue;
            auto cycle = reduction_cycle(f);
            for (auto const & g : cycle) {
                if (!all.count(g))
                    throw InternalCheckFailed("cycle member missing from enumeration");
                seen.insert(g);
            }
            classes.push_back(std::move(cycle));
        }
        if (seen.size() != all.size())
            throw InternalCheckFailed("reduced forms not covered by cycles");
    }

    BinaryQuadraticForm const one = principal_form(d.value());
    std::vector<std::pair<BinaryQuadraticForm, std::size_t>> reps;
    std::size_t principal_class = classes.size();
    for (std::size_t k = 0; k < classes.size(); ++k) {
        auto const & cls = classes[k];
        reps.emplace_back(*std::min_element(cls.begin(), cls.end(), key_less), k);
        if (std::find(cls.begin(), cls.end(), one) != cls.end())
            principal_class = k;
    }
    if (principal_class == classes.size())
        throw InternalCheckFailed("principal form not found among reduced forms");
    std::sort(reps.begin(), reps.end(), [&](auto const & x, auto const & y) {
        bool const xp = x.second == principal_class, yp = y.second == principal_class;
        if (xp != yp)
            return xp;
        return key_less(x.first, y.first);
    });
    for (std::size_t i = 0; i < reps.size(); ++i) {
        group.elements_.push_back(reps[i].first);
        for (auto const & f : classes[reps[i].second])
            group.reduced_index_.emplace(f, i);
    }

    // Structure: adjoin generators one at a time, recording the relation
    // g^k = (word in earlier generators) whenever a power of g first lands
    // in the subgroup built so far. Smith form of the relations gives the
    // elementary divisors.
    std::size_t const h = group.order();
    std::vector<std::optional<std::vector<std::int64_t>>> coords(h);
    coords[0] = std::vector<std::int64_t>{};
    std::vector<std::size_t> members{0};
    std::vector<std::vector<std::int64_t>> relations;
    for (std::size_t i = 0; i < h; ++i) {
        if (coords[i])
            continue;
        std::size_t const gen = relations.size();
        std::size_t p = i;
        std::int64_t k = 1;
        std::vector<std::size_t> powers{0, i};
        while (!coords[p]) {
            p = group.multiply(p, i);
            ++k;
            powers.push_back(p);
        }
        std::vector<std::int64_t> row(gen + 1, 0);
        for (std::size_t j = 0; j < gen; ++j)
            row[j] = -(*coords[p])[j];
        row[gen] = k;
        for (auto & r : relations)
            r.push_back(0);
        relations.push_back(std::move(row));

        for (std::size_t m : members)
            coords[m]->push_back(0);
        std::vector<std::size_t> added;
        for (std::int64_t e = 1; e < k; ++e) {
            for (std::size_t m : members) {
                std::size_t const prod = group.multiply(m, powers[static_cast<std::size_t>(e)]);
                if (coords[prod])
                    throw InternalCheckFailed("coset enumeration revisited an element");
                auto c = *coords[m];
                c[gen] = e;
                coords[prod] = std::move(c);
                added.push_back(prod);
            }
        }
        members.insert(members.end(), added.begin(), added.end());
    }
    if (members.size() != h)
        throw InternalCheckFailed("generators do not span the class group");

    std::int64_t product = 1;
    for (std::int64_t n : smith_diagonal(relations)) {
        product *= n;
        if (n > 1)
            group.invariants_.push_back(n);
    }
    if (product != static_cast<std::int64_t>(h))
        throw InternalCheckFailed("elementary divisors do not multiply to the class number");
    return group;
}

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m)
{
    std::size_t const n = m.size();
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero pivot in the trailing block
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (m[i][j] != 0 && (pi == n || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == n)
                break;
            std::swap(m[t], m[pi]);
            for (auto & row : m)
                std::swap(row[t], row[pj]);

            bool clean = true;
            std::int64_t const piv = m[t][t];
            for (std::size_t i = t + 1; i < n; ++i) {
                std::int64_t const q = m[i][t] / piv;
                for (std::size_t j = t; j < n; ++j)
                    m[i][j] -= q * m[t][j];
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                std::int64_t const q = m[t][j] / piv;
                for (std::size_t i = t; i < n; ++i)
                    m[i][j] -= q * m[i][t];
                clean = clean && m[t][j] == 0;
            }
            if (!clean)
                continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (m[i][j] % piv != 0) {
                        for (std::size_t jj = t; jj < n; ++jj)
                            m[t][jj] += m[i][jj];
                        divides = false;
                        break;
                    }
                }
            }
            if (divides)
                break;
        }
    }
    std::vector<std::int64_t> diag(n);
    for (std::size_t i = 0; i < n; ++i)
        diag[i] = std::abs(m[i][i]);
    std::sort(diag.begin(), diag.end());
    return diag;
}

namespace {

// f(-x, -y) = f(x, y), so only the half plane y > 0 or (y = 0, x > 0) is
// visited, ordered by (y, |x|, x < 0).
template <typename Visit>
void for_each_shell_point(std::int64_t radius, Visit && visit)
{
    visit(radius, std::int64_t{0});
    for (std::int64_t y = 1; y < radius; ++y) {
        visit(radius, y);
        visit(-radius, y);
    }
    visit(std::int64_t{0}, radius);
    for (std::int64_t x = 1; x <= radius; ++x) {
        visit(x, radius);
        visit(-x, radius);
    }
}

void check_represent_input(BinaryQuadraticForm const & f, Integer const & modulus)
{
    check_form(f);
    if (sgn(modulus) <= 0)
        throw InvalidInput("modulus must be positive");
}

bool coprime(Integer const & v, Integer const & modulus)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return g == 1;
}

constexpr std::int64_t max_search_radius = 1 << 16;

} // namespace

RepresentedValue represented_value_coprime_to(BinaryQuadraticForm const & f,
                                              Integer const & modulus)
{
    check_represent_input(f, modulus);
    bool const definite = sgn(f.discriminant()) < 0;
    Integer const abs_disc = abs(f.discriminant());
    std::optional<RepresentedValue> best;
    for (std::int64_t radius = 1; radius <= max_search_radius; ++radius) {
        for_each_shell_point(radius, [&](std::int64_t x, std::int64_t y) {
            Integer const v = f(Integer(x), Integer(y));
            if (sgn(v) <= 0 || !coprime(v, modulus))
                return;
            if (!best || v < best->value)
                best = RepresentedValue{v, Integer(x), Integer(y)};
        });
        if (!best)
            continue;
        if (!definite)
            return *best;
        // f(x, y) >= |D| (x^2 + y^2) / (4 (a + c)) on positive definite forms.
        Integer const next = radius + 1;
        if (abs_disc * next * next > 4 * (f.a + f.c) * best->value)
            return *best;
    }
    throw InternalCheckFailed("no coprime value found within the search radius");
}

std::vector<RepresentedValue> represented_values_coprime_to(BinaryQuadraticForm const & f,
                                                            Integer const & modulus,
                                                            std::size_t count)
{
    check_represent_input(f, modulus);
    std::vector<RepresentedValue> out;
    std::set<Integer> seen;
    for (std::int64_t radius = 1; radius <= max_search_radius && out.size() < count; ++radius) {
        for_each_shell_point(radius, [&](std::int64_t x, std::int64_t y) {
            if (out.size() >= count)
                return;
            Integer const v = f(Integer(x), Integer(y));
            if (sgn(v) <= 0 || !coprime(v, modulus) || !seen.insert(v).second)
                return;
            out.push_back({v, Integer(x), Integer(y)});
        });
    }
    if (out.size() < count)
        throw InternalCheckFailed("not enough coprime values within the search radius");
    return out;
}

std::size_t sqrt_continued_fraction_period(Integer const & n)
{
    if (n <= 1 || is_perfect_square(n))
        throw InvalidInput("need a non-square integer > 1, got " + to_string(n));
    Integer const a0 = isqrt(n);
    Integer m = 0, q = 1, a = a0;
    std::size_t period = 0;
    do {
        m = q * a - m;
        q = (n - m * m) / q;
        a = (a0 + m) / q;
        ++period;
    } while (a != 2 * a0);
    return period;
}

int fundamental_unit_norm(Integer const & d0)
{
    if (d0 <= 1 || is_perfect_square(d0))
        throw InvalidInput("need a non-square integer > 1, got " + to_string(d0));
    if (!is_squarefree(d0))
        throw InvalidInput("not squarefree: " + to_string(d0));
    return sqrt_continued_fraction_period(d0) % 2 == 1 ? -1 : 1;
}

std::size_t ordinary_class_number(Discriminant const & d, NarrowClassGroup const & group)
{
    if (d.sign() < 0 || fundamental_unit_norm(squarefree_kernel(d.value())) == -1)
        return group.order();
    return group.order() / 2;
}

std::size_t ordinary_class_number(Discriminant const & d)
{
    return ordinary_class_number(d, narrow_class_group(d));
}

} // namespace quadgenus
