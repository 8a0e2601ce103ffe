#pragma once

// Brute-force reference computations for the test suites. Nothing here
// calls into the library's symbol, character or form code.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m)
{
    __int128 r = 1, x = mod(b, m);
    while (e > 0) {
        if (e & 1)
            r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(r % m);
}

inline bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t k = 2; k * k <= n; ++k)
        if (n % k == 0)
            return false;
    return true;
}

inline bool squarefree(std::int64_t n)
{
    n = std::llabs(n);
    for (std::int64_t k = 2; k * k <= n; ++k)
        if (n % (k * k) == 0)
            return false;
    return true;
}

/// Straight from the definition of a fundamental discriminant.
inline bool fundamental(std::int64_t d)
{
    if (d == 1)
        return true;
    if (mod(d, 4) == 1)
        return squarefree(d);
    if (mod(d, 4) == 0)
        return (mod(d / 4, 4) == 2 || mod(d / 4, 4) == 3) && squarefree(d / 4);
    return false;
}

/// Euler's criterion mapped to {-1, 0, 1}, p odd prime.
inline int euler(std::int64_t a, std::int64_t p)
{
    std::int64_t const r = pow_mod(a, (p - 1) / 2, p);
    return r == 0 ? 0 : r == 1 ? 1 : -1;
}

/// Whether x^2 = a (mod p) has a solution, by search.
inline bool is_square_mod(std::int64_t a, std::int64_t p)
{
    for (std::int64_t x = 0; x < p; ++x)
        if (mod(x * x - a, p) == 0)
            return true;
    return false;
}

/// Kronecker symbol (d/n), n > 0, via prime factorization of n and Euler's criterion.
inline int kronecker(std::int64_t d, std::int64_t n)
{
    int result = 1;
    for (std::int64_t p = 2; n > 1; ++p) {
        while (n % p == 0) {
            n /= p;
            if (p == 2) {
                std::int64_t const r = mod(d, 8);
                result *= (r == 1 || r == 7) ? 1 : (r == 3 || r == 5) ? -1 : 0;
            } else {
                result *= euler(d, p);
            }
        }
    }
    return result;
}

/// Reduced positive definite forms of discriminant d < 0, by a triple loop.
inline std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> definite_reduced(std::int64_t d)
{
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
    for (std::int64_t a = 1; a * a <= -d; ++a)
        for (std::int64_t b = -a; b <= a; ++b)
            for (std::int64_t c = a; 4 * a * c <= b * b - d; ++c) {
                if (b * b - 4 * a * c != d)
                    continue;
                if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1)
                    continue;
                if (b < 0 && (-b == a || a == c))
                    continue;
                out.emplace_back(a, b, c);
            }
    return out;
}

/// Number of rho-cycles of reduced indefinite forms, d > 0 nonsquare.
inline std::size_t indefinite_cycle_count(std::int64_t d)
{
    std::int64_t s = 0;
    while ((s + 1) * (s + 1) <= d)
        ++s;
    using F = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
    auto reduced = [&](std::int64_t a, std::int64_t b) {
        // |sqrt(d) - 2|a|| < b < sqrt(d), with irrational sqrt(d)
        std::int64_t const t = 2 * std::llabs(a);
        if (b <= 0 || b * b >= d)
            return false;
        bool const lower = t > b ? (t - b) * (t - b) < d : true;   // 2|a| - b < sqrt d
        bool const upper = t + b > 0 && (t + b) * (t + b) > d;      // 2|a| + b > sqrt d
        return lower && upper;
    };
    std::vector<F> forms;
    for (std::int64_t a = -s; a <= s; ++a) {
        if (a == 0)
            continue;
        for (std::int64_t b = 1; b <= s; ++b) {
            if ((b * b - d) % (4 * a) != 0)
                continue;
            std::int64_t const c = (b * b - d) / (4 * a);
            if (!reduced(a, b) || std::gcd(std::gcd(std::llabs(a), b), std::llabs(c)) != 1)
                continue;
            forms.emplace_back(a, b, c);
        }
    }
    std::map<F, std::size_t> id;
    for (std::size_t i = 0; i < forms.size(); ++i)
        id[forms[i]] = i;
    std::vector<std::size_t> parent(forms.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto const & [a, b, c] : forms) {
        // right neighbour: the reduced form (c, b', *) with b' = -b mod 2c
        for (std::int64_t b2 = 1; b2 <= s; ++b2) {
            if (mod(b2 + b, 2 * std::llabs(c)) != 0)
                continue;
            auto it = id.find(F{c, b2, (b2 * b2 - d) / (4 * c)});
            if (it != id.end())
                parent[find(it->second)] = find(id[F{a, b, c}]);
        }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < forms.size(); ++i)
        roots.insert(find(i));
    return roots.size();
}

/// Class number of d < 0 from the analytic formula h = w / (2|d|) |sum chi(n) n|.
inline std::int64_t analytic_class_number(std::int64_t d)
{
    std::int64_t sum = 0;
    for (std::int64_t n = 1; n < -d; ++n)
        sum += kronecker(d, n) * n;
    std::int64_t const w = d == -3 ? 6 : d == -4 ? 4 : 2;
    return w * std::llabs(sum) / (2 * -d);
}

} // namespace oracle
