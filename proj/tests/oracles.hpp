// Brute-force reference computations used by the tests. None of them call
// into the library's search, tables or closed forms.
#ifndef LENGTHSETS_TESTS_ORACLES_HPP
#define LENGTHSETS_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{

using u64 = std::uint64_t;
using Lengths = std::set<u64>;

/// Lengths of all factorizations of x over the given atoms, by plain
/// recursion over multiplicities (atom i used only after atoms < i).
inline Lengths naive_lengths(const std::vector<u64> &atoms, u64 x)
{
    Lengths out;
    std::function<void(std::size_t, u64, u64)> go = [&](std::size_t i, u64 rest, u64 len) {
        if (rest == 0) {
            out.insert(len);
            return;
        }
        if (i == atoms.size()) {
            return;
        }
        for (u64 k = 0; k * atoms[i] <= rest; ++k) {
            go(i + 1, rest - k * atoms[i], len + k);
        }
    };
    go(0, x, 0);
    return out;
}

/// All factorizations as multiplicity vectors.
inline std::vector<std::vector<u64>> naive_factorizations(const std::vector<u64> &atoms, u64 x)
{
    std::vector<std::vector<u64>> out;
    std::vector<u64> counts(atoms.size(), 0);
    std::function<void(std::size_t, u64)> go = [&](std::size_t i, u64 rest) {
        if (i == atoms.size()) {
            if (rest == 0) {
                out.push_back(counts);
            }
            return;
        }
        for (u64 k = 0; k * atoms[i] <= rest; ++k) {
            counts[i] = k;
            go(i + 1, rest - k * atoms[i]);
        }
        counts[i] = 0;
    };
    go(0, x);
    return out;
}

/// Membership table of <atoms> on [0, bound].
inline std::vector<char> membership(const std::vector<u64> &atoms, u64 bound)
{
    std::vector<char> in(bound + 1, 0);
    in[0] = 1;
    for (u64 v = 1; v <= bound; ++v) {
        for (u64 a : atoms) {
            if (a <= v && in[v - a]) {
                in[v] = 1;
                break;
            }
        }
    }
    return in;
}

/// Largest gap, scanning up to a * b for the two smallest atoms (which
/// bounds the conductor). -1 when there is no gap.
inline long long gap_scan_frobenius(const std::vector<u64> &atoms)
{
    std::vector<u64> sorted = atoms;
    std::sort(sorted.begin(), sorted.end());
    const u64 bound = sorted.size() > 1 ? sorted[0] * sorted[1] : sorted[0];
    const auto in = membership(atoms, bound);
    long long last = -1;
    for (u64 v = 0; v <= bound; ++v) {
        if (!in[v]) {
            last = static_cast<long long>(v);
        }
    }
    return last;
}

/// Minimal generators of <gens>: those not a sum of two nonzero elements.
inline std::vector<u64> minimal_generators(std::vector<u64> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const auto in = membership(gens, gens.back());
    std::vector<u64> out;
    for (u64 g : gens) {
        bool splits = false;
        for (u64 d = 1; d < g && !splits; ++d) {
            splits = in[d] && in[g - d];
        }
        if (!splits) {
            out.push_back(g);
        }
    }
    return out;
}

/// Every nonnegative (x, y) with x b + y c = p.
inline std::vector<std::pair<u64, u64>> two_term_solutions(u64 b, u64 c, u64 p)
{
    std::vector<std::pair<u64, u64>> out;
    for (u64 x = 0; x * b <= p; ++x) {
        if ((p - x * b) % c == 0) {
            out.emplace_back(x, (p - x * b) / c);
        }
    }
    return out;
}

/// Length sets, capped, of every value v / unit over atoms unit / p_i, for
/// v in [0, max_value]: reach[v] bit k set iff v / unit is a sum of exactly k
/// atoms. Unbounded-multiplicity knapsack over the atom multiset.
inline std::vector<std::vector<char>> reciprocal_length_table(const std::vector<u64> &primes, u64 max_value,
                                                              u64 cap)
{
    u64 unit = 1;
    for (u64 p : primes) {
        unit *= p;
    }
    std::vector<std::vector<char>> reach(max_value + 1, std::vector<char>(cap + 1, 0));
    reach[0][0] = 1;
    for (u64 p : primes) {
        const u64 w = unit / p;
        for (u64 v = w; v <= max_value; ++v) {
            for (u64 k = 1; k <= cap; ++k) {
                if (reach[v - w][k - 1]) {
                    reach[v][k] = 1;
                }
            }
        }
    }
    return reach;
}

/// Lengths of factorizations of x in a coproduct, each component given by
/// integer atoms and an integer element: joint recursion over all atoms of
/// all components.
inline Lengths coproduct_lengths(const std::vector<std::pair<std::vector<u64>, u64>> &components)
{
    std::vector<std::pair<std::size_t, u64>> atoms;
    std::vector<u64> rest;
    for (std::size_t i = 0; i < components.size(); ++i) {
        for (u64 a : components[i].first) {
            atoms.emplace_back(i, a);
        }
        rest.push_back(components[i].second);
    }
    Lengths out;
    std::function<void(std::size_t, u64)> go = [&](std::size_t j, u64 len) {
        if (j == atoms.size()) {
            if (std::all_of(rest.begin(), rest.end(), [](u64 r) { return r == 0; })) {
                out.insert(len);
            }
            return;
        }
        const auto [c, a] = atoms[j];
        const u64 saved = rest[c];
        for (u64 k = 0; k * a <= saved; ++k) {
            rest[c] = saved - k * a;
            go(j + 1, len + k);
        }
        rest[c] = saved;
    };
    go(0, 0);
    return out;
}

inline bool naive_is_prime(u64 n)
{
    if (n < 2) {
        return false;
    }
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace oracle

#endif
