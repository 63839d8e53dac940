// Numerical monoids: co-finite submonoids of (N_0, +) given by their atoms.
#ifndef LENGTHSETS_NUMERICAL_MONOID_HPP
#define LENGTHSETS_NUMERICAL_MONOID_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/detail/solutions.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"

namespace lengthsets
{

/// Multiplicities of a factorization, aligned with the monoid's atoms.
struct FactorizationVector {
    std::vector<std::uint64_t> counts;

    Length length() const
    {
        Length l = 0;
        for (auto c : counts) {
            l += c;
        }
        return l;
    }

    friend auto operator<=>(const FactorizationVector &, const FactorizationVector &) = default;
};

/// Largest value a membership/length table is allowed to cover.
inline constexpr std::uint64_t table_limit = std::uint64_t{1} << 22;
/// Largest smallest-atom for which membership goes through the Apéry table.
inline constexpr std::uint64_t apery_limit = std::uint64_t{1} << 18;

class NumericalMonoid
{
public:
    /// The minimal generating set of <gens>. Throws DomainError unless
    /// gens is a nonempty set of positive integers with gcd 1.
    static NumericalMonoid generated_by(std::vector<Integer> gens)
    {
        if (gens.empty()) {
            throw DomainError("numerical monoid needs at least one generator");
        }
        for (const auto &g : gens) {
            if (g <= 0) {
                throw DomainError("numerical monoid generators must be positive, got " + g.str());
            }
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        if (gcd_of(gens) != 1) {
            throw DomainError("generators have gcd " + gcd_of(gens).str() + " != 1; not a numerical monoid");
        }
        std::vector<Integer> atoms;
        NodeBudget budget;
        for (const auto &g : gens) {
            if (atoms.empty() || !represents(atoms, g, budget)) {
                atoms.push_back(g);
            }
        }
        return NumericalMonoid(std::move(atoms));
    }

    static NumericalMonoid generated_by(std::initializer_list<long long> gens)
    {
        std::vector<Integer> v;
        for (auto g : gens) {
            v.emplace_back(g);
        }
        return generated_by(std::move(v));
    }

    const std::vector<Integer> &atoms() const noexcept
    {
        return m_atoms;
    }

    std::size_t embedding_dimension() const noexcept
    {
        return m_atoms.size();
    }

    bool is_whole_n0() const
    {
        return m_atoms.front() == 1;
    }

    /// Membership. Uses an Apéry table for the smallest atom when it is small
    /// enough, and a residue-pruned search otherwise.
    bool contains(const Integer &x) const
    {
        if (x < 0) {
            return false;
        }
        if (x == 0) {
            return true;
        }
        if (m_atoms.front() <= apery_limit) {
            const auto &ap = apery_table();
            const auto r = static_cast<std::size_t>(x % m_atoms.front());
            return x >= ap[r];
        }
        NodeBudget budget;
        return search().exists(x, budget);
    }

    /// For each residue r modulo m (m in the monoid), the least element
    /// congruent to r.
    std::vector<Integer> apery(const Integer &m) const
    {
        if (m <= 0 || !contains(m)) {
            throw DomainError("apery: " + m.str() + " is not a positive element of the monoid");
        }
        if (m > table_limit) {
            throw BudgetExhausted("apery: modulus " + m.str() + " exceeds the table limit", "apery");
        }
        if (m == m_atoms.front()) {
            return apery_table();
        }
        return dijkstra_residues(m);
    }

    /// Largest integer not in the monoid. Throws DomainError when the monoid
    /// is N_0 (no gaps).
    Integer frobenius() const
    {
        if (is_whole_n0()) {
            throw DomainError("frobenius: the monoid is N_0 and has no gaps");
        }
        if (m_atoms.front() > table_limit) {
            throw BudgetExhausted("frobenius: smallest atom exceeds the table limit", "frobenius");
        }
        const auto &ap = apery_table();
        return *std::max_element(ap.begin(), ap.end()) - m_atoms.front();
    }

    /// All factorizations of x, sorted descending lexicographically by the
    /// multiplicity vector (atoms ascending). Empty iff x is not in the monoid.
    std::vector<FactorizationVector> factorizations(const Integer &x, NodeBudget budget = {}) const
    {
        std::vector<FactorizationVector> out;
        search().enumerate(
            x,
            [&](std::span<const std::uint64_t> counts) {
                out.push_back(FactorizationVector{{counts.begin(), counts.end()}});
                return true;
            },
            budget);
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    /// L(x) = {|z| : z in Z(x)}. Table DP for small x, memoized search
    /// otherwise.
    LengthSet length_set(const Integer &x, NodeBudget budget = {}) const
    {
        if (x < 0) {
            return {};
        }
        if (x <= table_limit) {
            const auto xv = static_cast<std::uint64_t>(x);
            const auto width = xv / static_cast<std::uint64_t>(m_atoms.front()) + 1;
            if (xv * ((width + 63) / 64) <= table_limit) {
                return length_set_table(xv, width);
            }
        }
        return search().lengths(x, budget);
    }

    /// z is a factorization of x: counts aligned with atoms and weighted sum x.
    Integer evaluate(const FactorizationVector &z) const
    {
        if (z.counts.size() != m_atoms.size()) {
            throw DomainError("factorization vector has wrong arity");
        }
        Integer s = 0;
        for (std::size_t i = 0; i < m_atoms.size(); ++i) {
            s += m_atoms[i] * z.counts[i];
        }
        return s;
    }

    /// x is squarefree: no atom a with 2a dividing x in the monoid.
    bool is_squarefree(const Integer &x) const
    {
        for (const auto &a : m_atoms) {
            if (contains(x - 2 * a)) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const NumericalMonoid &a, const NumericalMonoid &b)
    {
        return a.m_atoms == b.m_atoms;
    }

private:
    explicit NumericalMonoid(std::vector<Integer> atoms) : m_atoms(std::move(atoms)) {}

    static bool represents(const std::vector<Integer> &atoms, const Integer &x, NodeBudget &budget)
    {
        if (x <= table_limit && atoms.front() <= 64) {
            // Small case: plain reachability table.
            const auto xv = static_cast<std::size_t>(x);
            std::vector<char> reach(xv + 1, 0);
            reach[0] = 1;
            for (const auto &a : atoms) {
                if (a > x) {
                    break;
                }
                const auto av = static_cast<std::size_t>(a);
                for (std::size_t v = av; v <= xv; ++v) {
                    reach[v] = reach[v] || reach[v - av];
                }
            }
            return reach[xv];
        }
        return detail::SolutionSearch(atoms).exists(x, budget);
    }

    const detail::SolutionSearch &search() const
    {
        std::call_once(m_cache->search_once, [&] { m_cache->search = std::make_unique<detail::SolutionSearch>(m_atoms); });
        return *m_cache->search;
    }

    const std::vector<Integer> &apery_table() const
    {
        std::call_once(m_cache->apery_once, [&] { m_cache->apery = dijkstra_residues(m_atoms.front()); });
        return m_cache->apery;
    }

    // Shortest paths on residues mod m with edges +a for every atom.
    std::vector<Integer> dijkstra_residues(const Integer &m) const
    {
        const auto mv = static_cast<std::size_t>(m);
        std::vector<Integer> dist(mv, Integer(-1));
        using Entry = std::pair<Integer, std::size_t>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
        dist[0] = 0;
        queue.emplace(Integer(0), 0);
        std::vector<std::size_t> steps;
        std::vector<Integer> weights;
        for (const auto &a : m_atoms) {
            steps.push_back(static_cast<std::size_t>(a % m));
            weights.push_back(a);
        }
        while (!queue.empty()) {
            auto [d, r] = queue.top();
            queue.pop();
            if (d != dist[r]) {
                continue;
            }
            for (std::size_t k = 0; k < steps.size(); ++k) {
                const std::size_t next = (r + steps[k]) % mv;
                Integer nd = d + weights[k];
                if (dist[next] < 0 || nd < dist[next]) {
                    dist[next] = nd;
                    queue.emplace(nd, next);
                }
            }
        }
        return dist;
    }

    LengthSet length_set_table(std::uint64_t x, std::uint64_t width) const
    {
        std::vector<detail::LengthBits> table(x + 1, detail::LengthBits(width));
        table[0].set(0);
        for (const auto &a : m_atoms) {
            if (a > x) {
                break;
            }
            const auto av = static_cast<std::uint64_t>(a);
            for (std::uint64_t v = av; v <= x; ++v) {
                table[v].or_shifted_by_one(table[v - av]);
            }
        }
        return table[x].to_set();
    }

    struct Cache {
        std::once_flag search_once;
        std::unique_ptr<detail::SolutionSearch> search;
        std::once_flag apery_once;
        std::vector<Integer> apery;
    };

    std::vector<Integer> m_atoms;
    std::shared_ptr<Cache> m_cache = std::make_shared<Cache>();
};

} // namespace lengthsets

#endif
