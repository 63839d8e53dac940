// Enumeration of nonnegative integer solutions of  sum_i c_i * w_i = target.
//
// The weights are processed in an order chosen so that the gcd of every
// suffix is as large as possible; the remaining target must be divisible by
// the gcd of the weights still available, and the count of the current weight
// is stepped through the residue class that keeps that true. For the
// monoids built by gluing p^{-1}<b, c> blocks this collapses each block to a
// handful of branches.
#ifndef LENGTHSETS_DETAIL_SOLUTIONS_HPP
#define LENGTHSETS_DETAIL_SOLUTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"

namespace lengthsets
{

/// Node budget shared by a search; throws BudgetExhausted once exceeded.
struct NodeBudget {
    std::uint64_t limit = 200'000'000;
    std::uint64_t used = 0;

    void tick(const char *where, std::uint64_t n = 1)
    {
        used += n;
        if (used > limit) {
            throw BudgetExhausted(std::string("node budget of ") + std::to_string(limit) + " exhausted in " + where,
                                  where);
        }
    }
};

namespace detail
{

inline std::vector<std::size_t> plan_order(std::span<const Integer> weights)
{
    const std::size_t n = weights.size();
    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    // Larger weights first among equally good choices.
    std::stable_sort(remaining.begin(), remaining.end(),
                     [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });

    auto gcd_without = [&](const std::vector<std::size_t> &set, std::size_t skip1, std::size_t skip2) {
        Integer g = 0;
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (k != skip1 && k != skip2) {
                g = gcd(g, weights[set[k]]);
            }
        }
        return g;
    };

    std::vector<std::size_t> order;
    order.reserve(n);
    while (remaining.size() > 2) {
        const std::size_t m = remaining.size();
        const Integer current = gcd_without(remaining, m, m);
        Integer best_single = 0;
        std::size_t single_at = 0;
        for (std::size_t k = 0; k < m; ++k) {
            Integer gain = gcd_without(remaining, k, m) / current;
            if (gain > best_single) {
                best_single = gain;
                single_at = k;
            }
        }
        Integer best_pair = 0;
        std::size_t pair_a = 0, pair_b = 0;
        if (m > 3 && m <= 48) {
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = a + 1; b < m; ++b) {
                    Integer gain = gcd_without(remaining, a, b) / current;
                    if (gain > best_pair) {
                        best_pair = gain;
                        pair_a = a;
                        pair_b = b;
                    }
                }
            }
        }
        if (best_pair > best_single * best_single) {
            order.push_back(remaining[pair_a]);
            order.push_back(remaining[pair_b]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pair_b));
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pair_a));
        } else {
            order.push_back(remaining[single_at]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(single_at));
        }
    }
    order.insert(order.end(), remaining.begin(), remaining.end());
    return order;
}

class SolutionSearch
{
public:
    explicit SolutionSearch(std::vector<Integer> weights) : m_weights(std::move(weights))
    {
        for (const auto &w : m_weights) {
            if (w <= 0) {
                throw DomainError("solution search needs positive weights");
            }
        }
        m_order = plan_order(m_weights);
        for (auto i : m_order) {
            m_ordered.push_back(m_weights[i]);
        }
        m_suffix_gcd.assign(m_ordered.size() + 1, Integer(0));
        for (std::size_t i = m_ordered.size(); i-- > 0;) {
            m_suffix_gcd[i] = gcd(m_ordered[i], m_suffix_gcd[i + 1]);
        }
    }

    std::size_t size() const noexcept
    {
        return m_weights.size();
    }

    /// Calls visit(counts) for every solution, counts aligned with the
    /// weights as given. visit returns false to stop early.
    template <class Visitor>
    void enumerate(const Integer &target, Visitor &&visit, NodeBudget &budget) const
    {
        std::vector<std::uint64_t> counts(m_weights.size(), 0);
        if (target < 0) {
            return;
        }
        if (m_weights.empty()) {
            if (target == 0) {
                visit(std::span<const std::uint64_t>(counts));
            }
            return;
        }
        if (target % m_suffix_gcd[0] != 0) {
            return;
        }
        bool stop = false;
        dfs(0, target, counts, visit, budget, stop);
    }

    bool exists(const Integer &target, NodeBudget &budget) const
    {
        bool found = false;
        enumerate(
            target,
            [&](std::span<const std::uint64_t>) {
                found = true;
                return false;
            },
            budget);
        return found;
    }

    /// Set of sum_i c_i over all solutions, memoized on (position, remainder).
    LengthSet lengths(const Integer &target, NodeBudget &budget) const
    {
        if (target < 0) {
            return {};
        }
        if (m_weights.empty()) {
            return target == 0 ? LengthSet{0} : LengthSet{};
        }
        if (target % m_suffix_gcd[0] != 0) {
            return {};
        }
        std::vector<std::map<Integer, LengthSet>> memo(m_ordered.size());
        return lengths_from(0, target, memo, budget);
    }

private:
    // Smallest k >= 0 with (r - k*w) divisible by g, and the period of such k.
    // Requires gcd(w, g) | r.
    static std::pair<Integer, Integer> first_admissible(const Integer &r, const Integer &w, const Integer &g)
    {
        if (g == 0) {
            // Last position: r must be an exact multiple of w.
            return {r / w, Integer(0)};
        }
        Integer d = gcd(w, g);
        Integer step = g / d;
        if (step == 1) {
            return {Integer(0), Integer(1)};
        }
        Integer k0 = mod_floor((r / d) * mod_inverse(w / d, step), step);
        return {k0, step};
    }

    template <class Visitor>
    void dfs(std::size_t i, const Integer &r, std::vector<std::uint64_t> &counts, Visitor &visit, NodeBudget &budget,
             bool &stop) const
    {
        budget.tick("factorization enumeration");
        const Integer &w = m_ordered[i];
        const std::size_t original = m_order[i];
        if (i + 1 == m_ordered.size()) {
            counts[original] = to_u64(r / w);
            if (!visit(std::span<const std::uint64_t>(counts))) {
                stop = true;
            }
            counts[original] = 0;
            return;
        }
        auto [k, step] = first_admissible(r, w, m_suffix_gcd[i + 1]);
        Integer rest = r - k * w;
        const Integer stride = step * w;
        while (rest >= 0 && !stop) {
            counts[original] = to_u64(k);
            dfs(i + 1, rest, counts, visit, budget, stop);
            k += step;
            rest -= stride;
        }
        counts[original] = 0;
    }

    LengthSet lengths_from(std::size_t i, const Integer &r, std::vector<std::map<Integer, LengthSet>> &memo,
                           NodeBudget &budget) const
    {
        auto hit = memo[i].find(r);
        if (hit != memo[i].end()) {
            return hit->second;
        }
        budget.tick("length enumeration");
        const Integer &w = m_ordered[i];
        LengthSet out;
        if (i + 1 == m_ordered.size()) {
            out.insert(to_u64(r / w));
        } else {
            auto [k, step] = first_admissible(r, w, m_suffix_gcd[i + 1]);
            Integer rest = r - k * w;
            const Integer stride = step * w;
            while (rest >= 0) {
                const Length kk = to_u64(k);
                for (Length l : lengths_from(i + 1, rest, memo, budget)) {
                    out.insert(l + kk);
                }
                k += step;
                rest -= stride;
            }
        }
        memo[i].emplace(r, out);
        return out;
    }

    std::vector<Integer> m_weights;
    std::vector<std::size_t> m_order;
    std::vector<Integer> m_ordered;
    std::vector<Integer> m_suffix_gcd;
};

} // namespace detail

} // namespace lengthsets

#endif
