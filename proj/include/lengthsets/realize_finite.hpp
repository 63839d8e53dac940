// Realizing a finite L subset of N>=2 as L_N(m) for a numerical monoid N.
//
// Two strategies, in order:
//   scan  - every 2- and 3-generated numerical monoid with small atoms, with a
//           single length table per monoid covering all small elements;
//   graft - glue one p^{-1}<b, c> block per target length onto a seed block,
//           then clear denominators. Always applicable, larger numbers.
// Whatever is returned has been re-verified by the length enumerator.
#ifndef LENGTHSETS_REALIZE_FINITE_HPP
#define LENGTHSETS_REALIZE_FINITE_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"
#include "lengthsets/numerical_monoid.hpp"
#include "lengthsets/puiseux.hpp"
#include "lengthsets/stage.hpp"

namespace lengthsets
{

struct FiniteRealizeBudget {
    std::uint64_t node_limit = 1'000'000;
    std::uint64_t scan_max_atom = 24;
    std::uint64_t scan_max_element = 60;
    bool allow_graft = true;
};

struct FiniteRealization {
    NumericalMonoid monoid;
    Integer element;
    LengthSet lengths;
    std::string strategy;
    /// Whether the element is squarefree in the monoid; recorded, not required.
    bool squarefree = false;
    std::uint64_t nodes_used = 0;
};

namespace detail
{

inline void require_finite_target(const LengthSet &target)
{
    if (target.empty()) {
        throw DomainError("realize_finite: target set is empty");
    }
    if (*target.begin() < 2) {
        throw DomainError("realize_finite: target lengths must be >= 2");
    }
}

inline std::string atoms_text(const std::vector<std::uint64_t> &atoms)
{
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        os << (i ? "," : "") << atoms[i];
    }
    os << '>';
    return os.str();
}

// Length sets of every element <= max_element of <atoms>.
inline std::vector<LengthBits> length_table(const std::vector<std::uint64_t> &atoms, std::uint64_t max_element)
{
    const std::uint64_t width = max_element / atoms.front() + 1;
    std::vector<LengthBits> table(max_element + 1, LengthBits(width));
    table[0].set(0);
    for (auto a : atoms) {
        for (std::uint64_t v = a; v <= max_element; ++v) {
            table[v].or_shifted_by_one(table[v - a]);
        }
    }
    return table;
}

inline std::optional<FiniteRealization> scan_small_monoids(const LengthSet &target, const FiniteRealizeBudget &limits,
                                                          NodeBudget &budget, std::string &frontier)
{
    const std::uint64_t max_element = limits.scan_max_element;
    const Length lo = *target.begin();
    const Length hi = *target.rbegin();
    auto try_atoms = [&](const std::vector<std::uint64_t> &atoms) -> std::optional<FiniteRealization> {
        frontier = "scan " + atoms_text(atoms) + " elements <= " + std::to_string(max_element);
        // Any element with a factorization of length hi is >= hi * min atom.
        if (hi * atoms.front() > max_element) {
            return std::nullopt;
        }
        budget.tick("realize_finite scan", max_element);
        const auto table = length_table(atoms, max_element);
        for (std::uint64_t m = lo * atoms.front(); m <= max_element; ++m) {
            if (table[m].to_set() == target) {
                std::vector<Integer> gens(atoms.begin(), atoms.end());
                FiniteRealization r{NumericalMonoid::generated_by(gens), Integer(m), target, "scan", false, 0};
                return r;
            }
        }
        return std::nullopt;
    };
    for (std::uint64_t top = 3; top <= limits.scan_max_atom; ++top) {
        for (std::uint64_t a = 2; a < top; ++a) {
            if (std::gcd(a, top) == 1 && top % a != 0) {
                if (auto r = try_atoms({a, top})) {
                    return r;
                }
            }
        }
        for (std::uint64_t a = 2; a < top; ++a) {
            for (std::uint64_t b = a + 1; b < top; ++b) {
                if (std::gcd(std::gcd(a, b), top) != 1 || b % a == 0) {
                    continue;
                }
                // Minimality: top not in <a, b>.
                bool representable = false;
                for (std::uint64_t k = 0; k * b <= top && !representable; ++k) {
                    representable = (top - k * b) % a == 0;
                }
                if (representable) {
                    continue;
                }
                if (auto r = try_atoms({a, b, top})) {
                    return r;
                }
            }
        }
    }
    return std::nullopt;
}

inline FiniteRealization graft_blocks(const LengthSet &target, NodeBudget &budget, std::string &frontier)
{
    auto it = target.begin();
    frontier = "graft seed block for length " + std::to_string(*it);
    StageResult current = seed_block(*it);
    std::size_t index = 1;
    for (++it; it != target.end(); ++it, ++index) {
        frontier = "graft block " + std::to_string(index) + " for length " + std::to_string(*it);
        current = graft_length(current.monoid, *it, index, current.lengths, budget);
    }
    const FgPuiseux &m = current.monoid;
    FiniteRealization r{m.numerical(), *m.to_numerical(Rational(1)), current.lengths, "graft", false, 0};
    return r;
}

} // namespace detail

/// (N, m) with L_N(m) = target exactly. Throws BudgetExhausted (frontier in
/// the exception) when the budget runs out; never returns an unverified pair.
inline FiniteRealization realize_finite(const LengthSet &target, const FiniteRealizeBudget &limits = {})
{
    detail::require_finite_target(target);
    NodeBudget budget{limits.node_limit, 0};
    std::string frontier;
    try {
        auto found = detail::scan_small_monoids(target, limits, budget, frontier);
        if (!found) {
            if (!limits.allow_graft) {
                throw BudgetExhausted("realize_finite: scan found no realization of " + to_string(target), frontier);
            }
            found = detail::graft_blocks(target, budget, frontier);
        }
        frontier = "verification of element " + found->element.str() + " in " + "monoid with "
                   + std::to_string(found->monoid.embedding_dimension()) + " atoms";
        LengthSet check = found->monoid.length_set(found->element, budget);
        if (check != target) {
            throw ConstructionError("realize_finite: verification failed, L = " + to_string(check));
        }
        found->lengths = std::move(check);
        found->squarefree = found->monoid.is_squarefree(found->element);
        found->nodes_used = budget.used;
        return *found;
    } catch (const BudgetExhausted &e) {
        throw BudgetExhausted(std::string(e.what()) + " while realizing " + to_string(target), frontier);
    }
}

} // namespace lengthsets

#endif
