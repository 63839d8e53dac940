// Staged realization of a length set L subset of N>=2 as L_M(1) for a
// Puiseux monoid M with the ACCP.
//
// Finite L: M = m^{-1} N for a numerical realization (N, m).
// L with a tail: L_0 = L_{<= ell_0} is realized first, then every further
// target ell_n is added by one stage M_n = M_{n-1} + p_n^{-1}<b_n, c_n>.
#ifndef LENGTHSETS_REALIZE_HPP
#define LENGTHSETS_REALIZE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"
#include "lengthsets/numerical_monoid.hpp"
#include "lengthsets/puiseux.hpp"
#include "lengthsets/realize_finite.hpp"
#include "lengthsets/stage.hpp"

namespace lengthsets
{

/// Smallest admissible ell_0 for the staged construction.
inline constexpr Length min_ell0 = 10;

/// Tail enumerator: element i of the strictly ascending tail, or nullopt
/// when the tail is exhausted.
using TailEnumerator = std::function<std::optional<Length>(std::size_t)>;

inline TailEnumerator tail_from_list(std::vector<Length> values)
{
    return [values = std::move(values)](std::size_t i) -> std::optional<Length> {
        if (i < values.size()) {
            return values[i];
        }
        return std::nullopt;
    };
}

struct ConstructionTrace {
    // Request.
    LengthSet target_finite;
    std::vector<Length> tail;
    std::optional<Length> ell0;

    // Base: L_{N_0}(m_0) = L_0 and M_0 = m_0^{-1} N_0.
    NumericalMonoid base_monoid = NumericalMonoid::generated_by({1});
    Integer base_element;
    LengthSet base_lengths;
    std::string base_strategy;
    bool base_squarefree = false;

    std::vector<StagePlan> stages;
    /// Atoms of M_0, M_1, ..., M_n.
    std::vector<std::vector<Rational>> atoms_per_stage;
    /// L_{M_k}(1) for k = 0..n.
    std::vector<LengthSet> lengths_per_stage;
    /// True when L continues beyond the materialized stages.
    bool extendable = false;

    FgPuiseux monoid_at(std::size_t k) const
    {
        return FgPuiseux::generated_by(atoms_per_stage.at(k));
    }
    FgPuiseux final_monoid() const
    {
        return monoid_at(atoms_per_stage.size() - 1);
    }
    const LengthSet &final_lengths() const
    {
        return lengths_per_stage.back();
    }

    friend bool operator==(const ConstructionTrace &, const ConstructionTrace &) = default;
};

struct RealizeOptions {
    FiniteRealizeBudget finite;
    std::uint64_t verification_nodes = 200'000'000;
};

namespace detail
{

inline void check_lengths_at_least_two(const LengthSet &l)
{
    if (!l.empty() && *l.begin() < 2) {
        throw DomainError("length sets must be subsets of N>=2");
    }
}

inline void install_base(ConstructionTrace &trace, const FiniteRealization &base)
{
    trace.base_monoid = base.monoid;
    trace.base_element = base.element;
    trace.base_lengths = base.lengths;
    trace.base_strategy = base.strategy;
    trace.base_squarefree = base.squarefree;
    FgPuiseux m0 = FgPuiseux::scaled(base.monoid, Rational(Integer(1), base.element));
    trace.atoms_per_stage.push_back(m0.atoms());
    trace.lengths_per_stage.push_back(base.lengths);
}

} // namespace detail

/// Realizes L = finite u {tail(0), ..., tail(depth-1)}. Every stage is
/// verified by exhaustive enumeration before the trace is returned.
inline ConstructionTrace realize_length_set(const LengthSet &finite, const TailEnumerator &tail = {},
                                            std::size_t depth = 0, const RealizeOptions &options = {})
{
    detail::check_lengths_at_least_two(finite);
    ConstructionTrace trace;
    trace.target_finite = finite;
    const bool staged = tail && depth > 0;
    if (!staged) {
        if (finite.empty()) {
            throw DomainError("realize_length_set: L is empty");
        }
        detail::install_base(trace, realize_finite(finite, options.finite));
        return trace;
    }

    std::optional<Length> ell0;
    for (Length l : finite) {
        if (l >= min_ell0) {
            ell0 = l;
            break;
        }
    }
    if (!ell0) {
        throw DomainError("realize_length_set: L needs an element >= 10 to carry a tail");
    }
    trace.ell0 = ell0;

    std::vector<Length> targets;
    LengthSet base_set;
    for (Length l : finite) {
        if (l <= *ell0) {
            base_set.insert(l);
        } else {
            targets.push_back(l);
        }
    }
    std::optional<Length> previous;
    for (std::size_t i = 0; i < depth; ++i) {
        auto next = tail(i);
        if (!next) {
            throw DomainError("realize_length_set: tail has fewer than " + std::to_string(depth) + " elements");
        }
        if (*next <= min_ell0) {
            throw DomainError("realize_length_set: tail element " + std::to_string(*next) + " is <= 10");
        }
        if (*next <= *ell0) {
            throw DomainError("realize_length_set: tail element " + std::to_string(*next) + " is not above ell0 = "
                              + std::to_string(*ell0));
        }
        if (previous && *next <= *previous) {
            throw DomainError("realize_length_set: tail must be strictly ascending, got " + std::to_string(*next)
                              + " after " + std::to_string(*previous));
        }
        previous = *next;
        trace.tail.push_back(*next);
        if (!finite.count(*next)) {
            targets.push_back(*next);
        }
    }
    std::sort(targets.begin(), targets.end());
    trace.extendable = static_cast<bool>(tail(depth));

    detail::install_base(trace, realize_finite(base_set, options.finite));
    FgPuiseux current = trace.monoid_at(0);
    NodeBudget budget{options.verification_nodes, 0};
    for (std::size_t i = 0; i < targets.size(); ++i) {
        StageResult stage = build_stage(current, targets[i], i + 1, trace.lengths_per_stage.back(), budget);
        trace.stages.push_back(stage.plan);
        trace.atoms_per_stage.push_back(stage.monoid.atoms());
        trace.lengths_per_stage.push_back(stage.lengths);
        current = std::move(stage.monoid);
    }
    return trace;
}

/// Result of re-checking a trace from scratch.
struct TraceCheck {
    bool ok = true;
    std::vector<std::string> findings;
};

/// Re-derives every claim of a trace: the base length set, M_0 = m_0^{-1}N_0,
/// each stage's arithmetic side conditions, the atom chain and L_{M_n}(1).
inline TraceCheck verify_trace(const ConstructionTrace &trace, std::uint64_t node_limit = 200'000'000)
{
    TraceCheck out;
    auto fail = [&](std::string what) {
        out.ok = false;
        out.findings.push_back(std::move(what));
    };
    NodeBudget budget{node_limit, 0};
    if (trace.atoms_per_stage.size() != trace.stages.size() + 1
        || trace.lengths_per_stage.size() != trace.stages.size() + 1) {
        fail("stage list sizes are inconsistent");
        return out;
    }
    const LengthSet l0 = trace.base_monoid.length_set(trace.base_element, budget);
    if (l0 != trace.base_lengths || l0 != trace.lengths_per_stage[0]) {
        fail("base: L_N0(m0) = " + to_string(l0) + " does not match the recorded L0");
    }
    if (trace.ell0) {
        LengthSet expected;
        for (Length l : trace.target_finite) {
            if (l <= *trace.ell0) {
                expected.insert(l);
            }
        }
        if (expected != l0) {
            fail("base: L0 is not L_{<= ell0}");
        }
    } else if (trace.stages.empty() && l0 != trace.target_finite) {
        fail("base: L_N0(m0) differs from the target set");
    }
    FgPuiseux m0 = FgPuiseux::scaled(trace.base_monoid, Rational(Integer(1), trace.base_element));
    if (m0.atoms() != trace.atoms_per_stage[0]) {
        fail("base: recorded atoms of M0 differ from m0^{-1} N0");
    }
    FgPuiseux prev = m0;
    for (std::size_t n = 0; n < trace.stages.size(); ++n) {
        const StagePlan &st = trace.stages[n];
        const std::string tag = "stage " + std::to_string(n + 1) + ": ";
        if (st.s + st.t != st.ell) {
            fail(tag + "s + t != ell");
        }
        if (std::gcd(st.s, st.t) != 1) {
            fail(tag + "gcd(s, t) != 1");
        }
        if (std::min(st.s, st.t) < 5) {
            fail(tag + "min{s, t} < 5");
        }
        if (!is_prime(st.p)) {
            fail(tag + "p is not prime");
        }
        if (st.p <= 4 * Integer(st.ell) * Integer(st.ell)) {
            fail(tag + "p <= 4 ell^2");
        }
        for (const auto &d : prev.denominators()) {
            if (d % st.p == 0) {
                fail(tag + "p divides the earlier denominator " + d.str());
            }
        }
        if (st.b * st.s + st.c * st.t != st.p) {
            fail(tag + "bs + ct != p");
        }
        if (std::min(st.b, st.c) <= Integer(st.m_max())) {
            fail(tag + "min{b, c} <= max{s, t}");
        }
        std::vector<Rational> gens = prev.atoms();
        for (const auto &a : st.new_atoms()) {
            gens.push_back(a);
        }
        FgPuiseux next = FgPuiseux::generated_by(gens);
        std::sort(gens.begin(), gens.end());
        if (next.atoms() != gens) {
            fail(tag + "atoms of M_n are not A(M_{n-1}) u {b/p, c/p}");
        }
        if (next.atoms() != trace.atoms_per_stage[n + 1]) {
            fail(tag + "recorded atoms differ from the rebuilt monoid");
        }
        const auto &earlier = trace.atoms_per_stage[n];
        for (const auto &a : earlier) {
            if (!std::binary_search(trace.atoms_per_stage[n + 1].begin(), trace.atoms_per_stage[n + 1].end(), a)) {
                fail(tag + "atom chain is not ascending");
                break;
            }
        }
        LengthSet expected = trace.lengths_per_stage[n];
        expected.insert(st.ell);
        const LengthSet got = next.length_set(Rational(1), budget);
        if (got != expected || got != trace.lengths_per_stage[n + 1]) {
            fail(tag + "L(1) = " + to_string(got) + ", expected " + to_string(expected));
        }
        prev = std::move(next);
    }
    return out;
}

} // namespace lengthsets

#endif
