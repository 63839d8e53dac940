// One gluing step M_n = M_{n-1} + p^{-1}<b, c>: it adds exactly one new
// length ell = s + t to L(1) when p is a fresh prime, bs + ct = p and
// min{b, c} > max{s, t} (then p has the single factorization sb + tc).
#ifndef LENGTHSETS_STAGE_HPP
#define LENGTHSETS_STAGE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"
#include "lengthsets/numerical_monoid.hpp"
#include "lengthsets/puiseux.hpp"

namespace lengthsets
{

/// Smallest stage target handled by the p > 4 ell^2 construction.
inline constexpr Length min_stage_target = 11;

struct StagePlan {
    std::size_t index = 0;
    Length ell = 0;
    Length s = 0;
    Length t = 0;
    Integer p;
    Integer b;
    Integer c;

    Length m_max() const
    {
        return std::max(s, t);
    }

    /// N = <b, c>.
    NumericalMonoid weights() const
    {
        return NumericalMonoid::generated_by({b, c});
    }

    std::vector<Rational> new_atoms() const
    {
        std::vector<Rational> out{Rational(b, p), Rational(c, p)};
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const StagePlan &, const StagePlan &) = default;
};

/// Coprime (s, t), s <= t, with s + t = ell and min{s, t} >= 5:
/// ell = 2j+1 -> {j, j+1}; ell = 4j -> {2j-1, 2j+1}; ell = 4j+2 -> {2j-1, 2j+3}.
inline std::pair<Length, Length> split_target(Length ell)
{
    if (ell < min_stage_target) {
        throw DomainError("split_target: target " + std::to_string(ell) + " is below 11");
    }
    if (ell % 2 == 1) {
        const Length j = ell / 2;
        return {j, j + 1};
    }
    const Length j = ell / 4;
    if (ell % 4 == 0) {
        return {2 * j - 1, 2 * j + 1};
    }
    return {2 * j - 1, 2 * j + 3};
}

namespace detail
{

// Positive (b, c) with bs + ct = p and min{b, c} > max{s, t}, smallest b.
inline std::optional<std::pair<Integer, Integer>> smallest_weights(Length s, Length t, const Integer &p)
{
    const Integer S(s), T(t), m(std::max(s, t));
    Integer b = mod_floor(p * mod_inverse(S, T), T);
    if (T == 1) {
        b = 0;
    }
    if (b <= m) {
        b += T * ((m - b) / T + 1);
    }
    const Integer rest = p - b * S;
    if (rest <= 0 || rest % T != 0) {
        return std::nullopt;
    }
    Integer c = rest / T;
    if (c <= m) {
        return std::nullopt;
    }
    return std::pair{b, c};
}

} // namespace detail

/// (b, c) with bs + ct = p, min{b, c} > max{s, t}; the smallest such b.
inline std::pair<Integer, Integer> solve_weights(Length s, Length t, const Integer &p)
{
    if (s == 0 || t == 0) {
        throw DomainError("solve_weights: s and t must be positive");
    }
    if (std::gcd(s, t) != 1) {
        throw DomainError("solve_weights: gcd(" + std::to_string(s) + ", " + std::to_string(t) + ") != 1");
    }
    const Integer ell(s + t);
    if (p <= 4 * ell * ell) {
        throw DomainError("solve_weights: p = " + p.str() + " must exceed 4(s+t)^2 = " + Integer(4 * ell * ell).str());
    }
    if (!is_prime(p)) {
        throw DomainError("solve_weights: " + p.str() + " is not prime");
    }
    auto w = detail::smallest_weights(s, t, p);
    if (!w) {
        throw ConstructionError("solve_weights: no admissible (b, c) for s=" + std::to_string(s)
                                + ", t=" + std::to_string(t) + ", p=" + p.str());
    }
    if (w->first * s + w->second * t != p) {
        throw ConstructionError("solve_weights: bs + ct != p");
    }
    return *w;
}

struct StageResult {
    FgPuiseux monoid;
    StagePlan plan;
    LengthSet lengths;
};

namespace detail
{

inline void require_one_is_proper(const FgPuiseux &prev)
{
    if (!prev.contains(Rational(1))) {
        throw DomainError("stage: 1 is not an element of the previous monoid");
    }
    if (prev.is_atom(Rational(1))) {
        throw DomainError("stage: 1 is an atom of the previous monoid (L(1) = {1})");
    }
}

// Glue p^{-1}<b, c> onto prev and check the atom and length postconditions.
inline StageResult glue(const FgPuiseux &prev, const LengthSet &prev_lengths, StagePlan plan, NodeBudget &budget)
{
    std::vector<Rational> gens = prev.atoms();
    for (const auto &a : plan.new_atoms()) {
        gens.push_back(a);
    }
    FgPuiseux next = FgPuiseux::generated_by(gens);
    std::sort(gens.begin(), gens.end());
    if (next.atoms() != gens) {
        throw ConstructionError("stage " + std::to_string(plan.index) + ": atoms of M_n differ from A(M_{n-1}) u "
                                "A(p^{-1}N)");
    }
    const auto weight_factorizations = plan.weights().factorizations(plan.p, budget);
    if (weight_factorizations.size() != 1 || weight_factorizations.front().length() != plan.ell) {
        throw ConstructionError("stage " + std::to_string(plan.index) + ": p does not factor uniquely in <b, c>");
    }
    LengthSet expected = prev_lengths;
    expected.insert(plan.ell);
    LengthSet got = next.length_set(Rational(1), budget);
    if (got != expected) {
        throw ConstructionError("stage " + std::to_string(plan.index) + ": L(1) = " + to_string(got) + ", expected "
                                + to_string(expected));
    }
    return StageResult{std::move(next), std::move(plan), std::move(got)};
}

} // namespace detail

/// Builds M_n = prev + p^{-1}<b, c> for target ell >= 11 with the smallest
/// prime p > 4 ell^2 coprime to the denominators of prev.
inline StageResult build_stage(const FgPuiseux &prev, Length ell, std::size_t index,
                               const std::optional<LengthSet> &prev_lengths, NodeBudget &budget)
{
    if (ell < min_stage_target) {
        throw DomainError("build_stage: target " + std::to_string(ell) + " is below 11");
    }
    detail::require_one_is_proper(prev);
    const LengthSet before = prev_lengths ? *prev_lengths : prev.length_set(Rational(1), budget);
    StagePlan plan;
    plan.index = index;
    plan.ell = ell;
    std::tie(plan.s, plan.t) = split_target(ell);
    const Integer bound = 4 * Integer(ell) * Integer(ell);
    plan.p = next_prime_avoiding(bound, prev.denominators());
    std::tie(plan.b, plan.c) = solve_weights(plan.s, plan.t, plan.p);
    return detail::glue(prev, before, std::move(plan), budget);
}

inline StageResult build_stage(const FgPuiseux &prev, Length ell, std::size_t index = 1,
                               const std::optional<LengthSet> &prev_lengths = std::nullopt)
{
    NodeBudget budget;
    return build_stage(prev, ell, index, prev_lengths, budget);
}

/// Gluing step for any target ell >= 2, used by the finite realization:
/// targets >= 11 go through build_stage; smaller ones use (s, t) = (1, ell-1)
/// and the smallest fresh prime p >= ell^2, which admits b, c > ell - 1.
inline StageResult graft_length(const FgPuiseux &prev, Length ell, std::size_t index,
                                const LengthSet &prev_lengths, NodeBudget &budget)
{
    if (ell >= min_stage_target) {
        return build_stage(prev, ell, index, prev_lengths, budget);
    }
    if (ell < 2) {
        throw DomainError("graft_length: target must be >= 2");
    }
    detail::require_one_is_proper(prev);
    StagePlan plan;
    plan.index = index;
    plan.ell = ell;
    plan.s = 1;
    plan.t = ell - 1;
    const Integer bound = Integer(ell) * Integer(ell) - 1;
    plan.p = next_prime_avoiding(bound, prev.denominators());
    auto w = detail::smallest_weights(plan.s, plan.t, plan.p);
    if (!w) {
        throw ConstructionError("graft_length: no admissible weights for ell=" + std::to_string(ell));
    }
    std::tie(plan.b, plan.c) = *w;
    return detail::glue(prev, prev_lengths, std::move(plan), budget);
}

/// The starting block p^{-1}<b, c> with L(1) = {ell}, ell >= 2.
inline StageResult seed_block(Length ell)
{
    if (ell < 2) {
        throw DomainError("seed_block: target must be >= 2");
    }
    StagePlan plan;
    plan.index = 0;
    plan.ell = ell;
    if (ell >= min_stage_target) {
        std::tie(plan.s, plan.t) = split_target(ell);
        plan.p = next_prime_avoiding(4 * Integer(ell) * Integer(ell));
        std::tie(plan.b, plan.c) = solve_weights(plan.s, plan.t, plan.p);
    } else {
        plan.s = 1;
        plan.t = ell - 1;
        plan.p = next_prime_avoiding(Integer(ell) * Integer(ell) - 1);
        auto w = detail::smallest_weights(plan.s, plan.t, plan.p);
        if (!w) {
            throw ConstructionError("seed_block: no admissible weights");
        }
        std::tie(plan.b, plan.c) = *w;
    }
    FgPuiseux block = FgPuiseux::generated_by(plan.new_atoms());
    NodeBudget budget;
    LengthSet got = block.length_set(Rational(1), budget);
    if (got != LengthSet{ell}) {
        throw ConstructionError("seed_block: L(1) = " + to_string(got));
    }
    return StageResult{std::move(block), std::move(plan), std::move(got)};
}

} // namespace lengthsets

#endif
