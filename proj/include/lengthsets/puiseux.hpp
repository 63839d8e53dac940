// Finitely generated Puiseux monoids (submonoids of (Q>=0, +)), handled by
// clearing denominators and delegating to a numerical monoid.
#ifndef LENGTHSETS_PUISEUX_HPP
#define LENGTHSETS_PUISEUX_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"
#include "lengthsets/numerical_monoid.hpp"

namespace lengthsets
{

class FgPuiseux
{
public:
    /// Minimal generating set of the monoid generated by gens (all > 0).
    static FgPuiseux generated_by(std::vector<Rational> gens)
    {
        if (gens.empty()) {
            throw DomainError("Puiseux monoid needs at least one generator");
        }
        for (const auto &g : gens) {
            if (g.sign() <= 0) {
                throw DomainError("Puiseux generators must be positive, got " + g.str());
            }
        }
        // q in M  <=>  q * scale in N, with N = <gens * scale> of gcd 1.
        const Integer denominators = lcm_of_denominators(gens);
        std::vector<Integer> scaled;
        scaled.reserve(gens.size());
        for (const auto &g : gens) {
            scaled.push_back(g.num() * (denominators / g.den()));
        }
        const Integer common = gcd_of(scaled);
        for (auto &v : scaled) {
            v /= common;
        }
        NumericalMonoid numerical = NumericalMonoid::generated_by(std::move(scaled));
        Rational scale(denominators, common);
        std::vector<Rational> atoms;
        for (const auto &a : numerical.atoms()) {
            atoms.push_back(Rational(a) / scale);
        }
        return FgPuiseux(std::move(atoms), std::move(numerical), std::move(scale));
    }

    static FgPuiseux generated_by(std::initializer_list<const char *> gens)
    {
        std::vector<Rational> v;
        for (auto g : gens) {
            v.push_back(Rational::parse(g));
        }
        return generated_by(std::move(v));
    }

    /// The Puiseux monoid r * N for a numerical monoid N and r > 0.
    static FgPuiseux scaled(const NumericalMonoid &n, const Rational &r)
    {
        std::vector<Rational> gens;
        for (const auto &a : n.atoms()) {
            gens.push_back(Rational(a) * r);
        }
        return generated_by(std::move(gens));
    }

    const std::vector<Rational> &atoms() const noexcept
    {
        return m_atoms;
    }

    /// The isomorphic numerical monoid N = scale * M.
    const NumericalMonoid &numerical() const noexcept
    {
        return m_numerical;
    }

    const Rational &scale() const noexcept
    {
        return m_scale;
    }

    /// q * scale when it is an integer.
    std::optional<Integer> to_numerical(const Rational &q) const
    {
        Rational v = q * m_scale;
        if (!v.is_integer()) {
            return std::nullopt;
        }
        return v.num();
    }

    bool contains(const Rational &q) const
    {
        if (q.sign() < 0) {
            return false;
        }
        auto v = to_numerical(q);
        return v && m_numerical.contains(*v);
    }

    bool is_atom(const Rational &q) const
    {
        return std::binary_search(m_atoms.begin(), m_atoms.end(), q);
    }

    std::vector<FactorizationVector> factorizations(const Rational &q, NodeBudget budget = {}) const
    {
        if (q.sign() < 0) {
            throw DomainError("factorizations: negative element " + q.str());
        }
        auto v = to_numerical(q);
        if (!v) {
            return {};
        }
        return m_numerical.factorizations(*v, budget);
    }

    LengthSet length_set(const Rational &q, NodeBudget budget = {}) const
    {
        if (q.sign() < 0) {
            throw DomainError("length_set: negative element " + q.str());
        }
        auto v = to_numerical(q);
        if (!v) {
            return {};
        }
        return m_numerical.length_set(*v, budget);
    }

    Rational evaluate(const FactorizationVector &z) const
    {
        return Rational(m_numerical.evaluate(z)) / m_scale;
    }

    /// The isomorphic monoid r * M.
    FgPuiseux rescaled(const Rational &r) const
    {
        if (r.sign() <= 0) {
            throw DomainError("rescaling factor must be positive");
        }
        std::vector<Rational> gens;
        for (const auto &a : m_atoms) {
            gens.push_back(a * r);
        }
        return generated_by(std::move(gens));
    }

    std::vector<Integer> denominators() const
    {
        return denominator_set(m_atoms);
    }

    friend bool operator==(const FgPuiseux &a, const FgPuiseux &b)
    {
        return a.m_atoms == b.m_atoms;
    }

private:
    FgPuiseux(std::vector<Rational> atoms, NumericalMonoid numerical, Rational scale)
        : m_atoms(std::move(atoms)), m_numerical(std::move(numerical)), m_scale(std::move(scale))
    {
    }

    std::vector<Rational> m_atoms;
    NumericalMonoid m_numerical;
    Rational m_scale;
};

} // namespace lengthsets

#endif
