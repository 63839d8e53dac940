// The monoid algebra Q[M] over a Puiseux monoid (or a coproduct of them).
// Monic monomials X^m form a multiplicative copy of M, every divisor of a
// monomial is a monomial, and the units are the nonzero constants, so the
// length set of X^m in Q[M] is L_M(m).
#ifndef LENGTHSETS_ALGEBRA_HPP
#define LENGTHSETS_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/coproduct.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"
#include "lengthsets/prime_reciprocal.hpp"
#include "lengthsets/puiseux.hpp"

namespace lengthsets
{

namespace detail
{

inline std::string exponent_text(const Rational &e)
{
    return e.str();
}
inline std::string exponent_text(const CoproductExponent &e)
{
    return e.str();
}

template <class Exp> Exp parse_exponent(std::string_view text);

template <> inline Rational parse_exponent<Rational>(std::string_view text)
{
    return Rational::parse(text);
}
template <> inline CoproductExponent parse_exponent<CoproductExponent>(std::string_view text)
{
    return CoproductExponent::parse(text);
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace detail

/// Finite sum of c_m X^m with distinct exponents and nonzero rational
/// coefficients. The zero element has no terms.
template <class Exp> class AlgebraElement
{
public:
    AlgebraElement() = default;

    static AlgebraElement monomial(Exp e, Rational c = Rational(1))
    {
        AlgebraElement f;
        f.add_term(std::move(e), std::move(c));
        return f;
    }

    static AlgebraElement constant(Rational c)
    {
        return monomial(Exp{}, std::move(c));
    }

    const std::map<Exp, Rational> &terms() const noexcept
    {
        return m_terms;
    }
    std::size_t term_count() const noexcept
    {
        return m_terms.size();
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    bool is_monomial() const noexcept
    {
        return m_terms.size() == 1;
    }
    bool is_constant() const
    {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first == Exp{});
    }

    void add_term(Exp e, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    friend AlgebraElement operator+(const AlgebraElement &f, const AlgebraElement &g)
    {
        AlgebraElement out = f;
        for (const auto &[e, c] : g.m_terms) {
            out.add_term(e, c);
        }
        return out;
    }

    friend AlgebraElement operator*(const AlgebraElement &f, const AlgebraElement &g)
    {
        AlgebraElement out;
        for (const auto &[e1, c1] : f.m_terms) {
            for (const auto &[e2, c2] : g.m_terms) {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        return out;
    }

    friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

    /// The inverse, which exists only for nonzero constants: in a product the
    /// smallest and largest exponents add, and both must be 0.
    std::optional<AlgebraElement> inverse() const
    {
        if (m_terms.size() != 1 || m_terms.begin()->first != Exp{}) {
            return std::nullopt;
        }
        return constant(Rational(1) / m_terms.begin()->second);
    }

    /// "c1*X^(e1) + c2*X^(e2)", terms ascending by exponent; "0" when zero.
    std::string str() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[e, c] : m_terms) {
            if (!out.empty()) {
                out += " + ";
            }
            out += c.str() + "*X^(" + detail::exponent_text(e) + ")";
        }
        return out;
    }

    static AlgebraElement parse(std::string_view text)
    {
        AlgebraElement f;
        text = detail::trim(text);
        if (text == "0") {
            return f;
        }
        while (!text.empty()) {
            const auto plus = text.find(" + ");
            const std::string_view term = detail::trim(text.substr(0, plus));
            const auto x = term.find("X^(");
            if (x == std::string_view::npos) {
                f.add_term(Exp{}, Rational::parse(term));
            } else {
                if (term.back() != ')') {
                    throw DomainError("algebra: unterminated exponent in '" + std::string(term) + "'");
                }
                Rational c(1);
                if (x > 0) {
                    if (term.substr(x - 1, 1) != "*") {
                        throw DomainError("algebra: expected c*X^(e), got '" + std::string(term) + "'");
                    }
                    c = Rational::parse(term.substr(0, x - 1));
                }
                f.add_term(detail::parse_exponent<Exp>(term.substr(x + 3, term.size() - x - 4)), c);
            }
            text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 3);
        }
        return f;
    }

private:
    std::map<Exp, Rational> m_terms;
};

using PuiseuxAlgebraElement = AlgebraElement<Rational>;
using CoproductAlgebraElement = AlgebraElement<CoproductExponent>;

// ---------------------------------------------------------------------------
// Monomial divisibility and lengths, by delegation to the exponent monoid.

inline bool monomial_divides(const Rational &a, const Rational &b, const FgPuiseux &m)
{
    if (!m.contains(a) || !m.contains(b)) {
        throw DomainError("monomial_divides: exponent not in the monoid");
    }
    return m.contains(b - a);
}

inline bool monomial_divides(const Rational &a, const Rational &b, const PrimeReciprocal &m)
{
    if (!m.contains(a) || !m.contains(b)) {
        throw DomainError("monomial_divides: exponent not in the monoid");
    }
    return m.contains(b - a);
}

inline bool monomial_divides(const CoproductExponent &a, const CoproductExponent &b, const CoproductMonoid &m)
{
    if (!m.contains(a) || !m.contains(b)) {
        throw DomainError("monomial_divides: exponent not in the monoid");
    }
    return m.contains(b - a);
}

inline LengthSet monomial_length_set(const Rational &e, const FgPuiseux &m, NodeBudget budget = {})
{
    if (!m.contains(e)) {
        throw DomainError("monomial_length_set: exponent " + e.str() + " is not in the monoid");
    }
    return m.length_set(e, budget);
}

inline LengthSetSymbolic monomial_length_set(const Rational &e, const PrimeReciprocal &m)
{
    return m.length_set(e);
}

inline LengthSet monomial_length_set(const CoproductExponent &e, const CoproductMonoid &m, NodeBudget budget = {})
{
    if (!m.contains(e)) {
        throw DomainError("monomial_length_set: exponent " + e.str() + " is not in the monoid");
    }
    return coproduct_length_set(m.element(e), budget);
}

// ---------------------------------------------------------------------------
// Tiny-instance cross-check by divisor enumeration over monomials.

struct MonomialCheck {
    bool performed = false;
    bool ok = true;
    std::string skipped_reason;
    /// Monomial divisors X^d of X^m.
    std::size_t divisors = 0;
    /// Exponents of the irreducible monomial divisors.
    std::vector<Rational> irreducibles;
    /// Lengths <= max_length of factorizations into irreducible monomials.
    LengthSet lengths;
    std::size_t products_checked = 0;
    std::size_t binomial_products_checked = 0;
    std::vector<std::string> findings;
};

struct MonomialCheckLimits {
    Length max_length = 6;
    std::uint64_t max_scaled_exponent = 4096;
    std::size_t max_products = 256;
    std::size_t max_binomial_pairs = 4000;
};

/// Re-derives lengths of X^e in Q[M] from monomial divisors alone, multiplies
/// out every short atom factorization, and checks that products of binomials
/// supported on divisors are never monomials.
inline MonomialCheck verify_monomial(const Rational &e, const FgPuiseux &m, const MonomialCheckLimits &limits = {})
{
    MonomialCheck out;
    const auto scaled = m.to_numerical(e);
    if (!scaled || !m.numerical().contains(*scaled)) {
        throw DomainError("verify_monomial: exponent " + e.str() + " is not in the monoid");
    }
    if (*scaled > limits.max_scaled_exponent) {
        out.skipped_reason = "exponent too large for divisor enumeration (" + scaled->str() + " > "
                             + std::to_string(limits.max_scaled_exponent) + ")";
        return out;
    }
    out.performed = true;
    auto fail = [&](std::string what) {
        out.ok = false;
        out.findings.push_back(std::move(what));
    };
    const auto &n = m.numerical();
    const std::uint64_t x = to_u64(*scaled);
    std::vector<char> in(x + 1, 0);
    for (std::uint64_t v = 0; v <= x; ++v) {
        in[v] = n.contains(Integer(v)) ? 1 : 0;
    }
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 0; d <= x; ++d) {
        if (in[d] && in[x - d]) {
            divisors.push_back(d);
        }
    }
    out.divisors = divisors.size();

    std::vector<std::uint64_t> irreducible;
    for (std::uint64_t d : divisors) {
        if (d == 0) {
            continue;
        }
        bool splits = false;
        for (std::uint64_t d2 = 1; d2 < d && !splits; ++d2) {
            splits = in[d2] && in[d - d2];
        }
        if (!splits) {
            irreducible.push_back(d);
            const Rational q = Rational(Integer(d)) / m.scale();
            out.irreducibles.push_back(q);
            if (!m.is_atom(q)) {
                fail("irreducible monomial X^(" + q.str() + ") is not an atom of M");
            }
        }
    }
    for (const auto &a : m.atoms()) {
        const auto ad = to_u64(*m.to_numerical(a));
        if (ad <= x && in[x - ad] && !std::binary_search(irreducible.begin(), irreducible.end(), ad)) {
            fail("atom " + a.str() + " divides X^(" + e.str() + ") but was not found irreducible");
        }
    }

    // reach[v]: lengths of factorizations of X^(v) into irreducible monomials.
    const Length cap = limits.max_length;
    std::vector<detail::LengthBits> reach(x + 1, detail::LengthBits(cap + 1));
    reach[0].set(0);
    for (std::uint64_t v = 1; v <= x; ++v) {
        if (!in[v] || !in[x - v]) {
            continue;
        }
        for (std::uint64_t a : irreducible) {
            if (a > v) {
                break;
            }
            reach[v].or_shifted_by_one(reach[v - a]);
        }
    }
    out.lengths = reach[x].to_set();
    LengthSet expected;
    for (Length l : m.length_set(e)) {
        if (l <= cap) {
            expected.insert(l);
        }
    }
    if (out.lengths != expected) {
        fail("divisor enumeration gives lengths " + to_string(out.lengths) + ", monoid gives "
             + to_string(expected) + " (up to " + std::to_string(cap) + ")");
    }

    const auto target = PuiseuxAlgebraElement::monomial(e);
    for (const auto &z : m.factorizations(e)) {
        if (out.products_checked >= limits.max_products) {
            break;
        }
        if (z.length() > cap) {
            continue;
        }
        auto product = PuiseuxAlgebraElement::constant(Rational(1));
        for (std::size_t i = 0; i < z.counts.size(); ++i) {
            for (std::uint64_t k = 0; k < z.counts[i]; ++k) {
                product = product * PuiseuxAlgebraElement::monomial(m.atoms()[i]);
            }
        }
        ++out.products_checked;
        if (product != target) {
            fail("product of atom monomials " + product.str() + " != " + target.str());
        }
    }

    // f * g for f = X^a + X^b and g = X^c - X^d over divisor exponents.
    std::vector<Rational> exps;
    for (std::uint64_t d : divisors) {
        exps.push_back(Rational(Integer(d)) / m.scale());
    }
    for (std::size_t i = 0; i < exps.size() && out.binomial_products_checked < limits.max_binomial_pairs; ++i) {
        for (std::size_t j = i + 1; j < exps.size() && out.binomial_products_checked < limits.max_binomial_pairs;
             ++j) {
            const auto f = PuiseuxAlgebraElement::monomial(exps[i]) + PuiseuxAlgebraElement::monomial(exps[j]);
            for (std::size_t k = 0; k < exps.size() && out.binomial_products_checked < limits.max_binomial_pairs;
                 ++k) {
                const std::size_t l = (k + 1 + i) % exps.size();
                auto g = PuiseuxAlgebraElement::monomial(exps[k]);
                if (l != k) {
                    g = g + PuiseuxAlgebraElement::monomial(exps[l], Rational(-1));
                }
                ++out.binomial_products_checked;
                if ((f * g).term_count() < 2) {
                    fail("binomial product " + (f * g).str() + " is a monomial");
                }
            }
        }
    }
    return out;
}

/// Componentwise check; the combined lengths are the capped sumset.
inline MonomialCheck verify_monomial(const CoproductExponent &e, const CoproductMonoid &m,
                                     const MonomialCheckLimits &limits = {})
{
    if (!m.contains(e)) {
        throw DomainError("verify_monomial: exponent " + e.str() + " is not in the monoid");
    }
    MonomialCheck out;
    out.performed = true;
    out.lengths = {0};
    for (const auto &[label, q] : e.parts()) {
        MonomialCheck part = verify_monomial(q, m.components().at(label), limits);
        if (!part.performed) {
            out.performed = false;
            out.skipped_reason = label + ": " + part.skipped_reason;
            return out;
        }
        out.ok = out.ok && part.ok;
        out.divisors = out.divisors == 0 ? part.divisors : out.divisors * part.divisors;
        for (const auto &f : part.findings) {
            out.findings.push_back(label + ": " + f);
        }
        out.products_checked += part.products_checked;
        out.binomial_products_checked += part.binomial_products_checked;
        LengthSet capped;
        for (Length l : sumset(out.lengths, part.lengths)) {
            if (l <= limits.max_length) {
                capped.insert(l);
            }
        }
        out.lengths = std::move(capped);
    }
    return out;
}

} // namespace lengthsets

#endif
