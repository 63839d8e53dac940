// Finite-support elements of a coproduct of finitely generated Puiseux
// monoids, and the shift realization b_{L-1} + a_S with length set L.
#ifndef LENGTHSETS_COPRODUCT_HPP
#define LENGTHSETS_COPRODUCT_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"
#include "lengthsets/puiseux.hpp"
#include "lengthsets/realize.hpp"

namespace lengthsets
{

struct CoproductComponent {
    FgPuiseux monoid;
    Rational element;
};

class CoproductElement
{
public:
    /// Sets the component for a label; zero elements are not stored.
    void set(const std::string &label, FgPuiseux monoid, Rational element)
    {
        if (element.is_zero()) {
            m_parts.erase(label);
            return;
        }
        m_parts.insert_or_assign(label, CoproductComponent{std::move(monoid), std::move(element)});
    }

    const std::map<std::string, CoproductComponent> &components() const noexcept
    {
        return m_parts;
    }

    bool is_zero() const noexcept
    {
        return m_parts.empty();
    }

private:
    std::map<std::string, CoproductComponent> m_parts;
};

/// Exponent in a coproduct: a finite-support map label -> rational.
class CoproductExponent
{
public:
    CoproductExponent() = default;

    static CoproductExponent single(const std::string &label, Rational q)
    {
        CoproductExponent e;
        e.set(label, std::move(q));
        return e;
    }

    void set(const std::string &label, Rational q)
    {
        if (q.is_zero()) {
            m_parts.erase(label);
        } else {
            m_parts.insert_or_assign(label, std::move(q));
        }
    }

    Rational get(const std::string &label) const
    {
        auto it = m_parts.find(label);
        return it == m_parts.end() ? Rational(0) : it->second;
    }

    const std::map<std::string, Rational> &parts() const noexcept
    {
        return m_parts;
    }

    bool is_zero() const noexcept
    {
        return m_parts.empty();
    }

    friend CoproductExponent operator+(const CoproductExponent &a, const CoproductExponent &b)
    {
        CoproductExponent out = a;
        for (const auto &[label, q] : b.m_parts) {
            out.set(label, out.get(label) + q);
        }
        return out;
    }

    friend CoproductExponent operator-(const CoproductExponent &a, const CoproductExponent &b)
    {
        CoproductExponent out = a;
        for (const auto &[label, q] : b.m_parts) {
            out.set(label, out.get(label) - q);
        }
        return out;
    }

    friend bool operator==(const CoproductExponent &, const CoproductExponent &) = default;
    friend auto operator<=>(const CoproductExponent &a, const CoproductExponent &b)
    {
        return a.m_parts <=> b.m_parts;
    }

    /// "label:q;label:q", or "0".
    std::string str() const
    {
        if (m_parts.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[label, q] : m_parts) {
            out += (out.empty() ? "" : ";") + label + ":" + q.str();
        }
        return out;
    }

    static CoproductExponent parse(std::string_view text)
    {
        CoproductExponent e;
        if (text == "0") {
            return e;
        }
        while (!text.empty()) {
            const auto end = text.find(';');
            const std::string_view item = text.substr(0, end);
            const auto colon = item.rfind(':');
            if (colon == std::string_view::npos || colon == 0) {
                throw DomainError("coproduct exponent: expected label:value, got '" + std::string(item) + "'");
            }
            const std::string label(item.substr(0, colon));
            e.set(label, e.get(label) + Rational::parse(item.substr(colon + 1)));
            text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        }
        return e;
    }

private:
    std::map<std::string, Rational> m_parts;
};

/// Coproduct of finitely many labeled f.g. Puiseux monoids.
class CoproductMonoid
{
public:
    void add(const std::string &label, FgPuiseux m)
    {
        m_components.insert_or_assign(label, std::move(m));
    }

    const std::map<std::string, FgPuiseux> &components() const noexcept
    {
        return m_components;
    }

    bool contains(const CoproductExponent &e) const
    {
        for (const auto &[label, q] : e.parts()) {
            auto it = m_components.find(label);
            if (it == m_components.end() || !it->second.contains(q)) {
                return false;
            }
        }
        return true;
    }

    CoproductElement element(const CoproductExponent &e) const;

    friend bool operator==(const CoproductMonoid &, const CoproductMonoid &) = default;

private:
    std::map<std::string, FgPuiseux> m_components;
};

/// Sumset of the componentwise length sets; {0} for the zero element.
inline LengthSet coproduct_length_set(const CoproductElement &x, NodeBudget budget = {})
{
    LengthSet out{0};
    for (const auto &[label, part] : x.components()) {
        if (!part.monoid.contains(part.element)) {
            throw DomainError("coproduct component '" + label + "': " + part.element.str()
                              + " is not in the component monoid");
        }
        out = sumset(out, part.monoid.length_set(part.element, budget));
    }
    return out;
}

inline CoproductElement CoproductMonoid::element(const CoproductExponent &e) const
{
    CoproductElement out;
    for (const auto &[label, q] : e.parts()) {
        auto it = m_components.find(label);
        if (it == m_components.end()) {
            throw DomainError("coproduct: no component labeled '" + label + "'");
        }
        out.set(label, it->second, q);
    }
    return out;
}

inline std::string length_set_label(const LengthSet &l)
{
    std::string s = "L{";
    bool first = true;
    for (Length x : l) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return s + "}";
}

/// Realization traces keyed by the label of the realized set.
using TraceStore = std::map<std::string, ConstructionTrace>;

inline const ConstructionTrace &stored_realization(const LengthSet &l, TraceStore &store,
                                                   const RealizeOptions &options)
{
    const std::string label = length_set_label(l);
    auto it = store.find(label);
    if (it == store.end()) {
        it = store.emplace(label, realize_length_set(l, {}, 0, options)).first;
    }
    return it->second;
}

struct ShiftRealization {
    CoproductElement element;
    /// Component carrying L - 1 at the element 1.
    std::string shifted_label;
    /// Component contributing one atom.
    std::string atom_label;
    Rational atom;
    /// The two components and the element as an exponent over them.
    CoproductMonoid monoid;
    CoproductExponent exponent;
};

/// For finite L with min L >= 3: the element b_{L'} + a_S of the coproduct,
/// with L' = L - 1 realized at 1 in its own component and a_S an atom of a
/// different component. The result is verified to have length set L.
inline ShiftRealization shift_realize(const LengthSet &l, TraceStore &store, const RealizeOptions &options = {})
{
    if (l.empty() || *l.begin() < 3) {
        throw DomainError("shift_realize: needs min L >= 3");
    }
    const LengthSet shifted_set = shifted(l, -1);
    const LengthSet atom_set = shifted_set == LengthSet{2} ? LengthSet{3} : LengthSet{2};

    ShiftRealization out;
    out.shifted_label = length_set_label(shifted_set);
    out.atom_label = length_set_label(atom_set);
    const FgPuiseux shifted_monoid = stored_realization(shifted_set, store, options).final_monoid();
    const FgPuiseux atom_monoid = stored_realization(atom_set, store, options).final_monoid();
    out.atom = atom_monoid.atoms().front();
    out.element.set(out.shifted_label, shifted_monoid, Rational(1));
    out.element.set(out.atom_label, atom_monoid, out.atom);
    out.monoid.add(out.shifted_label, shifted_monoid);
    out.monoid.add(out.atom_label, atom_monoid);
    out.exponent.set(out.shifted_label, Rational(1));
    out.exponent.set(out.atom_label, out.atom);

    const LengthSet got = coproduct_length_set(out.element);
    if (got != l) {
        throw ConstructionError("shift_realize: coproduct length set " + to_string(got) + " != " + to_string(l));
    }
    return out;
}

} // namespace lengthsets

#endif
