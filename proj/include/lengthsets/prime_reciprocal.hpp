// The Puiseux monoid M_P generated by {1/p : p in P} for a stream P of
// pairwise coprime integers, its canonical decomposition and its length sets.
#ifndef LENGTHSETS_PRIME_RECIPROCAL_HPP
#define LENGTHSETS_PRIME_RECIPROCAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"

namespace lengthsets
{

/// q = integer_part + sum_p coeffs[p] / p with 1 <= coeffs[p] <= p - 1.
struct CanonicalDecomposition {
    Integer integer_part;
    std::map<Integer, Integer> coeffs;

    /// s_q = sum of the coefficients.
    Integer coefficient_sum() const
    {
        Integer s = 0;
        for (const auto &[p, c] : coeffs) {
            s += c;
        }
        return s;
    }

    Rational value() const
    {
        Rational q(integer_part);
        for (const auto &[p, c] : coeffs) {
            q += Rational(c, p);
        }
        return q;
    }

    friend bool operator==(const CanonicalDecomposition &, const CanonicalDecomposition &) = default;
};

/// Why q is not in M_P.
struct NotMember {
    std::string reason;
    std::optional<Integer> prime;
    std::optional<long> valuation;
};

using Decomposition = std::variant<CanonicalDecomposition, NotMember>;

/// Length set of an element: an explicit finite set, or s + nP (n-fold
/// sumset of P, shifted by s).
class LengthSetSymbolic
{
public:
    struct Finite {
        LengthSet set;
        friend bool operator==(const Finite &, const Finite &) = default;
    };
    struct Shifted {
        Length base;
        Length copies;
        PrimeStream stream;
        friend bool operator==(const Shifted &, const Shifted &) = default;
    };

    LengthSetSymbolic(Finite f) : m_value(std::move(f)) {}
    LengthSetSymbolic(Shifted s) : m_value(std::move(s)) {}

    bool is_finite() const
    {
        return std::holds_alternative<Finite>(m_value) || std::get<Shifted>(m_value).copies == 0;
    }
    bool is_shifted() const
    {
        return std::holds_alternative<Shifted>(m_value);
    }
    const Finite &finite() const
    {
        return std::get<Finite>(m_value);
    }
    const Shifted &shifted() const
    {
        return std::get<Shifted>(m_value);
    }

    /// All members <= cap, ascending.
    LengthSet enumerate(Length cap) const
    {
        if (auto f = std::get_if<Finite>(&m_value)) {
            LengthSet out;
            for (Length l : f->set) {
                if (l <= cap) {
                    out.insert(l);
                }
            }
            return out;
        }
        const auto &s = std::get<Shifted>(m_value);
        if (s.base > cap) {
            return {};
        }
        const Length room = cap - s.base;
        if (s.copies == 0) {
            return {s.base};
        }
        std::vector<Length> parts;
        for (const auto &p : s.stream.up_to(Integer(room))) {
            parts.push_back(static_cast<Length>(p));
        }
        if (parts.empty() || s.copies > room / parts.front()) {
            return {};
        }
        // reach[v]: v is a sum of exactly k parts, iterated k = 1..copies.
        std::vector<char> reach(room + 1, 0);
        reach[0] = 1;
        for (Length k = 0; k < s.copies; ++k) {
            std::vector<char> next(room + 1, 0);
            for (Length v = 0; v <= room; ++v) {
                if (!reach[v]) {
                    continue;
                }
                for (Length p : parts) {
                    if (v + p > room) {
                        break;
                    }
                    next[v + p] = 1;
                }
            }
            reach.swap(next);
        }
        LengthSet out;
        for (Length v = 0; v <= room; ++v) {
            if (reach[v]) {
                out.insert(v + s.base);
            }
        }
        return out;
    }

    bool contains(Length l) const
    {
        return enumerate(l).count(l) > 0;
    }

    friend bool operator==(const LengthSetSymbolic &, const LengthSetSymbolic &) = default;

private:
    std::variant<Finite, Shifted> m_value;
};

inline LengthSet symbolic_enumerate(const LengthSetSymbolic &l, Length cap)
{
    return l.enumerate(cap);
}

class PrimeReciprocal
{
public:
    PrimeReciprocal() : m_stream(PrimeStream::primes()) {}
    explicit PrimeReciprocal(PrimeStream stream) : m_stream(std::move(stream)) {}

    const PrimeStream &stream() const noexcept
    {
        return m_stream;
    }

    bool is_atom(const Rational &q) const
    {
        return q.num() == 1 && m_stream.contains(q.den());
    }

    /// Canonical decomposition (closed form). Requires P to consist of primes.
    Decomposition decompose(const Rational &q) const
    {
        if (!m_stream.all_prime()) {
            throw UnsupportedConfiguration(
                "mp_decompose: the closed form needs a stream of primes; use the bounded search for composite streams");
        }
        if (q.sign() < 0) {
            return NotMember{"negative value", std::nullopt, std::nullopt};
        }
        CanonicalDecomposition out;
        if (q.is_zero()) {
            out.integer_part = 0;
            return out;
        }
        Rational fractional_sum;
        for (const auto &[p, e] : prime_factors(q.den())) {
            if (!m_stream.contains(p)) {
                return NotMember{"denominator prime " + p.str() + " is not in P", p, -static_cast<long>(e)};
            }
            if (e > 1) {
                return NotMember{"valuation v_" + p.str() + " = -" + std::to_string(e) + " < -1", p,
                                 -static_cast<long>(e)};
            }
            const Integer cofactor = q.den() / p;
            const Integer c = mod_floor(q.num() * mod_inverse(cofactor, p), p);
            out.coeffs.emplace(p, c);
            fractional_sum += Rational(c, p);
        }
        Rational rest = q - fractional_sum;
        if (!rest.is_integer() || rest.sign() < 0) {
            return NotMember{"integer part " + rest.str() + " is negative", std::nullopt, std::nullopt};
        }
        out.integer_part = rest.num();
        return out;
    }

    bool contains(const Rational &q) const
    {
        return std::holds_alternative<CanonicalDecomposition>(decompose(q));
    }

    /// L(q) = s_q + N(q) P.
    LengthSetSymbolic length_set(const Rational &q) const
    {
        auto d = decompose(q);
        if (auto miss = std::get_if<NotMember>(&d)) {
            throw DomainError(q.str() + " is not in M_P: " + miss->reason);
        }
        const auto &dec = std::get<CanonicalDecomposition>(d);
        const Length s = to_u64(dec.coefficient_sum());
        const Length n = to_u64(dec.integer_part);
        if (n == 0) {
            return LengthSetSymbolic::Finite{{s}};
        }
        return LengthSetSymbolic::Shifted{s, n, m_stream};
    }

    /// m + sum_{i < n} 1/p_i over the first n elements of P; its length set is
    /// n + mP.
    Rational realize(const Integer &m, std::size_t n) const
    {
        Rational q(m);
        for (const auto &p : m_stream.first(n)) {
            q += Rational(Integer(1), p);
        }
        return q;
    }

    /// Lengths <= cap of factorizations of q that use only atoms 1/p with
    /// p <= truncation. Works for any pairwise coprime P; lengths above the cap
    /// stay unknown.
    LengthSet bounded_length_set(const Rational &q, const Integer &truncation, Length cap) const
    {
        if (q.sign() < 0) {
            return {};
        }
        const auto parts = m_stream.up_to(truncation);
        Integer unit = 1;
        for (const auto &p : parts) {
            unit *= p;
        }
        Rational scaled = q * Rational(unit);
        if (!scaled.is_integer()) {
            return {};
        }
        const Integer target = scaled.num();
        if (target > table_limit_) {
            throw BudgetExhausted("bounded_length_set: value table of " + target.str() + " entries is too large",
                                  "bounded_length_set");
        }
        const auto t = static_cast<std::size_t>(target);
        std::vector<detail::LengthBits> table(t + 1, detail::LengthBits(cap + 1));
        table[0].set(0);
        for (const auto &p : parts) {
            const auto w = static_cast<std::size_t>(unit / p);
            for (std::size_t v = w; v <= t; ++v) {
                table[v].or_shifted_by_one(table[v - w]);
            }
        }
        return table[t].to_set();
    }

    friend bool operator==(const PrimeReciprocal &a, const PrimeReciprocal &b)
    {
        return a.m_stream == b.m_stream;
    }

private:
    static constexpr std::uint64_t table_limit_ = std::uint64_t{1} << 24;
    PrimeStream m_stream;
};

} // namespace lengthsets

#endif
