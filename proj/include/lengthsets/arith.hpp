// Exact integer/rational arithmetic, p-adic valuations and prime utilities.
#ifndef LENGTHSETS_ARITH_HPP
#define LENGTHSETS_ARITH_HPP

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lengthsets/errors.hpp"

namespace lengthsets
{

using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer &a, const Integer &b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer &a, const Integer &b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

inline Integer gcd_of(std::span<const Integer> values)
{
    Integer g = 0;
    for (const auto &v : values) {
        g = gcd(g, v);
        if (g == 1) {
            break;
        }
    }
    return g;
}

// Nonnegative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer &a, const Integer &m)
{
    Integer r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
inline Integer mod_inverse(const Integer &a, const Integer &m)
{
    Integer old_r = mod_floor(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw DomainError("mod_inverse: arguments are not coprime");
    }
    return mod_floor(old_s, m);
}

inline bool fits_u64(const Integer &v)
{
    return v >= 0 && v <= Integer(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t to_u64(const Integer &v)
{
    if (!fits_u64(v)) {
        throw DomainError("integer does not fit in 64 bits: " + v.str());
    }
    return static_cast<std::uint64_t>(v);
}

inline Integer parse_integer(std::string_view text)
{
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) {
        throw DomainError("empty integer literal");
    }
    s = s.substr(first, last - first + 1);
    std::size_t digits_from = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (digits_from == s.size()
        || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                        [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw DomainError("malformed integer literal: '" + std::string(text) + "'");
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s);
}

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() : m_num(0), m_den(1) {}
    Rational(Integer n) : m_num(std::move(n)), m_den(1) {}
    template <std::integral T>
    Rational(T n) : m_num(n), m_den(1)
    {
    }
    Rational(Integer n, Integer d) : m_num(std::move(n)), m_den(std::move(d))
    {
        if (m_den == 0) {
            throw DomainError("rational with zero denominator");
        }
        normalize();
    }

    /// Parses "n", "n/d" (d may be negative, result is normalized).
    static Rational parse(std::string_view text)
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_integer(text));
        }
        return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }

    const Integer &num() const noexcept
    {
        return m_num;
    }
    const Integer &den() const noexcept
    {
        return m_den;
    }

    bool is_zero() const noexcept
    {
        return m_num == 0;
    }
    bool is_integer() const noexcept
    {
        return m_den == 1;
    }
    int sign() const noexcept
    {
        return m_num < 0 ? -1 : (m_num > 0 ? 1 : 0);
    }
    Integer floor() const
    {
        Integer q = m_num / m_den;
        if (m_num < 0 && q * m_den != m_num) {
            q -= 1;
        }
        return q;
    }

    std::string str() const
    {
        if (m_den == 1) {
            return m_num.str();
        }
        return m_num.str() + "/" + m_den.str();
    }

    Rational &operator+=(const Rational &o)
    {
        return *this = *this + o;
    }
    Rational &operator-=(const Rational &o)
    {
        return *this = *this - o;
    }
    Rational &operator*=(const Rational &o)
    {
        return *this = *this * o;
    }
    Rational &operator/=(const Rational &o)
    {
        return *this = *this / o;
    }

    friend Rational operator+(const Rational &a, const Rational &b)
    {
        if (a.m_den == b.m_den) {
            return Rational(a.m_num + b.m_num, a.m_den);
        }
        return Rational(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
    }
    friend Rational operator-(const Rational &a, const Rational &b)
    {
        if (a.m_den == b.m_den) {
            return Rational(a.m_num - b.m_num, a.m_den);
        }
        return Rational(a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den);
    }
    friend Rational operator-(const Rational &a)
    {
        Rational r = a;
        r.m_num = -r.m_num;
        return r;
    }
    friend Rational operator*(const Rational &a, const Rational &b)
    {
        return Rational(a.m_num * b.m_num, a.m_den * b.m_den);
    }
    friend Rational operator/(const Rational &a, const Rational &b)
    {
        if (b.is_zero()) {
            throw DomainError("division by zero rational");
        }
        return Rational(a.m_num * b.m_den, a.m_den * b.m_num);
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_num == b.m_num && a.m_den == b.m_den;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        Integer lhs = a.m_num * b.m_den;
        Integer rhs = b.m_num * a.m_den;
        if (lhs < rhs) {
            return std::strong_ordering::less;
        }
        if (lhs > rhs) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    void normalize()
    {
        if (m_den < 0) {
            m_num = -m_num;
            m_den = -m_den;
        }
        Integer g = gcd(m_num, m_den);
        if (g > 1) {
            m_num /= g;
            m_den /= g;
        }
    }

    Integer m_num;
    Integer m_den;
};

inline std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.str();
}

// ---------------------------------------------------------------------------
// Primality and factorization.

namespace detail
{

inline constexpr std::uint64_t trial_division_limit = 1u << 16;

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1u) {
            result = mulmod64(result, base, m);
        }
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline bool miller_rabin_round64(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r)
{
    std::uint64_t x = powmod64(a % n, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < r; ++i) {
        x = mulmod64(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

inline bool miller_rabin_round(const Integer &n, const Integer &a, const Integer &d, unsigned r)
{
    Integer x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

// Witnesses 2..37 are a proven deterministic set below this bound.
inline const Integer &small_witness_bound()
{
    static const Integer bound("3317044064679887385961981");
    return bound;
}

inline constexpr std::uint64_t small_witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace detail

/// Deterministic primality test: trial division for small n, fixed-witness
/// Miller-Rabin up to 3.3e24, and the Bach bound (all bases <= 2 ln(n)^2) above.
inline bool is_prime(const Integer &n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : detail::small_witnesses) {
        if (n == p) {
            return true;
        }
        if (n % p == 0) {
            return false;
        }
    }
    if (n < Integer(detail::trial_division_limit) * detail::trial_division_limit) {
        const auto v = static_cast<std::uint64_t>(n);
        for (std::uint64_t q = 41; q * q <= v; q += 2) {
            if (v % q == 0) {
                return false;
            }
        }
        return true;
    }
    if (fits_u64(n)) {
        const auto v = static_cast<std::uint64_t>(n);
        std::uint64_t d = v - 1;
        unsigned r = 0;
        while ((d & 1u) == 0) {
            d >>= 1;
            ++r;
        }
        for (std::uint64_t a : detail::small_witnesses) {
            if (!detail::miller_rabin_round64(v, a, d, r)) {
                return false;
            }
        }
        return true;
    }
    Integer d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    if (n < detail::small_witness_bound()) {
        for (std::uint64_t a : detail::small_witnesses) {
            if (!detail::miller_rabin_round(n, a, d, r)) {
                return false;
            }
        }
        return true;
    }
    // 2 ln(n)^2 with ln(n) <= bits * ln 2.
    const auto bits = static_cast<std::uint64_t>(boost::multiprecision::msb(n)) + 1;
    const auto limit = static_cast<std::uint64_t>(2.0 * 0.4804530139182014 * static_cast<double>(bits * bits)) + 1;
    for (std::uint64_t a = 2; a <= limit; ++a) {
        if (!detail::miller_rabin_round(n, a, d, r)) {
            return false;
        }
    }
    return true;
}

/// Smallest prime p > lower that divides none of the forbidden values.
inline Integer next_prime_avoiding(const Integer &lower, std::span<const Integer> forbidden = {})
{
    Integer p = lower < 2 ? Integer(2) : Integer(lower + 1);
    for (;; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        bool clear = std::none_of(forbidden.begin(), forbidden.end(),
                                  [&](const Integer &f) { return f != 0 && f % p == 0; });
        if (clear) {
            return p;
        }
    }
}

namespace detail
{

inline Integer pollard_brent(const Integer &n)
{
    if (n % 2 == 0) {
        return 2;
    }
    for (Integer c = 1;; ++c) {
        Integer y = 2, x = 2, g = 1, q = 1, ys;
        const std::uint64_t m = 64;
        std::uint64_t r = 1;
        auto f = [&](const Integer &v) { return (v * v + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = f(y);
            }
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * boost::multiprecision::abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(boost::multiprecision::abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

inline void factor_into(Integer n, std::map<Integer, unsigned> &out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

/// Prime factorization of n >= 1 as prime -> exponent.
inline std::map<Integer, unsigned> prime_factors(Integer n)
{
    if (n < 1) {
        throw DomainError("prime_factors: argument must be positive");
    }
    std::map<Integer, unsigned> out;
    for (std::uint64_t p = 2; p < 1024 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    detail::factor_into(std::move(n), out);
    return out;
}

/// p-adic valuation v_p(q) = v_p(n(q)) - v_p(d(q)).
inline long vp(const Rational &q, const Integer &p)
{
    if (q.is_zero()) {
        throw DomainError("vp: valuation of zero is undefined");
    }
    if (!is_prime(p)) {
        throw DomainError("vp: " + p.str() + " is not prime");
    }
    auto count = [&](Integer v) {
        long k = 0;
        v = boost::multiprecision::abs(v);
        while (v % p == 0) {
            v /= p;
            ++k;
        }
        return k;
    };
    return count(q.num()) - count(q.den());
}

/// d(Q) = {d(q) : q in Q}, ascending and deduplicated.
inline std::vector<Integer> denominator_set(std::span<const Rational> values)
{
    std::vector<Integer> out;
    out.reserve(values.size());
    for (const auto &q : values) {
        if (q.is_zero()) {
            throw DomainError("denominator_set: zero element");
        }
        out.push_back(q.den());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Integer lcm_of_denominators(std::span<const Rational> values)
{
    Integer l = 1;
    for (const auto &q : values) {
        l = lcm(l, q.den());
    }
    return l;
}

// ---------------------------------------------------------------------------

/// Ascending stream of pairwise coprime integers >= 2: either every prime or
/// an explicit finite list. Copies share one cache.
class PrimeStream
{
public:
    enum class Kind { all_primes, explicit_list };

    static PrimeStream primes()
    {
        return PrimeStream(Kind::all_primes, {});
    }

    static PrimeStream from_list(std::vector<Integer> values)
    {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] < 2) {
                throw DomainError("prime stream entries must be >= 2");
            }
            if (i > 0 && values[i] <= values[i - 1]) {
                throw DomainError("prime stream entries must be strictly ascending");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (gcd(values[i], values[j]) != 1) {
                    throw DomainError("prime stream entries must be pairwise coprime: " + values[j].str() + ", "
                                      + values[i].str());
                }
            }
        }
        if (values.empty()) {
            throw DomainError("explicit prime stream must be nonempty");
        }
        return PrimeStream(Kind::explicit_list, std::move(values));
    }

    /// Explicit stream of the primes <= bound.
    static PrimeStream primes_up_to(const Integer &bound)
    {
        return from_list(primes().up_to(bound));
    }

    Kind kind() const noexcept
    {
        return m_state->kind;
    }

    bool is_finite() const noexcept
    {
        return m_state->kind == Kind::explicit_list;
    }

    std::optional<std::size_t> size() const
    {
        if (is_finite()) {
            return m_state->cache.size();
        }
        return std::nullopt;
    }

    /// True when every element is prime (always for all_primes).
    bool all_prime() const
    {
        if (m_state->kind == Kind::all_primes) {
            return true;
        }
        return std::all_of(m_state->cache.begin(), m_state->cache.end(), [](const Integer &v) { return is_prime(v); });
    }

    Integer at(std::size_t i) const
    {
        std::lock_guard lock(m_state->mutex);
        if (m_state->kind == Kind::explicit_list) {
            if (i >= m_state->cache.size()) {
                throw DomainError("prime stream index out of range");
            }
            return m_state->cache[i];
        }
        grow_locked(i + 1);
        return m_state->cache[i];
    }

    std::vector<Integer> first(std::size_t n) const
    {
        std::lock_guard lock(m_state->mutex);
        if (m_state->kind == Kind::explicit_list) {
            if (n > m_state->cache.size()) {
                throw DomainError("explicit prime stream has fewer than " + std::to_string(n) + " elements");
            }
        } else {
            grow_locked(n);
        }
        return {m_state->cache.begin(), m_state->cache.begin() + static_cast<std::ptrdiff_t>(n)};
    }

    /// All stream elements <= bound, ascending.
    std::vector<Integer> up_to(const Integer &bound) const
    {
        std::lock_guard lock(m_state->mutex);
        if (m_state->kind == Kind::all_primes) {
            while (m_state->cache.empty() || m_state->cache.back() <= bound) {
                grow_locked(m_state->cache.size() + 1);
            }
        }
        std::vector<Integer> out;
        for (const auto &v : m_state->cache) {
            if (v > bound) {
                break;
            }
            out.push_back(v);
        }
        return out;
    }

    bool contains(const Integer &v) const
    {
        if (m_state->kind == Kind::all_primes) {
            return is_prime(v);
        }
        return std::binary_search(m_state->cache.begin(), m_state->cache.end(), v);
    }

    /// Cached values for explicit lists; empty for all_primes.
    std::vector<Integer> explicit_values() const
    {
        if (m_state->kind == Kind::all_primes) {
            return {};
        }
        return m_state->cache;
    }

    friend bool operator==(const PrimeStream &a, const PrimeStream &b)
    {
        if (a.kind() != b.kind()) {
            return false;
        }
        return a.kind() == Kind::all_primes || a.m_state->cache == b.m_state->cache;
    }

private:
    struct State {
        Kind kind;
        std::mutex mutex;
        std::vector<Integer> cache;
    };

    PrimeStream(Kind kind, std::vector<Integer> values) : m_state(std::make_shared<State>())
    {
        m_state->kind = kind;
        m_state->cache = std::move(values);
    }

    void grow_locked(std::size_t n) const
    {
        auto &cache = m_state->cache;
        while (cache.size() < n) {
            cache.push_back(next_prime_avoiding(cache.empty() ? Integer(1) : cache.back()));
        }
    }

    std::shared_ptr<State> m_state;
};

} // namespace lengthsets

#endif
