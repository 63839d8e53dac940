// Finite length sets and the bitset rows used by the length DPs.
#ifndef LENGTHSETS_LENGTHS_HPP
#define LENGTHSETS_LENGTHS_HPP

#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace lengthsets
{

using Length = std::uint64_t;
using LengthSet = std::set<Length>;

/// Elementwise sumset A + B.
inline LengthSet sumset(const LengthSet &a, const LengthSet &b)
{
    LengthSet out;
    for (Length x : a) {
        for (Length y : b) {
            out.insert(x + y);
        }
    }
    return out;
}

inline LengthSet shifted(const LengthSet &a, std::int64_t by)
{
    LengthSet out;
    for (Length x : a) {
        out.insert(static_cast<Length>(static_cast<std::int64_t>(x) + by));
    }
    return out;
}

inline std::string to_string(const LengthSet &s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Length x : s) {
        os << (first ? "" : ", ") << x;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace detail
{

// Fixed-width bitset over lengths 0..width-1.
class LengthBits
{
public:
    LengthBits() = default;
    explicit LengthBits(std::size_t width) : m_width(width), m_words((width + 63) / 64, 0) {}

    std::size_t width() const noexcept
    {
        return m_width;
    }

    void set(std::size_t i)
    {
        if (i < m_width) {
            m_words[i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }
    bool test(std::size_t i) const
    {
        return i < m_width && ((m_words[i / 64] >> (i % 64)) & 1u);
    }
    bool any() const
    {
        for (auto w : m_words) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    // this |= other << 1, truncated to width.
    void or_shifted_by_one(const LengthBits &other)
    {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < m_words.size(); ++i) {
            std::uint64_t w = other.m_words[i];
            m_words[i] |= (w << 1) | carry;
            carry = w >> 63;
        }
        trim();
    }

    LengthSet to_set() const
    {
        LengthSet out;
        for (std::size_t i = 0; i < m_words.size(); ++i) {
            std::uint64_t w = m_words[i];
            while (w) {
                out.insert(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

private:
    void trim()
    {
        if (m_width % 64 != 0 && !m_words.empty()) {
            m_words.back() &= (std::uint64_t{1} << (m_width % 64)) - 1;
        }
    }

    std::size_t m_width = 0;
    std::vector<std::uint64_t> m_words;
};

} // namespace detail

} // namespace lengthsets

#endif
