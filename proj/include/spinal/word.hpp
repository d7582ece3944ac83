#pragma once

/**
 * @file word.hpp
 * @brief Generator letters and reduced words.
 *
 * A word is a sequence of letters g^e where g is `a` or some spinal
 * generator b(l,i). Words are kept reduced: adjacent letters never share a
 * base and exponents lie in [1, p-1]. Reduction is purely syntactic; two
 * different reduced words can still be the same group element.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spinal {

/// Generator base. l == 0 encodes `a`; otherwise b(l, i) with l, i >= 1.
struct Base {
    std::uint16_t l = 0;
    std::uint16_t i = 0;

    static constexpr Base a() { return {0, 0}; }
    static constexpr Base b(std::uint16_t l, std::uint16_t i) { return {l, i}; }

    constexpr bool is_a() const noexcept { return l == 0; }

    auto operator<=>(const Base&) const = default;
};

struct Letter {
    Base base;
    std::uint32_t exp = 1;

    auto operator<=>(const Letter&) const = default;
};

using GroupWord = std::vector<Letter>;

/// Merge adjacent same-base letters with exponents added mod p, dropping
/// letters whose exponent vanishes. Stack-based, so merges cascade.
inline GroupWord reduce(const GroupWord& w, std::uint32_t p) {
    GroupWord out;
    out.reserve(w.size());
    for (const Letter& x : w) {
        std::uint32_t e = x.exp % p;
        if (e == 0) continue;
        if (!out.empty() && out.back().base == x.base) {
            e = (out.back().exp + e) % p;
            out.pop_back();
            if (e != 0) out.push_back({x.base, e});
        } else {
            out.push_back({x.base, e});
        }
    }
    return out;
}

inline GroupWord invert(const GroupWord& w, std::uint32_t p) {
    GroupWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->base, (p - it->exp % p) % p});
    return reduce(out, p);
}

inline GroupWord multiply(const GroupWord& u, const GroupWord& v, std::uint32_t p) {
    GroupWord out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return reduce(out, p);
}

inline GroupWord power(const GroupWord& w, std::uint32_t n, std::uint32_t p) {
    GroupWord out;
    for (std::uint32_t k = 0; k < n; ++k) out.insert(out.end(), w.begin(), w.end());
    return reduce(out, p);
}

/// h^{-1} g h.
inline GroupWord conjugate(const GroupWord& g, const GroupWord& h, std::uint32_t p) {
    return multiply(multiply(invert(h, p), g, p), h, p);
}

/// Shortest first, then lexicographic by (base kind, l, i, exp).
inline bool shortlex_less(const GroupWord& u, const GroupWord& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
}

struct GroupWordHash {
    std::size_t operator()(const GroupWord& w) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (const Letter& x : w) {
            std::uint64_t v = (std::uint64_t{x.base.l} << 40) | (std::uint64_t{x.base.i} << 20) | x.exp;
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace spinal
