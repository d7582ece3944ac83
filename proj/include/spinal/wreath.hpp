#pragma once

/**
 * @file wreath.hpp
 * @brief Wreath recursions and the section calculus on words.
 *
 * Composition is left to right: the word g h acts as g first, then h, so
 *
 *     (g h)|_x = g|_x h|_{g(x)},     root(g h) = root(g) then root(h).
 *
 * Element equality is decided by walking the (finite) set of sections of
 * u v^{-1}; a word is trivial iff every section reachable from it has an
 * identity root permutation.
 */

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "spinal/datum.hpp"
#include "spinal/errors.hpp"
#include "spinal/perm.hpp"
#include "spinal/word.hpp"

namespace spinal {

/// Vertex of the rooted p-ary tree, as a word over {0, ..., p-1}.
using Vertex = std::vector<std::uint32_t>;

inline std::string format_vertex(const Vertex& v) {
    std::string s;
    for (auto x : v) s += std::to_string(x);
    return s;
}

/// First-level decomposition g = (g|_0, ..., g|_{p-1}) root(g) of every generator.
class WreathTable {
public:
    struct Generator {
        Base base;
        Perm root;
        std::vector<GroupWord> sections;
    };

    WreathTable() = default;

    WreathTable(std::uint32_t p, std::vector<Generator> gens) : p_(p), gens_(std::move(gens)) {
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            const auto& gen = gens_[g];
            if (gen.root.size() != p_ || !gen.root.is_bijection())
                throw Error(ErrorKind::DimensionMismatch, "root permutation is not a bijection of X");
            if (gen.sections.size() != p_)
                throw Error(ErrorKind::DimensionMismatch, "generator needs exactly p sections");
            if (!index_.emplace(gen.base, g).second)
                throw Error(ErrorKind::DimensionMismatch, "duplicate generator");
        }
        for (const auto& gen : gens_)
            for (const auto& s : gen.sections)
                for (const auto& x : s) index_of(x.base);
        precompute_powers();
    }

    std::uint32_t p() const noexcept { return p_; }
    const std::vector<Generator>& generators() const noexcept { return gens_; }
    bool contains(Base b) const { return index_.count(b) != 0; }

    std::size_t index_of(Base b) const {
        auto it = index_.find(b);
        if (it == index_.end())
            throw Error(ErrorKind::UnknownGenerator,
                        b.is_a() ? "a" : "b[" + std::to_string(b.l) + "," + std::to_string(b.i) + "]");
        return it->second;
    }

    /// Root permutation of the letter g^e.
    const Perm& root(const Letter& x) const { return power(x).root; }

    /// Section of g^e at vertex y.
    const GroupWord& section(const Letter& x, std::uint32_t y) const { return power(x).sections[y]; }

    bool operator==(const WreathTable& o) const { return p_ == o.p_ && index_ == o.index_ && same_gens(o); }

private:
    struct Power {
        Perm root;
        std::vector<GroupWord> sections;
    };

    const Power& power(const Letter& x) const {
        return powers_[index_of(x.base) * (p_ - 1) + (x.exp % p_) - 1];
    }

    bool same_gens(const WreathTable& o) const {
        if (gens_.size() != o.gens_.size()) return false;
        for (const auto& g : gens_) {
            const auto& h = o.gens_[o.index_of(g.base)];
            if (!(g.root == h.root) || g.sections != h.sections) return false;
        }
        return true;
    }

    // (g^e)|_x = g|_x g|_{g(x)} ... g|_{g^{e-1}(x)}
    void precompute_powers() {
        powers_.clear();
        powers_.reserve(gens_.size() * (p_ - 1));
        for (const auto& g : gens_) {
            for (std::uint32_t e = 1; e < p_; ++e) {
                Power pw{g.root.pow(e), std::vector<GroupWord>(p_)};
                for (std::uint32_t x = 0; x < p_; ++x) {
                    GroupWord w;
                    std::uint32_t y = x;
                    for (std::uint32_t k = 0; k < e; ++k) {
                        w.insert(w.end(), g.sections[y].begin(), g.sections[y].end());
                        y = g.root(y);
                    }
                    pw.sections[x] = reduce(w, p_);
                }
                powers_.push_back(std::move(pw));
            }
        }
    }

    std::uint32_t p_ = 0;
    std::vector<Generator> gens_;
    std::map<Base, std::size_t> index_;
    std::vector<Power> powers_;
};

/// Wreath recursion of the multi-EGS group of `d`:
///   a = (1, ..., 1) eps,
///   b(l,i) has itself at position l-1 and a^{e^{(l)}_{i,n}} at position l-1+n (mod p).
inline WreathTable build_recursion(const Datum& d) {
    const std::uint32_t p = d.p();
    std::vector<WreathTable::Generator> gens;
    gens.push_back({Base::a(), Perm::rotation(p, 1), std::vector<GroupWord>(p)});
    for (const Base& b : d.generators()) {
        if (b.is_a()) continue;
        WreathTable::Generator g{b, Perm::identity(p), std::vector<GroupWord>(p)};
        g.sections[b.l - 1] = {Letter{b, 1}};
        for (std::uint32_t n = 1; n < p; ++n) {
            const std::uint32_t e = d.entry(b.l, b.i, n);
            if (e != 0) g.sections[(b.l - 1 + n) % p] = {Letter{Base::a(), e}};
        }
        gens.push_back(std::move(g));
    }
    return WreathTable(p, std::move(gens));
}

/// Throws UnknownGenerator if some letter is not defined in `t`.
inline void check_word(const GroupWord& w, const WreathTable& t) {
    for (const auto& x : w) t.index_of(x.base);
}

inline Perm root_perm(const GroupWord& w, const WreathTable& t) {
    Perm r = Perm::identity(t.p());
    for (const auto& x : w) r = r.then(t.root(x));
    return r;
}

/// Image of the letter x under w, without building the full permutation.
inline std::uint32_t root_image(const GroupWord& w, std::uint32_t x, const WreathTable& t) {
    for (const auto& l : w) x = t.root(l)(x);
    return x;
}

inline GroupWord section(const GroupWord& w, std::uint32_t x, const WreathTable& t) {
    GroupWord out;
    std::uint32_t y = x;
    for (const auto& l : w) {
        const auto& s = t.section(l, y);
        out.insert(out.end(), s.begin(), s.end());
        y = t.root(l)(y);
    }
    return reduce(out, t.p());
}

inline GroupWord section_at(GroupWord w, const Vertex& v, const WreathTable& t) {
    for (auto x : v) w = section(w, x, t);
    return w;
}

/// g(x v) = g(x) g|_x(v).
inline Vertex apply(GroupWord w, const Vertex& v, const WreathTable& t) {
    Vertex out;
    out.reserve(v.size());
    for (std::size_t n = 0; n < v.size(); ++n) {
        out.push_back(root_image(w, v[n], t));
        if (n + 1 < v.size()) w = section(w, v[n], t);
    }
    return out;
}

inline constexpr std::size_t kDefaultMemoBound = 1'000'000;

/// Memo bound for the word problem; SPINAL_MAX_MEMO overrides the default.
inline std::size_t default_memo_bound() {
    static const std::size_t bound = [] {
        if (const char* env = std::getenv("SPINAL_MAX_MEMO")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return kDefaultMemoBound;
    }();
    return bound;
}

/// True iff w acts trivially on the whole tree. Words already visited are
/// presumed trivial (greatest fixed point); the first nontrivial root
/// permutation found anywhere refutes the whole computation.
inline bool is_trivial(const GroupWord& w, const WreathTable& t, std::size_t max_memo = default_memo_bound()) {
    std::unordered_set<GroupWord, GroupWordHash> seen;
    std::vector<GroupWord> stack{reduce(w, t.p())};
    while (!stack.empty()) {
        GroupWord u = std::move(stack.back());
        stack.pop_back();
        if (u.empty() || seen.count(u)) continue;
        for (std::uint32_t x = 0; x < t.p(); ++x)
            if (root_image(u, x, t) != x) return false;
        if (seen.size() >= max_memo)
            throw Error(ErrorKind::DepthBoundExceeded,
                        "word problem memo exceeded " + std::to_string(max_memo) + " entries");
        for (std::uint32_t x = 0; x < t.p(); ++x) stack.push_back(section(u, x, t));
        seen.insert(std::move(u));
    }
    return true;
}

inline bool are_equal(const GroupWord& u, const GroupWord& v, const WreathTable& t,
                      std::size_t max_memo = default_memo_bound()) {
    if (u == v) return true;
    return is_trivial(multiply(u, invert(v, t.p()), t.p()), t, max_memo);
}

/// Least n in [1, max_order] with w^n trivial.
inline std::optional<std::uint32_t> order_of(const GroupWord& w, const WreathTable& t, std::uint32_t max_order) {
    GroupWord acc = w;
    for (std::uint32_t n = 1; n <= max_order; ++n) {
        if (is_trivial(acc, t)) return n;
        acc = multiply(acc, w, t.p());
    }
    return std::nullopt;
}

}  // namespace spinal
