#pragma once

/**
 * @file hnn.hpp
 * @brief The ascending HNN extension G *_sigma acting on the unrooted
 * (p+1)-regular tree.
 *
 * The tree is modelled as a union of copies of the rooted tree: vertex (k, w)
 * is vertex w of copy k, and the root of copy k is child 0 of the root of copy
 * k+1, i.e. (k, 0u) = (k-1, u). Canonical vertices have k = 0 or w not
 * starting with 0. The action (left to right, like words of G):
 *
 *     g     . (k, w) = (k, sigma^k(g)(w))
 *     t     . (k, w) = (k+1, w)
 *     t^-1  . (k, w) = (k-1, w)       after rewriting (0, w) as (1, 0w)
 *
 * so that t g t^-1 and sigma(g) act alike. The fixed end is the direction of
 * increasing k.
 */

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "spinal/lifting.hpp"
#include "spinal/wreath.hpp"

namespace spinal {

struct HnnVertex {
    std::uint32_t k = 0;
    Vertex w;

    auto operator<=>(const HnnVertex&) const = default;
};

/// "k:w" with the empty word printed as "-".
inline std::string format_hnn_vertex(const HnnVertex& v) {
    return std::to_string(v.k) + ":" + (v.w.empty() ? std::string("-") : format_vertex(v.w));
}

inline HnnVertex canonicalize(std::uint32_t k, Vertex w) {
    std::size_t strip = 0;
    while (k >= 1 && strip < w.size() && w[strip] == 0) {
        --k;
        ++strip;
    }
    w.erase(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(strip));
    return {k, std::move(w)};
}

/// Letter of an HNN word: either a G-letter or t^{+-1}.
struct HnnLetter {
    bool is_t = false;
    int t_exp = 1;
    Letter g{};

    static HnnLetter t(int e = 1) { return {true, e, {}}; }
    static HnnLetter gen(Letter l) { return {false, 0, l}; }
};

using HnnWord = std::vector<HnnLetter>;

inline HnnWord lift_word(const GroupWord& w) {
    HnnWord out;
    for (const auto& x : w) out.push_back(HnnLetter::gen(x));
    return out;
}

inline constexpr std::uint32_t kDefaultSigmaBound = 8;

class HnnAction {
public:
    HnnAction(WreathTable table, Endomorphism sigma, std::uint32_t max_iterate = kDefaultSigmaBound)
        : table_(std::move(table)), sigma_(std::move(sigma)), max_iterate_(max_iterate) {}

    const WreathTable& table() const noexcept { return table_; }
    const Endomorphism& sigma() const noexcept { return sigma_; }
    std::uint32_t max_iterate() const noexcept { return max_iterate_; }

    /// sigma^k(g), cached per (g, k).
    GroupWord sigma_power(Base g, std::uint32_t k) const {
        if (k > max_iterate_)
            throw Error(ErrorKind::IterationBoundExceeded,
                        "sigma iterate " + std::to_string(k) + " exceeds bound " + std::to_string(max_iterate_));
        std::lock_guard lock(mutex_);
        return sigma_power_locked(g, k);
    }

    HnnVertex act(const HnnLetter& x, const HnnVertex& v) const {
        if (x.is_t) {
            if (x.t_exp > 0) return canonicalize(v.k + 1, v.w);
            if (v.k == 0) {
                Vertex w{0};
                w.insert(w.end(), v.w.begin(), v.w.end());
                return canonicalize(0, std::move(w));
            }
            return canonicalize(v.k - 1, v.w);
        }
        const GroupWord g = power(sigma_power(x.g.base, v.k), x.g.exp, table_.p());
        return canonicalize(v.k, apply(g, v.w, table_));
    }

    HnnVertex act_word(const HnnWord& hw, HnnVertex v) const {
        for (const auto& x : hw) v = act(x, v);
        return v;
    }

    /// Generator letters g^e for every generator and exponent, plus t and t^-1.
    std::vector<HnnLetter> alphabet(bool with_group = true, bool with_t = true) const {
        std::vector<HnnLetter> out;
        if (with_group)
            for (const auto& g : table_.generators())
                for (std::uint32_t e = 1; e < table_.p(); ++e) out.push_back(HnnLetter::gen({g.base, e}));
        if (with_t) {
            out.push_back(HnnLetter::t(1));
            out.push_back(HnnLetter::t(-1));
        }
        return out;
    }

private:
    GroupWord sigma_power_locked(Base g, std::uint32_t k) const {
        if (k == 0) return {Letter{g, 1}};
        auto key = std::pair{g, k};
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        // sigma^k(g) = sigma^{k-1}(sigma(g)), substituting letter by letter.
        GroupWord out;
        for (const auto& x : sigma_.image(g)) {
            const GroupWord img = sigma_power_locked(x.base, k - 1);
            for (std::uint32_t n = 0; n < x.exp; ++n) out.insert(out.end(), img.begin(), img.end());
        }
        out = reduce(out, table_.p());
        cache_.emplace(key, out);
        return out;
    }

    WreathTable table_;
    Endomorphism sigma_;
    std::uint32_t max_iterate_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Base, std::uint32_t>, GroupWord> cache_;
};

/// Canonical vertices (k, w) with k <= kmax and |w| <= lmax.
inline std::vector<HnnVertex> canonical_ball(std::uint32_t p, std::uint32_t kmax, std::uint32_t lmax) {
    std::vector<HnnVertex> out;
    for (std::uint32_t k = 0; k <= kmax; ++k) {
        std::vector<Vertex> level{Vertex{}};
        for (std::uint32_t len = 0; len <= lmax; ++len) {
            std::vector<Vertex> next;
            for (const auto& w : level) {
                if (k == 0 || w.empty() || w[0] != 0) out.push_back({k, w});
                if (len == lmax) continue;
                for (std::uint32_t x = 0; x < p; ++x) {
                    Vertex c = w;
                    c.push_back(x);
                    next.push_back(std::move(c));
                }
            }
            level = std::move(next);
        }
    }
    return out;
}

/// True iff t g t^-1 and sigma(g) move every sampled vertex alike.
inline bool verify_hnn_relation(const HnnAction& act, Base g, const std::vector<HnnVertex>& sample) {
    const HnnWord lhs{HnnLetter::t(1), HnnLetter::gen({g, 1}), HnnLetter::t(-1)};
    const HnnWord rhs = lift_word(act.sigma().image(g));
    for (const auto& v : sample)
        if (act.act_word(lhs, v) != act.act_word(rhs, v)) return false;
    return true;
}

struct OrbitReport {
    std::uint32_t kmax = 0;
    std::uint32_t lmax = 0;
    std::size_t reached = 0;
    std::size_t total = 0;
    std::vector<HnnVertex> missed;

    bool transitive_on_ball() const { return reached == total; }
};

/// Breadth-first closure from `start` under `letters`, explored inside the
/// enlarged region k <= kmax + margin, |w| <= lmax + margin and then
/// intersected with the ball k <= kmax, |w| <= lmax.
inline OrbitReport orbit_ball(const HnnAction& act, const std::vector<HnnLetter>& letters, const HnnVertex& start,
                              std::uint32_t kmax, std::uint32_t lmax, std::uint32_t margin = 1) {
    auto inside = [](const HnnVertex& v, std::uint32_t k, std::uint32_t l) { return v.k <= k && v.w.size() <= l; };
    std::set<HnnVertex> seen{start};
    std::vector<HnnVertex> frontier{start};
    while (!frontier.empty()) {
        std::vector<HnnVertex> next;
        for (const auto& v : frontier)
            for (const auto& x : letters) {
                HnnVertex u = act.act(x, v);
                if (!inside(u, kmax + margin, lmax + margin)) continue;
                if (seen.insert(u).second) next.push_back(std::move(u));
            }
        frontier = std::move(next);
    }

    OrbitReport report{kmax, lmax, 0, 0, {}};
    for (const auto& v : canonical_ball(act.table().p(), kmax, lmax)) {
        ++report.total;
        if (seen.count(v))
            ++report.reached;
        else
            report.missed.push_back(v);
    }
    return report;
}

}  // namespace spinal
