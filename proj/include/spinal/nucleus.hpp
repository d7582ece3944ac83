#pragma once

/**
 * @file nucleus.hpp
 * @brief Contracting nucleus: closure, cycle extraction and the closed-form
 * answer for multi-EGS groups.
 *
 * The nucleus of a multi-EGS group is <a> together with the elementary
 * abelian groups B_l = <b(l,1), ..., b(l,r_l)>, of total size sum_l p^{r_l}.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spinal/datum.hpp"
#include "spinal/element_index.hpp"
#include "spinal/scc.hpp"
#include "spinal/wreath.hpp"

namespace spinal {

struct Nucleus {
    /// Canonical words in shortlex order.
    std::vector<GroupWord> elements;
    /// section_graph[n][x] is the index of elements[n]|_x.
    std::vector<std::vector<std::size_t>> section_graph;

    std::size_t size() const noexcept { return elements.size(); }
};

inline std::size_t nucleus_size(const Datum& d) {
    std::size_t total = 0;
    for (std::uint32_t l = 1; l <= d.p(); ++l) {
        std::size_t pw = 1;
        for (std::uint32_t k = 0; k < d.r(l); ++k) pw *= d.p();
        total += pw;
    }
    return total;
}

inline std::size_t default_max_size(const Datum& d) { return 4 * nucleus_size(d); }
inline constexpr std::size_t kDefaultClosureBound = 10'000;

/// Powers of a and every product b(l,1)^{t_1} ... b(l,r_l)^{t_{r_l}}.
inline std::vector<GroupWord> theoretical_nucleus(const Datum& d) {
    const std::uint32_t p = d.p();
    std::vector<GroupWord> out{GroupWord{}};
    for (std::uint32_t e = 1; e < p; ++e) out.push_back({Letter{Base::a(), e}});
    for (std::uint32_t l = 1; l <= p; ++l) {
        const std::uint32_t r = d.r(l);
        if (r == 0) continue;
        std::vector<std::uint32_t> t(r, 0);
        while (true) {
            std::size_t k = 0;
            while (k < r && ++t[k] == p) t[k++] = 0;
            if (k == r) break;
            GroupWord w;
            for (std::uint32_t i = 0; i < r; ++i)
                if (t[i] != 0) w.push_back({Base::b(static_cast<std::uint16_t>(l), static_cast<std::uint16_t>(i + 1)), t[i]});
            out.push_back(std::move(w));
        }
    }
    return out;
}

namespace detail {

// Words lying on a cycle of the word-level section graph below w.
inline std::vector<GroupWord> cycle_words_below(const GroupWord& w, const WreathTable& t) {
    std::unordered_map<GroupWord, std::size_t, GroupWordHash> id;
    std::vector<GroupWord> words;
    std::vector<std::vector<std::size_t>> adj;
    auto intern = [&](GroupWord u) {
        auto [it, fresh] = id.emplace(u, words.size());
        if (fresh) {
            words.push_back(std::move(u));
            adj.emplace_back();
        }
        return it->second;
    };
    intern(w);
    for (std::size_t n = 0; n < words.size(); ++n) {
        for (std::uint32_t x = 0; x < t.p(); ++x) {
            const std::size_t s = intern(section(words[n], x, t));
            adj[n].push_back(s);
        }
    }
    const auto cyc = nodes_on_cycles(adj);
    std::vector<GroupWord> out;
    for (std::size_t n = 0; n < words.size(); ++n)
        if (cyc[n]) out.push_back(words[n]);
    return out;
}

}  // namespace detail

/// Least set containing 1 and the generators with their inverses that is
/// closed under sections and contains every element on a section cycle of
/// n1 n2 for n1, n2 in the set. Output is in insertion order.
inline std::vector<GroupWord> self_similar_closure(const WreathTable& t, std::size_t max_size = kDefaultClosureBound) {
    const std::uint32_t p = t.p();
    ElementIndex idx(t);
    std::vector<std::size_t> pending;
    auto add = [&](const GroupWord& w) {
        auto [id, fresh] = idx.insert(w);
        if (fresh) {
            if (idx.size() > max_size)
                throw Error(ErrorKind::ClosureBoundExceeded,
                            "closure exceeded " + std::to_string(max_size) + " elements");
            pending.push_back(id);
        }
    };
    auto close_sections = [&] {
        while (!pending.empty()) {
            const std::size_t id = pending.back();
            pending.pop_back();
            const GroupWord rep = idx.representative(id);
            for (std::uint32_t x = 0; x < p; ++x) add(section(rep, x, t));
        }
    };

    add({});
    for (const auto& g : t.generators())
        for (std::uint32_t e = 1; e < p; ++e) add({Letter{g.base, e}});
    close_sections();

    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (int order = 0; order < (i == j ? 1 : 2); ++order) {
                const GroupWord& u = idx.representative(order == 0 ? i : j);
                const GroupWord& v = idx.representative(order == 0 ? j : i);
                for (const auto& c : detail::cycle_words_below(multiply(u, v, p), t)) add(c);
                close_sections();
            }
        }
    }
    return idx.representatives();
}

/// Restriction of a closure to the elements reachable from directed cycles of
/// its section graph.
inline Nucleus minimal_nucleus(const std::vector<GroupWord>& closure, const WreathTable& t) {
    ElementIndex idx(t);
    for (const auto& w : closure) idx.insert(w);
    std::vector<std::vector<std::size_t>> adj;
    for (std::size_t n = 0; n < idx.size(); ++n) {
        const GroupWord rep = idx.representative(n);
        std::vector<std::size_t> out;
        for (std::uint32_t x = 0; x < t.p(); ++x) out.push_back(idx.insert(section(rep, x, t)).first);
        adj.push_back(std::move(out));
    }

    const auto on_cycle = nodes_on_cycles(adj);
    std::vector<bool> keep(adj.size(), false);
    std::vector<std::size_t> queue;
    for (std::size_t n = 0; n < adj.size(); ++n)
        if (on_cycle[n]) {
            keep[n] = true;
            queue.push_back(n);
        }
    while (!queue.empty()) {
        const std::size_t n = queue.back();
        queue.pop_back();
        for (auto m : adj[n])
            if (!keep[m]) {
                keep[m] = true;
                queue.push_back(m);
            }
    }

    std::vector<std::size_t> kept;
    for (std::size_t n = 0; n < adj.size(); ++n)
        if (keep[n]) kept.push_back(n);
    std::sort(kept.begin(), kept.end(), [&](std::size_t x, std::size_t y) {
        return shortlex_less(idx.representative(x), idx.representative(y));
    });
    std::vector<std::size_t> position(adj.size(), 0);
    for (std::size_t k = 0; k < kept.size(); ++k) position[kept[k]] = k;

    Nucleus out;
    for (auto n : kept) {
        out.elements.push_back(idx.representative(n));
        std::vector<std::size_t> edges;
        for (auto m : adj[n]) edges.push_back(position[m]);
        out.section_graph.push_back(std::move(edges));
    }
    return out;
}

inline Nucleus compute_nucleus(const WreathTable& t, std::size_t max_size = kDefaultClosureBound) {
    return minimal_nucleus(self_similar_closure(t, max_size), t);
}

/// True iff (n1 n2)|_v lies in `set` for all n1, n2 in `set` and v in X^k.
inline bool verify_quasinucleus(const std::vector<GroupWord>& set, std::uint32_t k, const WreathTable& t) {
    const std::uint32_t p = t.p();
    ElementIndex idx(t);
    for (const auto& w : set) idx.insert(w);
    std::unordered_map<GroupWord, std::vector<GroupWord>, GroupWordHash> sections_cache;
    auto sections_of = [&](const GroupWord& w) -> const std::vector<GroupWord>& {
        auto it = sections_cache.find(w);
        if (it != sections_cache.end()) return it->second;
        std::vector<GroupWord> s;
        for (std::uint32_t x = 0; x < p; ++x) s.push_back(section(w, x, t));
        return sections_cache.emplace(w, std::move(s)).first->second;
    };

    for (const auto& n1 : set) {
        for (const auto& n2 : set) {
            std::vector<GroupWord> level{multiply(n1, n2, p)};
            for (std::uint32_t depth = 0; depth < k; ++depth) {
                std::vector<GroupWord> next;
                next.reserve(level.size() * p);
                for (const auto& w : level) {
                    const auto& s = sections_of(w);
                    next.insert(next.end(), s.begin(), s.end());
                }
                level = std::move(next);
            }
            for (const auto& w : level)
                if (!idx.find(w)) return false;
        }
    }
    return true;
}

/// Section graph in DOT format; `label` renders a word.
inline std::string nucleus_dot(const Nucleus& n, const std::function<std::string(const GroupWord&)>& label) {
    std::string out = "digraph nucleus {\n";
    for (std::size_t i = 0; i < n.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + label(n.elements[i]) + "\"];\n";
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t x = 0; x < n.section_graph[i].size(); ++x)
            out += "  n" + std::to_string(i) + " -> n" + std::to_string(n.section_graph[i][x]) + " [label=\"" +
                   std::to_string(x) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace spinal
