#pragma once

/**
 * @file selftest.hpp
 * @brief Randomized property checks runnable against any datum.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "spinal/hnn.hpp"
#include "spinal/lifting.hpp"
#include "spinal/nucleus.hpp"
#include "spinal/random.hpp"
#include "spinal/wreath.hpp"

namespace spinal {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct SelftestOptions {
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    std::size_t max_len = 8;
};

namespace detail {

inline std::vector<Vertex> all_vertices(std::uint32_t p, std::size_t max_len) {
    std::vector<Vertex> out{Vertex{}};
    for (std::size_t n = 0; n < out.size(); ++n) {
        if (out[n].size() == max_len) continue;
        for (std::uint32_t x = 0; x < p; ++x) {
            Vertex v = out[n];
            v.push_back(x);
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace detail

/// (uv)|_x = u|_x v|_{u(x)}, (u^-1)|_x = (u|_{u^-1(x)})^-1 and the cocycle rule
/// w|_{v1 v2} = (w|_{v1})|_{v2}, all compared as group elements.
inline CheckResult check_section_identities(const Datum& d, const WreathTable& t, const SelftestOptions& opt) {
    CheckResult r{"section identities", true, ""};
    const std::uint32_t p = d.p();
    const auto gens = d.generators();
    Rng rng(opt.seed);
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const GroupWord u = random_word_upto(gens, p, opt.max_len, rng);
        const GroupWord v = random_word_upto(gens, p, opt.max_len, rng);
        const auto x = static_cast<std::uint32_t>(uniform(rng, 0, p - 1));
        const GroupWord lhs = section(multiply(u, v, p), x, t);
        const GroupWord rhs = multiply(section(u, x, t), section(v, root_image(u, x, t), t), p);
        if (!are_equal(lhs, rhs, t)) {
            r.passed = false;
            r.detail = "product rule fails at sample " + std::to_string(n);
            return r;
        }
        const std::uint32_t pre = root_perm(u, t).inverse()(x);
        if (!are_equal(section(invert(u, p), x, t), invert(section(u, pre, t), p), t)) {
            r.passed = false;
            r.detail = "inverse rule fails at sample " + std::to_string(n);
            return r;
        }
        Vertex v1, v2;
        for (auto k = uniform(rng, 0, 3); k > 0; --k) v1.push_back(static_cast<std::uint32_t>(uniform(rng, 0, p - 1)));
        for (auto k = uniform(rng, 0, 3); k > 0; --k) v2.push_back(static_cast<std::uint32_t>(uniform(rng, 0, p - 1)));
        Vertex joined = v1;
        joined.insert(joined.end(), v2.begin(), v2.end());
        if (!are_equal(section_at(u, joined, t), section_at(section_at(u, v1, t), v2, t), t)) {
            r.passed = false;
            r.detail = "cocycle rule fails at sample " + std::to_string(n);
            return r;
        }
    }
    r.detail = std::to_string(opt.samples) + " samples";
    return r;
}

/// are_equal against comparing the action on every vertex of length <= depth.
inline CheckResult check_equality_against_action(const Datum& d, const WreathTable& t, const SelftestOptions& opt,
                                                 std::size_t depth = 0) {
    if (depth == 0)
        for (std::uint64_t n = d.p(); n <= 1000; n *= d.p()) ++depth;
    CheckResult r{"equality vs action", true, ""};
    const std::uint32_t p = d.p();
    const auto gens = d.generators();
    const auto verts = detail::all_vertices(p, depth);
    Rng rng(opt.seed + 1);
    std::size_t equal_pairs = 0;
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const GroupWord u = random_word_upto(gens, p, opt.max_len, rng);
        // Half the pairs are rewritten with a relator so equal pairs occur.
        GroupWord v = random_word_upto(gens, p, opt.max_len, rng);
        if (n % 2 == 0) {
            const auto rel = known_relators(d);
            const GroupWord& r0 = rel[uniform(rng, 0, rel.size() - 1)];
            const GroupWord c = random_word_upto(gens, p, 3, rng);
            v = multiply(u, conjugate(r0, c, p), p);
        }
        bool same_action = true;
        for (const auto& x : verts)
            if (apply(u, x, t) != apply(v, x, t)) {
                same_action = false;
                break;
            }
        const bool eq = are_equal(u, v, t);
        equal_pairs += eq ? 1 : 0;
        if (eq != same_action) {
            r.passed = false;
            r.detail = "disagreement at sample " + std::to_string(n);
            return r;
        }
    }
    r.detail = std::to_string(opt.samples) + " pairs, " + std::to_string(equal_pairs) + " equal";
    return r;
}

inline CheckResult check_generator_orders(const Datum& d, const WreathTable& t) {
    CheckResult r{"generator orders", true, std::to_string(d.generators().size()) + " generators of order " + std::to_string(d.p())};
    for (const auto& g : d.generators()) {
        const auto ord = order_of({Letter{g, 1}}, t, d.p());
        if (!ord || *ord != d.p()) {
            r.passed = false;
            r.detail = "a generator does not have order p";
        }
    }
    return r;
}

/// Computed nucleus against the closed form, plus the two-level quasinucleus check.
inline CheckResult check_nucleus(const Datum& d, const WreathTable& t) {
    CheckResult r{"nucleus", true, ""};
    const Nucleus n = compute_nucleus(t, default_max_size(d));
    const auto theory = theoretical_nucleus(d);
    ElementIndex idx(t);
    for (const auto& w : n.elements) idx.insert(w);
    bool all_found = true;
    for (const auto& w : theory) all_found = all_found && idx.find(w).has_value();
    const bool quasi = verify_quasinucleus(n.elements, 2, t);
    r.passed = n.size() == nucleus_size(d) && theory.size() == n.size() && all_found && quasi;
    r.detail = "size " + std::to_string(n.size()) + " (expected " + std::to_string(nucleus_size(d)) + ")" +
               (quasi ? "" : ", quasinucleus check failed");
    return r;
}

inline CheckResult check_abelianization(const Datum& d, const WreathTable& t, const SelftestOptions& opt) {
    CheckResult r{"abelianization", true, ""};
    const std::uint32_t p = d.p();
    const auto gens = d.generators();
    const auto rel = known_relators(d);
    Rng rng(opt.seed + 2);
    std::size_t trivial = 0;
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const GroupWord u = random_word_upto(gens, p, opt.max_len, rng);
        const GroupWord v = random_word_upto(gens, p, opt.max_len, rng);
        auto su = abelianize(u, d), sv = abelianize(v, d), suv = abelianize(multiply(u, v, p), d);
        for (std::size_t k = 0; k < su.size(); ++k)
            if ((su[k] + sv[k]) % p != suv[k]) {
                r.passed = false;
                r.detail = "not additive at sample " + std::to_string(n);
                return r;
            }
        // Products of conjugated relators are trivial by construction.
        GroupWord w = n % 2 == 0 ? u
                                 : multiply(conjugate(rel[uniform(rng, 0, rel.size() - 1)], u, p),
                                            conjugate(rel[uniform(rng, 0, rel.size() - 1)], v, p), p);
        if (is_trivial(w, t)) {
            ++trivial;
            for (auto c : abelianize(w, d))
                if (c != 0) {
                    r.passed = false;
                    r.detail = "trivial word with nonzero abelianization at sample " + std::to_string(n);
                    return r;
                }
        }
    }
    r.detail = std::to_string(trivial) + " trivial words checked";
    return r;
}

inline CheckResult check_lifting(const Datum& d, const WreathTable& t, const SelftestOptions& opt) {
    CheckResult r{"lifting", true, ""};
    const auto w = find_lifting_witness(d, t);
    if (!w) {
        r.detail = "no witness; skipped";
        return r;
    }
    const auto sigma = build_sigma(d, t, *w);
    const auto report = verify_lifting(d, t, sigma, opt.samples, 20, opt.seed);
    r.passed = report.passed();
    r.detail = std::to_string(report.words_checked) + " words";
    if (!report.failures.empty()) r.detail += "; " + report.failures.front();
    return r;
}

inline CheckResult check_hnn(const Datum& d, const WreathTable& t, std::uint32_t kmax = 2, std::uint32_t lmax = 3) {
    CheckResult r{"hnn relation", true, std::to_string(canonical_ball(d.p(), kmax, lmax).size()) + " vertices, k <= " + std::to_string(kmax) + ", |w| <= " + std::to_string(lmax)};
    const auto w = find_lifting_witness(d, t);
    if (!w) {
        r.detail = "no witness; skipped";
        return r;
    }
    const HnnAction act(t, build_sigma(d, t, *w));
    const auto ball = canonical_ball(d.p(), kmax, lmax);
    for (const auto& g : d.generators())
        if (!verify_hnn_relation(act, g, ball)) {
            r.passed = false;
            r.detail = "t g t^-1 and sigma(g) differ for some generator";
        }
    return r;
}

inline std::vector<CheckResult> run_selftest(const Datum& d, const SelftestOptions& opt) {
    const WreathTable t = build_recursion(d);
    return {check_section_identities(d, t, opt),
            check_equality_against_action(d, t, opt),
            check_generator_orders(d, t),
            check_nucleus(d, t),
            check_abelianization(d, t, opt),
            check_lifting(d, t, opt),
            check_hnn(d, t)};
}

}  // namespace spinal
