#pragma once

/**
 * @file lifting.hpp
 * @brief Liftability certificates and the lifting endomorphism sigma.
 *
 * A witness is a triple (m, k, j) with e^{(m)}_{k,j} != 0 while column p-j
 * vanishes in every collection. The lifting it certifies is
 *
 *     sigma(b(l,i)) = a^{-(p-l+1)} b(l,i) a^{p-l+1},
 *     sigma(a)      = a^{-s} b(m,k)^f a^{s},   f = (e^{(m)}_{k,j})^{-1},
 *
 * with s the conjugator exponent that puts `a` at vertex 0.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinal/datum.hpp"
#include "spinal/random.hpp"
#include "spinal/wreath.hpp"

namespace spinal {

struct LiftWitness {
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    std::uint32_t j = 0;
    std::uint32_t f = 0;
    std::uint32_t s = 0;

    bool operator==(const LiftWitness&) const = default;
};

/// Substitution on generators, extended homomorphically to words.
class Endomorphism {
public:
    Endomorphism() = default;
    Endomorphism(std::uint32_t p, std::map<Base, GroupWord> images) : p_(p), images_(std::move(images)) {}

    std::uint32_t p() const noexcept { return p_; }
    const std::map<Base, GroupWord>& images() const noexcept { return images_; }

    const GroupWord& image(Base b) const {
        auto it = images_.find(b);
        if (it == images_.end()) throw Error(ErrorKind::UnknownGenerator, "endomorphism has no image for generator");
        return it->second;
    }

    void set_image(Base b, GroupWord w) { images_[b] = reduce(w, p_); }

private:
    std::uint32_t p_ = 0;
    std::map<Base, GroupWord> images_;
};

/// image of g^e is image(g)^e.
inline GroupWord apply_sigma(const Endomorphism& sigma, const GroupWord& w) {
    GroupWord out;
    for (const auto& x : w) {
        const GroupWord& img = sigma.image(x.base);
        for (std::uint32_t n = 0; n < x.exp; ++n) out.insert(out.end(), img.begin(), img.end());
    }
    return reduce(out, sigma.p());
}

inline bool witness_conditions(const Datum& d, std::uint32_t m, std::uint32_t k, std::uint32_t j) {
    const std::uint32_t p = d.p();
    if (m < 1 || m > p || k < 1 || k > d.r(m) || j < 1 || j >= p) return false;
    if (d.entry(m, k, j) == 0) return false;
    for (std::uint32_t l = 1; l <= p; ++l)
        for (std::uint32_t i = 1; i <= d.r(l); ++i)
            if (d.entry(l, i, p - j) != 0) return false;
    return true;
}

namespace detail {

inline GroupWord a_pow(std::int64_t e, std::uint32_t p) {
    return reduce({Letter{Base::a(), FpScalar::normalize(e, p)}}, p);
}

inline GroupWord sigma_a_candidate(std::uint32_t p, Base bmk, std::uint32_t f, std::uint32_t s) {
    return conjugate({Letter{bmk, f}}, a_pow(s, p), p);
}

}  // namespace detail

/// Conjugator exponent s for which a^{-s} b(m,k)^f a^s fixes vertex 0 with
/// section a there. Candidates are tried from the shift 1-j-m upward.
inline std::optional<std::uint32_t> solve_conjugator(const WreathTable& t, std::uint32_t m, std::uint32_t k,
                                                     std::uint32_t j, std::uint32_t f) {
    const std::uint32_t p = t.p();
    const Base bmk = Base::b(static_cast<std::uint16_t>(m), static_cast<std::uint16_t>(k));
    const GroupWord a{Letter{Base::a(), 1}};
    const std::uint32_t start = FpScalar::normalize(std::int64_t{1} - j - m, p);
    for (std::uint32_t n = 0; n < p; ++n) {
        const std::uint32_t s = (start + n) % p;
        const GroupWord img = detail::sigma_a_candidate(p, bmk, f, s);
        if (root_image(img, 0, t) == 0 && are_equal(section(img, 0, t), a, t)) return s;
    }
    return std::nullopt;
}

/// Witness for a prescribed (m, k, j), if the conditions hold there.
inline std::optional<LiftWitness> witness_for(const Datum& d, const WreathTable& t, std::uint32_t m, std::uint32_t k,
                                              std::uint32_t j) {
    if (!witness_conditions(d, m, k, j)) return std::nullopt;
    const std::uint32_t f = mod_inverse(FpScalar(d.entry(m, k, j), d.p())).value();
    auto s = solve_conjugator(t, m, k, j, f);
    if (!s) return std::nullopt;
    return LiftWitness{m, k, j, f, *s};
}

/// Searches m = p down to 1, then k and j ascending.
inline std::optional<LiftWitness> find_lifting_witness(const Datum& d, const WreathTable& t) {
    for (std::uint32_t m = d.p(); m >= 1; --m)
        for (std::uint32_t k = 1; k <= d.r(m); ++k)
            for (std::uint32_t j = 1; j < d.p(); ++j)
                if (auto w = witness_for(d, t, m, k, j)) return w;
    return std::nullopt;
}

inline std::optional<LiftWitness> find_lifting_witness(const Datum& d) {
    return find_lifting_witness(d, build_recursion(d));
}

inline Endomorphism build_sigma(const Datum& d, const WreathTable& t, const LiftWitness& w) {
    const std::uint32_t p = d.p();
    auto s = solve_conjugator(t, w.m, w.k, w.j, w.f);
    if (!s)
        throw Error(ErrorKind::NoValidConjugator, "no conjugator places a at vertex 0 for witness (" +
                                                      std::to_string(w.m) + "," + std::to_string(w.k) + "," +
                                                      std::to_string(w.j) + ")");
    Endomorphism sigma(p, {});
    const Base bmk = Base::b(static_cast<std::uint16_t>(w.m), static_cast<std::uint16_t>(w.k));
    sigma.set_image(Base::a(), detail::sigma_a_candidate(p, bmk, w.f, *s));
    for (const Base& b : d.generators()) {
        if (b.is_a()) continue;
        sigma.set_image(b, conjugate({Letter{b, 1}}, detail::a_pow(p - b.l + 1, p), p));
    }
    return sigma;
}

inline Endomorphism build_sigma(const Datum& d, const LiftWitness& w) { return build_sigma(d, build_recursion(d), w); }

/// Relators g^p for every generator and [b(l,i), b(l,i')] for i < i'.
inline std::vector<GroupWord> known_relators(const Datum& d) {
    std::vector<GroupWord> out;
    const std::uint32_t p = d.p();
    for (const Base& g : d.generators()) out.push_back(GroupWord(p, Letter{g, 1}));
    for (std::uint32_t l = 1; l <= p; ++l)
        for (std::uint32_t i = 1; i <= d.r(l); ++i)
            for (std::uint32_t i2 = i + 1; i2 <= d.r(l); ++i2) {
                const Base x = Base::b(static_cast<std::uint16_t>(l), static_cast<std::uint16_t>(i));
                const Base y = Base::b(static_cast<std::uint16_t>(l), static_cast<std::uint16_t>(i2));
                out.push_back({Letter{x, p - 1}, Letter{y, p - 1}, Letter{x, 1}, Letter{y, 1}});
            }
    return out;
}

struct LiftingReport {
    bool fixes_vertex0 = true;
    bool recovers_source = true;
    bool relators_trivial = true;
    std::uint64_t seed = 0;
    std::size_t words_checked = 0;
    std::vector<std::string> failures;

    bool passed() const { return fixes_vertex0 && recovers_source && relators_trivial; }
};

/// Checks sigma on every generator and `sample_size` random words of length
/// at most `max_len`: sigma(w) fixes 0 and sigma(w)|_0 = w; also every known
/// relator maps to a trivial word. Failures are reported, not thrown.
inline LiftingReport verify_lifting(const Datum& d, const WreathTable& t, const Endomorphism& sigma,
                                    std::size_t sample_size, std::size_t max_len, std::uint64_t seed = 1) {
    LiftingReport report;
    report.seed = seed;
    const std::uint32_t p = d.p();
    const auto gens = d.generators();
    std::vector<GroupWord> words;
    for (const auto& g : gens) words.push_back({Letter{g, 1}});
    Rng rng(seed);
    for (std::size_t n = 0; n < sample_size; ++n) words.push_back(random_word_upto(gens, p, max_len, rng));

    for (std::size_t n = 0; n < words.size(); ++n) {
        const GroupWord img = apply_sigma(sigma, words[n]);
        ++report.words_checked;
        if (root_image(img, 0, t) != 0) {
            report.fixes_vertex0 = false;
            report.failures.push_back("sigma(w) moves vertex 0 for sample " + std::to_string(n));
            continue;
        }
        if (!are_equal(section(img, 0, t), words[n], t)) {
            report.recovers_source = false;
            report.failures.push_back("sigma(w)|_0 != w for sample " + std::to_string(n));
        }
    }
    const auto relators = known_relators(d);
    for (std::size_t n = 0; n < relators.size(); ++n) {
        if (!is_trivial(apply_sigma(sigma, relators[n]), t)) {
            report.relators_trivial = false;
            report.failures.push_back("sigma(relator " + std::to_string(n) + ") is nontrivial");
        }
    }
    return report;
}

/// Exponent sums mod p: `a` first, then each b(l,i) in (l, i) order.
inline std::vector<std::uint32_t> abelianize(const GroupWord& w, const Datum& d) {
    const auto gens = d.generators();
    std::map<Base, std::size_t> pos;
    for (std::size_t n = 0; n < gens.size(); ++n) pos[gens[n]] = n;
    std::vector<std::uint32_t> out(gens.size(), 0);
    for (const auto& x : w) {
        auto it = pos.find(x.base);
        if (it == pos.end()) throw Error(ErrorKind::UnknownGenerator, "letter not in datum");
        out[it->second] = (out[it->second] + x.exp) % d.p();
    }
    return out;
}

}  // namespace spinal
