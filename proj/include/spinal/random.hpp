#pragma once

// Seeded generators for words and data used by the property suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "spinal/datum.hpp"
#include "spinal/fp.hpp"
#include "spinal/word.hpp"

namespace spinal {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// Reduced word from `length` uniform letters with uniform nonzero exponents.
inline GroupWord random_word(const std::vector<Base>& gens, std::uint32_t p, std::size_t length, Rng& rng) {
    GroupWord w;
    for (std::size_t n = 0; n < length; ++n)
        w.push_back({gens[uniform(rng, 0, gens.size() - 1)], static_cast<std::uint32_t>(uniform(rng, 1, p - 1))});
    return reduce(w, p);
}

inline GroupWord random_word_upto(const std::vector<Base>& gens, std::uint32_t p, std::size_t max_len, Rng& rng) {
    return random_word(gens, p, uniform(rng, 0, max_len), rng);
}

inline std::vector<std::int64_t> random_nonzero_vector(std::uint32_t p, Rng& rng) {
    std::vector<std::int64_t> v(p - 1);
    do {
        for (auto& e : v) e = static_cast<std::int64_t>(uniform(rng, 0, p - 1));
    } while (std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; }));
    return v;
}

/// `count` independent vectors in (Z/p)^{p-1}, drawn by rejection.
inline std::vector<std::vector<std::int64_t>> random_independent_vectors(std::uint32_t p, std::uint32_t count, Rng& rng) {
    if (count > p - 1) throw Error(ErrorKind::DependentVectors, "more than p-1 vectors cannot be independent");
    std::vector<std::vector<std::int64_t>> out;
    while (out.size() < count) {
        auto v = random_nonzero_vector(p, rng);
        std::vector<FpVector> trial;
        for (const auto& u : out) trial.emplace_back(std::vector<std::uint32_t>(u.begin(), u.end()), p);
        trial.emplace_back(std::vector<std::uint32_t>(v.begin(), v.end()), p);
        if (rank_mod_p(trial) == trial.size()) out.push_back(std::move(v));
    }
    return out;
}

/// Random valid datum with every r_l drawn from [0, min(max_r, p-1)] (at least one positive).
inline Datum random_datum(std::uint32_t p, std::uint32_t max_r, Rng& rng) {
    RawDatum raw{p, std::vector<std::vector<std::vector<std::int64_t>>>(p)};
    max_r = std::min(max_r, p - 1);
    bool any = false;
    while (!any) {
        for (std::uint32_t l = 0; l < p; ++l) {
            const auto r = static_cast<std::uint32_t>(uniform(rng, 0, max_r));
            raw.E[l] = random_independent_vectors(p, r, rng);
            any = any || r > 0;
        }
    }
    return validate_datum(raw);
}

}  // namespace spinal
