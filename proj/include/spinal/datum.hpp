#pragma once

/**
 * @file datum.hpp
 * @brief Multi-EGS data: a prime p and p collections of independent vectors.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "spinal/errors.hpp"
#include "spinal/fp.hpp"
#include "spinal/word.hpp"

namespace spinal {

/// Unchecked datum as read from a file or assembled by hand.
struct RawDatum {
    std::int64_t p = 0;
    std::vector<std::vector<std::vector<std::int64_t>>> E;
};

/// Validated datum. E[l-1] holds the r_l vectors of collection l.
class Datum {
public:
    std::uint32_t p() const noexcept { return p_; }
    const std::vector<std::vector<FpVector>>& collections() const noexcept { return E_; }
    const std::vector<FpVector>& collection(std::uint32_t l) const { return E_.at(l - 1); }
    std::uint32_t r(std::uint32_t l) const { return static_cast<std::uint32_t>(E_.at(l - 1).size()); }

    /// e^{(l)}_{i,n}, all indices 1-based.
    std::uint32_t entry(std::uint32_t l, std::uint32_t i, std::uint32_t n) const {
        return E_.at(l - 1).at(i - 1)[n - 1];
    }

    std::size_t spinal_count() const {
        std::size_t n = 0;
        for (const auto& c : E_) n += c.size();
        return n;
    }

    /// `a` first, then b(l,i) in lexicographic (l, i) order.
    std::vector<Base> generators() const {
        std::vector<Base> out{Base::a()};
        for (std::uint32_t l = 1; l <= p_; ++l)
            for (std::uint32_t i = 1; i <= r(l); ++i)
                out.push_back(Base::b(static_cast<std::uint16_t>(l), static_cast<std::uint16_t>(i)));
        return out;
    }

    bool has_generator(Base b) const {
        if (b.is_a()) return true;
        return b.l >= 1 && b.l <= p_ && b.i >= 1 && b.i <= r(b.l);
    }

    /// E^{(1)} = E^{(p)} = {e} and every other collection empty.
    bool is_egs() const {
        for (std::uint32_t l = 2; l < p_; ++l)
            if (r(l) != 0) return false;
        return r(1) == 1 && r(p_) == 1 && collection(1)[0] == collection(p_)[0];
    }

    RawDatum raw() const {
        RawDatum out{p_, {}};
        for (const auto& c : E_) {
            auto& dst = out.E.emplace_back();
            for (const auto& v : c) dst.emplace_back(v.entries().begin(), v.entries().end());
        }
        return out;
    }

    bool operator==(const Datum&) const = default;

private:
    friend Datum validate_datum(const RawDatum&, std::uint32_t);
    std::uint32_t p_ = 0;
    std::vector<std::vector<FpVector>> E_;
};

inline Datum validate_datum(const RawDatum& raw, std::uint32_t prime_limit = kDefaultPrimeLimit) {
    check_odd_prime(raw.p, prime_limit);
    const auto p = static_cast<std::uint32_t>(raw.p);
    if (raw.E.size() != p)
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(p) + " collections, got " + std::to_string(raw.E.size()));

    Datum d;
    d.p_ = p;
    bool any = false;
    for (std::uint32_t l = 1; l <= p; ++l) {
        auto& dst = d.E_.emplace_back();
        for (const auto& vec : raw.E[l - 1]) {
            if (vec.size() != p - 1)
                throw Error(ErrorKind::BadVectorLength,
                            "collection " + std::to_string(l) + ": vector of length " + std::to_string(vec.size()) +
                                ", expected " + std::to_string(p - 1));
            std::vector<std::uint32_t> entries;
            for (auto e : vec) {
                if (e < 0 || e >= static_cast<std::int64_t>(p))
                    throw Error(ErrorKind::BadEntry, "collection " + std::to_string(l) + ": entry " +
                                                         std::to_string(e) + " outside [0, p-1]");
                entries.push_back(static_cast<std::uint32_t>(e));
            }
            dst.emplace_back(std::move(entries), p);
        }
        if (rank_mod_p(dst) != dst.size())
            throw Error(ErrorKind::DependentVectors, "collection " + std::to_string(l) + " is linearly dependent");
        any = any || !dst.empty();
    }
    if (!any) throw Error(ErrorKind::AllEmpty, "at least one collection must be nonempty");
    return d;
}

enum class Family { GGS, EGS, MultiEdge };

/// GGS and multi-edge spinal data populate only E^{(p)}; EGS data put the
/// same single vector in E^{(1)} and E^{(p)}.
inline Datum make_special_datum(Family kind, std::int64_t p, const std::vector<std::vector<std::int64_t>>& vectors) {
    check_odd_prime(p);
    RawDatum raw{p, {}};
    raw.E.resize(static_cast<std::size_t>(p));
    if ((kind == Family::GGS || kind == Family::EGS) && vectors.size() != 1)
        throw Error(ErrorKind::DimensionMismatch, "GGS and EGS data take exactly one vector");
    if (kind != Family::MultiEdge) {
        bool nonzero = false;
        for (auto e : vectors[0]) nonzero = nonzero || e % p != 0;
        if (!nonzero) throw Error(ErrorKind::DependentVectors, "defining vector must be nonzero");
    }
    raw.E.back() = vectors;
    if (kind == Family::EGS) raw.E.front() = vectors;
    return validate_datum(raw);
}

}  // namespace spinal
