#pragma once

/**
 * @file fp.hpp
 * @brief Arithmetic and elimination over the prime field Z/pZ.
 *
 * Values are small (p <= 97 by default), so everything is done in plain
 * 64-bit integers with the modulus carried at runtime.
 */

#include <cstdint>
#include <span>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "spinal/errors.hpp"

namespace spinal {

inline constexpr std::uint32_t kDefaultPrimeLimit = 97;

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Throws unless p is an odd prime no larger than `limit`.
inline void check_odd_prime(std::int64_t p, std::uint32_t limit = kDefaultPrimeLimit) {
    if (p == 2) throw Error(ErrorKind::NotOdd, "p = 2 is not an odd prime");
    if (p < 2 || !is_prime(static_cast<std::uint32_t>(p)))
        throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (static_cast<std::uint64_t>(p) > limit)
        throw Error(ErrorKind::PrimeTooLarge,
                    "p = " + std::to_string(p) + " exceeds the limit " + std::to_string(limit));
}

/// Element of Z/pZ; always stored normalized to [0, p).
class FpScalar {
public:
    FpScalar(std::int64_t value, std::uint32_t modulus)
        : value_(normalize(value, modulus)), modulus_(modulus) {}

    static std::uint32_t normalize(std::int64_t x, std::uint32_t p) {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FpScalar operator+(FpScalar rhs) const { return {std::int64_t{value_} + rhs.value_, modulus_}; }
    FpScalar operator-(FpScalar rhs) const { return {std::int64_t{value_} - rhs.value_, modulus_}; }
    FpScalar operator*(FpScalar rhs) const {
        return {static_cast<std::int64_t>(std::uint64_t{value_} * rhs.value_ % modulus_), modulus_};
    }
    FpScalar operator-() const { return {-std::int64_t{value_}, modulus_}; }

    bool operator==(const FpScalar&) const = default;

private:
    std::uint32_t value_;
    std::uint32_t modulus_;
};

/// Vector over Z/pZ. Length p - 1 when used as a datum row, but the type
/// itself only requires a shared modulus.
class FpVector {
public:
    FpVector() = default;
    FpVector(std::vector<std::uint32_t> entries, std::uint32_t modulus)
        : entries_(std::move(entries)), modulus_(modulus) {
        for (auto& e : entries_) e %= modulus_;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
    FpScalar at(std::size_t i) const { return {entries_.at(i), modulus_}; }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    bool is_zero() const {
        for (auto e : entries_)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const FpVector&) const = default;

private:
    std::vector<std::uint32_t> entries_;
    std::uint32_t modulus_ = 0;
};

/// Multiplicative inverse by the extended Euclidean algorithm.
inline FpScalar mod_inverse(FpScalar x) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroInverse, "0 has no inverse mod " + std::to_string(x.modulus()));
    std::int64_t r0 = x.modulus(), r1 = x.value();
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    return {t0, x.modulus()};
}

/// Rank of the span of `vs` over Z/pZ. Gaussian elimination, first nonzero
/// entry in each column is the pivot.
inline std::size_t rank_mod_p(std::span<const FpVector> vs) {
    if (vs.empty()) return 0;
    const std::size_t cols = vs.front().size();
    const std::uint32_t p = vs.front().modulus();
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(vs.size());
    for (const auto& v : vs) {
        if (v.size() != cols || v.modulus() != p)
            throw Error(ErrorKind::DimensionMismatch, "vectors differ in length or modulus");
        rows.emplace_back(v.entries().begin(), v.entries().end());
    }

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const std::int64_t inv = mod_inverse(FpScalar(rows[rank][c], p)).value();
        for (auto& e : rows[rank]) e = e * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::int64_t factor = rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] = FpScalar::normalize(rows[r][k] - factor * rows[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_mod_p(const std::vector<FpVector>& vs) {
    return rank_mod_p(std::span<const FpVector>(vs));
}

}  // namespace spinal
