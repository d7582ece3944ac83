#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "spinal/fp.hpp"

using namespace spinal;

namespace {

FpVector vec(std::vector<std::uint32_t> e, std::uint32_t p) { return FpVector(std::move(e), p); }

}  // namespace

TEST(ModInverse, SmallExamples) {
    EXPECT_EQ(mod_inverse(FpScalar(2, 3)).value(), 2u);
    EXPECT_EQ(mod_inverse(FpScalar(2, 5)).value(), 3u);
    EXPECT_EQ(mod_inverse(FpScalar(4, 7)).value(), 2u);
}

TEST(ModInverse, ZeroThrows) {
    try {
        mod_inverse(FpScalar(0, 5));
        FAIL() << "expected ZeroInverse";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroInverse);
    }
}

TEST(ModInverse, InvolutionExhaustive) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        for (std::uint32_t x = 1; x < p; ++x) {
            const FpScalar s(x, p);
            EXPECT_EQ((s * mod_inverse(s)).value(), 1u);
            EXPECT_EQ(mod_inverse(mod_inverse(s)), s);
        }
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank_mod_p({vec({1, 0}, 3), vec({0, 1}, 3)}), 2u);
    EXPECT_EQ(rank_mod_p({vec({1, 2}, 5), vec({2, 4}, 5)}), 1u);
    EXPECT_EQ(rank_mod_p(std::vector<FpVector>{}), 0u);
}

TEST(Rank, DimensionMismatch) {
    try {
        rank_mod_p({vec({1, 0}, 3), vec({1, 0, 0}, 3)});
        FAIL() << "expected DimensionMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(Rank, InvariantUnderPermutationAndScaling) {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t rows = 1 + rng() % (p + 1);
            std::vector<FpVector> vs;
            for (std::size_t r = 0; r < rows; ++r) {
                std::vector<std::uint32_t> e(p - 1);
                for (auto& x : e) x = static_cast<std::uint32_t>(rng() % p);
                vs.push_back(vec(e, p));
            }
            const auto rank = rank_mod_p(vs);
            EXPECT_LE(rank, std::min<std::size_t>(rows, p - 1));

            auto shuffled = vs;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            EXPECT_EQ(rank_mod_p(shuffled), rank);

            std::vector<FpVector> scaled;
            for (const auto& v : vs) {
                const std::uint32_t c = 1 + static_cast<std::uint32_t>(rng() % (p - 1));
                std::vector<std::uint32_t> e;
                for (auto x : v.entries()) e.push_back(x * c % p);
                scaled.push_back(vec(e, p));
            }
            EXPECT_EQ(rank_mod_p(scaled), rank);
        }
    }
}

TEST(Primes, Validation) {
    EXPECT_NO_THROW(check_odd_prime(3));
    EXPECT_NO_THROW(check_odd_prime(97));
    auto kind_of = [](std::int64_t p, std::uint32_t limit) {
        try {
            check_odd_prime(p, limit);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ZeroInverse;
    };
    EXPECT_EQ(kind_of(2, 97), ErrorKind::NotOdd);
    EXPECT_EQ(kind_of(9, 97), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of(1, 97), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of(101, 97), ErrorKind::PrimeTooLarge);
    EXPECT_NO_THROW(check_odd_prime(101, 200));
}
