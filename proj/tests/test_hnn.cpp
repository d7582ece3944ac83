#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace spinal;
using testing_support::d3;
using testing_support::error_kind;
using testing_support::w;

namespace {

HnnAction d3_action(std::uint32_t bound = kDefaultSigmaBound) {
    const Datum d = d3();
    const WreathTable t = build_recursion(d);
    return HnnAction(t, build_sigma(d, t, *find_lifting_witness(d, t)), bound);
}

HnnVertex hv(std::uint32_t k, const std::string& s) { return {k, parse_vertex(s, 3)}; }

}  // namespace

TEST(Canonicalize, Examples) {
    EXPECT_EQ(canonicalize(2, {0, 0, 1}), hv(0, "1"));
    EXPECT_EQ(canonicalize(1, {0, 0, 1}), hv(0, "01"));
    EXPECT_EQ(canonicalize(0, {0, 1}), hv(0, "01"));
    EXPECT_EQ(canonicalize(3, {1, 0}), hv(3, "10"));
    EXPECT_EQ(canonicalize(2, {}), hv(2, "-"));
    EXPECT_EQ(format_hnn_vertex(hv(2, "-")), "2:-");
    EXPECT_EQ(format_hnn_vertex(hv(0, "012")), "0:012");
}

TEST(CanonicalBall, SizeMatchesCount) {
    // k = 0: all words; k >= 1: empty or not starting with 0.
    EXPECT_EQ(canonical_ball(3, 2, 3).size(), 40u + 2u * 27u);
    EXPECT_EQ(canonical_ball(5, 1, 2).size(), 31u + 1u + 4u + 20u);
}

TEST(SigmaPower, Examples) {
    const Datum d = d3();
    const auto act = d3_action();
    EXPECT_EQ(act.sigma_power(Base::a(), 0), w("a", d));
    EXPECT_EQ(act.sigma_power(Base::a(), 1), w("b", d));
    EXPECT_EQ(act.sigma_power(Base::a(), 2), w("a^-1 b a", d));
    EXPECT_EQ(act.sigma_power(Base::b(1, 1), 5), w("c", d));
}

TEST(SigmaPower, BoundError) {
    const auto act = d3_action(2);
    EXPECT_NO_THROW(act.sigma_power(Base::a(), 2));
    EXPECT_EQ(error_kind([&] { act.sigma_power(Base::a(), 3); }), ErrorKind::IterationBoundExceeded);
}

TEST(Act, Examples) {
    const auto act = d3_action();
    EXPECT_EQ(act.act(HnnLetter::t(1), hv(0, "12")), hv(1, "12"));
    EXPECT_EQ(act.act(HnnLetter::t(-1), hv(0, "12")), hv(0, "012"));
    EXPECT_EQ(act.act(HnnLetter::t(-1), hv(2, "1")), hv(1, "1"));
    EXPECT_EQ(act.act(HnnLetter::gen({Base::a(), 1}), hv(0, "12")), hv(0, "22"));
    EXPECT_EQ(act.act(HnnLetter::gen({Base::a(), 1}), hv(1, "0")), hv(0, "-"));
    // at level 1, a acts as sigma(a) = b = (a, 1, b)
    EXPECT_EQ(act.act(HnnLetter::gen({Base::a(), 1}), hv(1, "12")), hv(1, "12"));
    EXPECT_EQ(act.act(HnnLetter::gen({Base::a(), 1}), hv(1, "20")), hv(1, "20"));
    EXPECT_EQ(act.act(HnnLetter::gen({Base::b(3, 1), 1}), hv(0, "01")), hv(0, "02"));
}

TEST(Act, InversePairsAndOrders) {
    const auto act = d3_action();
    const auto ball = canonical_ball(3, 2, 3);
    for (const auto& v : ball) {
        EXPECT_EQ(act.act_word({HnnLetter::t(1), HnnLetter::t(-1)}, v), v);
        EXPECT_EQ(act.act_word({HnnLetter::t(-1), HnnLetter::t(1)}, v), v);
        for (const auto& g : act.table().generators()) {
            EXPECT_EQ(act.act_word({HnnLetter::gen({g.base, 1}), HnnLetter::gen({g.base, 2})}, v), v);
            EXPECT_EQ(act.act_word(HnnWord(3, HnnLetter::gen({g.base, 1})), v), v);
        }
    }
}

TEST(Act, WellDefinedOnRepresentatives) {
    // (k+1, 0w) and (k, w) name the same vertex.
    const auto act = d3_action();
    for (const auto& v : canonical_ball(3, 2, 3)) {
        Vertex zw{0};
        zw.insert(zw.end(), v.w.begin(), v.w.end());
        const HnnVertex alias{v.k + 1, zw};
        for (const auto& x : act.alphabet()) EXPECT_EQ(act.act(x, alias), act.act(x, v));
    }
}

TEST(Act, GroupLettersPreserveLevelAndLength) {
    const auto act = d3_action();
    for (const auto& v : canonical_ball(3, 2, 4))
        for (const auto& x : act.alphabet(true, false)) {
            const auto u = act.act(x, v);
            EXPECT_EQ(u.k, v.k);
            EXPECT_EQ(u.w.size(), v.w.size());
        }
}

TEST(Act, GroupLettersPreserveAdjacency) {
    // A child (k, wx) maps to a child of the image of (k, w).
    const auto act = d3_action();
    for (const auto& v : canonical_ball(3, 2, 3)) {
        if (v.w.empty()) continue;
        const HnnVertex parent{v.k, Vertex(v.w.begin(), v.w.end() - 1)};
        for (const auto& x : act.alphabet(true, false)) {
            const auto u = act.act(x, v);
            const auto pu = act.act(x, parent);
            EXPECT_EQ(Vertex(u.w.begin(), u.w.end() - 1), pu.w);
        }
    }
}

TEST(HnnRelation, HoldsForGenerators) {
    const auto act = d3_action();
    const auto sample = canonical_ball(3, 2, 3);
    for (const auto& g : act.table().generators()) EXPECT_TRUE(verify_hnn_relation(act, g.base, sample));
}

TEST(HnnRelation, HoldsOnRandomData) {
    Rng rng(5);
    int found = 0;
    for (int n = 0; n < 40 && found < 5; ++n) {
        const Datum d = random_datum(3, 2, rng);
        const WreathTable t = build_recursion(d);
        const auto wit = find_lifting_witness(d, t);
        if (!wit) continue;
        ++found;
        const HnnAction act(t, build_sigma(d, t, *wit));
        const auto sample = canonical_ball(3, 2, 3);
        for (const auto& g : d.generators()) EXPECT_TRUE(verify_hnn_relation(act, g, sample));
    }
    EXPECT_GT(found, 0);
}

TEST(HnnRelation, FailsForSabotagedSigma) {
    const Datum d = d3();
    const WreathTable t = build_recursion(d);
    auto sigma = build_sigma(d, t, *find_lifting_witness(d, t));
    sigma.set_image(Base::a(), w("c", d));
    const HnnAction act(t, sigma);
    EXPECT_FALSE(verify_hnn_relation(act, Base::a(), canonical_ball(3, 2, 3)));
}

TEST(Orbit, FullBallIsReached) {
    const auto act = d3_action();
    const auto r = orbit_ball(act, act.alphabet(), {0, {}}, 2, 3);
    EXPECT_EQ(r.total, 94u);
    EXPECT_EQ(r.reached, 94u);
    EXPECT_TRUE(r.transitive_on_ball());
    EXPECT_TRUE(r.missed.empty());
}

TEST(Orbit, GroupAloneFixesRoot) {
    const auto act = d3_action();
    const auto r = orbit_ball(act, act.alphabet(true, false), {0, {}}, 2, 3);
    EXPECT_EQ(r.reached, 1u);
    EXPECT_FALSE(r.transitive_on_ball());
}

TEST(Orbit, StableLetterAloneWalksTheSpine) {
    const auto act = d3_action();
    const auto r = orbit_ball(act, act.alphabet(false, true), {0, {}}, 2, 3);
    EXPECT_EQ(r.reached, 6u);
    const std::set<HnnVertex> missed(r.missed.begin(), r.missed.end());
    for (const auto& v : {hv(0, "-"), hv(1, "-"), hv(2, "-"), hv(0, "0"), hv(0, "00"), hv(0, "000")})
        EXPECT_EQ(missed.count(v), 0u) << format_hnn_vertex(v);
}
