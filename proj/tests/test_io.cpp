#include <gtest/gtest.h>

#include <json.hpp>

#include "test_support.hpp"

using namespace spinal;
using testing_support::d3;
using testing_support::error_kind;
using testing_support::w;

namespace {

std::string error_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(ParseWord, Examples) {
    const Datum d = d3();
    EXPECT_EQ(parse_word("a b^2 c", d), (GroupWord{{Base::a(), 1}, {Base::b(3, 1), 2}, {Base::b(1, 1), 1}}));
    EXPECT_EQ(parse_word("a^-1", d), (GroupWord{{Base::a(), 2}}));
    EXPECT_EQ(parse_word("b[3,1]^4", d), (GroupWord{{Base::b(3, 1), 1}}));
    EXPECT_TRUE(parse_word("1", d).empty());
    EXPECT_TRUE(parse_word("a a^2", d).empty());
    EXPECT_EQ(parse_word("  a   b  ", d), w("a b", d));
}

TEST(ParseWord, ZeroExponentWarns) {
    const Datum d = d3();
    std::vector<std::string> warnings;
    EXPECT_EQ(parse_word("a b^3 c", d, &warnings), w("a c", d));
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("ExponentZeroElided"), std::string::npos);
}

TEST(ParseWord, Errors) {
    const Datum d = d3();
    const Datum ggs = make_special_datum(Family::GGS, 3, {{1, 2}});
    EXPECT_EQ(error_kind([&] { parse_word("", d); }), ErrorKind::SyntaxError);
    EXPECT_EQ(error_kind([&] { parse_word("x", d); }), ErrorKind::SyntaxError);
    EXPECT_EQ(error_kind([&] { parse_word("a^", d); }), ErrorKind::SyntaxError);
    EXPECT_EQ(error_kind([&] { parse_word("b[3,1", d); }), ErrorKind::SyntaxError);
    EXPECT_EQ(error_kind([&] { parse_word("b[0,1]", d); }), ErrorKind::SyntaxError);
    EXPECT_EQ(error_kind([&] { parse_word("a 1", d); }), ErrorKind::SyntaxError);
    EXPECT_EQ(error_kind([&] { parse_word("b[2,1]", d); }), ErrorKind::UnknownGenerator);
    EXPECT_EQ(error_kind([&] { parse_word("b", ggs); }), ErrorKind::UnknownGenerator);
    EXPECT_EQ(error_kind([&] { parse_word("c", ggs); }), ErrorKind::UnknownGenerator);
    EXPECT_NO_THROW(parse_word("b[3,1]", ggs));
}

TEST(ParseWord, ErrorsCarryColumn) {
    const Datum d = d3();
    EXPECT_NE(error_message([&] { parse_word("a b^x", d); }).find("column 5"), std::string::npos);
    EXPECT_NE(error_message([&] { parse_word("a q", d); }).find("column 3"), std::string::npos);
}

TEST(ParseWord, FormatRoundTrip) {
    Rng rng(3);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (int n = 0; n < 10; ++n) {
            const Datum d = random_datum(p, 2, rng);
            for (int k = 0; k < 20; ++k) {
                const GroupWord u = random_word_upto(d.generators(), p, 10, rng);
                EXPECT_EQ(parse_word(format_word(u, d), d), u);
            }
        }
    }
    const Datum e = d3();
    EXPECT_EQ(format_word(w("a b^2 c", e), e), "a b^2 c");
    EXPECT_EQ(format_word({}, e), "1");
    EXPECT_EQ(format_word(w("a b^2 c", e)), "a b[3,1]^2 b[1,1]");
}

TEST(ParseVertex, Examples) {
    EXPECT_EQ(parse_vertex("012", 3), (Vertex{0, 1, 2}));
    EXPECT_TRUE(parse_vertex("-", 3).empty());
    EXPECT_TRUE(parse_vertex("", 3).empty());
    EXPECT_EQ(error_kind([] { parse_vertex("3", 3); }), ErrorKind::SyntaxError);
    EXPECT_EQ(error_kind([] { parse_vertex("1a", 5); }), ErrorKind::SyntaxError);
}

TEST(DatumJson, Examples) {
    const Datum d = parse_datum(R"({"p":3,"E":[[[1,0]],[],[[1,0]]]})");
    EXPECT_EQ(d, d3());
    EXPECT_EQ(format_datum(d), R"({"p":3,"E":[[[1,0]],[],[[1,0]]]})");
    EXPECT_EQ(error_kind([] { parse_datum(R"({"p":4,"E":[[],[],[],[[1,0,0]]]})"); }), ErrorKind::NotPrime);
    EXPECT_EQ(error_kind([] { parse_datum(R"({"p":3,"E":[[[1,0,0]],[],[]]})"); }), ErrorKind::BadVectorLength);
    EXPECT_EQ(error_kind([] { parse_datum(R"({"p":3,"E":[[[1,0]],[]]})"); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(error_kind([] { parse_datum(R"({"p":3,"E":[[[1,0]],[],[]])"); }), ErrorKind::MalformedDocument);
    EXPECT_EQ(error_kind([] { parse_datum(R"({"E":[]})"); }), ErrorKind::MalformedDocument);
    EXPECT_EQ(error_kind([] { parse_datum(R"({"p":3,"E":[[["1",0]],[],[]]})"); }), ErrorKind::MalformedDocument);
    EXPECT_EQ(error_kind([] { parse_datum(R"({"p":101,"E":[]})"); }), ErrorKind::PrimeTooLarge);
}

TEST(DatumJson, RoundTrip) {
    Rng rng(8);
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (int n = 0; n < 10; ++n) {
            const Datum d = random_datum(p, 3, rng);
            EXPECT_EQ(parse_datum(format_datum(d)), d);
        }
}

TEST(GapExport, Egs) {
    const std::string gap = export_gap(d3());
    EXPECT_NE(gap.find("AutomatonGroup(\""), std::string::npos);
    EXPECT_NE(gap.find("a = (1, 1, 1)(1,2,3)"), std::string::npos);
    EXPECT_NE(gap.find("c = (c, a, 1)"), std::string::npos);
    EXPECT_NE(gap.find("b = (a, 1, b)"), std::string::npos);
}

TEST(GapExport, Ggs) {
    const std::string gap = export_gap(make_special_datum(Family::GGS, 3, {{1, 2}}));
    EXPECT_NE(gap.find("b3_1 = (a, a^2, b3_1)"), std::string::npos) << gap;
}

TEST(GapExport, RoundTrip) {
    Rng rng(12);
    std::vector<Datum> data{d3(), make_special_datum(Family::GGS, 3, {{1, 2}})};
    for (std::uint32_t p : {3u, 5u, 7u}) data.push_back(random_datum(p, 2, rng));
    for (const auto& d : data) EXPECT_EQ(parse_gap(export_gap(d)), build_recursion(d)) << export_gap(d);
    EXPECT_EQ(error_kind([] { parse_gap("nothing here"); }), ErrorKind::MalformedDocument);
}

TEST(Reports, WitnessJson) {
    const Datum d = d3();
    const auto wit = find_lifting_witness(d);
    const auto sigma = build_sigma(d, *wit);
    const auto doc = nlohmann::ordered_json::parse(witness_report_json(d, wit, &sigma));
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"liftable_certified", "witness", "sigma"}));
    EXPECT_TRUE(doc["liftable_certified"].get<bool>());
    EXPECT_EQ(doc["witness"]["m"], 3);
    EXPECT_EQ(doc["witness"]["s"], 0);
    EXPECT_EQ(doc["sigma"]["a"], "b");
    EXPECT_EQ(doc["sigma"]["b"], "a^2 b a");
    EXPECT_EQ(doc["sigma"]["c"], "c");

    const Datum g = make_special_datum(Family::GGS, 3, {{1, 2}});
    const auto none = nlohmann::json::parse(witness_report_json(g, std::nullopt, nullptr));
    EXPECT_FALSE(none["liftable_certified"].get<bool>());
    EXPECT_TRUE(none["witness"].is_null());
    EXPECT_TRUE(none["sigma"].empty());
}

TEST(Reports, OrbitJson) {
    const Datum d = d3();
    const WreathTable t = build_recursion(d);
    const HnnAction act(t, build_sigma(d, t, *find_lifting_witness(d, t)));
    const auto r = orbit_ball(act, act.alphabet(false, true), {0, {}}, 1, 1);
    const auto doc = nlohmann::ordered_json::parse(orbit_report_json(r));
    EXPECT_EQ(doc["ball"]["K"], 1);
    EXPECT_EQ(doc["ball"]["L"], 1);
    EXPECT_EQ(doc["total"], 4 + 3);
    EXPECT_EQ(doc["reached"], 3);
    EXPECT_FALSE(doc["transitive_on_ball"].get<bool>());
    EXPECT_EQ(doc["missed"].size(), 4u);
}
