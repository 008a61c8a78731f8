#include <doctest.h>

#include <limits>

#include "deid/core.hpp"
#include "deid/labels.hpp"
#include "deid/rng.hpp"
#include "fixtures.hpp"

using namespace deid;

TEST_CASE("interval_overlap examples") {
    CHECK(interval_overlap({1.0, 2.0}, {1.5, 3.0}) == doctest::Approx(0.5));
    CHECK(interval_overlap({1.0, 2.0}, {1.0, 2.0}) == 1.0);
    CHECK(interval_overlap({1.0, 2.0}, {3.0, 4.0}) == 0.0);
    CHECK(interval_overlap({1.0, 2.0}, {2.0, 3.0}) == 0.0);
}

TEST_CASE("interval_overlap properties") {
    SplitMix64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const double a0 = testing::uniform(rng, 0, 10), a1 = a0 + testing::uniform(rng, 0, 3);
        const double b0 = testing::uniform(rng, 0, 10), b1 = b0 + testing::uniform(rng, 0, 3);
        const TimeInterval a{a0, a1}, b{b0, b1};
        CHECK(interval_overlap(a, b) == interval_overlap(b, a));
        CHECK(interval_overlap(a, a) == a.length());
        CHECK(interval_overlap(a, b) <= std::min(a.length(), b.length()));
        CHECK(interval_overlap(a, b) >= 0.0);
    }
}

TEST_CASE("TimeInterval validation") {
    CHECK(TimeInterval::make(0, 0).is_absent());
    CHECK_THROWS_AS(TimeInterval::make(2, 1), ValidationError);
    CHECK_THROWS_AS(TimeInterval::make(-0.1, 1), ValidationError);
    CHECK_THROWS_AS(TimeInterval::make(0, std::numeric_limits<double>::infinity()), ValidationError);
}

TEST_CASE("alignments must be sorted and non-blank") {
    CHECK_NOTHROW(validate_alignments({{"a", {0, 1}}, {"b", {1, 2}}}));
    CHECK_THROWS_AS(validate_alignments({{"a", {0, 1}}, {"b", {0.5, 2}}}), ValidationError);
    CHECK_THROWS_AS(validate_alignments({{"  ", {0, 1}}}), ValidationError);
}

TEST_CASE("entity codes") {
    for (EntityType t : kEntityTypes) CHECK(entity_type_from_code(entity_code(t)) == t);
    CHECK(entity_code(EntityType::MoneyAmount) == "MONEY");
    CHECK_FALSE(parse_entity_code("XYZ"));
    CHECK_THROWS_AS(entity_type_from_code("GPE"), ValidationError);
}

TEST_CASE("span validation") {
    CHECK_NOTHROW(validate_spans({{EntityType::Person, 0, 2}, {EntityType::Location, 2, 3}}, 3));
    CHECK_THROWS_AS(validate_spans({{EntityType::Person, 0, 2}, {EntityType::Location, 1, 3}}, 3), ValidationError);
    CHECK_THROWS_AS(validate_spans({{EntityType::Person, 1, 1}}, 3), ValidationError);
    CHECK_THROWS_AS(validate_spans({{EntityType::Person, 2, 4}}, 3), ValidationError);
}

TEST_CASE("label vocabulary and order") {
    CHECK(kLabelCount == 11);
    CHECK(Label::from_index(0).str() == "O");
    CHECK(Label::from_index(1).str() == "B-PER");
    CHECK(Label::from_index(10).str() == "I-MONEY");
    for (std::size_t i = 0; i < kLabelCount; ++i) CHECK(label_from_string(Label::from_index(i).str()).index() == i);
    CHECK_FALSE(parse_label("B-GPE"));
    CHECK_FALSE(parse_label("X-PER"));
}

TEST_CASE("LabelDistribution validation") {
    CHECK_NOTHROW(LabelDistribution::from_map({{"O", 0.5}, {"B-PER", 0.5}}));
    CHECK_NOTHROW(LabelDistribution::from_map({{"O", 0.5}, {"B-PER", 0.5000005}}));
    CHECK_THROWS_AS(LabelDistribution::from_map({{"O", 0.5}, {"B-PER", 0.51}}), ValidationError);
    CHECK_THROWS_AS(LabelDistribution::from_map({{"O", 1.2}, {"B-PER", -0.2}}), ValidationError);
    CHECK_THROWS_AS(LabelDistribution::from_map({{"B-XYZ", 1.0}}), ValidationError);
    const auto d = LabelDistribution::from_map({{"O", 0.2}, {"B-LOC", 0.4}, {"I-ORG", 0.4}});
    CHECK(d.argmax().str() == "B-LOC"); // tie goes to the earlier label
    CHECK(LabelDistribution{}.outside() == 1.0);
}

TEST_CASE("SplitMix64 reference sequence") {
    // First outputs for seed 0, from the published reference implementation.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}
