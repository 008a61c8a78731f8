#include <doctest.h>

#include <json.hpp>

#include "deid/metrics/delta.hpp"
#include "deid/metrics/fa.hpp"
#include "deid/metrics/ner.hpp"
#include "deid/metrics/nte.hpp"
#include "deid/metrics/report.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace deid;
using namespace deid::metrics;

TEST_CASE("delta_std examples") {
    CHECK(delta_std({1, 2}, {1, 2}, 0) == 1);
    CHECK(delta_std({1.0, 2.0}, {1.2, 2.1}, 0.25) == 1);
    CHECK(delta_std({1.0, 2.0}, {1.3, 2.0}, 0.25) == 0);
}

TEST_CASE("delta_outer examples") {
    for (double t : {0.0, 0.1, 1.0}) CHECK(delta_outer({0.9, 2.2}, {1.0, 2.0}, t) == 1);
    CHECK(delta_outer({1.2, 1.8}, {1.0, 2.0}, 0.25) == 1);
    CHECK(delta_outer({0, 0}, {1.0, 2.0}, 0.25) == 0);
    CHECK(delta_outer({0, 0}, {0.1, 0.2}, 0.25) == 1); // gold ends within t
}

TEST_CASE("delta dominance and monotonicity") {
    SplitMix64 rng(77);
    for (int i = 0; i < 5000; ++i) {
        const double g0 = testing::uniform(rng, 0, 5), g1 = g0 + testing::uniform(rng, 0, 2);
        const double p0 = testing::uniform(rng, 0, 5), p1 = p0 + testing::uniform(rng, 0, 2);
        const double t1 = testing::uniform(rng, 0, 1), t2 = t1 + testing::uniform(rng, 0, 1);
        const TimeInterval p{p0, p1}, g{g0, g1};
        CHECK(delta_std(p, g, t1) <= delta_outer(p, g, t1));
        CHECK(delta_std(p, g, t1) <= delta_std(p, g, t2));
        CHECK(delta_outer(p, g, t1) <= delta_outer(p, g, t2));
    }
}

TEST_CASE("fa_accuracy examples") {
    const AlignedUtterance gold{"u", {{"a", {0.0, 0.5}}, {"b", {0.5, 1.0}}}};
    for (auto mode : {DeltaMode::Std, DeltaMode::Outer}) CHECK(fa_accuracy({gold}, {gold}, 0.0, mode).accuracy == 1.0);
    const AlignedUtterance pred{"u", {{"a", {0.0, 0.5}}, {"b", {0.8, 1.3}}}};
    CHECK(fa_accuracy({pred}, {gold}, 0.25, DeltaMode::Std).accuracy == 0.5);
    CHECK(fa_accuracy({}, {}, 0.25, DeltaMode::Std).accuracy == 0.0);
    CHECK_THROWS(fa_accuracy({{"u", {{"a", {0, 1}}}}}, {gold}, 0.25, DeltaMode::Std));
    CHECK_THROWS(fa_accuracy({{"v", gold.words}}, {gold}, 0.25, DeltaMode::Std));
}

TEST_CASE("fa_accuracy on the hand-built fixture") {
    const auto f = testing::fa_fixture();
    const double t[] = {0.01, 0.10, 0.25};
    const double std_expected[] = {0.2, 0.5, 0.7};
    const double outer_expected[] = {0.5, 0.6, 0.8};
    for (int i = 0; i < 3; ++i) {
        CHECK(fa_accuracy({f.pred}, {f.gold}, t[i], DeltaMode::Std).accuracy == doctest::Approx(std_expected[i]));
        CHECK(fa_accuracy({f.pred}, {f.gold}, t[i], DeltaMode::Outer).accuracy == doctest::Approx(outer_expected[i]));
    }
}

TEST_CASE("text span matching") {
    const std::vector<EntitySpan> gold{{EntityType::Person, 0, 2}};
    CHECK(match_text_spans(gold, gold, TypeMatching::Typed) == ConfusionCounts{1, 0, 0});
    const std::vector<EntitySpan> wrong{{EntityType::Location, 0, 2}};
    CHECK(match_text_spans(wrong, gold, TypeMatching::Typed) == ConfusionCounts{0, 1, 1});
    CHECK(match_text_spans(wrong, gold, TypeMatching::Untyped) == ConfusionCounts{1, 0, 0});
    CHECK(match_text_spans({}, gold, TypeMatching::Typed) == ConfusionCounts{0, 0, 1});
    CHECK_THROWS(match_text_spans({{EntityType::Person, 0, 2}, {EntityType::Person, 1, 3}}, gold, TypeMatching::Typed));
}

TEST_CASE("text span matching agrees with the reference matcher") {
    SplitMix64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + rng.below(25);
        const auto gold = testing::random_spans(rng, n);
        const auto pred = testing::perturb_spans(rng, gold, n);
        CHECK(match_text_spans(pred, gold, TypeMatching::Typed) == testing::span_oracle(pred, gold, true));
        CHECK(match_text_spans(pred, gold, TypeMatching::Untyped) == testing::span_oracle(pred, gold, false));
        ConfusionCounts sum;
        for (const auto& [type, c] : typed_counts_by_type(pred, gold)) sum += c;
        CHECK(sum == match_text_spans(pred, gold, TypeMatching::Typed));
    }
}

TEST_CASE("nte examples") {
    const std::vector<TimedEntity> gold{{EntityType::Person, {1.0, 2.0}}};
    CHECK(nte_time_counts(gold, gold, 0.25) == ConfusionCounts{1, 0, 0});
    CHECK(nte_time_counts({{EntityType::Location, {1.1, 1.9}}}, gold, 0.25) == ConfusionCounts{1, 0, 0});
    CHECK(nte_time_counts({{EntityType::Person, {1.0, 2.0}}, {EntityType::Person, {5.0, 6.0}}}, gold, 0.25) ==
          ConfusionCounts{1, 1, 0});
    // Shifted 0.3 s: still paired, fails delta_outer, counts as FN only.
    CHECK(nte_time_counts({{EntityType::Person, {1.3, 2.3}}}, gold, 0.25) == ConfusionCounts{0, 0, 1});
    CHECK(nte_time_counts({}, gold, 0.25) == ConfusionCounts{0, 0, 1});
    CHECK(nte_time_counts(gold, {}, 0.25) == ConfusionCounts{0, 1, 0});
}

TEST_CASE("nte pairing is greedy by overlap with deterministic ties") {
    // Pred 0 overlaps both gold; gold 1 has the larger overlap.
    const std::vector<TimedEntity> pred{{EntityType::Person, {1.0, 3.0}}};
    const std::vector<TimedEntity> gold{{EntityType::Person, {0.5, 1.5}}, {EntityType::Person, {1.5, 3.5}}};
    CHECK(pair_entities(pred, gold) == Pairing{{0, 1}});
    // Equal overlaps: the earlier gold wins.
    const std::vector<TimedEntity> tie_gold{{EntityType::Person, {0.0, 2.0}}, {EntityType::Person, {2.0, 4.0}}};
    CHECK(pair_entities({{EntityType::Person, {1.0, 3.0}}}, tie_gold) == Pairing{{0, 0}});
}

TEST_CASE("nte counts agree with the exhaustive oracle on small instances") {
    SplitMix64 rng(31337);
    int agree = 0;
    const int n = 300;
    for (int i = 0; i < n; ++i) {
        const auto gold = testing::random_timed(rng, rng.below(7), 10.0, true);
        const auto pred = testing::jitter_predictions(rng, gold, 6, 10.0);
        const double t = testing::uniform(rng, 0.0, 0.5);
        const auto c = nte_time_counts(pred, gold, t);
        const auto o = testing::nte_oracle(pred, gold, t);
        agree += c.tp == o.counts.tp;
        CHECK(c.tp + c.fn == gold.size());
        CHECK(c.tp <= o.counts.tp);
    }
    CHECK(agree >= n * 99 / 100);
}

TEST_CASE("f1") {
    CHECK(f1(0.985, 0.631) == doctest::Approx(0.7692264851485148).epsilon(1e-12));
    CHECK(f1(0.842, 0.960) == doctest::Approx(0.8971365149833517).epsilon(1e-12));
    CHECK(f1(0.835, 0.959) == doctest::Approx(0.8927146042363433).epsilon(1e-12));
    CHECK(f1(0.0, 0.0) == 0.0);
    CHECK(f1(0.4, 0.4) == doctest::Approx(0.4));
    CHECK(f1(0.3, 0.9) == f1(0.9, 0.3));
    CHECK(precision({0, 0, 3}) == 0.0);
    CHECK(recall({0, 3, 0}) == 0.0);
    CHECK(precision({3, 1, 0}) == 0.75);
    CHECK(recall({3, 0, 1}) == 0.75);
}

TEST_CASE("reports") {
    std::map<EntityType, ConfusionCounts> per_type;
    per_type[EntityType::Person] = {3, 1, 2};
    auto r = build_report(per_type, {4, 0, 1});
    CHECK(r.total.counts == per_type[EntityType::Person]);
    CHECK(r.total.scores.f1 == r.per_type.at(EntityType::Person).scores.f1);

    // Counts of the wrong-type example: typed total F1 0, NTE F1 1.
    per_type.clear();
    per_type[EntityType::Person] = {0, 0, 1};
    per_type[EntityType::Location] = {0, 1, 0};
    r = build_report(per_type, {1, 0, 0});
    CHECK(r.total.scores.f1 == 0.0);
    CHECK(r.nte.scores.f1 == 1.0);

    r = build_report({}, {});
    CHECK(r.total.scores.f1 == 0.0);
    CHECK(r.nte.scores.precision == 0.0);

    per_type[EntityType::Person] = {5, 2, 1};
    per_type[EntityType::Location] = {2, 0, 3};
    r = build_report(per_type, {8, 1, 3});
    CHECK(r.total.counts == ConfusionCounts{7, 2, 4});
    for (const auto& row : {r.total, r.nte, r.per_type.at(EntityType::Location)}) {
        const double p = row.scores.precision, rc = row.scores.recall;
        CHECK(row.scores.f1 == doctest::Approx(p + rc == 0 ? 0.0 : 2 * p * rc / (p + rc)).epsilon(1e-9));
    }
    const auto table = render_table(r);
    CHECK(table.find("Entity Type") != std::string::npos);
    CHECK(table.find("Total") != std::string::npos);
    CHECK(table.find("NTE") != std::string::npos);
    const auto j = nlohmann::json::parse(render_json(r));
    CHECK(j["total"]["tp"] == 7);
    CHECK(j["per_type"]["PER"]["fp"] == 2);
    CHECK(j["nte"]["f1"].get<double>() == doctest::Approx(r.nte.scores.f1));
}
