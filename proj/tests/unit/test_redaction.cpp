#include <doctest.h>

#include <cmath>

#include "deid/redaction.hpp"
#include "fixtures.hpp"

using namespace deid;
using namespace deid::redaction;

namespace {

formats::AudioBuffer ramp(std::uint32_t rate, std::uint16_t channels, std::size_t frames) {
    formats::AudioBuffer a{rate, channels, {}};
    for (std::size_t i = 0; i < frames * channels; ++i) a.samples.push_back(static_cast<std::int16_t>(1 + i % 30000));
    return a;
}

} // namespace

TEST_CASE("build_plan examples") {
    auto p = build_plan(std::vector<TimeInterval>{{1.0, 1.5}, {1.4, 2.0}}, 0.0);
    CHECK(p.intervals == std::vector<TimeInterval>{{1.0, 2.0}});
    p = build_plan(std::vector<TimeInterval>{{1.0, 1.5}}, 0.25);
    CHECK(p.intervals == std::vector<TimeInterval>{{0.75, 1.75}});
    CHECK(build_plan(std::vector<TimeInterval>{}, 0.0).intervals.empty());
    p = build_plan(std::vector<TimeInterval>{{3.0, 4.0}, {0.1, 0.5}, {0.5, 0.7}}, 0.2);
    REQUIRE(p.intervals.size() == 2);
    CHECK(p.intervals[0].start == 0.0);
    CHECK(p.intervals[0].end == doctest::Approx(0.9));
    CHECK(p.intervals[1].start == doctest::Approx(2.8));
    CHECK(p.intervals[1].end == doctest::Approx(4.2));
    CHECK(p.total_seconds() == doctest::Approx(2.3));
    CHECK_THROWS(build_plan(std::vector<TimeInterval>{{1, 2}}, -0.1));
}

TEST_CASE("fill specs") {
    CHECK(std::holds_alternative<Silence>(parse_fill("silence")));
    CHECK(std::get<Tone>(parse_fill("tone")) == Tone{440.0, 0.3});
    CHECK(std::get<Tone>(parse_fill("tone:1000:0.5")) == Tone{1000.0, 0.5});
    CHECK(std::get<WhiteNoise>(parse_fill("noise:0.2:7")) == WhiteNoise{0.2, 7});
    CHECK_THROWS(parse_fill("beep"));
    CHECK_THROWS(parse_fill("tone:440:1.5"));
    CHECK_THROWS(parse_fill("noise:0"));
    CHECK(fill_name(WhiteNoise{0.25, 3}) == "noise");
    CHECK(fill_name(Tone{}) == "tone");
}

TEST_CASE("ramp example") {
    const auto a = ramp(8000, 1, 8000);
    const auto r = redact(a, build_plan(std::vector<TimeInterval>{{0.25, 0.50}}, 0.0));
    for (std::size_t i = 0; i < 8000; ++i) {
        if (i >= 2000 && i < 4000) {
            CHECK(r.samples[i] == 0);
        } else {
            CHECK(r.samples[i] == a.samples[i]);
        }
    }
}

TEST_CASE("frame rounding") {
    CHECK(frame_range({0.25, 0.5}, 8000, 8000).first == 2000);
    CHECK(frame_range({0.25, 0.5}, 8000, 8000).last == 4000);
    CHECK(frame_range({0.10001, 0.20001}, 8000, 8000).first == 800);
    CHECK(frame_range({0.10001, 0.20001}, 8000, 8000).last == 1601);
    // 0.3 * 16000 is 4799.999... in binary; it snaps to 4800 instead of leaking a frame.
    CHECK(frame_range({0.3, 0.7}, 16000, 16000).first == 4800);
    CHECK(frame_range({0.3, 0.7}, 16000, 16000).last == 11200);
    CHECK(frame_range({0.5, 3.0}, 8000, 8000).last == 8000);
}

TEST_CASE("identity, full coverage and errors") {
    const auto a = ramp(16000, 2, 4000);
    CHECK(redact(a, RedactionPlan{}) == a);
    const auto all = redact(a, build_plan(std::vector<TimeInterval>{{0.0, a.duration()}}, 0.0));
    for (auto s : all.samples) CHECK(s == 0);
    RedactionStats stats;
    const auto past = redact(a, build_plan(std::vector<TimeInterval>{{0.2, 9.0}}, 0.0), &stats);
    CHECK(stats.warnings.size() == 1);
    CHECK(stats.frames_redacted == 4000 - 3200);
    CHECK(past.samples.size() == a.samples.size());
    CHECK_THROWS_WITH(redact(a, build_plan(std::vector<TimeInterval>{{0.25, 0.3}}, 0.0)), doctest::Contains("0.25"));
}

TEST_CASE("tone and noise fills") {
    const auto a = ramp(8000, 2, 8000);
    const auto t = redact(a, build_plan(std::vector<TimeInterval>{{0.5, 0.6}}, 0.0, Tone{1000.0, 0.5}));
    // Frame 4002 at 1 kHz: 4002 / 8000 s gives phase 2*pi*500.25.
    const double expect = std::round(0.5 * 32767.0 * std::sin(2.0 * M_PI * 1000.0 * 4002.0 / 8000.0));
    CHECK(t.samples[2 * 4002] == static_cast<std::int16_t>(expect));
    CHECK(t.samples[2 * 4002 + 1] == t.samples[2 * 4002]);
    CHECK(t.samples[2 * 3999] == a.samples[2 * 3999]);

    const auto n1 = redact(a, build_plan(std::vector<TimeInterval>{{0.5, 0.6}}, 0.0, WhiteNoise{0.3, 9}));
    const auto n2 = redact(a, build_plan(std::vector<TimeInterval>{{0.5, 0.6}}, 0.0, WhiteNoise{0.3, 9}));
    const auto n3 = redact(a, build_plan(std::vector<TimeInterval>{{0.5, 0.6}}, 0.0, WhiteNoise{0.3, 10}));
    CHECK(n1 == n2);
    CHECK(n1 != n3);
    for (std::size_t f = 4000; f < 4800; ++f) CHECK(std::abs(n1.samples[2 * f]) <= 0.3 * 32767 + 1);
}

TEST_CASE("silence is idempotent and preserves shape") {
    SplitMix64 rng(12);
    for (int i = 0; i < 20; ++i) {
        const auto a = testing::random_audio(rng, 8000, 1 + i % 2, 8000 + rng.below(8000));
        const auto ents = testing::random_timed(rng, 1 + rng.below(5), a.duration() * 0.9, false);
        const auto plan = build_plan(ents, testing::uniform(rng, 0, 0.3));
        const auto once = redact(a, plan);
        CHECK(redact(once, plan) == once);
        CHECK(once.sample_rate == a.sample_rate);
        CHECK(once.channels == a.channels);
        CHECK(once.samples.size() == a.samples.size());
    }
}
