#include "deid/redaction.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "deid/rng.hpp"

namespace deid::redaction {

namespace {

constexpr double kSnap = 1e-6;

std::int16_t to_sample(double v) {
    return static_cast<std::int16_t>(std::lround(std::clamp(v, -1.0, 1.0) * 32767.0));
}

double parse_double(const std::string& s, const std::string& spec) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ValidationError("malformed fill \"" + spec + "\"");
    return v;
}

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t b = 0;
    while (true) {
        const std::size_t c = s.find(':', b);
        parts.push_back(s.substr(b, c - b));
        if (c == std::string::npos) break;
        b = c + 1;
    }
    return parts;
}

bool valid_amplitude(double a) { return a > 0.0 && a <= 1.0; }

} // namespace

Fill parse_fill(const std::string& spec) {
    const auto parts = split_colon(spec);
    const std::string& kind = parts[0];
    Fill fill;
    if (kind == "silence" && parts.size() == 1) {
        fill = Silence{};
    } else if (kind == "tone" && parts.size() <= 3) {
        Tone t;
        if (parts.size() > 1) t.frequency = parse_double(parts[1], spec);
        if (parts.size() > 2) t.amplitude = parse_double(parts[2], spec);
        if (!(t.frequency > 0.0)) throw ValidationError("tone frequency must be positive");
        fill = t;
    } else if (kind == "noise" && parts.size() <= 3) {
        WhiteNoise n;
        if (parts.size() > 1) n.amplitude = parse_double(parts[1], spec);
        if (parts.size() > 2) {
            const std::string& s = parts[2];
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n.seed);
            if (ec != std::errc() || ptr != s.data() + s.size()) throw ValidationError("malformed noise seed");
        }
        fill = n;
    } else {
        throw ValidationError("unknown fill \"" + spec + "\" (expected silence, tone[:freq[:amp]] or noise[:amp[:seed]])");
    }
    RedactionPlan{{}, fill, 0.0}.validate();
    return fill;
}

std::string fill_name(const Fill& fill) {
    if (std::holds_alternative<Silence>(fill)) return "silence";
    if (std::holds_alternative<Tone>(fill)) return "tone";
    return "noise";
}

void RedactionPlan::validate() const {
    if (!(pad >= 0.0)) throw ValidationError("pad must be non-negative");
    if (const auto* t = std::get_if<Tone>(&fill); t && !valid_amplitude(t->amplitude)) {
        throw ValidationError("tone amplitude must be in (0, 1]");
    }
    if (const auto* n = std::get_if<WhiteNoise>(&fill); n && !valid_amplitude(n->amplitude)) {
        throw ValidationError("noise amplitude must be in (0, 1]");
    }
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (!intervals[i].valid()) throw ValidationError("invalid interval in redaction plan");
        if (i > 0 && intervals[i].start <= intervals[i - 1].end) {
            throw ValidationError("redaction plan intervals must be sorted and disjoint");
        }
    }
}

double RedactionPlan::total_seconds() const noexcept {
    double s = 0.0;
    for (const auto& iv : intervals) s += iv.length();
    return s;
}

RedactionPlan build_plan(const std::vector<TimeInterval>& intervals, double pad, Fill fill) {
    RedactionPlan plan{{}, fill, pad};
    if (!(pad >= 0.0)) throw ValidationError("pad must be non-negative");
    std::vector<TimeInterval> widened;
    widened.reserve(intervals.size());
    for (const auto& iv : intervals) {
        if (!iv.valid()) throw ValidationError("invalid entity interval");
        widened.push_back({std::max(0.0, iv.start - pad), iv.end + pad});
    }
    std::sort(widened.begin(), widened.end(), [](const auto& a, const auto& b) {
        return a.start < b.start || (a.start == b.start && a.end < b.end);
    });
    for (const auto& iv : widened) {
        if (!plan.intervals.empty() && iv.start <= plan.intervals.back().end) {
            plan.intervals.back().end = std::max(plan.intervals.back().end, iv.end);
        } else {
            plan.intervals.push_back(iv);
        }
    }
    plan.validate();
    return plan;
}

RedactionPlan build_plan(const std::vector<TimedEntity>& entities, double pad, Fill fill) {
    std::vector<TimeInterval> intervals;
    intervals.reserve(entities.size());
    for (const auto& e : entities) intervals.push_back(e.interval);
    return build_plan(intervals, pad, fill);
}

FrameRange frame_range(const TimeInterval& interval, std::uint32_t sample_rate, std::size_t frames) {
    auto snapped = [](double x) {
        const double r = std::round(x);
        return std::abs(x - r) < kSnap ? r : x;
    };
    const double lo = std::floor(snapped(interval.start * sample_rate));
    const double hi = std::ceil(snapped(interval.end * sample_rate));
    FrameRange r;
    r.first = static_cast<std::size_t>(std::max(0.0, lo));
    r.last = static_cast<std::size_t>(std::max(0.0, hi));
    r.last = std::min(r.last, frames);
    r.first = std::min(r.first, r.last);
    return r;
}

formats::AudioBuffer redact(const formats::AudioBuffer& audio, const RedactionPlan& plan, RedactionStats* stats) {
    audio.validate();
    plan.validate();
    formats::AudioBuffer out = audio;
    const std::size_t frames = audio.frames();
    const double duration = audio.duration();
    const std::size_t ch = audio.channels;

    SplitMix64 noise_rng(0);
    if (const auto* n = std::get_if<WhiteNoise>(&plan.fill)) noise_rng = SplitMix64(n->seed);

    RedactionStats local;
    for (const auto& iv : plan.intervals) {
        if (iv.start >= duration) {
            throw Error("redaction interval [" + std::to_string(iv.start) + ", " + std::to_string(iv.end) +
                        "] starts at or after the end of the audio (" + std::to_string(duration) + " s)");
        }
        if (iv.end > duration) {
            local.warnings.push_back("interval [" + std::to_string(iv.start) + ", " + std::to_string(iv.end) +
                                     "] clamped to the audio duration " + std::to_string(duration) + " s");
        }
        const FrameRange r = frame_range(iv, audio.sample_rate, frames);
        for (std::size_t f = r.first; f < r.last; ++f) {
            std::int16_t v = 0;
            if (const auto* t = std::get_if<Tone>(&plan.fill)) {
                const double time = static_cast<double>(f) / audio.sample_rate;
                v = to_sample(t->amplitude * std::sin(2.0 * std::numbers::pi * t->frequency * time));
            } else if (const auto* n = std::get_if<WhiteNoise>(&plan.fill)) {
                v = to_sample(n->amplitude * (2.0 * noise_rng.unit() - 1.0));
            }
            for (std::size_t c = 0; c < ch; ++c) out.samples[f * ch + c] = v;
        }
        local.frames_redacted += r.last - r.first;
    }
    if (stats) *stats = std::move(local);
    return out;
}

} // namespace deid::redaction
