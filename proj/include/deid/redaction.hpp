#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "deid/core.hpp"
#include "deid/formats/wav.hpp"

namespace deid::redaction {

struct Silence {
    friend bool operator==(const Silence&, const Silence&) = default;
};

// Sine at `frequency` Hz, `amplitude` a fraction of full scale in (0, 1].
struct Tone {
    double frequency = 440.0;
    double amplitude = 0.3;
    friend bool operator==(const Tone&, const Tone&) = default;
};

// Uniform noise in [-amplitude, amplitude] of full scale from SplitMix64(seed).
struct WhiteNoise {
    double amplitude = 0.3;
    std::uint64_t seed = 0;
    friend bool operator==(const WhiteNoise&, const WhiteNoise&) = default;
};

using Fill = std::variant<Silence, Tone, WhiteNoise>;

// Parses "silence", "tone[:freq[:amp]]" or "noise[:amp[:seed]]".
Fill parse_fill(const std::string& spec);
std::string fill_name(const Fill& fill);

struct RedactionPlan {
    std::vector<TimeInterval> intervals; // sorted, pairwise disjoint
    Fill fill = Silence{};
    double pad = 0.0;

    // Throws ValidationError on unsorted/overlapping intervals, negative pad
    // or an amplitude outside (0, 1].
    void validate() const;
    double total_seconds() const noexcept;
};

// Widens each interval by `pad` on both sides (clamped at 0) and merges
// overlapping or touching intervals.
RedactionPlan build_plan(const std::vector<TimedEntity>& entities, double pad, Fill fill = Silence{});
RedactionPlan build_plan(const std::vector<TimeInterval>& intervals, double pad, Fill fill = Silence{});

// [first, last) frame range of an interval: floor(start * rate) to
// min(ceil(end * rate), frames). Products within 1e-6 of an integer snap to it.
struct FrameRange {
    std::size_t first = 0;
    std::size_t last = 0;
};
FrameRange frame_range(const TimeInterval& interval, std::uint32_t sample_rate, std::size_t frames);

struct RedactionStats {
    std::size_t frames_redacted = 0;
    std::vector<std::string> warnings;
};

// Replaces every frame inside the plan's intervals with the fill, across
// all channels; other samples are copied untouched. Intervals running past
// the end are clamped with a warning; an interval starting at or after the
// end of the audio throws Error.
formats::AudioBuffer redact(const formats::AudioBuffer& audio, const RedactionPlan& plan,
                            RedactionStats* stats = nullptr);

} // namespace deid::redaction
