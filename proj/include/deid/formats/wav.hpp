#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace deid::formats {

// Interleaved 16-bit PCM.
struct AudioBuffer {
    std::uint32_t sample_rate = 16000;
    std::uint16_t channels = 1;
    std::vector<std::int16_t> samples;

    std::size_t frames() const noexcept { return channels == 0 ? 0 : samples.size() / channels; }
    double duration() const noexcept {
        return sample_rate == 0 ? 0.0 : static_cast<double>(frames()) / sample_rate;
    }

    // Throws ValidationError unless rate > 0, channels in {1, 2} and the
    // sample count is a multiple of channels.
    void validate() const;

    friend bool operator==(const AudioBuffer&, const AudioBuffer&) = default;
};

// RIFF/WAVE with PCM (format 1, or EXTENSIBLE with a PCM sub-format), 16 bit,
// one or two channels. Unknown chunks are skipped.
AudioBuffer read_wav(std::string_view bytes);

// Canonical 44-byte header followed by the sample payload.
std::string write_wav(const AudioBuffer& audio);

} // namespace deid::formats
