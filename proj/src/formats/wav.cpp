#include "deid/formats/wav.hpp"

#include <cstring>
#include <optional>

#include "deid/error.hpp"

namespace deid::formats {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t u16(std::string_view b, std::size_t at) {
    return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                      static_cast<unsigned char>(b[at + 1]) << 8);
}

std::uint32_t u32(std::string_view b, std::size_t at) {
    return static_cast<std::uint32_t>(u16(b, at)) | static_cast<std::uint32_t>(u16(b, at + 2)) << 16;
}

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>(v >> 8));
}

void put_u32(std::string& out, std::uint32_t v) {
    put_u16(out, static_cast<std::uint16_t>(v & 0xFFFF));
    put_u16(out, static_cast<std::uint16_t>(v >> 16));
}

struct Format {
    std::uint16_t code;
    std::uint16_t channels;
    std::uint32_t rate;
    std::uint16_t bits;
};

} // namespace

void AudioBuffer::validate() const {
    if (sample_rate == 0) throw ValidationError("sample rate must be positive");
    if (channels != 1 && channels != 2) {
        throw ValidationError("unsupported channel count " + std::to_string(channels));
    }
    if (samples.size() % channels != 0) {
        throw ValidationError("sample count is not a multiple of the channel count");
    }
}

AudioBuffer read_wav(std::string_view bytes) {
    if (bytes.size() < 12 || bytes.substr(0, 4) != "RIFF" || bytes.substr(8, 4) != "WAVE") {
        throw ParseError(0, "not a RIFF/WAVE file");
    }
    std::optional<Format> fmt;
    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::string_view id = bytes.substr(pos, 4);
        const std::uint32_t size = u32(bytes, pos + 4);
        const std::size_t body = pos + 8;

        if (id == "fmt ") {
            if (size < 16 || body + size > bytes.size()) throw ParseError(0, "truncated fmt chunk");
            fmt = Format{u16(bytes, body), u16(bytes, body + 2), u32(bytes, body + 4), u16(bytes, body + 14)};
            if (fmt->code == kFormatExtensible) {
                if (size < 40) throw ParseError(0, "truncated WAVE_FORMAT_EXTENSIBLE header");
                fmt->code = u16(bytes, body + 24); // first two bytes of the sub-format GUID
            }
        } else if (id == "data") {
            if (!fmt) throw ParseError(0, "data chunk before fmt chunk");
            if (fmt->code != kFormatPcm) {
                throw ParseError(0, "unsupported encoding (format code " + std::to_string(fmt->code) +
                                        "); only 16-bit PCM is supported");
            }
            if (fmt->bits != 16) {
                throw ParseError(0, "unsupported bit depth " + std::to_string(fmt->bits) +
                                        "; only 16-bit PCM is supported");
            }
            if (fmt->channels != 1 && fmt->channels != 2) {
                throw ParseError(0, "unsupported channel count " + std::to_string(fmt->channels));
            }
            if (fmt->rate == 0) throw ParseError(0, "sample rate is zero");
            if (body + size > bytes.size()) throw ParseError(0, "truncated data chunk");
            const std::size_t frame_bytes = 2u * fmt->channels;
            if (size % frame_bytes != 0) throw ParseError(0, "data chunk is not a whole number of frames");

            AudioBuffer audio;
            audio.sample_rate = fmt->rate;
            audio.channels = fmt->channels;
            audio.samples.resize(size / 2);
            for (std::size_t i = 0; i < audio.samples.size(); ++i) {
                audio.samples[i] = static_cast<std::int16_t>(u16(bytes, body + 2 * i));
            }
            return audio;
        }
        pos = body + size + (size & 1u);
    }
    if (fmt && fmt->code != kFormatPcm) {
        throw ParseError(0, "unsupported encoding (format code " + std::to_string(fmt->code) + ")");
    }
    throw ParseError(0, "missing data chunk");
}

std::string write_wav(const AudioBuffer& audio) {
    audio.validate();
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
    std::string out;
    out.reserve(44 + data_bytes);
    out += "RIFF";
    put_u32(out, 36 + data_bytes);
    out += "WAVEfmt ";
    put_u32(out, 16);
    put_u16(out, kFormatPcm);
    put_u16(out, audio.channels);
    put_u32(out, audio.sample_rate);
    put_u32(out, audio.sample_rate * audio.channels * 2);
    put_u16(out, static_cast<std::uint16_t>(audio.channels * 2));
    put_u16(out, 16);
    out += "data";
    put_u32(out, data_bytes);
    for (std::int16_t s : audio.samples) put_u16(out, static_cast<std::uint16_t>(s));
    return out;
}

} // namespace deid::formats
