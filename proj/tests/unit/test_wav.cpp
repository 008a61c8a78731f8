#include <doctest.h>

#include <cstring>

#include "deid/formats/wav.hpp"
#include "fixtures.hpp"

using namespace deid;
using formats::read_wav;
using formats::write_wav;

namespace {

void put16(std::string& s, unsigned v) {
    s.push_back(static_cast<char>(v & 0xFF));
    s.push_back(static_cast<char>((v >> 8) & 0xFF));
}
void put32(std::string& s, unsigned v) {
    put16(s, v & 0xFFFF);
    put16(s, v >> 16);
}

// Hand-assembled RIFF file with an extra chunk before "data".
std::string make_wav(unsigned format, unsigned channels, unsigned rate, unsigned bits, const std::string& payload,
                     unsigned declared_size) {
    std::string fmt;
    put16(fmt, format);
    put16(fmt, channels);
    put32(fmt, rate);
    put32(fmt, rate * channels * bits / 8);
    put16(fmt, channels * bits / 8);
    put16(fmt, bits);
    std::string body = "WAVE";
    body += "fmt ";
    put32(body, static_cast<unsigned>(fmt.size()));
    body += fmt;
    body += "LIST";
    put32(body, 4);
    body += "INFO";
    body += "data";
    put32(body, declared_size);
    body += payload;
    std::string out = "RIFF";
    put32(out, static_cast<unsigned>(body.size()));
    return out + body;
}

} // namespace

TEST_CASE("one second of 8 kHz silence") {
    const auto a = read_wav(make_wav(1, 1, 8000, 16, std::string(16000, '\0'), 16000));
    CHECK(a.sample_rate == 8000);
    CHECK(a.channels == 1);
    CHECK(a.samples.size() == 8000);
    CHECK(a.duration() == 1.0);
}

TEST_CASE("canonical header") {
    const formats::AudioBuffer a{16000, 2, {1, -1, 300, -300}};
    const auto bytes = write_wav(a);
    CHECK(bytes.size() == 44 + 8);
    CHECK(bytes.substr(0, 4) == "RIFF");
    CHECK(bytes.substr(36, 4) == "data");
    CHECK(read_wav(bytes) == a);
}

TEST_CASE("rejections") {
    CHECK_THROWS_WITH(read_wav(make_wav(3, 1, 8000, 32, std::string(8, '\0'), 8)),
                      doctest::Contains("unsupported encoding"));
    CHECK_THROWS(read_wav(make_wav(1, 1, 8000, 8, std::string(8, '\0'), 8)));
    CHECK_THROWS(read_wav(make_wav(1, 1, 8000, 16, std::string(8, '\0'), 100)));
    CHECK_THROWS(read_wav("RIFX"));
    CHECK_THROWS(read_wav(""));
}

TEST_CASE("payload round-trips byte for byte") {
    SplitMix64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const std::uint16_t channels = 1 + i % 2;
        const auto a = testing::random_audio(rng, i % 3 ? 16000 : 8000, channels, rng.below(5000));
        const auto bytes = write_wav(a);
        const auto back = read_wav(bytes);
        CHECK(back == a);
        CHECK(write_wav(back) == bytes);
    }
}

TEST_CASE("foreign header layout keeps the payload") {
    std::string payload;
    for (int i = 0; i < 100; ++i) put16(payload, static_cast<unsigned>(i * 613) & 0xFFFF);
    const auto a = read_wav(make_wav(1, 2, 8000, 16, payload, static_cast<unsigned>(payload.size())));
    CHECK(write_wav(a).substr(44) == payload);
}
