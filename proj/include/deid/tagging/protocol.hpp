#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deid/tagging/tagger.hpp"

// JSON bodies of the tagger wire protocol, shared by the HTTP and the
// line-delimited subprocess transports:
//   request   {"sentences": [["tok", ...], ...]}
//   response  {"distributions": [[{"O": 0.9, "B-PER": 0.05, ...}, ...], ...]}
//   health    {"status": "ok", "labels": [...]}
namespace deid::tagging {

class ProtocolError : public Error {
public:
    using Error::Error;
};

// Per-token sums must be within this of 1.
inline constexpr double kWireSumTolerance = 1e-4;

std::string encode_tag_request(const std::vector<Tokens>& sentences);
std::vector<Tokens> decode_tag_request(std::string_view body);

// Validates shape against `request` (one object per token), label names
// against the vocabulary, values in [0, 1] and per-token sums. Absent labels
// are zero. Values are kept as sent.
std::vector<SentenceDistributions> decode_tag_response(std::string_view body,
                                                       const std::vector<Tokens>& request);
std::string encode_tag_response(const std::vector<SentenceDistributions>& distributions);

struct HealthStatus {
    std::string status;
    std::vector<std::string> labels;
};

// Requires status "ok" and every label in the vocabulary.
HealthStatus decode_health(std::string_view body);
std::string encode_health(const std::vector<std::string>& labels);

} // namespace deid::tagging
