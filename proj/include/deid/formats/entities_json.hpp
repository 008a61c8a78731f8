#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deid/core.hpp"

namespace deid::formats {

// One utterance entry of the entity interchange file. An entry may mix timed
// entities ({type, start_s, end_s}) and token spans ({type, token_start,
// token_end}). `tokens` is an optional extension member carrying the token
// sequence the spans index into.
struct UtteranceEntities {
    std::string id;
    std::vector<TimedEntity> timed;
    std::vector<EntitySpan> spans;
    std::optional<std::vector<std::string>> tokens;

    friend bool operator==(const UtteranceEntities&, const UtteranceEntities&) = default;
};

std::vector<UtteranceEntities> parse_entities_json(std::string_view bytes);

// Pretty-printed with two-space indentation and a trailing newline.
std::string write_entities_json(const std::vector<UtteranceEntities>& utterances);

// First entry whose id matches, or nullptr.
const UtteranceEntities* find_utterance(const std::vector<UtteranceEntities>& entries,
                                        std::string_view id) noexcept;

} // namespace deid::formats
