#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deid/labels.hpp"

namespace deid::formats {

// A sentence with its tags as written in the file, before vocabulary checks.
struct RawConllSentence {
    std::vector<std::string> tokens;
    std::vector<std::string> tags;
    std::vector<std::size_t> lines; // 1-based source line of each token

    friend bool operator==(const RawConllSentence& a, const RawConllSentence& b) {
        return a.tokens == b.tokens && a.tags == b.tags;
    }
};

struct ConllSentence {
    std::vector<std::string> tokens;
    std::vector<Label> tags;

    friend bool operator==(const ConllSentence&, const ConllSentence&) = default;
};

// `token<TAB>tag` lines, blank line between sentences. Checks the line shape
// and the O / B-* / I-* prefix but not the entity type vocabulary.
std::vector<RawConllSentence> parse_conll_raw(std::string_view bytes);

// Parses and checks every tag against the canonical codes (PER, LOC, ORG,
// CUR, MONEY). Unknown tags raise a ParseError naming the line.
std::vector<ConllSentence> parse_conll(std::string_view bytes);

std::string write_conll(const std::vector<ConllSentence>& sentences);

} // namespace deid::formats
