#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "deid/prep/annotated.hpp"
#include "deid/prep/remap.hpp"

namespace deid::prep {

struct Token {
    std::string text;
    std::size_t begin = 0; // byte offsets into the source
    std::size_t end = 0;
};

// Whitespace tokenization with French-aware splitting: leading/trailing
// punctuation becomes its own token and elided clitics (l', d', qu', c', ...)
// are split off with their apostrophe, as forced aligners emit them.
std::vector<Token> tokenize(std::string_view text);
std::vector<std::string> tokenize_words(std::string_view text);

// Entities projected onto the tokens they overlap. Entities touching no
// token are reported in `dropped`.
struct TokenizedSentence {
    std::vector<Token> tokens;
    std::vector<LabeledSpan> entities;
    std::vector<RawEntity> dropped;
};

TokenizedSentence tokenize_annotated(const AnnotatedText& sentence);

} // namespace deid::prep
