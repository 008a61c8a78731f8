#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deid/prep/annotated.hpp"

namespace deid::prep {

// Sentence boundaries fall after a run of '.', '!' or '?' followed by
// whitespace and then an uppercase letter or a digit, and at every newline.
// No boundary is placed inside an entity, after a single uppercase initial
// ("M."), or after a guarded abbreviation (Mme., MM., etc., cf., ...).
std::vector<std::string> split_sentences(std::string_view text);

// Splits annotated text; entity offsets are rebased onto their sentence.
std::vector<AnnotatedText> split_sentences(const AnnotatedText& article);

} // namespace deid::prep
