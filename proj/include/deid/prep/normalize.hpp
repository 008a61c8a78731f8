#pragma once

#include <string>
#include <string_view>

#include "deid/prep/annotated.hpp"

namespace deid::prep {

// Tabs, thin spaces (U+2009) and no-break spaces (U+00A0) become ASCII
// spaces, runs of spaces collapse to one and leading/trailing whitespace is
// removed. Newlines are kept.
std::string normalize_text(std::string_view text);

// Same text transformation with entity offsets carried over. Each entity is
// then trimmed and stripped of leading lowercase French determiners (le, la,
// les, l', un, une, des, du, de la); the text itself keeps them. Entities
// left empty are dropped.
AnnotatedText normalize_text(const AnnotatedText& input);

// Strips leading determiners from an entity string; never returns empty
// when given a non-empty string.
std::string_view strip_leading_determiners(std::string_view entity);

} // namespace deid::prep
