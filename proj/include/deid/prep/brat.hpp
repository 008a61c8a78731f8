#pragma once

#include <string_view>
#include <vector>

#include "deid/prep/annotated.hpp"

namespace deid::prep {

// Reads text-bound annotations ("T<n>\t<label> <start> <end>[;<start> <end>]\t<text>")
// from a brat standoff .ann file. Offsets in the file count code points;
// the result uses byte offsets into `article_text`. Discontinuous
// annotations cover their outermost extent. Other annotation kinds
// (relations, events, notes) are ignored.
std::vector<RawEntity> parse_brat_annotations(std::string_view ann, std::string_view article_text);

} // namespace deid::prep
