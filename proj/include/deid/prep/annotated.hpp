#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace deid::prep {

// An entity annotation over byte offsets [begin, end) of its text.
struct RawEntity {
    std::string label;
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const RawEntity&, const RawEntity&) = default;
};

struct AnnotatedText {
    std::string text;
    std::vector<RawEntity> entities;

    std::string entity_text(const RawEntity& e) const { return text.substr(e.begin, e.end - e.begin); }

    friend bool operator==(const AnnotatedText&, const AnnotatedText&) = default;
};

} // namespace deid::prep
