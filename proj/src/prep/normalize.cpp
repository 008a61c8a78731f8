#include "deid/prep/normalize.hpp"

#include <algorithm>
#include <vector>

#include "deid/text.hpp"

namespace deid::prep {

namespace {

// Longest first so "de la" wins over shorter prefixes.
constexpr std::string_view kDeterminers[] = {
    "de la ", "les ", "une ", "des ", "le ", "la ", "un ", "du ", "l'", "l\xE2\x80\x99",
};

struct Normalized {
    std::string text;
    std::vector<std::size_t> offset_map; // input byte offset -> output byte offset
};

Normalized normalize_with_map(std::string_view in) {
    Normalized out;
    out.offset_map.assign(in.size() + 1, 0);
    const auto starts = text::codepoint_byte_offsets(in);
    for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
        const std::size_t b = starts[k];
        const std::size_t e = starts[k + 1];
        for (std::size_t i = b; i < e; ++i) out.offset_map[i] = out.text.size();

        const std::string_view cp = in.substr(b, e - b);
        const bool space = cp == " " || cp == "\t" || cp == "\xE2\x80\x89" || cp == "\xC2\xA0";
        if (space) {
            if (!out.text.empty() && out.text.back() != ' ' && out.text.back() != '\n') out.text.push_back(' ');
        } else if (cp == "\n") {
            if (out.text.empty()) continue;
            if (out.text.back() == ' ') out.text.pop_back();
            out.text.push_back('\n');
        } else if (cp == "\r") {
            continue;
        } else {
            out.text.append(cp);
        }
    }
    while (!out.text.empty() && (out.text.back() == ' ' || out.text.back() == '\n')) out.text.pop_back();
    out.offset_map[in.size()] = out.text.size();
    for (auto& m : out.offset_map) m = std::min(m, out.text.size());
    return out;
}

} // namespace

std::string normalize_text(std::string_view text) { return normalize_with_map(text).text; }

std::string_view strip_leading_determiners(std::string_view entity) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::string_view det : kDeterminers) {
            if (entity.size() > det.size() && entity.substr(0, det.size()) == det) {
                std::string_view rest = text::trim(entity.substr(det.size()));
                if (rest.empty()) continue;
                entity = rest;
                changed = true;
                break;
            }
        }
    }
    return entity;
}

AnnotatedText normalize_text(const AnnotatedText& input) {
    const Normalized n = normalize_with_map(input.text);
    AnnotatedText out{n.text, {}};
    for (const auto& e : input.entities) {
        const std::size_t b0 = std::min(e.begin, input.text.size());
        const std::size_t e0 = std::min(std::max(e.end, b0), input.text.size());
        std::size_t b = n.offset_map[b0];
        std::size_t end = n.offset_map[e0];
        while (b < end && (out.text[b] == ' ' || out.text[b] == '\n')) ++b;
        while (end > b && (out.text[end - 1] == ' ' || out.text[end - 1] == '\n')) --end;
        if (b == end) continue;
        const std::string_view span(out.text.data() + b, end - b);
        const std::string_view stripped = strip_leading_determiners(span);
        b += static_cast<std::size_t>(stripped.data() - span.data());
        out.entities.push_back({e.label, b, end});
    }
    return out;
}

} // namespace deid::prep
