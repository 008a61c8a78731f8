#include "deid/prep/brat.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "deid/error.hpp"
#include "deid/text.hpp"

namespace deid::prep {

namespace {

std::size_t parse_offset(std::string_view s, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, "malformed offset \"" + std::string(s) + "\"");
    }
    return v;
}

} // namespace

std::vector<RawEntity> parse_brat_annotations(std::string_view ann, std::string_view article_text) {
    const auto byte_at = text::codepoint_byte_offsets(article_text);
    const std::size_t n_cp = byte_at.size() - 1;

    std::vector<RawEntity> out;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < ann.size()) {
        std::size_t eol = ann.find('\n', pos);
        if (eol == std::string_view::npos) eol = ann.size();
        std::string_view line = ann.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() != 'T') continue;

        const std::size_t tab1 = line.find('\t');
        if (tab1 == std::string_view::npos) throw ParseError(line_no, "expected tab after annotation id");
        std::size_t tab2 = line.find('\t', tab1 + 1);
        if (tab2 == std::string_view::npos) tab2 = line.size();
        const std::string_view body = line.substr(tab1 + 1, tab2 - tab1 - 1);

        const std::size_t sp = body.find(' ');
        if (sp == std::string_view::npos) throw ParseError(line_no, "expected `label start end`");
        RawEntity e;
        e.label = std::string(body.substr(0, sp));
        std::size_t lo = n_cp + 1;
        std::size_t hi = 0;
        std::string_view ranges = body.substr(sp + 1);
        while (!ranges.empty()) {
            const std::size_t semi = ranges.find(';');
            const std::string_view range = ranges.substr(0, semi);
            const std::size_t gap = range.find(' ');
            if (gap == std::string_view::npos) throw ParseError(line_no, "expected `start end`");
            const std::size_t a = parse_offset(range.substr(0, gap), line_no);
            const std::size_t b = parse_offset(range.substr(gap + 1), line_no);
            if (a > b || b > n_cp) throw ParseError(line_no, "offsets outside the article text");
            lo = std::min(lo, a);
            hi = std::max(hi, b);
            ranges = semi == std::string_view::npos ? std::string_view{} : ranges.substr(semi + 1);
        }
        if (lo > hi) throw ParseError(line_no, "annotation without offsets");
        e.begin = byte_at[lo];
        e.end = byte_at[hi];
        out.push_back(std::move(e));
    }
    std::stable_sort(out.begin(), out.end(), [](const RawEntity& a, const RawEntity& b) {
        return a.begin < b.begin;
    });
    return out;
}

} // namespace deid::prep
