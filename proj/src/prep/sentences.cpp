#include "deid/prep/sentences.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "deid/text.hpp"

namespace deid::prep {

namespace {

constexpr std::array<std::string_view, 18> kAbbreviations = {
    "mm", "mme", "mmes", "mlle", "mlles", "dr", "pr", "me", "st", "ste",
    "etc", "cf", "av", "bd", "vol", "p", "no", "art",
};

bool is_ascii_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// The word ending right before text[dot], without the dot.
std::string_view word_before(std::string_view text, std::size_t dot) {
    std::size_t b = dot;
    while (b > 0 && text[b - 1] != ' ' && text[b - 1] != '\n' && text[b - 1] != '(' &&
           text[b - 1] != '"') {
        --b;
    }
    return text.substr(b, dot - b);
}

bool guarded(std::string_view text, std::size_t run_start) {
    if (text[run_start] != '.') return false;
    const std::string_view word = word_before(text, run_start);
    if (word.empty()) return false;
    const auto cps = text::decode_utf8(word);
    if (cps.size() == 1 && text::is_upper(cps[0])) return true;
    const std::string lower = text::lowercase(word);
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) != kAbbreviations.end();
}

bool inside_entity(const std::vector<RawEntity>& entities, std::size_t offset) {
    return std::any_of(entities.begin(), entities.end(),
                       [&](const RawEntity& e) { return e.begin < offset && offset < e.end; });
}

// Half-open byte ranges of the sentences, trimmed.
std::vector<std::pair<std::size_t, std::size_t>> sentence_ranges(std::string_view text,
                                                                 const std::vector<RawEntity>& entities) {
    std::vector<std::size_t> cuts;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '\n') {
            if (!inside_entity(entities, i)) cuts.push_back(i);
            ++i;
            continue;
        }
        if (!is_terminal(text[i])) {
            ++i;
            continue;
        }
        const std::size_t run_start = i;
        while (i < text.size() && is_terminal(text[i])) ++i;
        const std::size_t cut = i;
        std::size_t j = i;
        while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
        if (j == cut || j >= text.size()) continue;
        const auto cps = text::decode_utf8(text.substr(j, std::min<std::size_t>(4, text.size() - j)));
        if (cps.empty()) continue;
        if (!(text::is_upper(cps[0]) || text::is_digit(cps[0]))) continue;
        if (guarded(text, run_start) || inside_entity(entities, cut)) continue;
        cuts.push_back(cut);
    }

    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::size_t start = 0;
    cuts.push_back(text.size());
    for (std::size_t cut : cuts) {
        std::size_t b = start;
        std::size_t e = cut;
        while (b < e && is_ascii_space(text[b])) ++b;
        while (e > b && is_ascii_space(text[e - 1])) --e;
        if (b < e) ranges.emplace_back(b, e);
        start = cut;
    }
    return ranges;
}

} // namespace

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& [b, e] : sentence_ranges(text, {})) out.emplace_back(text.substr(b, e - b));
    return out;
}

std::vector<AnnotatedText> split_sentences(const AnnotatedText& article) {
    std::vector<AnnotatedText> out;
    for (const auto& [b, e] : sentence_ranges(article.text, article.entities)) {
        AnnotatedText s{article.text.substr(b, e - b), {}};
        for (const auto& ent : article.entities) {
            if (ent.begin >= b && ent.end <= e) s.entities.push_back({ent.label, ent.begin - b, ent.end - b});
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace deid::prep
