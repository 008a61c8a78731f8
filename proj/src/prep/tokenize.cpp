#include "deid/prep/tokenize.hpp"

#include <algorithm>
#include <array>

#include "deid/text.hpp"

namespace deid::prep {

namespace {

constexpr std::array<std::string_view, 14> kElisions = {
    "l", "d", "j", "m", "n", "s", "t", "c", "qu", "jusqu", "lorsqu", "puisqu", "quoiqu", "presqu",
};

constexpr std::string_view kApostrophes[] = {"'", "\xE2\x80\x99"};

bool is_ascii_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// Byte length of a punctuation code point at s[i], 0 if none.
std::size_t punct_at(std::string_view s, std::size_t i) {
    const auto offs = text::codepoint_byte_offsets(s.substr(i, std::min<std::size_t>(4, s.size() - i)));
    if (offs.size() < 2) return 0;
    const std::size_t len = offs[1];
    const auto cp = text::decode_utf8(s.substr(i, len));
    return (!cp.empty() && text::is_punctuation(cp[0])) ? len : 0;
}

// Byte length of the last code point of s, if it is punctuation.
std::size_t trailing_punct(std::string_view s) {
    std::size_t b = s.size();
    do {
        --b;
    } while (b > 0 && (static_cast<unsigned char>(s[b]) & 0xC0) == 0x80);
    return punct_at(s, b) == s.size() - b ? s.size() - b : 0;
}

void split_chunk(std::string_view src, std::size_t b, std::size_t e, std::vector<Token>& out) {
    std::vector<Token> tail;
    while (b < e) {
        const std::size_t n = punct_at(src, b);
        if (n == 0 || b + n >= e) break;
        out.push_back({std::string(src.substr(b, n)), b, b + n});
        b += n;
    }
    while (e > b) {
        const std::string_view word = src.substr(b, e - b);
        const std::size_t n = trailing_punct(word);
        if (n == 0 || n == word.size()) break;
        const std::string_view piece = word.substr(word.size() - n);
        if (piece == kApostrophes[0] || piece == kApostrophes[1]) break;
        // "M." and similar abbreviations keep their dot.
        if (src[e - 1] == '.' && n == 1) {
            const auto stem = text::decode_utf8(src.substr(b, e - 1 - b));
            if (stem.size() == 1 && text::is_upper(stem[0])) break;
        }
        tail.push_back({std::string(src.substr(e - n, n)), e - n, e});
        e -= n;
    }
    while (b < e) {
        const std::string_view word = src.substr(b, e - b);
        bool split = false;
        for (std::string_view apos : kApostrophes) {
            const std::size_t at = word.find(apos);
            if (at == std::string_view::npos || at + apos.size() >= word.size()) continue;
            const std::string head = text::lowercase(word.substr(0, at));
            if (std::find(kElisions.begin(), kElisions.end(), head) == kElisions.end()) continue;
            const std::size_t cut = b + at + apos.size();
            out.push_back({std::string(src.substr(b, cut - b)), b, cut});
            b = cut;
            split = true;
            break;
        }
        if (!split) {
            out.push_back({std::string(word), b, e});
            b = e;
        }
    }
    out.insert(out.end(), tail.rbegin(), tail.rend());
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_ascii_space(text[i])) ++i;
        const std::size_t start = i;
        while (i < text.size() && !is_ascii_space(text[i])) ++i;
        if (i > start) split_chunk(text, start, i, out);
    }
    return out;
}

std::vector<std::string> tokenize_words(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : tokenize(text)) out.push_back(std::move(t.text));
    return out;
}

TokenizedSentence tokenize_annotated(const AnnotatedText& sentence) {
    TokenizedSentence out;
    out.tokens = tokenize(sentence.text);
    for (const auto& e : sentence.entities) {
        std::size_t first = out.tokens.size();
        std::size_t last = 0;
        for (std::size_t t = 0; t < out.tokens.size(); ++t) {
            if (out.tokens[t].begin < e.end && e.begin < out.tokens[t].end) {
                first = std::min(first, t);
                last = t;
            }
        }
        if (first == out.tokens.size()) {
            out.dropped.push_back(e);
            continue;
        }
        out.entities.push_back({e.label, first, last + 1, sentence.entity_text(e)});
    }
    return out;
}

} // namespace deid::prep
