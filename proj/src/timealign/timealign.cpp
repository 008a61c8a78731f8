#include "deid/timealign.hpp"

#include <algorithm>

#include "deid/text.hpp"

namespace deid::timealign {

std::string normalize_token(std::string_view token) {
    std::string out = text::lowercase(text::trim(token));
    constexpr std::string_view curly = "\xE2\x80\x99";
    for (std::size_t at; (at = out.find(curly)) != std::string::npos;) out.replace(at, curly.size(), "'");
    return out;
}

ReconcileError::ReconcileError(std::size_t position, std::string token, std::string aligned,
                               const std::string& what)
    : Error("token " + std::to_string(position) + ": " + what + " (token \"" + token + "\", aligned \"" +
            aligned + "\")"),
      position_(position),
      token_(std::move(token)),
      aligned_(std::move(aligned)) {}

TokenMapping reconcile(const std::vector<std::string>& tokens, const std::vector<WordAlignment>& alignments) {
    if (tokens.empty()) throw Error("reconcile: no tokens");
    if (alignments.empty()) throw Error("reconcile: no aligned words");

    std::vector<std::size_t> aligned_idx;
    for (std::size_t j = 0; j < alignments.size(); ++j) {
        if (!text::is_punctuation_only(alignments[j].word)) aligned_idx.push_back(j);
    }

    TokenMapping mapping(tokens.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (text::is_punctuation_only(tokens[i])) continue;
        if (next >= aligned_idx.size()) {
            throw ReconcileError(i, tokens[i], "", "more tokens than aligned words");
        }
        const auto& word = alignments[aligned_idx[next]].word;
        if (normalize_token(tokens[i]) != normalize_token(word)) {
            throw ReconcileError(i, tokens[i], word, "token text mismatch");
        }
        mapping[i] = aligned_idx[next++];
    }
    if (next < aligned_idx.size()) {
        throw ReconcileError(tokens.size(), "", alignments[aligned_idx[next]].word,
                             "more aligned words than tokens");
    }
    return mapping;
}

TimedEntity span_to_interval(const EntitySpan& span, const std::vector<WordAlignment>& alignments,
                             const TokenMapping& mapping) {
    if (span.token_start >= span.token_end || span.token_end > mapping.size()) {
        throw Error("entity span [" + std::to_string(span.token_start) + ", " + std::to_string(span.token_end) +
                    ") outside the " + std::to_string(mapping.size()) + " mapped tokens");
    }
    std::optional<TimeInterval> iv;
    for (std::size_t i = span.token_start; i < span.token_end; ++i) {
        if (!mapping[i]) continue;
        if (*mapping[i] >= alignments.size()) throw Error("token mapping points past the aligned words");
        const TimeInterval& w = alignments[*mapping[i]].interval;
        if (!iv) {
            iv = w;
        } else {
            iv->start = std::min(iv->start, w.start);
            iv->end = std::max(iv->end, w.end);
        }
    }
    if (!iv) {
        throw Error("entity span [" + std::to_string(span.token_start) + ", " + std::to_string(span.token_end) +
                    ") covers no aligned word");
    }
    return {span.type, *iv};
}

std::vector<TimedEntity> spans_to_intervals(const std::vector<EntitySpan>& spans,
                                            const std::vector<WordAlignment>& alignments,
                                            const TokenMapping& mapping) {
    std::vector<TimedEntity> out;
    out.reserve(spans.size());
    for (const auto& s : spans) out.push_back(span_to_interval(s, alignments, mapping));
    return out;
}

} // namespace deid::timealign
