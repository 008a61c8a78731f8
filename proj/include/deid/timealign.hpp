#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deid/core.hpp"

namespace deid::timealign {

// Lowercased form used to compare NER tokens with aligned words; the
// typographic apostrophe is folded to '\''.
std::string normalize_token(std::string_view token);

// entry[i] is the alignment index of token i, or nullopt for punctuation-only
// tokens, which forced aligners do not emit.
using TokenMapping = std::vector<std::optional<std::size_t>>;

class ReconcileError : public Error {
public:
    ReconcileError(std::size_t position, std::string token, std::string aligned, const std::string& what);

    std::size_t position() const noexcept { return position_; } // token index
    const std::string& token() const noexcept { return token_; }
    const std::string& aligned() const noexcept { return aligned_; }

private:
    std::size_t position_;
    std::string token_;
    std::string aligned_;
};

// Pairs tokens with aligned words after normalization. Throws
// ReconcileError at the first divergence (text or length mismatch).
TokenMapping reconcile(const std::vector<std::string>& tokens, const std::vector<WordAlignment>& alignments);

// Interval from the start of the first covered word to the end of the last.
// Throws Error when the span falls outside the mapping or covers no
// aligned word.
TimedEntity span_to_interval(const EntitySpan& span, const std::vector<WordAlignment>& alignments,
                             const TokenMapping& mapping);

std::vector<TimedEntity> spans_to_intervals(const std::vector<EntitySpan>& spans,
                                            const std::vector<WordAlignment>& alignments,
                                            const TokenMapping& mapping);

} // namespace deid::timealign
