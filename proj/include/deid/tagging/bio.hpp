#pragma once

#include <cstddef>
#include <vector>

#include "deid/labels.hpp"

namespace deid::tagging {

enum class DecodePolicy {
    Lenient, // an I-X not continuing an X entity opens a new span
    Strict,  // the same situation raises DecodeError
};

class DecodeError : public Error {
public:
    DecodeError(std::size_t position, const std::string& what)
        : Error("tag " + std::to_string(position) + ": " + what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Maximal B-X I-X* runs become spans; a type change closes the open span.
std::vector<EntitySpan> decode_bio(const std::vector<Label>& labels,
                                   DecodePolicy policy = DecodePolicy::Lenient);

// Canonical encoding: B- on the first token of each span, I- after.
std::vector<Label> encode_bio(const std::vector<EntitySpan>& spans, std::size_t token_count);

} // namespace deid::tagging
