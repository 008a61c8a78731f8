#include "deid/tagging/bio.hpp"

namespace deid::tagging {

std::vector<EntitySpan> decode_bio(const std::vector<Label>& labels, DecodePolicy policy) {
    std::vector<EntitySpan> spans;
    bool open = false;
    EntitySpan current;
    auto close = [&](std::size_t at) {
        if (open) {
            current.token_end = at;
            spans.push_back(current);
            open = false;
        }
    };
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const Label& l = labels[i];
        switch (l.kind) {
        case Label::Kind::Outside:
            close(i);
            break;
        case Label::Kind::Begin:
            close(i);
            current = {l.type, i, i};
            open = true;
            break;
        case Label::Kind::Inside:
            if (open && current.type == l.type) break;
            if (policy == DecodePolicy::Strict) {
                throw DecodeError(i, l.str() + " does not continue a " + std::string(entity_code(l.type)) +
                                         " entity");
            }
            close(i);
            current = {l.type, i, i};
            open = true;
            break;
        }
    }
    close(labels.size());
    return spans;
}

std::vector<Label> encode_bio(const std::vector<EntitySpan>& spans, std::size_t token_count) {
    validate_spans(spans, token_count);
    std::vector<Label> labels(token_count, Label::outside());
    for (const auto& s : spans) {
        labels[s.token_start] = Label::begin(s.type);
        for (std::size_t i = s.token_start + 1; i < s.token_end; ++i) labels[i] = Label::inside(s.type);
    }
    return labels;
}

} // namespace deid::tagging
