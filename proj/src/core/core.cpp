#include "deid/core.hpp"

#include <algorithm>
#include <cmath>

namespace deid {

TimeInterval TimeInterval::make(double start, double end) {
    TimeInterval iv{start, end};
    if (!iv.valid()) {
        throw ValidationError("invalid time interval [" + std::to_string(start) + ", " +
                              std::to_string(end) + "]");
    }
    return iv;
}

bool TimeInterval::valid() const noexcept {
    return std::isfinite(start) && std::isfinite(end) && start >= 0.0 && start <= end;
}

double interval_overlap(const TimeInterval& a, const TimeInterval& b) noexcept {
    return std::max(0.0, std::min(a.end, b.end) - std::max(a.start, b.start));
}

namespace {

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
    });
}

} // namespace

void validate_alignments(const std::vector<WordAlignment>& words) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto& w = words[i];
        if (is_blank(w.word)) {
            throw ValidationError("word " + std::to_string(i) + " is blank");
        }
        if (!w.interval.valid()) {
            throw ValidationError("word " + std::to_string(i) + " (\"" + w.word +
                                  "\") has an invalid interval");
        }
        if (i > 0 && w.interval.start < words[i - 1].interval.end) {
            throw ValidationError("word " + std::to_string(i) + " (\"" + w.word +
                                  "\") overlaps or precedes the previous word");
        }
    }
}

namespace {

struct TypeInfo {
    EntityType type;
    std::string_view code;
    std::string_view name;
};

constexpr TypeInfo kTypeInfo[] = {
    {EntityType::Person, "PER", "Person"},
    {EntityType::Location, "LOC", "Location"},
    {EntityType::Organization, "ORG", "Organization"},
    {EntityType::Currency, "CUR", "Currency"},
    {EntityType::MoneyAmount, "MONEY", "Money Amount"},
};

} // namespace

std::string_view entity_code(EntityType type) noexcept {
    return kTypeInfo[static_cast<int>(type)].code;
}

std::string_view entity_name(EntityType type) noexcept {
    return kTypeInfo[static_cast<int>(type)].name;
}

std::optional<EntityType> parse_entity_code(std::string_view code) noexcept {
    for (const auto& info : kTypeInfo) {
        if (info.code == code) return info.type;
    }
    return std::nullopt;
}

EntityType entity_type_from_code(std::string_view code) {
    if (auto t = parse_entity_code(code)) return *t;
    throw ValidationError("unknown entity type \"" + std::string(code) +
                          "\" (expected PER, LOC, ORG, CUR or MONEY)");
}

void validate_spans(const std::vector<EntitySpan>& spans, std::size_t token_count) {
    validate_spans(spans);
    for (const auto& s : spans) {
        if (s.token_end > token_count) {
            throw ValidationError("entity span [" + std::to_string(s.token_start) + ", " +
                                  std::to_string(s.token_end) + ") exceeds token count " +
                                  std::to_string(token_count));
        }
    }
}

void validate_spans(const std::vector<EntitySpan>& spans) {
    std::vector<EntitySpan> sorted = spans;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.token_start < b.token_start;
    });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto& s = sorted[i];
        if (s.token_start >= s.token_end) {
            throw ValidationError("empty entity span [" + std::to_string(s.token_start) + ", " +
                                  std::to_string(s.token_end) + ")");
        }
        if (i > 0 && s.token_start < sorted[i - 1].token_end) {
            throw ValidationError("overlapping entity spans at token " +
                                  std::to_string(s.token_start));
        }
    }
}

} // namespace deid
