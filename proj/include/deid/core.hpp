#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deid/error.hpp"

namespace deid {

// A [start, end] span in seconds. (0, 0) is the "absent" sentinel.
struct TimeInterval {
    double start = 0.0;
    double end = 0.0;

    // Throws ValidationError unless 0 <= start <= end (both finite).
    static TimeInterval make(double start, double end);

    double length() const noexcept { return end - start; }
    bool is_absent() const noexcept { return start == 0.0 && end == 0.0; }
    bool valid() const noexcept;

    friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

// Length of the intersection of two intervals, 0 when disjoint.
double interval_overlap(const TimeInterval& a, const TimeInterval& b) noexcept;

struct WordAlignment {
    std::string word;
    TimeInterval interval;

    friend bool operator==(const WordAlignment&, const WordAlignment&) = default;
};

// Throws ValidationError if a word is blank or intervals overlap / are unsorted.
void validate_alignments(const std::vector<WordAlignment>& words);

enum class EntityType { Person, Location, Organization, Currency, MoneyAmount };

inline constexpr EntityType kEntityTypes[] = {
    EntityType::Person, EntityType::Location, EntityType::Organization,
    EntityType::Currency, EntityType::MoneyAmount};

// Short interchange codes: PER, LOC, ORG, CUR, MONEY.
std::string_view entity_code(EntityType type) noexcept;
std::string_view entity_name(EntityType type) noexcept;
std::optional<EntityType> parse_entity_code(std::string_view code) noexcept;
// Like parse_entity_code but throws ValidationError naming the bad code.
EntityType entity_type_from_code(std::string_view code);

// Entity over token indices [token_start, token_end).
struct EntitySpan {
    EntityType type = EntityType::Person;
    std::size_t token_start = 0;
    std::size_t token_end = 0;

    std::size_t size() const noexcept { return token_end - token_start; }

    friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// Throws ValidationError if a span is empty, exceeds token_count or overlaps another.
void validate_spans(const std::vector<EntitySpan>& spans, std::size_t token_count);
// Same checks without an upper bound on token indices.
void validate_spans(const std::vector<EntitySpan>& spans);

struct TimedEntity {
    EntityType type = EntityType::Person;
    TimeInterval interval;

    friend bool operator==(const TimedEntity&, const TimedEntity&) = default;
};

struct Utterance {
    std::string id;
    std::vector<std::string> tokens;
    std::optional<std::vector<WordAlignment>> alignments;
};

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    ConfusionCounts& operator+=(const ConfusionCounts& o) noexcept {
        tp += o.tp;
        fp += o.fp;
        fn += o.fn;
        return *this;
    }
    friend ConfusionCounts operator+(ConfusionCounts a, const ConfusionCounts& b) noexcept {
        return a += b;
    }
    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

} // namespace deid
