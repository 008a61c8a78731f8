#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deid/core.hpp"

namespace deid::formats {

// One IntervalTier with its silent (empty-label) intervals removed.
struct TextGridTier {
    std::string name;
    std::vector<WordAlignment> entries;

    friend bool operator==(const TextGridTier&, const TextGridTier&) = default;
};

struct TextGridDocument {
    double xmin = 0.0;
    double xmax = 0.0;
    std::vector<TextGridTier> tiers;

    const TextGridTier* find_tier(std::string_view name) const noexcept;
    // Throws Error listing the available tier names when `name` is missing.
    const TextGridTier& tier(std::string_view name) const;
    std::vector<std::string> tier_names() const;

    // Throws ValidationError on bounds, ordering or duplicate-name violations.
    void validate() const;
};

// Reads Praat "ooTextFile" TextGrids, long or short form, UTF-8 or UTF-16.
// TextTiers (point tiers) are rejected. Errors are ParseErrors carrying the
// offending line number.
TextGridDocument parse_textgrid(std::string_view bytes);

// Writes the long text form. Gaps between entries become empty intervals so
// that every tier covers [xmin, xmax] as Praat expects.
std::string write_textgrid(const TextGridDocument& doc);

// Reads an entity tier whose labels are entity codes (PER, LOC, ...).
std::vector<TimedEntity> timed_entities_from_tier(const TextGridTier& tier);
TextGridTier tier_from_timed_entities(std::string name, const std::vector<TimedEntity>& entities);

} // namespace deid::formats
