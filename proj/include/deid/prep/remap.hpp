#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "deid/core.hpp"

namespace deid::prep {

// MapTo(type) or Delete.
struct RemapRule {
    std::optional<EntityType> target; // nullopt deletes the entity

    static RemapRule map_to(EntityType t) { return {t}; }
    static RemapRule remove() { return {std::nullopt}; }
    bool deletes() const noexcept { return !target.has_value(); }

    friend bool operator==(const RemapRule&, const RemapRule&) = default;
};

// Source-label rules plus per-instance overrides keyed by entity text.
// Keys are matched case-insensitively with '_' and '-' read as spaces.
//
// File format, one rule per line, '#' starts a comment line:
//   cities = LOC
//   geopolitical entities = DELETE
//   text: la France = LOC        (override for one entity string)
class RemapTable {
public:
    // Default wholesale rules: regions, countries and cities become LOC;
    // agents, associations, medias and companies become ORG; shareholderships
    // and financing become MONEY; geopolitical entities are deleted; the five
    // kept types map to themselves.
    static RemapTable defaults();

    // Rules from `text` only. Duplicate keys raise a ParseError.
    static RemapTable parse(std::string_view text);

    // Rules from `other` replace same-key rules here.
    void merge(const RemapTable& other);

    // Throws ValidationError if the label already has a rule.
    void add_rule(std::string_view label, RemapRule rule);
    void add_override(std::string_view entity_text, RemapRule rule);

    // Override by entity text first, then the label rule.
    std::optional<RemapRule> lookup(std::string_view label, std::string_view entity_text = {}) const;

    std::string to_string() const;

    std::size_t size() const noexcept { return rules_.size() + overrides_.size(); }

private:
    std::map<std::string, RemapRule> rules_;
    std::map<std::string, RemapRule> overrides_;
};

std::string normalize_label_key(std::string_view label);

// A labelled entity over [start, end) in whatever unit the caller uses
// (token indices in the prep pipeline). `text` feeds override lookups.
struct LabeledSpan {
    std::string label;
    std::size_t start = 0;
    std::size_t end = 0;
    std::string text;
};

class UnmappedLabelsError : public Error {
public:
    explicit UnmappedLabelsError(std::set<std::string> labels);
    const std::set<std::string>& labels() const noexcept { return labels_; }

private:
    std::set<std::string> labels_;
};

// Labels (as written) with no rule and no override.
std::set<std::string> unmapped_labels(const std::vector<LabeledSpan>& entities, const RemapTable& table);

// MapTo rules rewrite the type, Delete rules drop the entity; offsets are
// kept. Throws UnmappedLabelsError listing every unknown label.
std::vector<EntitySpan> remap_entities(const std::vector<LabeledSpan>& entities, const RemapTable& table);

} // namespace deid::prep
