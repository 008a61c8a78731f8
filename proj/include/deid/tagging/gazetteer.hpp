#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "deid/tagging/tagger.hpp"

namespace deid::tagging {

// Lexicon lookups plus a money pattern. Phrases are lowercase token
// sequences joined by single spaces; matching is longest-first, left to right.
// A run of number tokens followed by a currency word is a money amount; the
// Currency lexicon doubles as the currency-word list.
//
// Lexicon file: one `CODE phrase...` entry per line (CODE in PER, LOC, ORG,
// CUR, MONEY), '#' starts a comment line.
class Gazetteer final : public Tagger {
public:
    Gazetteer() = default;

    static Gazetteer parse(std::string_view lexicon_text);
    static Gazetteer load(const std::string& path);

    // Phrase is lowercased and whitespace-normalized; duplicates are ignored.
    void add(EntityType type, std::string_view phrase);

    const std::map<EntityType, std::set<std::string>>& lexicons() const noexcept { return lexicons_; }

    std::vector<EntitySpan> find_entities(const Tokens& tokens) const;

    std::vector<SentenceDistributions> distributions(const std::vector<Tokens>& sentences) override;
    std::vector<std::string> labels() override;

private:
    std::map<EntityType, std::set<std::string>> lexicons_;
    std::size_t longest_ = 0;
};

// Digits with optional internal '.', ',' or thin/no-break space separators.
bool is_number_token(std::string_view token);

} // namespace deid::tagging
