#include "deid/prep/remap.hpp"

#include "deid/text.hpp"

namespace deid::prep {

namespace {

constexpr std::string_view kOverridePrefix = "text:";

std::string_view action_code(const RemapRule& r) {
    return r.deletes() ? std::string_view("DELETE") : entity_code(*r.target);
}

std::optional<RemapRule> parse_action(std::string_view s) {
    if (s == "DELETE") return RemapRule::remove();
    if (auto t = parse_entity_code(s)) return RemapRule::map_to(*t);
    return std::nullopt;
}

std::string override_key(std::string_view entity_text) {
    return text::lowercase(text::trim(entity_text));
}

} // namespace

std::string normalize_label_key(std::string_view label) {
    std::string key = text::lowercase(text::trim(label));
    for (char& c : key) {
        if (c == '_' || c == '-') c = ' ';
    }
    return key;
}

RemapTable RemapTable::defaults() {
    RemapTable t;
    const auto loc = RemapRule::map_to(EntityType::Location);
    const auto org = RemapRule::map_to(EntityType::Organization);
    const auto per = RemapRule::map_to(EntityType::Person);
    const auto cur = RemapRule::map_to(EntityType::Currency);
    const auto money = RemapRule::map_to(EntityType::MoneyAmount);

    for (auto l : {"per", "person", "persons", "personne", "personnes"}) t.add_rule(l, per);
    for (auto l : {"loc", "location", "locations", "world region", "world regions", "country",
                   "countries", "local region", "local regions", "city", "cities"}) {
        t.add_rule(l, loc);
    }
    for (auto l : {"org", "organization", "organizations", "organisation", "organisations", "agent",
                   "agents", "association", "associations", "media", "medias", "company",
                   "companies"}) {
        t.add_rule(l, org);
    }
    for (auto l : {"cur", "currency", "currencies"}) t.add_rule(l, cur);
    for (auto l : {"money", "money amount", "money amounts", "shareholdership", "shareholderships",
                   "financing"}) {
        t.add_rule(l, money);
    }
    for (auto l : {"geopolitical entity", "geopolitical entities"}) t.add_rule(l, RemapRule::remove());
    return t;
}

RemapTable RemapTable::parse(std::string_view src) {
    RemapTable t;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= src.size()) {
        std::size_t eol = src.find('\n', pos);
        if (eol == std::string_view::npos) eol = src.size();
        const std::string_view line = text::trim(src.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const std::size_t eq = line.rfind('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected `label = ACTION`");
        const std::string_view key = text::trim(line.substr(0, eq));
        const std::string_view action = text::trim(line.substr(eq + 1));
        const auto rule = parse_action(action);
        if (!rule) {
            throw ParseError(line_no, "unknown action \"" + std::string(action) +
                                          "\" (expected PER, LOC, ORG, CUR, MONEY or DELETE)");
        }
        try {
            if (key.substr(0, kOverridePrefix.size()) == kOverridePrefix) {
                const std::string_view entity = text::trim(key.substr(kOverridePrefix.size()));
                if (entity.empty()) throw ValidationError("empty override text");
                t.add_override(entity, *rule);
            } else {
                if (key.empty()) throw ValidationError("empty label");
                t.add_rule(key, *rule);
            }
        } catch (const ValidationError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return t;
}

void RemapTable::merge(const RemapTable& other) {
    for (const auto& [k, r] : other.rules_) rules_[k] = r;
    for (const auto& [k, r] : other.overrides_) overrides_[k] = r;
}

void RemapTable::add_rule(std::string_view label, RemapRule rule) {
    if (!rules_.emplace(normalize_label_key(label), rule).second) {
        throw ValidationError("duplicate rule for label \"" + std::string(label) + "\"");
    }
}

void RemapTable::add_override(std::string_view entity_text, RemapRule rule) {
    if (!overrides_.emplace(override_key(entity_text), rule).second) {
        throw ValidationError("duplicate override for \"" + std::string(entity_text) + "\"");
    }
}

std::optional<RemapRule> RemapTable::lookup(std::string_view label, std::string_view entity_text) const {
    if (!entity_text.empty() && !overrides_.empty()) {
        if (auto it = overrides_.find(override_key(entity_text)); it != overrides_.end()) return it->second;
    }
    if (auto it = rules_.find(normalize_label_key(label)); it != rules_.end()) return it->second;
    return std::nullopt;
}

std::string RemapTable::to_string() const {
    std::string out = "# source_label = PER|LOC|ORG|CUR|MONEY|DELETE\n";
    for (const auto& [k, r] : rules_) out += k + " = " + std::string(action_code(r)) + "\n";
    for (const auto& [k, r] : overrides_) {
        out += std::string(kOverridePrefix) + " " + k + " = " + std::string(action_code(r)) + "\n";
    }
    return out;
}

UnmappedLabelsError::UnmappedLabelsError(std::set<std::string> labels)
    : Error([&] {
          std::string msg = "unmapped entity labels:";
          for (const auto& l : labels) msg += " \"" + l + "\"";
          return msg;
      }()),
      labels_(std::move(labels)) {}

std::set<std::string> unmapped_labels(const std::vector<LabeledSpan>& entities, const RemapTable& table) {
    std::set<std::string> missing;
    for (const auto& e : entities) {
        if (!table.lookup(e.label, e.text)) missing.insert(e.label);
    }
    return missing;
}

std::vector<EntitySpan> remap_entities(const std::vector<LabeledSpan>& entities, const RemapTable& table) {
    if (auto missing = unmapped_labels(entities, table); !missing.empty()) {
        throw UnmappedLabelsError(std::move(missing));
    }
    std::vector<EntitySpan> out;
    out.reserve(entities.size());
    for (const auto& e : entities) {
        const RemapRule rule = *table.lookup(e.label, e.text);
        if (rule.deletes()) continue;
        out.push_back({*rule.target, e.start, e.end});
    }
    return out;
}

} // namespace deid::prep
