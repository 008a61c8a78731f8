#include "deid/tagging/gazetteer.hpp"

#include <fstream>
#include <sstream>

#include "deid/text.hpp"

namespace deid::tagging {

namespace {

std::string phrase_key(std::string_view phrase) {
    std::string key;
    for (const auto& w : text::split_whitespace(text::lowercase(phrase))) {
        if (!key.empty()) key.push_back(' ');
        key += w;
    }
    return key;
}

} // namespace

bool is_number_token(std::string_view token) {
    bool digit = false;
    for (char c : token) {
        if (c >= '0' && c <= '9') {
            digit = true;
        } else if (c != '.' && c != ',') {
            return false;
        }
    }
    return digit && token.front() >= '0' && token.front() <= '9';
}

Gazetteer Gazetteer::parse(std::string_view src) {
    Gazetteer g;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < src.size()) {
        std::size_t eol = src.find('\n', pos);
        if (eol == std::string_view::npos) eol = src.size();
        const std::string_view line = text::trim(src.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const std::size_t sp = line.find_first_of(" \t");
        if (sp == std::string_view::npos) throw ParseError(line_no, "expected `CODE phrase`");
        const auto type = parse_entity_code(line.substr(0, sp));
        if (!type) throw ParseError(line_no, "unknown entity type \"" + std::string(line.substr(0, sp)) + "\"");
        g.add(*type, line.substr(sp + 1));
    }
    return g;
}

Gazetteer Gazetteer::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read lexicon " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse(ss.str());
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

void Gazetteer::add(EntityType type, std::string_view phrase) {
    std::string key = phrase_key(phrase);
    if (key.empty()) return;
    longest_ = std::max(longest_, text::split_whitespace(key).size());
    lexicons_[type].insert(std::move(key));
}

std::vector<EntitySpan> Gazetteer::find_entities(const Tokens& tokens) const {
    std::vector<std::string> lower;
    lower.reserve(tokens.size());
    for (const auto& t : tokens) lower.push_back(text::lowercase(t));

    auto currency_at = [&](std::size_t i) -> std::size_t {
        const auto it = lexicons_.find(EntityType::Currency);
        if (it == lexicons_.end()) return 0;
        std::string key;
        std::size_t best = 0;
        for (std::size_t n = 1; n <= longest_ && i + n <= lower.size(); ++n) {
            if (n > 1) key.push_back(' ');
            key += lower[i + n - 1];
            if (it->second.count(key)) best = n;
        }
        return best;
    };

    std::vector<EntitySpan> spans;
    std::size_t i = 0;
    while (i < lower.size()) {
        if (is_number_token(lower[i])) {
            std::size_t j = i;
            while (j < lower.size() && is_number_token(lower[j])) ++j;
            if (const std::size_t c = currency_at(j); c > 0) {
                spans.push_back({EntityType::MoneyAmount, i, j + c});
                i = j + c;
                continue;
            }
        }
        std::size_t best_len = 0;
        EntityType best_type = EntityType::Person;
        for (const EntityType type : kEntityTypes) {
            const auto it = lexicons_.find(type);
            if (it == lexicons_.end()) continue;
            std::string key;
            for (std::size_t n = 1; n <= longest_ && i + n <= lower.size(); ++n) {
                if (n > 1) key.push_back(' ');
                key += lower[i + n - 1];
                if (n > best_len && it->second.count(key)) {
                    best_len = n;
                    best_type = type;
                }
            }
        }
        if (best_len > 0) {
            spans.push_back({best_type, i, i + best_len});
            i += best_len;
        } else {
            ++i;
        }
    }
    return spans;
}

std::vector<SentenceDistributions> Gazetteer::distributions(const std::vector<Tokens>& sentences) {
    std::vector<SentenceDistributions> out;
    out.reserve(sentences.size());
    for (const auto& tokens : sentences) {
        const auto labels = encode_bio(find_entities(tokens), tokens.size());
        SentenceDistributions dists;
        dists.reserve(labels.size());
        for (const auto& l : labels) dists.push_back(LabelDistribution::one_hot(l));
        out.push_back(std::move(dists));
    }
    return out;
}

std::vector<std::string> Gazetteer::labels() {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < kLabelCount; ++i) out.push_back(Label::from_index(i).str());
    return out;
}

} // namespace deid::tagging
