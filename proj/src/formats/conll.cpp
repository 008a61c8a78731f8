#include "deid/formats/conll.hpp"

#include "deid/text.hpp"

namespace deid::formats {

std::vector<RawConllSentence> parse_conll_raw(std::string_view bytes) {
    if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);

    std::vector<RawConllSentence> out;
    RawConllSentence current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        if (eol == std::string_view::npos) eol = bytes.size();
        std::string_view line = bytes.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (text::trim(line).empty()) {
            if (!current.tokens.empty()) out.push_back(std::move(current));
            current = {};
            continue;
        }
        const std::size_t tab = line.rfind('\t');
        if (tab == std::string_view::npos) {
            throw ParseError(line_no, "expected token<TAB>tag");
        }
        const std::string_view token = line.substr(0, tab);
        const std::string_view tag = line.substr(tab + 1);
        if (token.find('\t') != std::string_view::npos) {
            throw ParseError(line_no, "token contains a tab");
        }
        if (token.empty()) throw ParseError(line_no, "empty token");
        const bool shaped = tag == "O" || (tag.size() > 2 && (tag[0] == 'B' || tag[0] == 'I') && tag[1] == '-');
        if (!shaped) throw ParseError(line_no, "malformed tag \"" + std::string(tag) + "\"");
        current.tokens.emplace_back(token);
        current.tags.emplace_back(tag);
        current.lines.push_back(line_no);
    }
    if (!current.tokens.empty()) out.push_back(std::move(current));
    return out;
}

std::vector<ConllSentence> parse_conll(std::string_view bytes) {
    std::vector<ConllSentence> out;
    for (auto& raw : parse_conll_raw(bytes)) {
        ConllSentence s;
        s.tokens = std::move(raw.tokens);
        s.tags.reserve(raw.tags.size());
        for (std::size_t i = 0; i < raw.tags.size(); ++i) {
            auto label = parse_label(raw.tags[i]);
            if (!label) throw ParseError(raw.lines[i], "unknown tag \"" + raw.tags[i] + "\"");
            s.tags.push_back(*label);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string write_conll(const std::vector<ConllSentence>& sentences) {
    std::string out;
    for (const auto& s : sentences) {
        if (s.tokens.size() != s.tags.size()) throw ValidationError("token/tag count mismatch");
        for (std::size_t i = 0; i < s.tokens.size(); ++i) {
            const auto& tok = s.tokens[i];
            if (tok.empty() || tok.find_first_of("\t\n") != std::string::npos) {
                throw ValidationError("token \"" + tok + "\" cannot be written as CoNLL");
            }
            out += tok;
            out += '\t';
            out += s.tags[i].str();
            out += '\n';
        }
        out += '\n';
    }
    return out;
}

} // namespace deid::formats
