#include "deid/formats/textgrid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "deid/text.hpp"

namespace deid::formats {

namespace {

// Boundary slack for values printed with limited precision by other tools.
constexpr double kBoundaryEps = 1e-9;

struct Token {
    enum class Kind { Number, String, Flag } kind;
    std::string text;
    double number = 0.0;
    std::size_t line = 0;
};

// Praat's text format is a stream of numbers, "strings" and <flags>; key
// names, '=' signs and [index] markers are decoration and are skipped.
class Tokenizer {
public:
    explicit Tokenizer(std::string_view src) : src_(src) {}

    std::optional<Token> next() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '=' || c == ':') {
                ++pos_;
            } else if (c == '!') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '[') {
                while (pos_ < src_.size() && src_[pos_] != ']') {
                    if (src_[pos_] == '\n') ++line_;
                    ++pos_;
                }
                ++pos_;
            } else if (c == '"') {
                return read_string();
            } else if (c == '<') {
                return read_flag();
            } else if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.') {
                return read_number();
            } else {
                while (pos_ < src_.size() && !is_break(src_[pos_])) ++pos_;
            }
        }
        return std::nullopt;
    }

    std::size_t line() const noexcept { return line_; }

private:
    static bool is_break(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '"' || c == '[' ||
               c == '=' || c == '<';
    }

    Token read_string() {
        const std::size_t start_line = line_;
        std::string out;
        ++pos_;
        while (true) {
            if (pos_ >= src_.size()) throw ParseError(start_line, "unterminated string");
            const char c = src_[pos_++];
            if (c == '"') {
                if (pos_ < src_.size() && src_[pos_] == '"') {
                    out.push_back('"');
                    ++pos_;
                    continue;
                }
                break;
            }
            if (c == '\n') ++line_;
            out.push_back(c);
        }
        return Token{Token::Kind::String, std::move(out), 0.0, start_line};
    }

    Token read_flag() {
        const std::size_t end = src_.find('>', pos_);
        if (end == std::string_view::npos) throw ParseError(line_, "unterminated <flag>");
        Token t{Token::Kind::Flag, std::string(src_.substr(pos_ + 1, end - pos_ - 1)), 0.0, line_};
        pos_ = end + 1;
        return t;
    }

    Token read_number() {
        std::size_t end = pos_;
        while (end < src_.size() && !is_break(src_[end])) ++end;
        std::string_view lit = src_.substr(pos_, end - pos_);
        if (!lit.empty() && lit.front() == '+') lit.remove_prefix(1);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), value);
        if (ec != std::errc() || ptr != lit.data() + lit.size() || !std::isfinite(value)) {
            throw ParseError(line_, "malformed number \"" + std::string(src_.substr(pos_, end - pos_)) + "\"");
        }
        Token t{Token::Kind::Number, std::string(lit), value, line_};
        pos_ = end;
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

class Reader {
public:
    explicit Reader(std::string_view src) : tok_(src) {}

    Token expect(Token::Kind kind, const char* what) {
        auto t = tok_.next();
        if (!t) throw ParseError(tok_.line(), std::string("unexpected end of file, expected ") + what);
        if (t->kind != kind) {
            throw ParseError(t->line, std::string("expected ") + what + ", found \"" + t->text + "\"");
        }
        return *t;
    }
    double number(const char* what) { return expect(Token::Kind::Number, what).number; }
    std::string string(const char* what) { return expect(Token::Kind::String, what).text; }

    std::size_t count(const char* what) {
        const Token t = expect(Token::Kind::Number, what);
        if (t.number < 0 || t.number != std::floor(t.number)) {
            throw ParseError(t.line, std::string(what) + " must be a non-negative integer");
        }
        return static_cast<std::size_t>(t.number);
    }

    std::optional<Token> next() { return tok_.next(); }
    std::size_t line() const noexcept { return tok_.line(); }

private:
    Tokenizer tok_;
};

TextGridTier read_interval_tier(Reader& r, std::size_t tier_line, double doc_min, double doc_max) {
    TextGridTier tier;
    tier.name = r.string("tier name");
    const double tmin = r.number("tier xmin");
    const double tmax = r.number("tier xmax");
    if (tmin > tmax) throw ParseError(tier_line, "tier \"" + tier.name + "\" has xmin > xmax");
    if (tmin < doc_min - kBoundaryEps || tmax > doc_max + kBoundaryEps) {
        throw ParseError(tier_line, "tier \"" + tier.name + "\" extends outside the TextGrid bounds");
    }
    const std::size_t n = r.count("interval count");
    double prev_end = tmin;
    for (std::size_t i = 0; i < n; ++i) {
        const Token lo = r.expect(Token::Kind::Number, "interval xmin");
        const double hi = r.number("interval xmax");
        const std::string label = r.string("interval text");
        if (lo.number > hi) {
            throw ParseError(lo.line, "interval " + std::to_string(i + 1) + " of tier \"" +
                                          tier.name + "\" has xmin > xmax");
        }
        if (lo.number < prev_end - kBoundaryEps) {
            throw ParseError(lo.line, "non-monotone interval boundaries in tier \"" + tier.name +
                                          "\" at interval " + std::to_string(i + 1));
        }
        if (lo.number < tmin - kBoundaryEps || hi > tmax + kBoundaryEps) {
            throw ParseError(lo.line, "interval " + std::to_string(i + 1) + " of tier \"" +
                                          tier.name + "\" lies outside the tier bounds");
        }
        prev_end = hi;
        if (text::trim(label).empty()) continue;
        if (lo.number < 0) throw ParseError(lo.line, "negative interval time");
        tier.entries.push_back({label, TimeInterval{lo.number, hi}});
    }
    return tier;
}

void append_number(std::string& out, double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

void append_quoted(std::string& out, std::string_view s) {
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
}

} // namespace

const TextGridTier* TextGridDocument::find_tier(std::string_view name) const noexcept {
    for (const auto& t : tiers) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

const TextGridTier& TextGridDocument::tier(std::string_view name) const {
    if (const auto* t = find_tier(name)) return *t;
    std::string available;
    for (const auto& n : tier_names()) available += (available.empty() ? "" : ", ") + ("\"" + n + "\"");
    throw Error("no tier named \"" + std::string(name) + "\"; available tiers: " +
                (available.empty() ? "(none)" : available));
}

std::vector<std::string> TextGridDocument::tier_names() const {
    std::vector<std::string> names;
    for (const auto& t : tiers) names.push_back(t.name);
    return names;
}

void TextGridDocument::validate() const {
    if (!(xmin <= xmax)) throw ValidationError("TextGrid xmin > xmax");
    std::set<std::string_view> seen;
    for (const auto& t : tiers) {
        if (!seen.insert(t.name).second) throw ValidationError("duplicate tier name \"" + t.name + "\"");
        validate_alignments(t.entries);
        for (const auto& e : t.entries) {
            if (e.interval.start < xmin - kBoundaryEps || e.interval.end > xmax + kBoundaryEps) {
                throw ValidationError("entry \"" + e.word + "\" of tier \"" + t.name +
                                      "\" lies outside the TextGrid bounds");
            }
        }
    }
}

TextGridDocument parse_textgrid(std::string_view bytes) {
    const std::string src = text::to_utf8(bytes);
    Reader r(src);

    auto first = r.next();
    if (!first || first->kind != Token::Kind::String ||
        (first->text != "ooTextFile" && first->text != "ooTextFile short")) {
        throw ParseError(first ? first->line : 1, "missing File type = \"ooTextFile\" header");
    }
    const Token cls = r.expect(Token::Kind::String, "object class");
    if (cls.text != "TextGrid") {
        throw ParseError(cls.line, "object class is \"" + cls.text + "\", expected \"TextGrid\"");
    }

    TextGridDocument doc;
    const Token xmin = r.expect(Token::Kind::Number, "xmin");
    doc.xmin = xmin.number;
    doc.xmax = r.number("xmax");
    if (doc.xmin > doc.xmax) throw ParseError(xmin.line, "TextGrid xmin > xmax");

    const Token flag = r.expect(Token::Kind::Flag, "<exists> or <absent>");
    std::size_t declared = 0;
    if (flag.text == "exists") {
        declared = r.count("tier count");
    } else if (flag.text != "absent") {
        throw ParseError(flag.line, "unexpected flag <" + flag.text + ">");
    }

    std::set<std::string> names;
    for (std::size_t i = 0; i < declared; ++i) {
        auto cls_tok = r.next();
        if (!cls_tok) {
            throw ParseError(r.line(), "tier count mismatch: header declares " +
                                           std::to_string(declared) + " tiers, found " +
                                           std::to_string(i));
        }
        if (cls_tok->kind != Token::Kind::String) {
            throw ParseError(cls_tok->line, "expected tier class, found \"" + cls_tok->text + "\"");
        }
        if (cls_tok->text == "TextTier") {
            throw ParseError(cls_tok->line, "point tiers (TextTier) are not supported");
        }
        if (cls_tok->text != "IntervalTier") {
            throw ParseError(cls_tok->line, "unknown tier class \"" + cls_tok->text + "\"");
        }
        TextGridTier tier = read_interval_tier(r, cls_tok->line, doc.xmin, doc.xmax);
        if (!names.insert(tier.name).second) {
            throw ParseError(cls_tok->line, "duplicate tier name \"" + tier.name + "\"");
        }
        doc.tiers.push_back(std::move(tier));
    }
    if (auto extra = r.next()) {
        throw ParseError(extra->line, "tier count mismatch: content after the " +
                                          std::to_string(declared) + " declared tiers");
    }
    return doc;
}

std::string write_textgrid(const TextGridDocument& doc) {
    doc.validate();
    std::string out;
    out += "File type = \"ooTextFile\"\nObject class = \"TextGrid\"\n\n";
    out += "xmin = ";
    append_number(out, doc.xmin);
    out += " \nxmax = ";
    append_number(out, doc.xmax);
    out += " \ntiers? <exists> \nsize = " + std::to_string(doc.tiers.size()) + " \nitem []: \n";

    for (std::size_t ti = 0; ti < doc.tiers.size(); ++ti) {
        const auto& tier = doc.tiers[ti];

        std::vector<WordAlignment> intervals;
        double cursor = doc.xmin;
        for (const auto& e : tier.entries) {
            if (e.interval.start > cursor) intervals.push_back({"", {cursor, e.interval.start}});
            intervals.push_back(e);
            cursor = std::max(cursor, e.interval.end);
        }
        if (cursor < doc.xmax) intervals.push_back({"", {cursor, doc.xmax}});

        out += "    item [" + std::to_string(ti + 1) + "]:\n";
        out += "        class = \"IntervalTier\" \n        name = ";
        append_quoted(out, tier.name);
        out += " \n        xmin = ";
        append_number(out, doc.xmin);
        out += " \n        xmax = ";
        append_number(out, doc.xmax);
        out += " \n        intervals: size = " + std::to_string(intervals.size()) + " \n";
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            out += "        intervals [" + std::to_string(i + 1) + "]:\n            xmin = ";
            append_number(out, intervals[i].interval.start);
            out += " \n            xmax = ";
            append_number(out, intervals[i].interval.end);
            out += " \n            text = ";
            append_quoted(out, intervals[i].word);
            out += " \n";
        }
    }
    return out;
}

std::vector<TimedEntity> timed_entities_from_tier(const TextGridTier& tier) {
    std::vector<TimedEntity> out;
    out.reserve(tier.entries.size());
    for (const auto& e : tier.entries) {
        out.push_back({entity_type_from_code(text::trim(e.word)), e.interval});
    }
    return out;
}

TextGridTier tier_from_timed_entities(std::string name, const std::vector<TimedEntity>& entities) {
    TextGridTier tier{std::move(name), {}};
    for (const auto& e : entities) tier.entries.push_back({std::string(entity_code(e.type)), e.interval});
    std::sort(tier.entries.begin(), tier.entries.end(), [](const auto& a, const auto& b) {
        return a.interval.start < b.interval.start;
    });
    return tier;
}

} // namespace deid::formats
