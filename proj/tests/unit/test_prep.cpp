#include <doctest.h>

#include <set>

#include "deid/prep/brat.hpp"
#include "deid/prep/folds.hpp"
#include "deid/prep/normalize.hpp"
#include "deid/prep/remap.hpp"
#include "deid/prep/sentences.hpp"
#include "deid/prep/tokenize.hpp"
#include "deid/rng.hpp"

using namespace deid;
using namespace deid::prep;

namespace {

prep::AnnotatedText annotate(const std::string& text, const std::vector<std::pair<std::string, std::string>>& ents) {
    prep::AnnotatedText a{text, {}};
    std::size_t from = 0;
    for (const auto& [label, surface] : ents) {
        const std::size_t at = text.find(surface, from);
        REQUIRE(at != std::string::npos);
        a.entities.push_back({label, at, at + surface.size()});
        from = at + surface.size();
    }
    return a;
}

} // namespace

TEST_CASE("normalize_text") {
    CHECK(normalize_text("a\t\tb") == "a b");
    CHECK(normalize_text("abc") == "abc");
    CHECK(normalize_text("a\xE2\x80\x89" "b\xC2\xA0\xC2\xA0" "c") == "a b c");
    CHECK(normalize_text("  a  \r\nb ") == "a\nb");
    for (const char* s : {"a\t\tb", " x  y\xC2\xA0z ", "l'été\t est\n\n  là", ""}) {
        CHECK(normalize_text(normalize_text(s)) == normalize_text(s));
    }
}

TEST_CASE("entity offsets follow normalization and drop determiners") {
    const auto in = annotate("Il\t\tjoue  pour la Lazio\xC2\xA0" "depuis 2019.", {{"Organization", "la Lazio"}});
    const auto out = normalize_text(in);
    CHECK(out.text == "Il joue pour la Lazio depuis 2019.");
    REQUIRE(out.entities.size() == 1);
    CHECK(out.entity_text(out.entities[0]) == "Lazio");
    CHECK(normalize_text(out) == out);
}

TEST_CASE("determiner stripping") {
    CHECK(strip_leading_determiners("la Lazio") == "Lazio");
    CHECK(strip_leading_determiners("les gouvernants") == "gouvernants");
    CHECK(strip_leading_determiners("de la Banque") == "Banque");
    CHECK(strip_leading_determiners("l'Élysée") == "Élysée");
    CHECK(strip_leading_determiners("l\xE2\x80\x99" "Élysée") == "Élysée");
    CHECK(strip_leading_determiners("Le Monde") == "Le Monde"); // capitalized: part of the name
    CHECK(strip_leading_determiners("la") == "la");
    CHECK(strip_leading_determiners("des") == "des");
}

TEST_CASE("default remap rules") {
    const auto table = RemapTable::defaults();
    const std::vector<LabeledSpan> in{{"cities", 0, 1, "Lyon"},
                                      {"medias", 2, 4, "Le Monde"},
                                      {"geopolitical entities", 5, 6, "l'Europe"},
                                      {"Person", 7, 8, "Marie"},
                                      {"World_region", 9, 10, "Asie"},
                                      {"shareholderships", 11, 12, "10 %"}};
    const auto out = remap_entities(in, table);
    REQUIRE(out.size() == 5);
    CHECK(out[0] == EntitySpan{EntityType::Location, 0, 1});
    CHECK(out[1] == EntitySpan{EntityType::Organization, 2, 4});
    CHECK(out[2] == EntitySpan{EntityType::Person, 7, 8});
    CHECK(out[3].type == EntityType::Location);
    CHECK(out[4].type == EntityType::MoneyAmount);
}

TEST_CASE("unmapped labels are listed exhaustively") {
    const std::vector<LabeledSpan> in{{"Event", 0, 1, "JO"}, {"Person", 1, 2, "Marie"}, {"Product", 2, 3, "iPhone"},
                                      {"Event", 3, 4, "Mondial"}};
    try {
        remap_entities(in, RemapTable::defaults());
        FAIL("expected UnmappedLabelsError");
    } catch (const UnmappedLabelsError& e) {
        CHECK(e.labels() == std::set<std::string>{"Event", "Product"});
    }
}

TEST_CASE("remap file rules and overrides") {
    auto table = RemapTable::defaults();
    table.merge(RemapTable::parse("# comment\nEvent = DELETE\nProduct = ORG\ntext: Airbus = ORG\ncities = DELETE\n"));
    const std::vector<LabeledSpan> in{{"Event", 0, 1, "JO"}, {"Product", 1, 2, "iPhone"}, {"Person", 2, 3, "Airbus"},
                                      {"cities", 3, 4, "Lyon"}};
    const auto out = remap_entities(in, table);
    REQUIRE(out.size() == 2);
    CHECK(out[0].type == EntityType::Organization);
    CHECK(out[1] == EntitySpan{EntityType::Organization, 2, 3});
    CHECK_THROWS_AS(RemapTable::parse("a = PER\nA = LOC\n"), ParseError);
    CHECK_THROWS_AS(RemapTable::parse("a = GPE\n"), ParseError);
    CHECK_THROWS_AS(RemapTable::parse("no action\n"), ParseError);
    CHECK(RemapTable::parse(table.to_string()).size() == table.size());
}

TEST_CASE("remap preserves count minus deletions") {
    SplitMix64 rng(3);
    const char* const labels[] = {"person", "cities", "geopolitical entity", "media", "currency", "financing"};
    const auto table = RemapTable::defaults();
    for (int i = 0; i < 200; ++i) {
        std::vector<LabeledSpan> in;
        std::size_t deletes = 0;
        for (std::size_t k = 0, n = rng.below(8); k < n; ++k) {
            const char* l = labels[rng.below(6)];
            deletes += std::string(l) == "geopolitical entity";
            in.push_back({l, k, k + 1, "x"});
        }
        CHECK(remap_entities(in, table).size() == in.size() - deletes);
    }
}

TEST_CASE("sentence splitting") {
    CHECK(split_sentences("A b. C d.") == std::vector<std::string>{"A b.", "C d."});
    CHECK(split_sentences("M. Dupont arrive.") == std::vector<std::string>{"M. Dupont arrive."});
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("Mme. Durand et cf. Annexe. Vraiment ?! Oui. 3 fois.") ==
          std::vector<std::string>{"Mme. Durand et cf. Annexe.", "Vraiment ?!", "Oui.", "3 fois."});
    CHECK(split_sentences("il part. puis revient.") == std::vector<std::string>{"il part. puis revient."});
    CHECK(split_sentences("Titre\nCorps du texte.") == std::vector<std::string>{"Titre", "Corps du texte."});
    CHECK(split_sentences("Il a vu J. Martin hier.").size() == 1);
    CHECK(split_sentences("Bonjour à tous. Écoutez.").size() == 2);
}

TEST_CASE("no split inside an entity") {
    const auto a = annotate("Il cite Ets. Dupont Frères. Puis part.", {{"Company", "Ets. Dupont Frères"}});
    const auto s = split_sentences(a);
    REQUIRE(s.size() == 2);
    CHECK(s[0].text == "Il cite Ets. Dupont Frères.");
    REQUIRE(s[0].entities.size() == 1);
    CHECK(s[0].entity_text(s[0].entities[0]) == "Ets. Dupont Frères");
    const auto b = annotate("Fin. Marie vit à Lyon.", {{"Person", "Marie"}, {"City", "Lyon"}});
    const auto t = split_sentences(b);
    REQUIRE(t.size() == 2);
    CHECK(t[1].entity_text(t[1].entities[0]) == "Marie");
    CHECK(t[1].entity_text(t[1].entities[1]) == "Lyon");
}

TEST_CASE("tokenization") {
    CHECK(tokenize_words("Bonjour, je suis là.") ==
          std::vector<std::string>{"Bonjour", ",", "je", "suis", "là", "."});
    CHECK(tokenize_words("c'est l'école qu'il aime") ==
          std::vector<std::string>{"c'", "est", "l'", "école", "qu'", "il", "aime"});
    CHECK(tokenize_words("aujourd'hui") == std::vector<std::string>{"aujourd'hui"});
    CHECK(tokenize_words("M. Dupont") == std::vector<std::string>{"M.", "Dupont"});
    CHECK(tokenize_words("«oui»") == std::vector<std::string>{"«", "oui", "»"});
    CHECK(tokenize_words("l\xE2\x80\x99" "été").size() == 2);
    const auto toks = tokenize("  deux  mots");
    REQUIRE(toks.size() == 2);
    CHECK(toks[1].begin == 8);
    CHECK(toks[1].end == 12);
}

TEST_CASE("annotated tokenization maps entities to tokens") {
    const auto a = annotate("Il aime l'Olympique Lyonnais, dit-il.", {{"Organization", "Olympique Lyonnais"}});
    const auto t = tokenize_annotated(a);
    REQUIRE(t.entities.size() == 1);
    CHECK(t.tokens[t.entities[0].start].text == "Olympique");
    CHECK(t.entities[0].end - t.entities[0].start == 2);
    CHECK(t.entities[0].text == "Olympique Lyonnais");
}

TEST_CASE("folds") {
    const auto ten = make_folds(10, 10, 42);
    for (const auto& f : ten) CHECK(f.size() == 1);
    const auto big = make_folds(4424, 10, 42);
    std::set<std::size_t> all;
    for (const auto& f : big) {
        CHECK((f.size() == 442 || f.size() == 443));
        all.insert(f.begin(), f.end());
    }
    CHECK(all.size() == 4424);
    CHECK(make_folds(4424, 10, 42) == big);
    CHECK(make_folds(4424, 10, 43) != big);
    CHECK_THROWS_AS(make_folds(5, 6, 1), ValidationError);
    CHECK_THROWS_AS(make_folds(5, 1, 1), ValidationError);
    CHECK_THROWS_AS(make_folds(5, 0, 1), ValidationError);
}

TEST_CASE("folds match an independent shuffle") {
    // Computed with a separate Python implementation of the documented shuffle.
    CHECK(make_folds(10, 3, 42) == std::vector<std::vector<std::size_t>>{{0, 3, 7, 8}, {2, 6, 9}, {1, 4, 5}});
    CHECK(make_folds(7, 2, 1) == std::vector<std::vector<std::size_t>>{{0, 2, 4, 5}, {1, 3, 6}});
}

TEST_CASE("brat annotations use code point offsets") {
    const std::string text = "À Lyon, Zoë part.";
    const auto ents = parse_brat_annotations("T1\tCity 2 6\tLyon\nR1\tRel Arg1:T1 Arg2:T2\nT2\tPerson 8 11\tZoë\n", text);
    REQUIRE(ents.size() == 2);
    CHECK(text.substr(ents[0].begin, ents[0].end - ents[0].begin) == "Lyon");
    CHECK(text.substr(ents[1].begin, ents[1].end - ents[1].begin) == "Zoë");
    const auto disc = parse_brat_annotations("T1\tPerson 2 4;8 11\tLy Zoë\n", text);
    CHECK(disc[0].end - disc[0].begin == std::string("Lyon, Zoë").size());
    CHECK_THROWS(parse_brat_annotations("T1\tCity 2 60\tLyon\n", text));
}
