#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "deid/tagging/bio.hpp"

namespace deid::testing {

double uniform(SplitMix64& rng, double lo, double hi) { return lo + (hi - lo) * rng.unit(); }

std::vector<TimedEntity> random_timed(SplitMix64& rng, std::size_t count, double horizon, bool disjoint) {
    std::vector<TimedEntity> out;
    if (disjoint) {
        // Cut the horizon into count slots, one entity per slot.
        const double slot = horizon / std::max<std::size_t>(count, 1);
        for (std::size_t i = 0; i < count; ++i) {
            const double a = i * slot + uniform(rng, 0.0, slot * 0.4);
            const double b = a + uniform(rng, slot * 0.1, slot * 0.55);
            out.push_back({kEntityTypes[rng.below(5)], {a, b}});
        }
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const double a = uniform(rng, 0.0, horizon * 0.9);
        const double b = std::min(horizon, a + uniform(rng, 0.05, horizon * 0.3));
        out.push_back({kEntityTypes[rng.below(5)], {a, b}});
    }
    return out;
}

std::vector<TimedEntity> jitter_predictions(SplitMix64& rng, const std::vector<TimedEntity>& gold,
                                            std::size_t max_count, double horizon) {
    std::vector<TimedEntity> out;
    for (const auto& g : gold) {
        if (out.size() == max_count) break;
        if (rng.below(6) == 0) continue;
        const double a = std::max(0.0, g.interval.start + uniform(rng, -0.5, 0.5));
        const double b = std::max(a + 0.01, g.interval.end + uniform(rng, -0.5, 0.5));
        out.push_back({kEntityTypes[rng.below(5)], {a, b}});
    }
    while (out.size() < max_count && rng.below(3) == 0) {
        const double a = uniform(rng, 0.0, horizon);
        out.push_back({kEntityTypes[rng.below(5)], {a, a + uniform(rng, 0.05, 1.5)}});
    }
    return out;
}

std::vector<EntitySpan> random_spans(SplitMix64& rng, std::size_t tokens) {
    std::vector<EntitySpan> out;
    std::size_t i = 0;
    while (i < tokens) {
        if (rng.below(3) == 0) {
            const std::size_t len = 1 + rng.below(std::min<std::size_t>(3, tokens - i));
            out.push_back({kEntityTypes[rng.below(5)], i, i + len});
            i += len + 1;
        } else {
            ++i;
        }
    }
    return out;
}

std::vector<EntitySpan> perturb_spans(SplitMix64& rng, const std::vector<EntitySpan>& gold, std::size_t tokens) {
    std::vector<EntitySpan> out;
    for (auto s : gold) {
        switch (rng.below(5)) {
        case 0: // dropped
            continue;
        case 1:
            s.type = kEntityTypes[rng.below(5)];
            break;
        case 2:
            if (s.size() > 1) --s.token_end;
            break;
        default:
            break;
        }
        out.push_back(s);
    }
    // Spurious single-token predictions on free tokens.
    std::vector<bool> used(tokens, false);
    for (const auto& s : out) std::fill(used.begin() + s.token_start, used.begin() + s.token_end, true);
    for (std::size_t i = 0; i < tokens; ++i) {
        const bool left_free = i == 0 || !used[i - 1];
        const bool right_free = i + 1 == tokens || !used[i + 1];
        if (!used[i] && left_free && right_free && rng.below(8) == 0) {
            out.push_back({kEntityTypes[rng.below(5)], i, i + 1});
            used[i] = true;
        }
    }
    std::sort(out.begin(), out.end(), [](const EntitySpan& a, const EntitySpan& b) {
        return a.token_start < b.token_start;
    });
    return out;
}

LabelDistribution random_distribution(SplitMix64& rng) {
    std::array<double, kLabelCount> p{};
    // Mix of peaked and flat rows so every threshold regime shows up.
    const double sharp = uniform(rng, 0.5, 6.0);
    for (auto& v : p) v = std::exp(sharp * uniform(rng, -1.0, 1.0));
    if (rng.below(2) == 0) p[0] *= uniform(rng, 1.0, 20.0);
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& v : p) v /= sum;
    return LabelDistribution::from_array(p);
}

namespace {

const char* const kWords[] = {"bonjour", "Marie", "Lyon", "à", "l'école", "\"cité\"", "été", "«oui»", "2000",
                              "euros", "ça", "Zoë", "naïve", "x", "c'est-à-dire"};

} // namespace

formats::TextGridDocument random_textgrid(SplitMix64& rng) {
    formats::TextGridDocument doc;
    doc.xmin = 0.0;
    doc.xmax = std::round(uniform(rng, 2.0, 30.0) * 1000.0) / 1000.0;
    const std::size_t tiers = 1 + rng.below(3);
    for (std::size_t k = 0; k < tiers; ++k) {
        formats::TextGridTier tier;
        tier.name = k == 0 ? "words" : (k == 1 ? "entities" : "phones ü");
        double t = uniform(rng, 0.0, 0.5);
        while (true) {
            const double len = uniform(rng, 0.01, 0.9);
            if (t + len > doc.xmax) break;
            tier.entries.push_back({kWords[rng.below(std::size(kWords))], {t, t + len}});
            // Adjacent entries some of the time, gaps otherwise.
            t += len + (rng.below(2) ? 0.0 : uniform(rng, 0.001, 0.4));
        }
        doc.tiers.push_back(std::move(tier));
    }
    return doc;
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string write_short_textgrid(const formats::TextGridDocument& doc) {
    std::string out = "File type = \"ooTextFile\"\nObject class = \"TextGrid\"\n\n";
    out += num(doc.xmin) + "\n" + num(doc.xmax) + "\n<exists>\n" + std::to_string(doc.tiers.size()) + "\n";
    for (const auto& tier : doc.tiers) {
        // Short form still needs the gaps filled.
        std::vector<WordAlignment> items;
        double t = doc.xmin;
        for (const auto& e : tier.entries) {
            if (e.interval.start > t) items.push_back({"", {t, e.interval.start}});
            items.push_back(e);
            t = e.interval.end;
        }
        if (t < doc.xmax) items.push_back({"", {t, doc.xmax}});
        out += "\"IntervalTier\"\n" + quote(tier.name) + "\n" + num(doc.xmin) + "\n" + num(doc.xmax) + "\n" +
               std::to_string(items.size()) + "\n";
        for (const auto& e : items) {
            out += num(e.interval.start) + "\n" + num(e.interval.end) + "\n" + quote(e.word) + "\n";
        }
    }
    return out;
}

formats::AudioBuffer random_audio(SplitMix64& rng, std::uint32_t rate, std::uint16_t channels, std::size_t frames) {
    formats::AudioBuffer a{rate, channels, {}};
    a.samples.resize(frames * channels);
    for (auto& s : a.samples) s = static_cast<std::int16_t>(static_cast<int>(rng.below(65536)) - 32768);
    return a;
}

std::vector<formats::ConllSentence> random_conll(SplitMix64& rng) {
    std::vector<formats::ConllSentence> out;
    const std::size_t n = 1 + rng.below(6);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t len = 1 + rng.below(15);
        formats::ConllSentence s;
        for (std::size_t k = 0; k < len; ++k) s.tokens.push_back(kWords[rng.below(std::size(kWords))]);
        s.tags = tagging::encode_bio(random_spans(rng, len), len);
        out.push_back(std::move(s));
    }
    return out;
}

FaFixture fa_fixture() {
    // Gold word k spans [k + 0.2, k + 0.7]. Offsets (start, end) per word and
    // whether it passes at t = 0.01 / 0.10 / 0.25:
    //   k  offsets          std        outer
    //   0  ( 0,     0    )  1 1 1      1 1 1
    //   1  (+0.005, -0.005) 1 1 1      1 1 1
    //   2  (-0.05, +0.05)   0 1 1      1 1 1
    //   3  (+0.05, -0.05)   0 1 1      0 1 1
    //   4  (-0.2,  +0.3)    0 0 0      1 1 1
    //   5  (+0.15,  0    )  0 0 1      0 0 1
    //   6  (-0.3,  -0.3)    0 0 0      0 0 0
    //   7  (+0.3,  +0.3)    0 0 0      0 0 0
    //   8  (-0.08, +0.02)   0 1 1      1 1 1
    //   9  (+0.02, -0.2)    0 0 1      0 0 1
    // std: 0.2 / 0.5 / 0.7, outer: 0.5 / 0.6 / 0.8.
    static const double offsets[10][2] = {{0, 0},       {0.005, -0.005}, {-0.05, 0.05}, {0.05, -0.05},
                                          {-0.2, 0.3},  {0.15, 0},       {-0.3, -0.3},  {0.3, 0.3},
                                          {-0.08, 0.02}, {0.02, -0.2}};
    static const char* const words[10] = {"un", "deux", "trois", "quatre", "cinq",
                                          "six", "sept", "huit", "neuf", "dix"};
    FaFixture f{{"fixture", {}}, {"fixture", {}}};
    for (int k = 0; k < 10; ++k) {
        const TimeInterval g{k + 0.2, k + 0.7};
        f.gold.words.push_back({words[k], g});
        f.pred.words.push_back({words[k], {g.start + offsets[k][0], g.end + offsets[k][1]}});
    }
    return f;
}

} // namespace deid::testing
