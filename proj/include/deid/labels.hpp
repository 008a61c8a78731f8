#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "deid/core.hpp"

namespace deid {

// One BIO tag: O, B-X or I-X.
struct Label {
    enum class Kind { Outside, Begin, Inside };

    Kind kind = Kind::Outside;
    EntityType type = EntityType::Person; // meaningless for Outside

    static Label outside() noexcept { return {}; }
    static Label begin(EntityType t) noexcept { return {Kind::Begin, t}; }
    static Label inside(EntityType t) noexcept { return {Kind::Inside, t}; }

    bool is_outside() const noexcept { return kind == Kind::Outside; }

    // Position in the fixed label order
    // O, B-PER, I-PER, B-LOC, I-LOC, B-ORG, I-ORG, B-CUR, I-CUR, B-MONEY, I-MONEY.
    std::size_t index() const noexcept;
    static Label from_index(std::size_t index);

    std::string str() const;

    friend bool operator==(const Label& a, const Label& b) noexcept {
        return a.kind == b.kind && (a.kind == Kind::Outside || a.type == b.type);
    }
};

inline constexpr std::size_t kLabelCount = 11;

std::optional<Label> parse_label(std::string_view tag) noexcept;
// Throws ValidationError on anything outside the label vocabulary.
Label label_from_string(std::string_view tag);

// Probability vector over the fixed label order.
class LabelDistribution {
public:
    static constexpr double kSumTolerance = 1e-6;

    LabelDistribution() = default;

    // Validates probabilities in [0, 1] summing to 1 within `tolerance`.
    static LabelDistribution from_array(const std::array<double, kLabelCount>& probs,
                                        double tolerance = kSumTolerance);
    static LabelDistribution from_map(const std::map<std::string, double>& probs,
                                      double tolerance = kSumTolerance);
    static LabelDistribution one_hot(Label label);

    double operator[](Label label) const noexcept { return probs_[label.index()]; }
    double outside() const noexcept { return probs_[0]; }
    const std::array<double, kLabelCount>& probs() const noexcept { return probs_; }

    // Highest-probability label; ties go to the earlier label in the fixed order.
    Label argmax() const noexcept;

    // Non-zero entries keyed by tag string.
    std::map<std::string, double> to_map() const;

private:
    explicit LabelDistribution(const std::array<double, kLabelCount>& probs) : probs_(probs) {}

    std::array<double, kLabelCount> probs_{1.0};
};

} // namespace deid
