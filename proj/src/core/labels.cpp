#include "deid/labels.hpp"

#include <cmath>

namespace deid {

std::size_t Label::index() const noexcept {
    if (kind == Kind::Outside) return 0;
    return 1 + 2 * static_cast<std::size_t>(type) + (kind == Kind::Inside ? 1 : 0);
}

Label Label::from_index(std::size_t index) {
    if (index >= kLabelCount) throw ValidationError("label index out of range");
    if (index == 0) return outside();
    const auto type = static_cast<EntityType>((index - 1) / 2);
    return (index - 1) % 2 == 0 ? begin(type) : inside(type);
}

std::string Label::str() const {
    if (kind == Kind::Outside) return "O";
    return std::string(kind == Kind::Begin ? "B-" : "I-") + std::string(entity_code(type));
}

std::optional<Label> parse_label(std::string_view tag) noexcept {
    if (tag == "O") return Label::outside();
    if (tag.size() < 3 || tag[1] != '-') return std::nullopt;
    auto type = parse_entity_code(tag.substr(2));
    if (!type) return std::nullopt;
    if (tag[0] == 'B') return Label::begin(*type);
    if (tag[0] == 'I') return Label::inside(*type);
    return std::nullopt;
}

Label label_from_string(std::string_view tag) {
    if (auto l = parse_label(tag)) return *l;
    throw ValidationError("unknown label \"" + std::string(tag) + "\"");
}

LabelDistribution LabelDistribution::from_array(const std::array<double, kLabelCount>& probs,
                                                double tolerance) {
    double sum = 0.0;
    for (std::size_t i = 0; i < kLabelCount; ++i) {
        const double p = probs[i];
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            throw ValidationError("probability of " + Label::from_index(i).str() +
                                  " outside [0, 1]: " + std::to_string(p));
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > tolerance) {
        throw ValidationError("label probabilities sum to " + std::to_string(sum) +
                              ", expected 1");
    }
    return LabelDistribution(probs);
}

LabelDistribution LabelDistribution::from_map(const std::map<std::string, double>& probs,
                                              double tolerance) {
    std::array<double, kLabelCount> arr{};
    for (const auto& [tag, p] : probs) {
        arr[label_from_string(tag).index()] = p;
    }
    return from_array(arr, tolerance);
}

LabelDistribution LabelDistribution::one_hot(Label label) {
    std::array<double, kLabelCount> arr{};
    arr[label.index()] = 1.0;
    return LabelDistribution(arr);
}

Label LabelDistribution::argmax() const noexcept {
    std::size_t best = 0;
    for (std::size_t i = 1; i < kLabelCount; ++i) {
        if (probs_[i] > probs_[best]) best = i;
    }
    return Label::from_index(best);
}

std::map<std::string, double> LabelDistribution::to_map() const {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < kLabelCount; ++i) {
        if (probs_[i] != 0.0) out.emplace(Label::from_index(i).str(), probs_[i]);
    }
    return out;
}

} // namespace deid
