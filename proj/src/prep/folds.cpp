#include "deid/prep/folds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "deid/error.hpp"
#include "deid/rng.hpp"

namespace deid::prep {

std::vector<std::vector<std::size_t>> make_folds(std::size_t count, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw ValidationError("fold count must be at least 2, got " + std::to_string(k));
    if (k > count) {
        throw ValidationError("fold count " + std::to_string(k) + " exceeds sentence count " +
                              std::to_string(count));
    }
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    SplitMix64 rng(seed);
    for (std::size_t i = count - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(i + 1)]);
    }
    std::vector<std::vector<std::size_t>> folds(k);
    for (std::size_t p = 0; p < count; ++p) folds[p % k].push_back(order[p]);
    for (auto& f : folds) std::sort(f.begin(), f.end());
    return folds;
}

} // namespace deid::prep
