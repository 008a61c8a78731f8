#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace deid::prep {

// Partitions indices [0, count) into k folds. Indices are shuffled with a
// Fisher-Yates pass driven by SplitMix64(seed) (j = next() % (i + 1), i from
// count - 1 down to 1); shuffled position p goes to fold p % k. Each fold is
// returned sorted. Fold sizes differ by at most one.
//
// Throws ValidationError if k < 2 or k > count.
std::vector<std::vector<std::size_t>> make_folds(std::size_t count, std::size_t k, std::uint64_t seed);

} // namespace deid::prep
