#pragma once

#include "deid/core.hpp"

namespace deid::metrics {

enum class DeltaMode { Std, Outer };

// 1 iff both boundary differences are within t.
int delta_std(const TimeInterval& pred, const TimeInterval& gold, double t) noexcept;

// 1 iff pred.start <= gold.start + t and gold.end - t <= pred.end: the
// prediction covers the gold interval up to t of slack inside each edge.
// The absent prediction (0, 0) therefore fails any gold ending after t.
int delta_outer(const TimeInterval& pred, const TimeInterval& gold, double t) noexcept;

int delta(DeltaMode mode, const TimeInterval& pred, const TimeInterval& gold, double t) noexcept;

} // namespace deid::metrics
