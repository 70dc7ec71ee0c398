#pragma once

#include <span>

#include "tracerec/seq.hpp"

namespace tracerec {

/// Bitwise majority alignment over n output positions.
///
/// Each trace keeps a pointer; every step takes the majority of the pointed
/// symbols and advances the traces that agreed. Exhausted traces abstain, a
/// tied vote gives 1, and a position with no voters keeps its initial 1.
Seq bma(std::size_t n, std::span<const Seq> traces);

} // namespace tracerec
