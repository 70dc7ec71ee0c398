#pragma once

#include <map>
#include <span>
#include <vector>

#include "tracerec/seq.hpp"

namespace tracerec {

/// Sequence -> coefficient map; only nonzero coefficients are stored.
using InfiltrationPoly = std::map<Seq, BigCount>;

/// Largest total input length accepted by infiltration().
inline constexpr std::size_t kInfiltrationMaxLength = 24;

/// f ↑ g over any alphabet, by dynamic programming over prefix pairs.
/// Throws GuardExceeded when |f| + |g| > 24.
InfiltrationPoly infiltration(const Seq& f, const Seq& g);

/// Left fold f_1 ↑ f_2 ↑ ... ↑ f_m. An empty list gives the unit {e: 1}.
/// Throws GuardExceeded when the total length exceeds 24.
InfiltrationPoly infiltration(std::span<const Seq> seqs);

/// P ↑ g extended linearly over the terms of P.
InfiltrationPoly infiltration(const InfiltrationPoly& p, const Seq& g);

/// Coefficient <P, w>.
BigCount coefficient(const InfiltrationPoly& p, const Seq& w);

} // namespace tracerec
