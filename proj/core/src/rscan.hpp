#pragma once

// Fast exhaustive pair scan for measure_R. Internal to the library; the
// public entry point is measure_R in decomp.hpp, which dispatches here for
// the scheme kinds the scan supports.

#include "deltacup/decomp.hpp"

namespace deltacup::detail {

bool fast_scan_supported(const Scheme& scheme);

RMeasurement measure_r_scan(const Scheme& scheme, int budget);

// Test hook: parses via the engine's letter-at-a-time scanner, for
// cross-checking against decompose().
PieceSeq incremental_decompose(const Scheme& scheme, const Word& g);

} // namespace deltacup::detail
