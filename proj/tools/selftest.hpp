#pragma once

#include "descent/torsor.hpp"

namespace descent {

// Quick end-to-end checks on one curve of the family.
// The seed picks the random parameters of the Heisenberg check.
Report run_selftest(int p, const Cyclo& lambda, int threads, unsigned long long seed, const PrecisionConfig& cfg);

} // namespace descent
