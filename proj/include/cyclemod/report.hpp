#pragma once

// Text serializations used by the CLI. Output is byte-deterministic: integers
// in decimal, reals fixed to 6 decimals, keys in a fixed order.

#include <string>

#include "cyclemod/bench.hpp"
#include "cyclemod/ecs.hpp"
#include "cyclemod/seedgen.hpp"

namespace cyclemod {

// Header `k,a_k,d_k`, one row per record.
std::string sequence_csv(const SeedSequence& seq);
// Array of {k, a_k, d_k}. Residues wider than 64 bits are still bare JSON
// numbers, so parse with an arbitrary-precision reader if p > 40.
std::string sequence_json(const SeedSequence& seq);

std::string ecs_json(const EcsReport& report, bool admitted, double threshold);
std::string witness_json(const IdentityWitness& w, bool verified);
std::string timing_json(const TimingStats& stats);
std::string comparison_json(const Comparison& cmp);

// Fixed 6-decimal rendering shared by the JSON writers.
std::string format_fixed6(double value);

}  // namespace cyclemod
