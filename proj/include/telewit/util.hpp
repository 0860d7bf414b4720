#pragma once

#include <cstdint>
#include <functional>

namespace telewit {

// Deterministic per-index sub-seed (splitmix64 of seed and index), used to
// give every optimizer restart, sweep row and measurement term its own
// reproducible random stream.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Worker cap from the TELEWIT_THREADS environment variable; 1 when unset
// or unparsable.
int env_worker_count();

// Runs body(0..count-1), fanning out over at most `workers` threads.
// Results must be written to per-index slots so the outcome does not depend
// on scheduling. The first exception thrown by any body is rethrown.
void run_indexed(int count, int workers, const std::function<void(int)>& body);

}  // namespace telewit
