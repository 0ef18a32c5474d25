#pragma once

#include <cstdint>

namespace conic {

// Global work counters surfaced by the CLI --stats flag.  Counting is
// best-effort bookkeeping, not part of any invariant value.
struct Stats {
  long long diagrams = 0;   // floor diagrams enumerated (pre-dedup output)
  long long markings = 0;   // marking classes enumerated
  long long cache_hits = 0; // memo or persistent-cache hits
};

Stats& stats();
void reset_stats();

}  // namespace conic
