#include "conic/stats.hpp"

namespace conic {

namespace {
Stats g_stats;
}

Stats& stats() { return g_stats; }
void reset_stats() { g_stats = Stats{}; }

}  // namespace conic
