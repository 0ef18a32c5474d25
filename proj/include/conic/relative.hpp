#pragma once

#include <string>

#include "conic/marking.hpp"

namespace conic {

struct InvariantQuery {
  SurfaceModel model;
  SurfaceClass d;
  int g = 0;
  MultiSeq alpha, beta;

  // Canonical cache key; conic multiplicities are sorted since the
  // invariant is symmetric in the conic points.
  std::string key() const;
};

// I^beta times the squared weights of the floor-to-floor edges.  The
// tangency factor is read off the marking's non-fixed contacts, so the
// value depends only on the type and the underlying diagram.
Int complex_multiplicity(const FloorDiagram& dia, const Marking& m);

// Count of complex curves in class d, genus g, with contact profile
// (alpha fixed, beta moving) along the conic.  Classes with no point
// constraints are served from a closed table of base values; multiple
// covers of an exceptional curve are rejected (the count is unbounded).
// Results are memoized per process; the memo behaves as a linearizable
// map (re-computation of a key is harmless, both results are equal).
Int gw_relative(const InvariantQuery& q);
Int gw_relative_uncached(const InvariantQuery& q);
void clear_relative_cache();

}  // namespace conic
