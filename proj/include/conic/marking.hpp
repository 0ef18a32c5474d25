#pragma once

#include <string>
#include <vector>

#include "conic/diagram.hpp"
#include "conic/homology.hpp"
#include "conic/multiseq.hpp"

namespace conic {

// One equivalence class of markings.  Sources of equal weight and role
// at the same floor are interchangeable under isomorphism, so marks are
// stored at floor resolution; label values pin everything else.
struct Marking {
  std::vector<int> floor_label;  // per floor, 0 on degree-1 floors
  std::vector<int> iedge_label;  // per internal edge

  struct Contact {
    int w = 1;           // weight of the source edge
    int label = 0;       // A0 label (alpha: 1..|alpha|)
    bool alpha = false;  // fixed-point contact, vertex-marked
    bool operator<(const Contact& o) const {
      if (w != o.w) return w < o.w;
      if (label != o.label) return label < o.label;
      return alpha < o.alpha;
    }
    bool operator==(const Contact& o) const {
      return w == o.w && label == o.label && alpha == o.alpha;
    }
  };
  std::vector<std::vector<Contact>> contacts;  // per floor, sorted

  // ai[i] = floors carrying the weight-1 sources assigned to the i-th
  // exceptional set; the floors within one set are pairwise distinct,
  // so these are genuine sets.
  std::vector<std::vector<int>> ai;

  int n0() const;  // |A0|
};

// Classes grouped by diagram; `placement` additionally groups them the
// way the figures do (diagram + which floors carry the alpha/beta
// contacts, labels stripped).
struct DiagramClasses {
  FloorDiagram diagram;
  std::vector<Marking> classes;
  std::vector<std::string> placement;  // parallel to classes
};

struct MarkedEnumeration {
  std::vector<DiagramClasses> groups;
  long long total_classes() const;
};

// Every marking class of the given class/genus/type, one representative
// each.  Requires Ialpha + Ibeta = pair_E(d); returns no classes when
// d.dD < 1, any d.E_i < 0, or the label set A0 would be empty.
MarkedEnumeration enumerate_marked(const SurfaceModel& model,
                                   const SurfaceClass& d, int genus,
                                   const MultiSeq& alpha,
                                   const MultiSeq& beta);

// Deterministic byte string; equal iff the marked diagrams are
// equivalent (isomorphism fixing A0 labels, exceptional sets setwise).
std::string canonical_class(const FloorDiagram& dia, const Marking& m);

// Grouping key used for per-figure breakdowns.
std::string placement_key(const FloorDiagram& dia, const Marking& m);

std::string dot_marked(const FloorDiagram& dia, const Marking& m);

}  // namespace conic
