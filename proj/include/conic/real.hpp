#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conic/relative.hpp"

namespace conic {

// Splitting of a contact profile into real and conjugate-pair parts.
// The underlying complex type is (alphaRe + 2*alphaIm, betaRe + 2*betaIm):
// a conjugate pair contributes two contacts of the same multiplicity.
struct RealType {
  MultiSeq alphaRe, betaRe, alphaIm, betaIm;

  MultiSeq alpha_total() const;
  MultiSeq beta_total() const;
  long long weight() const;  // IaRe + IbRe + 2IaIm + 2IbIm
  std::string str() const;
};

// Everything the multiplicity formulas read off one symmetric marked
// diagram: the label involution, the floor involution witnessing the
// symmetry, and the sets and parities derived from them.  When several
// floor involutions witness the same class, all of them are checked to
// produce identical multiplicities before one is kept.
struct RealSymmetry {
  std::vector<int> witness;  // floor involution
  std::vector<int> im_labels;  // labels swapped with their pair partner
  std::vector<std::pair<int, int>> vert_im;  // exchanged floor pairs
  long long r = 0;        // real point constraints off the conic
  long long vert_im1 = 0; // exchanged pairs of degree-1 floors
  int sign_mu = 1;        // product over pairs of (-1)^{o_v}
  int sign_nu = 1;        // product over degree-2 pairs of (-1)^{o'_v}
  Int edge_prod = 1;      // product of weights over marked internal
                          // edges below the real-point labels
  Int ibim = 1;           // tangency factor of the conjugate-pair part
  long long bre_even = 0; // number of even-multiplicity real contacts
  long long r_m = 0;      // edges marked by the real-point labels
  long long rp_m = 0;     // fixed edges marked below them
  bool even_gate = false; // even-weight edges all paired or at infinity
  bool sided[2] = {false, false};
  bool significant = false;
  bool n_matches_2kappa = false;
};

// Decides the (s,kappa)-reality of one marking class and derives the
// symmetry data.  Returns nothing when the class admits no compatible
// floor involution.  Genus must be 0.
std::optional<RealSymmetry> is_real(const FloorDiagram& dia, const Marking& m,
                                    const RealType& rt, int s, int kappa,
                                    const SurfaceModel& model);

Int real_multiplicity_mu(const RealSymmetry& sym);
// Signed count used for the one-sided refinements; requires n = 2*kappa.
Int real_multiplicity_nu(const RealSymmetry& sym, int epsilon);

enum class FwVariant { Plain, Sided, SidedSided };

// Sum of real multiplicities over all (s,kappa)-real classes of the
// given type: Plain sums mu over every real class, Sided restricts to
// epsilon-sided classes, SidedSided sums nu instead.  Returns 0 when
// the type equation fails or no real configuration fits (r < 0).
// Classes without point constraints are served from a closed table.
Int fw(const SurfaceModel& model, int kappa, const SurfaceClass& d, int s,
       const RealType& rt, FwVariant variant = FwVariant::Plain,
       int epsilon = 0);

}  // namespace conic
