#pragma once

#include <string>
#include <vector>

#include "conic/ints.hpp"
#include "conic/multiseq.hpp"

namespace conic {

enum class SurfaceKind { TildeXn, Xn, TildeX81 };

// A blown-up projective plane.  TildeXn(n): n points on a smooth conic,
// the conic not yet blown down.  Xn(n): the same surface after the
// conic is contracted (only absolute invariants live here).  TildeX81:
// eight points on the conic plus a ninth point off it.
struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::TildeXn;
  int n = 0;

  static SurfaceModel tilde_xn(int n);
  static SurfaceModel xn(int n);
  static SurfaceModel tilde_x81();

  // Number of exceptional classes carried by a class vector.
  int blowups() const { return kind == SurfaceKind::TildeX81 ? 9 : n; }
  // How many of those sit on the conic.
  int conic_blowups() const { return kind == SurfaceKind::TildeX81 ? 8 : n; }

  std::string str() const;
  bool operator==(const SurfaceModel& o) const {
    return kind == o.kind && n == o.n;
  }
};

// dD*[D] - sum mu_i*[E_i].  mu entries may be negative (e.g. the class
// [E_i] itself is encoded with mu_i = -1).
struct SurfaceClass {
  long long dD = 0;
  std::vector<long long> mu;

  bool operator==(const SurfaceClass& o) const {
    return dD == o.dD && mu == o.mu;
  }
  bool operator<(const SurfaceClass& o) const {
    if (dD != o.dD) return dD < o.dD;
    return mu < o.mu;
  }
};

long long intersect(const SurfaceClass& a, const SurfaceClass& b);

// d pairs with the strict transform of the conic, 2D - sum of the
// on-conic exceptional classes.  Undefined once the conic is blown down.
long long pair_E(const SurfaceModel& model, const SurfaceClass& d);

long long pair_c1(const SurfaceClass& d);

// "4:1,1,1,1,1,1"; a class with no exceptional part prints as "4".
std::string class_str(const SurfaceClass& d);
SurfaceClass parse_class(const std::string& text, int blowups);

// Multiplicities sorted descending on the symmetric block of indices
// (all of them for TildeXn, the first eight for TildeX81).  Invariants
// are insensitive to this permutation, so cache keys use it.
SurfaceClass symmetrized(const SurfaceModel& model, const SurfaceClass& d);

}  // namespace conic
