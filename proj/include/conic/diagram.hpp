#pragma once

#include <array>
#include <string>
#include <vector>

#include "conic/ints.hpp"

namespace conic {

// Weighted oriented acyclic graph with two layers: floors (degree 1 or
// 2) and sources.  Sources have a single outgoing edge; they carry no
// identity beyond the floor they feed and the edge weight, so they are
// stored as a per-floor weight multiset.
struct FloorDiagram {
  std::vector<int> fdeg;  // per floor, 1 or 2

  struct IEdge {
    int tail = 0, head = 0, w = 1;
    bool operator==(const IEdge& o) const {
      return tail == o.tail && head == o.head && w == o.w;
    }
    bool operator<(const IEdge& o) const {
      if (tail != o.tail) return tail < o.tail;
      if (head != o.head) return head < o.head;
      return w < o.w;
    }
  };
  std::vector<IEdge> ie;  // floor-to-floor edges, kept sorted

  std::vector<std::vector<int>> src;  // per floor, sorted descending weights

  int floors() const { return (int)fdeg.size(); }
  int degree() const;
  int genus() const { return (int)ie.size() - floors() + 1; }

  long long in_weight(int f) const;
  long long out_weight(int f) const;
  long long source_weight(int f) const;

  // Checks every structural requirement: degrees, divergence, the
  // degree-1-floors-are-sinks rule, acyclicity, connectivity, b1.
  bool is_valid(std::string* why = nullptr) const;

  // Floor permutations preserving degrees, source multisets and the
  // weighted edge multiset.  Identity is always first.
  std::vector<std::vector<int>> floor_autos() const;

  // Relabels floors so the serialized form is minimal; diagrams compare
  // equal up to isomorphism iff their canonical serializations match.
  void normalize();
  std::string canon() const;
  std::string serialize() const;

  // true when the floors can be ordered strictly by the edge relation
  bool acyclic() const;
  bool connected() const;

  std::string dot() const;
};

// All diagrams of the given degree and genus whose source edges carry
// exactly the given weight multiset, up to isomorphism.  The default
// profile is all weight-1 edges (2*degree of them).
std::vector<FloorDiagram> enumerate_diagrams(int degree, int genus,
                                             std::vector<int> source_weights);
std::vector<FloorDiagram> enumerate_diagrams(int degree, int genus);

}  // namespace conic
