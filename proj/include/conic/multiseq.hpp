#pragma once

#include <map>
#include <string>

#include "conic/ints.hpp"

namespace conic {

// Finitely supported sequence of non-negative integers indexed from 1,
// used for tangency profiles.  Only nonzero entries are stored.
class MultiSeq {
 public:
  MultiSeq() = default;

  static MultiSeq unit(int index, long long count = 1);

  // Accepts the literal grammar "1^2,2^1" (comma-separated index^count,
  // bare index means count 1); "" is the zero sequence.
  static MultiSeq parse(const std::string& text);

  // Indices above the cap are rejected at parse/insert time; the cap
  // exists to catch runaway inputs and can be raised for larger runs.
  static int index_cap();
  static void set_index_cap(int cap);

  long long at(int index) const;
  void add(int index, long long count);

  // |a|: number of parts.
  long long size() const;
  // Ia: total weight, sum of index*count.
  long long weight() const;
  // I^a: product index^count.
  Int weight_pow() const;

  bool empty() const { return entries_.empty(); }
  const std::map<int, long long>& entries() const { return entries_; }

  MultiSeq operator+(const MultiSeq& o) const;
  // Entrywise difference; throws std::domain_error if any entry would
  // become negative.
  MultiSeq operator-(const MultiSeq& o) const;
  MultiSeq scaled(long long k) const;

  bool operator==(const MultiSeq& o) const { return entries_ == o.entries_; }
  bool operator!=(const MultiSeq& o) const { return !(*this == o); }
  bool operator<(const MultiSeq& o) const { return entries_ < o.entries_; }

  // Canonical form, ascending indices, explicit counts: "1^2,2^1".
  std::string str() const;

 private:
  std::map<int, long long> entries_;
};

}  // namespace conic
