#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bv/forest.hpp"

namespace bv {

using HedgeWord = std::vector<uint32_t>;

// A hedge assigns a leaf count >= 1 to every position, all but finitely many
// equal to 1. Equivalently: the image of a forest under counting leaves per
// tree. Only the values >= 2 are stored.
class Hedge {
 public:
  Hedge() = default;

  static Hedge nu(uint32_t i);  // value 2 at position i
  static Hedge from_word(const HedgeWord& w);

  uint32_t value(uint32_t i) const;
  const std::map<uint32_t, uint32_t>& active() const { return vals_; }
  uint32_t active_end() const;
  bool trivial() const { return vals_.empty(); }
  uint64_t weight() const;  // sum of (value - 1); the monoid length

  // position whose block contains the given leaf
  uint32_t leaf_root(uint64_t leaf) const;
  // first leaf of the block at position i
  uint64_t block_start(uint32_t i) const;

  HedgeWord ascending_word() const;  // strictly increasing indices
  // run-length descending form: (index, multiplicity), indices strictly
  // decreasing; value at index = multiplicity + 1
  std::vector<std::pair<uint32_t, uint32_t>> descending_runs() const;
  HedgeWord descending_word() const;

  void set_value(uint32_t i, uint32_t v);

  bool operator==(const Hedge&) const = default;

 private:
  std::map<uint32_t, uint32_t> vals_;
};

Hedge hedge_mul(const Hedge& h, const Hedge& k);
Hedge leaf_count(const Forest& f);

// Interval partition of the naturals with cofinitely many singletons,
// stored as the sorted list of non-singleton blocks [first, last].
struct IntervalPartition {
  std::vector<std::pair<uint64_t, uint64_t>> blocks;
  bool operator==(const IntervalPartition&) const = default;
};

IntervalPartition to_partition(const Hedge& h);
Hedge from_partition(const IntervalPartition& p);
IntervalPartition partition_meet(const IntervalPartition& a, const IntervalPartition& b);
IntervalPartition partition_join(const IntervalPartition& a, const IntervalPartition& b);

bool hedge_divides_left(const Hedge& h, const Hedge& k);   // k = h * x
bool hedge_divides_right(const Hedge& h, const Hedge& k);  // k = x * h

Hedge hedge_gclf(const Hedge& h, const Hedge& k);  // pointwise min
Hedge hedge_lcrm(const Hedge& h, const Hedge& k);  // pointwise max
Hedge hedge_gcrf(const Hedge& h, const Hedge& k);  // partition meet
Hedge hedge_lclm(const Hedge& h, const Hedge& k);  // partition join

}  // namespace bv
