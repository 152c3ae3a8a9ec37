#pragma once

#include <string>
#include <vector>

#include "qsi/basics.hpp"

namespace qsi {

// Weakly decreasing integer sequence with explicit length: (2,1) of length 2
// and (2,1,0) of length 3 are distinct values.
struct Partition {
  IVec parts;

  Partition() = default;
  explicit Partition(IVec p) : parts(std::move(p)) {}

  size_t length() const { return parts.size(); }
  Int sum() const { return ivec_total(parts); }
  bool weakly_decreasing() const;
  bool nonnegative() const;

  Partition padded(size_t n) const;   // extend with zeros; error if shrinking below nonzeros
  Partition trimmed() const;          // drop trailing zeros
  Partition shifted(Int a) const;     // add a to every part

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string str() const;
};

void require_partition(const Partition& p, const char* who);

// Number of jumps j(p) = #{ i in [1, n-1] : p_i != p_{i+1} }.
int partition_jumps(const Partition& p);

// Horn partition of a subset I = {i_1 < ... < i_r} of {1..n}: entry_k = i_k - k,
// listed weakly decreasing (largest first).
Partition lambda_of_subset(const std::vector<int>& I, int n);

// P(x,y) for nondecreasing x, y: the region above-left of the plotted points
// (x_1,y_1)..(x_n,y_n), read as a partition with y_n rows.
Partition staircase_partition(const IVec& x, const IVec& y);

std::string partition_to_json(const Partition& p);
Partition parse_partition(const std::string& text);

}  // namespace qsi
