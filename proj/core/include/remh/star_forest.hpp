#pragma once

#include <vector>

#include "remh/graph.hpp"

namespace remh {

// A star forest pattern: disjoint stars K_{1,t_1}, ..., K_{1,t_r} with
// t_1 >= ... >= t_r >= 1.  H_i denotes the prefix forest on the i largest
// stars; H_0 is empty.  r = 0 encodes the edgeless forest.
class StarForestSpec {
public:
  StarForestSpec() = default;
  explicit StarForestSpec(std::vector<int> leaf_counts);

  int r() const { return static_cast<int>(t_.size()); }
  const std::vector<int>& leaf_counts() const { return t_; }
  int leaf_count(int i) const { return t_[i]; }  // t_{i+1} in 1-based texts
  int vertex_count() const;
  long long edge_count() const;

  // Concrete pattern graph: star i occupies a contiguous block, center
  // first, leaves after.
  Graph pattern() const;
  Graph prefix_pattern(int i) const;  // H_i, 0 <= i <= r

  StarForestSpec prefix(int i) const;
  StarForestSpec without_largest() const;  // H' = H - (largest star)

  bool operator==(const StarForestSpec&) const = default;

private:
  std::vector<int> t_;
};

// Strips isolated vertices, then decomposes into a star forest; throws
// NotStarForestError naming an offending component otherwise.
StarForestSpec decompose_star_forest(const Graph& h);

bool is_star_forest(const Graph& h);

}  // namespace remh
