#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hheat/multi_index.hpp"

namespace hheat {

/// Precomputed connectivity of the truncated basis: for every position i and
/// axis j, where k +/- e_j lives and the ladder weights attached to the hop.
/// Built once per (d, N) and shared read-only across threads.
class Basis {
 public:
  Basis(int d, int N);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  std::size_t size() const { return indices_.size(); }

  const std::vector<MultiIndex>& indices() const { return indices_; }
  const MultiIndex& index(std::size_t i) const { return indices_[i]; }
  int shell(std::size_t i) const { return shell_[i]; }      // |k| at position i
  double eigenvalue(std::size_t i) const { return 2.0 * shell_[i] + dim_; }

  /// Position of k + e_j, or -1 when it leaves the truncation.
  int up(std::size_t i, int axis) const { return up_[axis][i]; }
  /// Position of k - e_j, or -1 when k_j = 0.
  int down(std::size_t i, int axis) const { return down_[axis][i]; }
  /// sqrt(2 (k_j + 1)): weight of the raise hop from position i along axis j.
  double raise_weight(std::size_t i, int axis) const { return raise_w_[axis][i]; }
  /// sqrt(2 k_j): weight of the lower hop from position i along axis j.
  double lower_weight(std::size_t i, int axis) const { return lower_w_[axis][i]; }

  /// Position of k, or -1 if outside the truncation.
  int find(const MultiIndex& k) const;

 private:
  int dim_;
  int degree_;
  std::vector<MultiIndex> indices_;
  std::vector<int> shell_;
  std::vector<std::vector<int>> up_, down_;          // [axis][position]
  std::vector<std::vector<double>> raise_w_, lower_w_;
  std::unordered_map<std::uint64_t, int> lookup_;
};

}  // namespace hheat
