#pragma once

#include <cstdint>
#include <vector>

namespace hheat {

/// A d-tuple of non-negative integers indexing the tensor Hermite basis.
using MultiIndex = std::vector<int>;

/// Total degree |k| = k_1 + ... + k_d.
int total_degree(const MultiIndex& k);

/// Number of multi-indices with |k| <= N in dimension d, i.e. C(N+d, d).
std::int64_t index_count(int d, int N);

/// All multi-indices with |k| <= N in graded lexicographic order:
/// ascending |k|, lexicographic within each degree shell. The result for
/// truncation N is a prefix of the result for N+1.
/// Throws std::invalid_argument for d < 1 or N < 0.
std::vector<MultiIndex> enumerate_indices(int d, int N);

}  // namespace hheat
