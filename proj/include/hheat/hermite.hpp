#pragma once

#include <span>
#include <vector>

#include "hheat/multi_index.hpp"

namespace hheat {

/// Value of the L2-normalized Hermite function h_l at s, computed by the
/// normalized three-term recurrence (no factorials, no overflow).
double hermite_eval_1d(int l, double s);

/// Values h_0(s), ..., h_lmax(s) in one sweep of the recurrence.
std::vector<double> hermite_all_1d(int lmax, double s);

/// Tensor-product value h_k(x) = h_{k_1}(x_1) ... h_{k_d}(x_d).
/// Throws std::invalid_argument on dimension mismatch.
double hermite_eval_nd(const MultiIndex& k, std::span<const double> x);

}  // namespace hheat
