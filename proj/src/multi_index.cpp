#include "hheat/multi_index.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hheat {

int total_degree(const MultiIndex& k) {
  return std::accumulate(k.begin(), k.end(), 0);
}

std::int64_t index_count(int d, int N) {
  if (d < 1) throw std::invalid_argument("index_count: dimension must be >= 1");
  if (N < 0) throw std::invalid_argument("index_count: truncation degree must be >= 0");
  // C(N+d, d), kept in exact integer arithmetic
  std::int64_t c = 1;
  for (int i = 1; i <= d; ++i) c = c * (N + i) / i;
  return c;
}

namespace {

// Emit all k with |k| == m, lexicographically ascending, by choosing k_1 first.
void emit_shell(int d, int m, MultiIndex& scratch, int axis,
                std::vector<MultiIndex>& out) {
  if (axis == d - 1) {
    scratch[axis] = m;
    out.push_back(scratch);
    return;
  }
  for (int v = 0; v <= m; ++v) {
    scratch[axis] = v;
    emit_shell(d, m - v, scratch, axis + 1, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(int d, int N) {
  if (d < 1) throw std::invalid_argument("enumerate_indices: dimension must be >= 1");
  if (N < 0) throw std::invalid_argument("enumerate_indices: truncation degree must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(index_count(d, N)));
  MultiIndex scratch(d, 0);
  for (int m = 0; m <= N; ++m) emit_shell(d, m, scratch, 0, out);
  return out;
}

}  // namespace hheat
