#include "hheat/basis.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace hheat {

namespace {

// Pack a multi-index into a 64-bit key: 10 bits per axis (entries <= 1023,
// d <= 6, both far beyond desk scale).
std::uint64_t pack(const MultiIndex& k) {
  std::uint64_t key = 0;
  for (int v : k) key = (key << 10) | static_cast<std::uint64_t>(v & 0x3ff);
  return key;
}

}  // namespace

Basis::Basis(int d, int N) : dim_(d), degree_(N), indices_(enumerate_indices(d, N)) {
  if (d > 6 || N > 1023)
    throw std::invalid_argument("Basis: (d, N) outside the supported range (d <= 6, N <= 1023)");
  const std::size_t n = indices_.size();
  shell_.resize(n);
  std::unordered_map<std::uint64_t, int> lookup;
  lookup.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    shell_[i] = total_degree(indices_[i]);
    lookup.emplace(pack(indices_[i]), static_cast<int>(i));
  }

  up_.assign(d, std::vector<int>(n, -1));
  down_.assign(d, std::vector<int>(n, -1));
  raise_w_.assign(d, std::vector<double>(n, 0.0));
  lower_w_.assign(d, std::vector<double>(n, 0.0));

  MultiIndex probe;
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      const int kj = indices_[i][j];
      raise_w_[j][i] = std::sqrt(2.0 * (kj + 1));
      lower_w_[j][i] = std::sqrt(2.0 * kj);
      if (shell_[i] < N) {
        probe = indices_[i];
        ++probe[j];
        up_[j][i] = lookup.at(pack(probe));
      }
      if (kj > 0) {
        probe = indices_[i];
        --probe[j];
        down_[j][i] = lookup.at(pack(probe));
      }
    }
  }

  lookup_ = std::move(lookup);
}

int Basis::find(const MultiIndex& k) const {
  if (static_cast<int>(k.size()) != dim_) return -1;
  const auto it = lookup_.find(pack(k));
  return it == lookup_.end() ? -1 : it->second;
}

}  // namespace hheat
