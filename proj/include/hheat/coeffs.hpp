#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hheat/multi_index.hpp"

namespace hheat {

using cdouble = std::complex<double>;

/// A truncated tempered distribution: one complex coefficient per multi-index
/// |k| <= N, stored in graded lexicographic order. Value semantics throughout;
/// operations never mutate shared state.
struct HermiteCoeffs {
  int dim = 1;
  int degree = 0;               // truncation N (total degree)
  std::vector<cdouble> c;       // size C(N+dim, dim), enumerate_indices order

  // Ladder-type operators that push mass past |k| = N drop the outflow and
  // mark the result; tests use this to demand clean truncation margins.
  bool shell_touched = false;

  // Metadata only: callers may tag a vector as representing a real
  // distribution. Checked by max_imag(), never enforced.
  bool real_valued = false;

  HermiteCoeffs() = default;
  HermiteCoeffs(int d, int N);

  std::size_t size() const { return c.size(); }
  double max_imag() const;

  /// Zero vector in dimension d, truncation N.
  static HermiteCoeffs zero(int d, int N);
  /// Basis element e_k. Throws if k is out of range.
  static HermiteCoeffs basis_vector(int d, int N, const MultiIndex& k);

  HermiteCoeffs& operator+=(const HermiteCoeffs& other);
  HermiteCoeffs& operator-=(const HermiteCoeffs& other);
  HermiteCoeffs& operator*=(cdouble s);
};

HermiteCoeffs operator+(HermiteCoeffs a, const HermiteCoeffs& b);
HermiteCoeffs operator-(HermiteCoeffs a, const HermiteCoeffs& b);
HermiteCoeffs operator*(cdouble s, HermiteCoeffs a);

/// Euclidean norm of the coefficient vector (the p = 0 Sobolev norm).
double l2_norm(const HermiteCoeffs& a);

/// max_k |a_k - b_k|; throws on shape mismatch.
double max_abs_diff(const HermiteCoeffs& a, const HermiteCoeffs& b);

/// Throws std::invalid_argument unless a and b share (dim, degree).
void require_same_shape(const HermiteCoeffs& a, const HermiteCoeffs& b,
                        const char* where);

}  // namespace hheat
