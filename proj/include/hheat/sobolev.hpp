#pragma once

#include <span>

#include "hheat/basis.hpp"
#include "hheat/coeffs.hpp"

namespace hheat {

enum class FourierDirection { Forward, Inverse };

/// || phi ||_p = sqrt( sum_k (2|k|+d)^{2p} |c_k|^2 ).
double sobolev_norm(const HermiteCoeffs& phi, double p);

/// <phi, psi>_p with the (2|k|+d)^{2p} weights; conjugate-linear in psi.
cdouble sobolev_inner(const HermiteCoeffs& phi, const HermiteCoeffs& psi, double p);

/// Diagonal spectral power: c_k -> (2|k|+d)^p c_k.
HermiteCoeffs apply_Hp(const HermiteCoeffs& phi, double p);

/// Complex spectral power: c_k -> (2|k|+d)^z c_k.
HermiteCoeffs apply_complex_power(const HermiteCoeffs& phi, cdouble z);

/// Creation operator along `axis` (0-based): weight sqrt(2(k_j+1)), shifting
/// degree up. Outflow at |k| = N is dropped and flags the result.
HermiteCoeffs apply_raise(const HermiteCoeffs& phi, int axis);

/// Annihilation operator along `axis`: weight sqrt(2 k_j), degree down.
HermiteCoeffs apply_lower(const HermiteCoeffs& phi, int axis);

/// d/dx_j = (A_j - A_j^+)/2 and multiplication by x_j = (A_j + A_j^+)/2.
HermiteCoeffs apply_derivative(const HermiteCoeffs& phi, int axis);
HermiteCoeffs apply_position(const HermiteCoeffs& phi, int axis);

/// Basis-aware variants used inside hot loops (no table rebuild).
void apply_derivative_inplace(const Basis& basis, std::span<const cdouble> in,
                              std::span<cdouble> out, int axis, bool* shell_touched);

/// Sum of second derivatives (the Laplacian on coefficient space).
HermiteCoeffs apply_laplacian(const HermiteCoeffs& phi);

/// Diagonal unitary: c_k -> (-i)^{|k|} c_k (Forward) or i^{|k|} c_k (Inverse).
HermiteCoeffs fourier(const HermiteCoeffs& phi, FourierDirection dir);

/// Coefficients of the Dirac distribution at x: c_k = h_k(x).
HermiteCoeffs delta_coeffs(std::span<const double> x, int d, int N);

/// The two sides of the m-th order norm-equivalence bound, plus their ratios.
struct NormEquivalenceReport {
  int m = 0;
  double norm_m = 0.0;        // ||phi||_m
  double operator_sum = 0.0;  // sum over |alpha|+|beta| <= 2m of ||x^alpha d^beta phi||_0
  double ratio_sum_over_norm = 0.0;
  double ratio_norm_over_sum = 0.0;
};

/// Computes ||phi||_m against the mixed position/derivative monomial sum.
/// Requires N >= content degree + 2m so the 2m-fold applications keep a clean
/// truncation margin; throws otherwise.
NormEquivalenceReport norm_equivalence_check(const HermiteCoeffs& phi, int m);

}  // namespace hheat
