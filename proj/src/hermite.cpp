#include "hheat/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace hheat {

namespace {
constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4) = h_0(0)
}

double hermite_eval_1d(int l, double s) {
  if (l < 0) throw std::invalid_argument("hermite_eval_1d: degree must be >= 0");
  if (!std::isfinite(s)) throw std::invalid_argument("hermite_eval_1d: point must be finite");
  double hm = 0.0;
  double h = kPiQuarterInv * std::exp(-0.5 * s * s);
  for (int j = 0; j < l; ++j) {
    // h_{j+1}(s) = s*sqrt(2/(j+1)) h_j(s) - sqrt(j/(j+1)) h_{j-1}(s)
    const double hp = s * std::sqrt(2.0 / (j + 1)) * h -
                      std::sqrt(static_cast<double>(j) / (j + 1)) * hm;
    hm = h;
    h = hp;
  }
  return h;
}

std::vector<double> hermite_all_1d(int lmax, double s) {
  if (lmax < 0) throw std::invalid_argument("hermite_all_1d: degree must be >= 0");
  if (!std::isfinite(s)) throw std::invalid_argument("hermite_all_1d: point must be finite");
  std::vector<double> vals(static_cast<std::size_t>(lmax) + 1);
  vals[0] = kPiQuarterInv * std::exp(-0.5 * s * s);
  if (lmax == 0) return vals;
  vals[1] = s * std::sqrt(2.0) * vals[0];
  for (int j = 1; j < lmax; ++j) {
    vals[j + 1] = s * std::sqrt(2.0 / (j + 1)) * vals[j] -
                  std::sqrt(static_cast<double>(j) / (j + 1)) * vals[j - 1];
  }
  return vals;
}

double hermite_eval_nd(const MultiIndex& k, std::span<const double> x) {
  if (k.size() != x.size())
    throw std::invalid_argument("hermite_eval_nd: index/point dimension mismatch");
  double v = 1.0;
  for (std::size_t j = 0; j < k.size(); ++j) v *= hermite_eval_1d(k[j], x[j]);
  return v;
}

}  // namespace hheat
