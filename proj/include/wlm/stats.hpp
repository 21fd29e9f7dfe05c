#ifndef WLM_STATS_HPP
#define WLM_STATS_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

namespace wlm {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Unbiased (N-1) variance; zero for fewer than two values.
template <typename Derived>
typename Derived::Scalar sample_var(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const auto n = v.size();
  if (n < 2) return Scalar(0);
  Scalar m = v.derived().mean();
  Scalar ss = (v.derived().array() - m).square().sum();
  return ss / Scalar(n - 1);
}

template <typename Derived>
typename Derived::Scalar sample_std(const Eigen::DenseBase<Derived>& v) {
  return std::sqrt(sample_var(v));
}

// Biased (N) variance of a mean-removed signal; pairs with spectral_energy.
template <typename Derived>
typename Derived::Scalar population_var(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const auto n = v.size();
  if (n < 1) return Scalar(0);
  Scalar m = v.derived().mean();
  return (v.derived().array() - m).square().sum() / Scalar(n);
}

template <typename Scalar>
Scalar median(std::vector<Scalar> v) {
  if (v.empty()) return Scalar(0);
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return (v[n / 2 - 1] + v[n / 2]) / Scalar(2);
}

}  // namespace wlm

#endif  // WLM_STATS_HPP
