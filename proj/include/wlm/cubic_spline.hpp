#ifndef WLM_CUBIC_SPLINE_HPP
#define WLM_CUBIC_SPLINE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace wlm {

// Natural cubic spline over strictly increasing knots. Outside the knot range
// it extrapolates linearly with the boundary slope (the natural spline has
// zero curvature at the ends, so this is the C1 continuation).
template <typename Scalar>
class CubicSpline {
 public:
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  CubicSpline(const Vec& x, const Vec& y) : x_(x), y_(y) {
    const Eigen::Index n = x.size();
    if (n < 2 || y.size() != n) {
      throw std::invalid_argument("CubicSpline: need >= 2 knots, matching sizes");
    }
    for (Eigen::Index i = 1; i < n; ++i) {
      assert(x[i] > x[i - 1]);
    }
    m_ = Vec::Zero(n);
    if (n > 2) {
      // Thomas solve of the tridiagonal system for interior second derivatives
      const Eigen::Index m = n - 2;
      Vec diag(m), rhs(m), sub(m), sup(m);
      for (Eigen::Index i = 0; i < m; ++i) {
        Scalar h0 = x[i + 1] - x[i];
        Scalar h1 = x[i + 2] - x[i + 1];
        sub[i] = h0;
        diag[i] = Scalar(2) * (h0 + h1);
        sup[i] = h1;
        rhs[i] = Scalar(6) * ((y[i + 2] - y[i + 1]) / h1 - (y[i + 1] - y[i]) / h0);
      }
      for (Eigen::Index i = 1; i < m; ++i) {
        Scalar w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
      }
      m_[m] = rhs[m - 1] / diag[m - 1];
      for (Eigen::Index i = m - 1; i >= 1; --i) {
        m_[i] = (rhs[i - 1] - sup[i - 1] * m_[i + 1]) / diag[i - 1];
      }
    }
  }

  Scalar operator()(Scalar t) const {
    const Eigen::Index n = x_.size();
    if (t <= x_[0]) {
      return y_[0] + slope_at(0) * (t - x_[0]);
    }
    if (t >= x_[n - 1]) {
      return y_[n - 1] + slope_at(n - 1) * (t - x_[n - 1]);
    }
    // first knot strictly greater than t
    const Scalar* begin = x_.data();
    Eigen::Index i = std::upper_bound(begin, begin + n, t) - begin - 1;
    Scalar h = x_[i + 1] - x_[i];
    Scalar dt = t - x_[i];
    Scalar b = (y_[i + 1] - y_[i]) / h - h * (Scalar(2) * m_[i] + m_[i + 1]) / Scalar(6);
    return y_[i] + dt * (b + dt * (m_[i] / Scalar(2) + dt * (m_[i + 1] - m_[i]) / (Scalar(6) * h)));
  }

  Vec eval(const Vec& ts) const {
    Vec out(ts.size());
    for (Eigen::Index i = 0; i < ts.size(); ++i) out[i] = (*this)(ts[i]);
    return out;
  }

  Scalar min_x() const { return x_[0]; }
  Scalar max_x() const { return x_[x_.size() - 1]; }

 private:
  Scalar slope_at(Eigen::Index knot) const {
    const Eigen::Index n = x_.size();
    if (knot == 0) {
      Scalar h = x_[1] - x_[0];
      return (y_[1] - y_[0]) / h - h * (Scalar(2) * m_[0] + m_[1]) / Scalar(6);
    }
    Scalar h = x_[n - 1] - x_[n - 2];
    Scalar b = (y_[n - 1] - y_[n - 2]) / h - h * (Scalar(2) * m_[n - 2] + m_[n - 1]) / Scalar(6);
    return b + m_[n - 2] * h + (m_[n - 1] - m_[n - 2]) * h / Scalar(2);
  }

  Vec x_, y_, m_;  // m_ holds second derivatives at the knots
};

}  // namespace wlm

#endif  // WLM_CUBIC_SPLINE_HPP
