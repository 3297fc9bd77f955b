#pragma once

#include <vector>

#include "coldscat/errors.hpp"

namespace coldscat {

// Natural cubic spline on a strictly increasing grid.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double xq) const;
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  bool empty() const { return x_.empty(); }

 private:
  std::vector<double> x_, y_, m_;  // m_: second derivatives
};

inline CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const int n = static_cast<int>(x_.size());
  if (n < 3 || y_.size() != x_.size())
    throw InvalidArgument("CubicSpline: need >= 3 points");
  for (int i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1]))
      throw InvalidArgument("CubicSpline: grid must be strictly increasing");

  m_.assign(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
  diag[0] = diag[n - 1] = 1.0;
  for (int i = 1; i < n - 1; ++i) {
    const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
    sub[i] = h0 / 6.0;
    diag[i] = (h0 + h1) / 3.0;
    sup[i] = h1 / 6.0;
    rhs[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
  }
  // Thomas algorithm
  for (int i = 1; i < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i)
    m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];
}

inline double CubicSpline::operator()(double xq) const {
  const int n = static_cast<int>(x_.size());
  if (xq <= x_.front()) xq = x_.front();
  if (xq >= x_.back()) xq = x_.back();
  int lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (x_[mid] <= xq ? lo : hi) = mid;
  }
  const double h = x_[hi] - x_[lo];
  const double a = (x_[hi] - xq) / h, b = (xq - x_[lo]) / h;
  return a * y_[lo] + b * y_[hi] +
         ((a * a * a - a) * m_[lo] + (b * b * b - b) * m_[hi]) * h * h / 6.0;
}

}  // namespace coldscat
