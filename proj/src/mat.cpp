#include "ritzmaj/mat.hpp"

#include <algorithm>
#include <cmath>

#include "ritzmaj/errors.hpp"

namespace ritzmaj {

Mat::Mat(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw InvalidInput("ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

Mat Mat::gaussian(Rng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matmul shape mismatch");
  Mat r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (int j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("add shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

Mat Mat::operator-(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("sub shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= other.data_[i];
  return r;
}

Mat Mat::scaled(double s) const {
  Mat r = *this;
  for (double& v : r.data_) v *= s;
  return r;
}

Mat Mat::cols_slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > cols_) throw InvalidInput("cols_slice out of range");
  Mat r(rows_, count);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

std::vector<double> Mat::col(int j) const {
  std::vector<double> v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

void Mat::set_col(int j, const std::vector<double>& v) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[static_cast<std::size_t>(i)];
}

Mat Mat::hcat(const Mat& other) const {
  if (rows_ != other.rows_) throw InvalidInput("hcat row mismatch");
  Mat r(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int j = 0; j < other.cols_; ++j) r(i, cols_ + j) = other(i, j);
  }
  return r;
}

double Mat::frob_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Mat::symmetry_defect() const {
  double d = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j) d = std::max(d, std::abs((*this)(i, j) - (*this)(j, i)));
  return d;
}

Mat Mat::symmetrized() const {
  Mat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
  return r;
}

}  // namespace ritzmaj
