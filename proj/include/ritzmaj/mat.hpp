#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ritzmaj/rng.hpp"

namespace ritzmaj {

/// Dense real matrix, row-major. Small sizes only (desk scale, n <= 64).
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0);
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(int n);
  static Mat diag(const std::vector<double>& d);
  static Mat gaussian(Rng& rng, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& other) const;
  Mat operator+(const Mat& other) const;
  Mat operator-(const Mat& other) const;
  Mat scaled(double s) const;

  /// Columns [first, first+count) as a new matrix.
  Mat cols_slice(int first, int count) const;
  std::vector<double> col(int j) const;
  void set_col(int j, const std::vector<double>& v);

  /// [this | other] side by side.
  Mat hcat(const Mat& other) const;

  double frob_norm() const;
  double max_abs() const;

  /// max |a_ij - a_ji|.
  double symmetry_defect() const;
  /// (A + A^T)/2.
  Mat symmetrized() const;

  const std::vector<double>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace ritzmaj
