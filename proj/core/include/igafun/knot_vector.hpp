#pragma once

#include <Eigen/Sparse>
#include <utility>
#include <vector>

namespace igafun {

/// Sparse coarse-to-fine coefficient map produced by knot insertion.
/// Rows index fine basis functions, columns coarse ones.
class RefinementMatrix {
 public:
  RefinementMatrix() = default;
  explicit RefinementMatrix(Eigen::SparseMatrix<double, Eigen::RowMajor> m)
      : m_(std::move(m)) {}

  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }

  Eigen::VectorXd apply(const Eigen::VectorXd& coarse) const { return m_ * coarse; }

  const Eigen::SparseMatrix<double, Eigen::RowMajor>& matrix() const { return m_; }

 private:
  Eigen::SparseMatrix<double, Eigen::RowMajor> m_;
};

/// Open knot vector on [0,1] with the B-spline evaluation primitives.
///
/// Basis functions follow the Cox-de Boor recursion with half-open spans;
/// the right endpoint is attached to the last nonempty span so that the
/// final function evaluates to one at xi = 1.
class KnotVector {
 public:
  static constexpr int kMaxDegree = 15;

  KnotVector(int degree, std::vector<double> knots);

  /// Uniform open knot vector with `cells` nonempty spans.
  static KnotVector uniform(int degree, int cells);

  int degree() const { return p_; }
  int num_funcs() const { return static_cast<int>(knots_.size()) - p_ - 1; }
  int num_cells() const { return static_cast<int>(span_knot_.size()); }
  const std::vector<double>& knots() const { return knots_; }

  double cell_lo(int cell) const { return knots_[span_knot_[cell]]; }
  double cell_hi(int cell) const { return knots_[span_knot_[cell] + 1]; }

  /// Cell containing xi (right-open; xi = 1 maps to the last cell).
  int cell_of(double xi) const;

  /// Index of the first of the degree+1 functions supported on `cell`.
  int first_func_on_cell(int cell) const { return span_knot_[cell] - p_; }

  /// Inclusive cell range [c0, c1] on which function i is nonzero.
  void func_support(int i, int& c0, int& c1) const;

  /// Single basis function value or derivative (order 0, 1 or 2).
  double eval(int i, double xi, int deriv_order = 0) const;

  /// All degree+1 functions supported on `cell`, evaluated at xi.
  /// out[k] holds the k-th derivative row, k = 0..max_deriv (max 2).
  void basis_on_cell(int cell, double xi, int max_deriv,
                     double out[3][kMaxDegree + 1]) const;

  /// Knot averages; non-decreasing, first 0, last 1.
  std::vector<double> greville() const;

  /// Bisect every nonempty span. Returns the refined vector and the
  /// two-scale matrix mapping coarse to fine coefficients.
  std::pair<KnotVector, RefinementMatrix> dyadic_refine() const;

 private:
  int p_;
  std::vector<double> knots_;
  std::vector<int> span_knot_;  // knot index of every nonempty span
};

}  // namespace igafun
