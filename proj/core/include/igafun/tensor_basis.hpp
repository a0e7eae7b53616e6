#pragma once

#include <vector>

#include "igafun/knot_vector.hpp"

namespace igafun {

/// Values of all basis functions supported at one point.
struct BasisValues {
  int total = 0;
  int dim = 0;
  std::vector<long> index;    // flattened tensor indices (x fastest)
  std::vector<double> value;  // [total]
  std::vector<double> grad;   // [total * dim], parametric
  std::vector<double> hess;   // [total * dim * dim], parametric, filled for max_deriv >= 2

  void resize(int n, int d, int max_deriv) {
    total = n;
    dim = d;
    index.resize(n);
    value.resize(n);
    grad.resize(max_deriv >= 1 ? static_cast<std::size_t>(n) * d : 0);
    hess.resize(max_deriv >= 2 ? static_cast<std::size_t>(n) * d * d : 0);
  }
};

/// Tensor-product B-spline basis, optionally rational (per-function weights).
class TensorBasis {
 public:
  explicit TensorBasis(std::vector<KnotVector> kvs, std::vector<double> weights = {});

  int dim() const { return static_cast<int>(kvs_.size()); }
  const KnotVector& kv(int dir) const { return kvs_[dir]; }
  int size(int dir) const { return kvs_[dir].num_funcs(); }
  long size() const;
  int cells(int dir) const { return kvs_[dir].num_cells(); }
  long num_cells_total() const;
  bool rational() const { return !weights_.empty(); }
  const std::vector<double>& weights() const { return weights_; }

  long flatten(const int* multi) const;
  void unflatten(long idx, int* multi) const;

  /// Evaluate all functions supported at xi (max_deriv in {0,1,2}).
  void eval(const double* xi, int max_deriv, BasisValues& out) const;

  /// Same, with the containing cell per direction already known.
  void eval_on_cell(const int* cell, const double* xi, int max_deriv, BasisValues& out) const;

  /// Dyadic refinement in every direction. Polynomial mode only; the
  /// hierarchy is built over weight-free levels.
  TensorBasis dyadic_refine_basis() const;

 private:
  std::vector<KnotVector> kvs_;
  std::vector<double> weights_;
};

}  // namespace igafun
