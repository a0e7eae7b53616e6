#include "igafun/tensor_basis.hpp"

#include <stdexcept>

namespace igafun {

TensorBasis::TensorBasis(std::vector<KnotVector> kvs, std::vector<double> weights)
    : kvs_(std::move(kvs)), weights_(std::move(weights)) {
  if (kvs_.empty() || kvs_.size() > 3)
    throw std::invalid_argument("tensor basis: dimension must be 1..3");
  if (!weights_.empty()) {
    if (static_cast<long>(weights_.size()) != size())
      throw std::invalid_argument("tensor basis: weight count mismatch");
    for (double w : weights_)
      if (!(w > 0.0)) throw std::invalid_argument("tensor basis: weights must be positive");
  }
}

long TensorBasis::size() const {
  long n = 1;
  for (const auto& kv : kvs_) n *= kv.num_funcs();
  return n;
}

long TensorBasis::num_cells_total() const {
  long n = 1;
  for (const auto& kv : kvs_) n *= kv.num_cells();
  return n;
}

long TensorBasis::flatten(const int* multi) const {
  long idx = 0;
  for (int a = dim() - 1; a >= 0; --a) idx = idx * kvs_[a].num_funcs() + multi[a];
  return idx;
}

void TensorBasis::unflatten(long idx, int* multi) const {
  for (int a = 0; a < dim(); ++a) {
    multi[a] = static_cast<int>(idx % kvs_[a].num_funcs());
    idx /= kvs_[a].num_funcs();
  }
}

void TensorBasis::eval(const double* xi, int max_deriv, BasisValues& out) const {
  int cell[3];
  for (int a = 0; a < dim(); ++a) cell[a] = kvs_[a].cell_of(xi[a]);
  eval_on_cell(cell, xi, max_deriv, out);
}

void TensorBasis::eval_on_cell(const int* cell, const double* xi, int max_deriv,
                               BasisValues& out) const {
  const int d = dim();
  double uni[3][3][KnotVector::kMaxDegree + 1];
  int first[3], count[3];
  int total = 1;
  for (int a = 0; a < d; ++a) {
    kvs_[a].basis_on_cell(cell[a], xi[a], max_deriv, uni[a]);
    first[a] = kvs_[a].first_func_on_cell(cell[a]);
    count[a] = kvs_[a].degree() + 1;
    total *= count[a];
  }
  out.resize(total, d, max_deriv);

  int multi[3] = {0, 0, 0};
  for (int t = 0; t < total; ++t) {
    int rem = t;
    for (int a = 0; a < d; ++a) {
      multi[a] = rem % count[a];
      rem /= count[a];
    }
    int gmulti[3];
    for (int a = 0; a < d; ++a) gmulti[a] = first[a] + multi[a];
    out.index[t] = flatten(gmulti);

    double v = 1.0;
    for (int a = 0; a < d; ++a) v *= uni[a][0][multi[a]];
    out.value[t] = v;

    if (max_deriv >= 1) {
      for (int a = 0; a < d; ++a) {
        double g = 1.0;
        for (int b = 0; b < d; ++b) g *= uni[b][b == a ? 1 : 0][multi[b]];
        out.grad[static_cast<std::size_t>(t) * d + a] = g;
      }
    }
    if (max_deriv >= 2) {
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          double h = 1.0;
          for (int c = 0; c < d; ++c) {
            int ord = (c == a ? 1 : 0) + (c == b ? 1 : 0);
            h *= uni[c][ord][multi[c]];
          }
          out.hess[(static_cast<std::size_t>(t) * d + a) * d + b] = h;
        }
      }
    }
  }

  if (!rational()) return;

  // NURBS quotient rule: R = N / W with N_i = w_i B_i, W = sum N_j.
  double W = 0.0, dW[3] = {0, 0, 0}, d2W[9] = {0, 0, 0, 0, 0, 0, 0, 0, 0};
  for (int t = 0; t < total; ++t) {
    const double w = weights_[out.index[t]];
    W += w * out.value[t];
    if (max_deriv >= 1)
      for (int a = 0; a < d; ++a) dW[a] += w * out.grad[static_cast<std::size_t>(t) * d + a];
    if (max_deriv >= 2)
      for (int a = 0; a < d * d; ++a) d2W[a] += w * out.hess[static_cast<std::size_t>(t) * d * d + a];
  }
  for (int t = 0; t < total; ++t) {
    const double w = weights_[out.index[t]];
    const double R = w * out.value[t] / W;
    double dR[3];
    if (max_deriv >= 1) {
      for (int a = 0; a < d; ++a) {
        dR[a] = (w * out.grad[static_cast<std::size_t>(t) * d + a] - R * dW[a]) / W;
      }
    }
    if (max_deriv >= 2) {
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const std::size_t at = (static_cast<std::size_t>(t) * d + a) * d + b;
          out.hess[at] = (w * out.hess[at] - dR[a] * dW[b] - dR[b] * dW[a] - R * d2W[a * d + b]) / W;
        }
    }
    if (max_deriv >= 1)
      for (int a = 0; a < d; ++a) out.grad[static_cast<std::size_t>(t) * d + a] = dR[a];
    out.value[t] = R;
  }
}

TensorBasis TensorBasis::dyadic_refine_basis() const {
  if (rational()) throw std::logic_error("tensor basis: rational refinement not supported");
  std::vector<KnotVector> fine;
  fine.reserve(kvs_.size());
  for (const auto& kv : kvs_) fine.push_back(kv.dyadic_refine().first);
  return TensorBasis(std::move(fine));
}

}  // namespace igafun
