#include "igafun/knot_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace igafun {

namespace {

// Single Boehm knot insertion; returns the bidiagonal coefficient map.
Eigen::SparseMatrix<double, Eigen::RowMajor> insert_knot(
    int p, std::vector<double>& knots, double u) {
  const int n = static_cast<int>(knots.size()) - p - 1;
  // span k with knots[k] <= u < knots[k+1]
  int k = p;
  const int last = static_cast<int>(knots.size()) - p - 2;
  while (k < last && knots[k + 1] <= u) ++k;

  Eigen::SparseMatrix<double, Eigen::RowMajor> a(n + 1, n);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(2 * n);
  for (int i = 0; i <= n; ++i) {
    if (i <= k - p) {
      trip.emplace_back(i, i, 1.0);
    } else if (i <= k) {
      const double den = knots[i + p] - knots[i];
      const double alpha = den > 0.0 ? (u - knots[i]) / den : 0.0;
      if (alpha != 0.0) trip.emplace_back(i, i, alpha);
      if (alpha != 1.0) trip.emplace_back(i, i - 1, 1.0 - alpha);
    } else {
      trip.emplace_back(i, i - 1, 1.0);
    }
  }
  a.setFromTriplets(trip.begin(), trip.end());
  knots.insert(std::upper_bound(knots.begin(), knots.end(), u), u);
  return a;
}

}  // namespace

KnotVector::KnotVector(int degree, std::vector<double> knots)
    : p_(degree), knots_(std::move(knots)) {
  if (p_ < 0 || p_ > kMaxDegree) throw std::invalid_argument("knot vector: degree out of range");
  const int n = static_cast<int>(knots_.size()) - p_ - 1;
  if (n < p_ + 1) throw std::invalid_argument("knot vector: too few knots");
  for (std::size_t i = 1; i < knots_.size(); ++i)
    if (knots_[i] < knots_[i - 1]) throw std::invalid_argument("knot vector: not non-decreasing");
  if (knots_.front() != 0.0 || knots_.back() != 1.0)
    throw std::invalid_argument("knot vector: must span [0,1]");
  for (int i = 0; i <= p_; ++i)
    if (knots_[i] != 0.0 || knots_[knots_.size() - 1 - i] != 1.0)
      throw std::invalid_argument("knot vector: not open");
  for (std::size_t k = 0; k + 1 < knots_.size(); ++k)
    if (knots_[k] < knots_[k + 1]) span_knot_.push_back(static_cast<int>(k));
}

KnotVector KnotVector::uniform(int degree, int cells) {
  if (cells < 1) throw std::invalid_argument("knot vector: need at least one cell");
  std::vector<double> knots;
  knots.reserve(2 * (degree + 1) + cells - 1);
  for (int i = 0; i <= degree; ++i) knots.push_back(0.0);
  for (int i = 1; i < cells; ++i) knots.push_back(static_cast<double>(i) / cells);
  for (int i = 0; i <= degree; ++i) knots.push_back(1.0);
  return KnotVector(degree, std::move(knots));
}

int KnotVector::cell_of(double xi) const {
  if (xi < 0.0 || xi > 1.0) throw std::invalid_argument("knot vector: point outside [0,1]");
  if (xi >= 1.0) return num_cells() - 1;
  int lo = 0, hi = num_cells() - 1;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (cell_lo(mid) <= xi) lo = mid; else hi = mid - 1;
  }
  return lo;
}

void KnotVector::func_support(int i, int& c0, int& c1) const {
  if (i < 0 || i >= num_funcs()) throw std::out_of_range("knot vector: function index");
  // cells whose span knot index k satisfies k - p <= i <= k
  c0 = -1;
  c1 = -2;
  for (int c = 0; c < num_cells(); ++c) {
    const int k = span_knot_[c];
    if (k - p_ <= i && i <= k) {
      if (c0 < 0) c0 = c;
      c1 = c;
    }
  }
}

void KnotVector::basis_on_cell(int cell, double xi, int max_deriv,
                               double out[3][kMaxDegree + 1]) const {
  const int k = span_knot_[cell];
  // Triangle of values for degrees 0..p over the local window; row q holds
  // B_{k-q+j,q}(xi), j = 0..q. Division by zero is defined as zero.
  double tri[kMaxDegree + 1][kMaxDegree + 1];
  tri[0][0] = 1.0;
  for (int q = 1; q <= p_; ++q) {
    for (int j = 0; j <= q; ++j) {
      const int i = k - q + j;
      double v = 0.0;
      if (j > 0) {
        const double den = knots_[i + q] - knots_[i];
        if (den > 0.0) v += (xi - knots_[i]) / den * tri[q - 1][j - 1];
      }
      if (j < q) {
        const double den = knots_[i + q + 1] - knots_[i + 1];
        if (den > 0.0) v += (knots_[i + q + 1] - xi) / den * tri[q - 1][j];
      }
      tri[q][j] = v;
    }
  }
  for (int j = 0; j <= p_; ++j) out[0][j] = tri[p_][j];

  auto deriv_row = [&](const double* lower, int q, double* dst) {
    // derivative of degree-q functions from degree-(q-1) data on this span
    for (int j = 0; j <= q; ++j) {
      const int i = k - q + j;
      double v = 0.0;
      const double den_l = knots_[i + q] - knots_[i];
      const double den_r = knots_[i + q + 1] - knots_[i + 1];
      if (j > 0 && den_l > 0.0) v += q / den_l * lower[j - 1];
      if (j < q && den_r > 0.0) v -= q / den_r * lower[j];
      dst[j] = v;
    }
  };

  if (max_deriv >= 1) {
    if (p_ == 0) {
      out[1][0] = 0.0;
    } else {
      deriv_row(tri[p_ - 1], p_, out[1]);
    }
  }
  if (max_deriv >= 2) {
    if (p_ <= 1) {
      for (int j = 0; j <= p_; ++j) out[2][j] = 0.0;
    } else {
      double d1_lower[kMaxDegree + 1];
      // first derivatives of the degree-(p-1) functions on this span
      for (int j = 0; j <= p_ - 1; ++j) {
        const int i = k - (p_ - 1) + j;
        double v = 0.0;
        const double den_l = knots_[i + p_ - 1] - knots_[i];
        const double den_r = knots_[i + p_] - knots_[i + 1];
        if (j > 0 && den_l > 0.0) v += (p_ - 1) / den_l * tri[p_ - 2][j - 1];
        if (j < p_ - 1 && den_r > 0.0) v -= (p_ - 1) / den_r * tri[p_ - 2][j];
        d1_lower[j] = v;
      }
      deriv_row(d1_lower, p_, out[2]);
    }
  }
}

double KnotVector::eval(int i, double xi, int deriv_order) const {
  if (i < 0 || i >= num_funcs()) throw std::out_of_range("knot vector: function index");
  if (xi < 0.0 || xi > 1.0) throw std::invalid_argument("knot vector: point outside [0,1]");
  if (deriv_order < 0 || deriv_order > 2) throw std::invalid_argument("knot vector: derivative order");
  const int cell = cell_of(xi);
  const int first = first_func_on_cell(cell);
  if (i < first || i > first + p_) return 0.0;
  double out[3][kMaxDegree + 1];
  basis_on_cell(cell, xi, deriv_order, out);
  return out[deriv_order][i - first];
}

std::vector<double> KnotVector::greville() const {
  std::vector<double> g(num_funcs());
  for (int i = 0; i < num_funcs(); ++i) {
    if (p_ == 0) {
      g[i] = 0.5 * (knots_[i] + knots_[i + 1]);
      continue;
    }
    double s = 0.0;
    for (int j = 1; j <= p_; ++j) s += knots_[i + j];
    g[i] = s / p_;
  }
  return g;
}

std::pair<KnotVector, RefinementMatrix> KnotVector::dyadic_refine() const {
  std::vector<double> midpoints;
  midpoints.reserve(num_cells());
  for (int c = 0; c < num_cells(); ++c) midpoints.push_back(0.5 * (cell_lo(c) + cell_hi(c)));

  std::vector<double> work = knots_;
  Eigen::SparseMatrix<double, Eigen::RowMajor> r;
  bool first = true;
  for (double u : midpoints) {
    auto a = insert_knot(p_, work, u);
    if (first) {
      r = a;
      first = false;
    } else {
      r = (a * r).pruned();
    }
  }
  return {KnotVector(p_, std::move(work)), RefinementMatrix(std::move(r))};
}

}  // namespace igafun
