#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sigrec/words.hpp"

namespace sigrec {

/// Graded coefficients up to truncation level L over the alphabet {1..d}.
/// Level n holds d^n reals in lexicographic word order. For signature-valued
/// tensors the level-0 entry is 1.
struct TruncatedTensor {
  int d = 0;
  int L = 0;
  std::vector<std::vector<double>> levels;

  TruncatedTensor() = default;
  TruncatedTensor(int d_, int L_);

  /// Unit of the tensor product: (1, 0, 0, ...).
  static TruncatedTensor identity(int d, int L);

  double& at(const Word& w);
  double at(const Word& w) const;
};

/// The driver X: strictly increasing timestamps and K+1 points in R^d.
struct PiecewiseLinearPath {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> points;

  PiecewiseLinearPath() = default;
  PiecewiseLinearPath(std::vector<double> ts, std::vector<Eigen::VectorXd> pts);

  int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
  int segments() const { return static_cast<int>(points.size()) - 1; }
  Eigen::VectorXd increment(int seg) const { return points[seg + 1] - points[seg]; }
  Eigen::VectorXd total_increment() const { return points.back() - points.front(); }
};

/// Signature of a straight-line path with the given increment, truncated at
/// level L: the level-n block is increment^{tensor n}/n!.
TruncatedTensor segment_signature(const Eigen::VectorXd& increment, int L);

/// Truncated tensor product: level n of the result is sum_{p+q=n} a_p (x) b_q.
TruncatedTensor chen_concat(const TruncatedTensor& a, const TruncatedTensor& b);

/// Exact truncated signature of a piecewise-linear path: fold of
/// segment_signature over segments via chen_concat.
TruncatedTensor path_signature(const PiecewiseLinearPath& path, int L);

/// Coefficient of the word w (the iterated integral over dX^w).
double get_coefficient(const TruncatedTensor& S, const Word& w);

/// Deterministic random driver: `segments`+1 points drawn uniformly from
/// [-amplitude, amplitude]^d, equally spaced times on [0, 1].
PiecewiseLinearPath random_path(int d, int segments, double amplitude, std::uint64_t seed);

}  // namespace sigrec
