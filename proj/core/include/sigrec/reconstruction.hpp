#pragma once

#include <Eigen/Dense>
#include <functional>

#include "sigrec/cde.hpp"
#include "sigrec/tensor.hpp"
#include "sigrec/vector_fields.hpp"

namespace sigrec {

struct ReconstructionConfig {
  int L = 3;                 // recover levels 1..L
  int num_points = 0;        // initial conditions; 0 = auto (2*ceil(d^L/N))
  double fit_epsilon = 0.03; // radius of the r-interval used for the fit
  int fit_degree = 0;        // polynomial degree in r; 0 = auto (L + 6)
  SolverConfig solver;
  std::uint64_t seed = 0;
  int max_point_sets = 3;    // resampling attempts when the system is rank-deficient
};

struct LevelResult {
  int level = 0;
  bool singular = false;          // system stayed rank-deficient; no estimates
  int rank = 0;
  std::vector<double> estimated;  // d^level coefficients, lexicographic word order
  std::vector<double> truth;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;     // over coefficients with |truth| > 1e-12
  double system_cond = 0.0;       // sigma_1/sigma_min of the level system
};

struct ReconstructionReport {
  int d = 0;
  int L = 0;
  std::vector<LevelResult> levels;
  bool any_singular = false;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
};

/// m-th derivative of f at 0, from a least-squares polynomial fit of the
/// given degree on Chebyshev nodes in [-eps, eps].
double r_derivative_at_zero(const std::function<double(double)>& f, int m, double eps, int degree);

/// Recovers the signature of the driving path from terminal values of the
/// r-scaled flow alone and compares against the directly computed signature.
/// Per level m the coefficients solve the least-squares system
///   sum_w M[(eta,c), w] S^w = (1/m!) d^m/dr^m [Y_T^r(eta)]_c |_{r=0},
/// where M[(eta,c), w] is component c of the level-m word field at eta.
/// Levels whose system stays rank-deficient after resampling are flagged
/// singular and carry no estimates; throws only if the flow itself cannot
/// be integrated on any point set.
ReconstructionReport reconstruct(const VectorFieldModel& model, const PiecewiseLinearPath& path,
                                 const ReconstructionConfig& cfg = {});

}  // namespace sigrec
