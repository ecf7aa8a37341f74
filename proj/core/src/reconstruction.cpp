#include "sigrec/reconstruction.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "sigrec/errors.hpp"
#include "sigrec/independence.hpp"
#include "sigrec/trees.hpp"

namespace sigrec {

namespace {

std::vector<double> chebyshev_nodes(int count, double eps) {
  std::vector<double> nodes(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    nodes[static_cast<std::size_t>(k)] =
        eps * std::cos(M_PI * (2.0 * k + 1.0) / (2.0 * count));
  return nodes;
}

// Least-squares fit in the scaled variable t = r/eps; returns the monomial
// coefficients a_0..a_degree of p(t).
void fit_polynomial(const std::vector<double>& nodes, const Eigen::MatrixXd& values, double eps,
                    int degree, Eigen::MatrixXd* coeffs_out) {
  const int n = static_cast<int>(nodes.size());
  Eigen::MatrixXd V(n, degree + 1);
  for (int i = 0; i < n; ++i) {
    const double t = nodes[static_cast<std::size_t>(i)] / eps;
    double p = 1.0;
    for (int j = 0; j <= degree; ++j) {
      V(i, j) = p;
      p *= t;
    }
  }
  *coeffs_out = V.colPivHouseholderQr().solve(values);
}

}  // namespace

double r_derivative_at_zero(const std::function<double(double)>& f, int m, double eps, int degree) {
  if (m < 0 || m > degree) throw std::invalid_argument("r_derivative_at_zero: order exceeds degree");
  if (eps <= 0.0) throw std::invalid_argument("r_derivative_at_zero: eps must be positive");
  const auto nodes = chebyshev_nodes(2 * degree + 1, eps);
  Eigen::MatrixXd values(static_cast<int>(nodes.size()), 1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    values(static_cast<int>(i), 0) = f(nodes[i]);
  Eigen::MatrixXd coeffs;
  fit_polynomial(nodes, values, eps, degree, &coeffs);
  double fact = 1.0;
  for (int k = 2; k <= m; ++k) fact *= k;
  return fact * coeffs(m, 0) / std::pow(eps, m);
}

ReconstructionReport reconstruct(const VectorFieldModel& model, const PiecewiseLinearPath& path,
                                 const ReconstructionConfig& cfg) {
  if (model.d != path.dim())
    throw std::invalid_argument("reconstruct: model alphabet and path dimension mismatch");
  if (cfg.L < 1) throw std::invalid_argument("reconstruct: L must be at least 1");

  const int d = model.d;
  const int N = model.N;
  const int L = cfg.L;
  const int degree = cfg.fit_degree > 0 ? cfg.fit_degree : L + 6;
  const double eps = cfg.fit_epsilon;

  const int top_words = static_cast<int>(level_size(d, L));
  const int npoints =
      cfg.num_points > 0 ? cfg.num_points : 2 * ((top_words + N - 1) / N);

  const TruncatedTensor truth = path_signature(path, L);
  const auto nodes = chebyshev_nodes(2 * degree + 1, eps);

  ReconstructionReport report;
  report.d = d;
  report.L = L;

  std::string failure;
  bool have_report = false;
  for (int attempt = 0; attempt < cfg.max_point_sets; ++attempt) {
    const auto etas = sample_points(N, npoints, cfg.seed,
                                    "reconstruct/etas/" + std::to_string(attempt));
    const int rows = npoints * N;

    // Terminal values of the r-scaled flow on the fit nodes; row (eta, c),
    // one column per node.
    Eigen::MatrixXd samples(rows, static_cast<int>(nodes.size()));
    try {
      for (int p = 0; p < npoints; ++p) {
        for (std::size_t k = 0; k < nodes.size(); ++k) {
          CDEProblem prob{model, path, etas[static_cast<std::size_t>(p)], nodes[k]};
          samples.block(p * N, static_cast<int>(k), N, 1) = solve(prob, cfg.solver);
        }
      }
    } catch (const numeric_overflow_error& e) {
      failure = e.what();
      continue;
    }
    Eigen::MatrixXd coeffs;  // (degree+1) x rows, coefficients in t = r/eps
    fit_polynomial(nodes, samples.transpose(), eps, degree, &coeffs);

    report.levels.clear();
    report.any_singular = false;
    for (int m = 1; m <= L; ++m) {
      const auto words = enumerate_words(d, m);
      const int cols = static_cast<int>(words.size());
      Eigen::MatrixXd M(rows, cols);
      for (int c = 0; c < cols; ++c) {
        // The coefficient of word w in the flow expansion multiplies the
        // operator with w's first letter outermost; sum_tree_field applies
        // its first letter first, hence the reversal.
        const Word rev(words[static_cast<std::size_t>(c)].rbegin(),
                       words[static_cast<std::size_t>(c)].rend());
        for (int p = 0; p < npoints; ++p)
          M.block(p * N, c, N, 1) = sum_tree_field(rev, model, etas[static_cast<std::size_t>(p)]);
      }
      // (1/m!) Y^{(m)}(0) = a_m / eps^m
      const Eigen::VectorXd b = coeffs.row(m).transpose() / std::pow(eps, m);

      Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const auto& sv = svd.singularValues();
      const double smin = sv(sv.size() - 1);

      LevelResult lr;
      lr.level = m;
      lr.truth = truth.levels[static_cast<std::size_t>(m)];
      int rank = 0;
      for (int k = 0; k < sv.size(); ++k)
        if (sv(k) > 1e-10 * sv(0)) ++rank;
      lr.rank = rank;
      if (rank < cols) {
        lr.singular = true;
        report.any_singular = true;
        report.levels.push_back(std::move(lr));
        continue;
      }
      const Eigen::VectorXd sol = svd.solve(b);
      lr.system_cond = sv(0) / smin;
      lr.estimated.assign(sol.data(), sol.data() + sol.size());
      for (int c = 0; c < cols; ++c) {
        const double e = std::abs(lr.estimated[static_cast<std::size_t>(c)] -
                                  lr.truth[static_cast<std::size_t>(c)]);
        lr.max_abs_error = std::max(lr.max_abs_error, e);
        const double t = std::abs(lr.truth[static_cast<std::size_t>(c)]);
        if (t > 1e-12) lr.max_rel_error = std::max(lr.max_rel_error, e / t);
      }
      report.levels.push_back(std::move(lr));
    }
    have_report = true;
    if (!report.any_singular) break;  // singular levels: resample and retry
  }
  if (!have_report)
    throw numeric_overflow_error("reconstruct: no integrable point set after " +
                                 std::to_string(cfg.max_point_sets) + " attempts" +
                                 (failure.empty() ? "" : " (" + failure + ")"));

  for (const auto& lr : report.levels) {
    report.max_abs_error = std::max(report.max_abs_error, lr.max_abs_error);
    report.max_rel_error = std::max(report.max_rel_error, lr.max_rel_error);
  }
  return report;
}

}  // namespace sigrec
