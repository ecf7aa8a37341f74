#include "sigrec/cde.hpp"

#include <cmath>
#include <stdexcept>

#include "sigrec/errors.hpp"
#include "sigrec/trees.hpp"

namespace sigrec {

namespace {

Eigen::VectorXd drift(const VectorFieldModel& model, double r, const Eigen::VectorXd& increment,
                      const Eigen::VectorXd& y) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(model.N);
  for (int i = 1; i <= model.d; ++i) {
    const double di = increment[i - 1];
    if (di != 0.0) f += eval(model, i, y) * di;
  }
  return f * r;
}

// One full pass over the path with the given steps per segment.
Eigen::VectorXd integrate(const CDEProblem& p, int steps_per_segment, Trajectory* traj) {
  Eigen::VectorXd y = p.y0;
  if (traj) {
    traj->times.assign(1, p.path.times.front());
    traj->states.assign(1, y);
  }
  for (int seg = 0; seg < p.path.segments(); ++seg) {
    const Eigen::VectorXd inc = p.path.increment(seg);
    const double t0 = p.path.times[static_cast<std::size_t>(seg)];
    const double t1 = p.path.times[static_cast<std::size_t>(seg) + 1];
    const double h = 1.0 / static_cast<double>(steps_per_segment);
    for (int s = 0; s < steps_per_segment; ++s) {
      const Eigen::VectorXd k1 = drift(p.model, p.r, inc, y);
      const Eigen::VectorXd k2 = drift(p.model, p.r, inc, y + 0.5 * h * k1);
      const Eigen::VectorXd k3 = drift(p.model, p.r, inc, y + 0.5 * h * k2);
      const Eigen::VectorXd k4 = drift(p.model, p.r, inc, y + h * k3);
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      if (!y.allFinite()) throw numeric_overflow_error("cde step produced non-finite state");
      if (traj) {
        traj->times.push_back(t0 + (t1 - t0) * (static_cast<double>(s) + 1.0) * h);
        traj->states.push_back(y);
      }
    }
  }
  return y;
}

}  // namespace

Eigen::VectorXd solve(const CDEProblem& problem, const SolverConfig& cfg, Trajectory* trajectory) {
  if (problem.model.N != problem.y0.size())
    throw std::invalid_argument("solve: model dimension and y0 mismatch");
  if (problem.model.d != problem.path.dim())
    throw std::invalid_argument("solve: model alphabet and path dimension mismatch");
  if (cfg.base_steps < 1 || cfg.abs_tol <= 0.0)
    throw std::invalid_argument("solve: invalid solver config");

  if (problem.r == 0.0) {
    if (trajectory) {
      trajectory->times = problem.path.times;
      trajectory->states.assign(problem.path.times.size(), problem.y0);
    }
    return problem.y0;
  }

  int steps = cfg.base_steps;
  std::optional<Eigen::VectorXd> prev;
  std::string last_error;
  for (int attempt = 0; attempt <= cfg.max_halvings; ++attempt) {
    try {
      Trajectory local;
      Eigen::VectorXd terminal = integrate(problem, steps, trajectory ? &local : nullptr);
      if (!cfg.error_control) {
        if (trajectory) *trajectory = std::move(local);
        return terminal;
      }
      // mixed criterion: abs_tol acts relatively once states leave unit scale
      const double scale = prev ? std::max(1.0, terminal.lpNorm<Eigen::Infinity>()) : 1.0;
      if (prev && (terminal - *prev).lpNorm<Eigen::Infinity>() < cfg.abs_tol * scale) {
        if (trajectory) *trajectory = std::move(local);
        return terminal;
      }
      prev = std::move(terminal);
    } catch (const numeric_overflow_error& e) {
      prev.reset();
      last_error = e.what();
    }
    steps *= 2;
  }
  throw numeric_overflow_error("solve: no convergence within " +
                               std::to_string(cfg.max_halvings) + " refinements" +
                               (last_error.empty() ? "" : " (" + last_error + ")"));
}

double taylor_predict(const VectorFieldModel& model, const TestFunction& g,
                      const Eigen::VectorXd& y, const TruncatedTensor& S, int K) {
  if (K > S.L) throw std::invalid_argument("taylor_predict: K exceeds truncation level");
  double acc = tf_value(g, y);
  for (int k = 1; k <= K; ++k) {
    for (const auto& w : enumerate_words(S.d, k)) {
      // In the flow expansion the first letter of the integration word acts
      // outermost, while apply_word_direct applies its first letter first —
      // hence the reversal.
      const Word rev(w.rbegin(), w.rend());
      acc += apply_word_direct(rev, g, model, y) * get_coefficient(S, w);
    }
  }
  return acc;
}

double r_scaling_taylor_check(const VectorFieldModel& model, const TestFunction& g,
                              const Eigen::VectorXd& y, const TruncatedTensor& S, int K, double r) {
  if (K > S.L) throw std::invalid_argument("r_scaling_taylor_check: K exceeds truncation level");
  // route 1: scale the word terms by r^k
  double route1 = tf_value(g, y);
  double rk = 1.0;
  for (int k = 1; k <= K; ++k) {
    rk *= r;
    for (const auto& w : enumerate_words(S.d, k)) {
      const Word rev(w.rbegin(), w.rend());
      route1 += rk * apply_word_direct(rev, g, model, y) * get_coefficient(S, w);
    }
  }
  // route 2: rescale the signature coefficients and reuse taylor_predict
  TruncatedTensor scaled = S;
  double rn = 1.0;
  for (int n = 1; n <= S.L; ++n) {
    rn *= r;
    for (auto& c : scaled.levels[static_cast<std::size_t>(n)]) c *= rn;
  }
  const double route2 = taylor_predict(model, g, y, scaled, K);
  return std::abs(route1 - route2);
}

}  // namespace sigrec
