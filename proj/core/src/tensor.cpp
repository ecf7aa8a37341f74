#include "sigrec/tensor.hpp"

#include <cmath>
#include <stdexcept>

#include "sigrec/rng.hpp"

namespace sigrec {

TruncatedTensor::TruncatedTensor(int d_, int L_) : d(d_), L(L_) {
  if (d < 1) throw std::invalid_argument("TruncatedTensor: d must be >= 1");
  if (L < 0) throw std::invalid_argument("TruncatedTensor: L must be >= 0");
  levels.resize(static_cast<std::size_t>(L) + 1);
  for (int n = 0; n <= L; ++n) levels[static_cast<std::size_t>(n)].assign(level_size(d, n), 0.0);
}

TruncatedTensor TruncatedTensor::identity(int d, int L) {
  TruncatedTensor t(d, L);
  t.levels[0][0] = 1.0;
  return t;
}

double& TruncatedTensor::at(const Word& w) {
  if (static_cast<int>(w.size()) > L) throw std::out_of_range("word longer than truncation level");
  return levels[w.size()][word_index(w, d)];
}

double TruncatedTensor::at(const Word& w) const {
  if (static_cast<int>(w.size()) > L) throw std::out_of_range("word longer than truncation level");
  return levels[w.size()][word_index(w, d)];
}

PiecewiseLinearPath::PiecewiseLinearPath(std::vector<double> ts, std::vector<Eigen::VectorXd> pts)
    : times(std::move(ts)), points(std::move(pts)) {
  if (times.size() != points.size())
    throw std::invalid_argument("path: times and points must have equal length");
  if (points.size() < 2) throw std::invalid_argument("path: at least one segment required");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("path: times must be strictly increasing");
  for (const auto& p : points)
    if (p.size() != points.front().size())
      throw std::invalid_argument("path: points must share dimension");
}

TruncatedTensor segment_signature(const Eigen::VectorXd& increment, int L) {
  const int d = static_cast<int>(increment.size());
  TruncatedTensor sig(d, L);
  sig.levels[0][0] = 1.0;
  for (int n = 1; n <= L; ++n) {
    // prev holds increment^{(x)(n-1)}/(n-1)!, so appending one factor and
    // dividing by n yields increment^{(x)n}/n!.
    const auto& prev = sig.levels[static_cast<std::size_t>(n - 1)];
    auto& cur = sig.levels[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < prev.size(); ++i)
      for (int a = 0; a < d; ++a)
        cur[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)] =
            prev[i] * increment[a] / static_cast<double>(n);
  }
  return sig;
}

TruncatedTensor chen_concat(const TruncatedTensor& a, const TruncatedTensor& b) {
  if (a.d != b.d || a.L != b.L)
    throw std::invalid_argument("chen_concat: operands must share d and L");
  TruncatedTensor out(a.d, a.L);
  for (int n = 0; n <= a.L; ++n) {
    auto& cn = out.levels[static_cast<std::size_t>(n)];
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const auto& ap = a.levels[static_cast<std::size_t>(p)];
      const auto& bq = b.levels[static_cast<std::size_t>(q)];
      const std::size_t dq = level_size(a.d, q);
      for (std::size_t i = 0; i < ap.size(); ++i) {
        if (ap[i] == 0.0) continue;
        for (std::size_t j = 0; j < bq.size(); ++j) cn[i * dq + j] += ap[i] * bq[j];
      }
    }
  }
  return out;
}

TruncatedTensor path_signature(const PiecewiseLinearPath& path, int L) {
  TruncatedTensor sig = TruncatedTensor::identity(path.dim(), L);
  for (int s = 0; s < path.segments(); ++s)
    sig = chen_concat(sig, segment_signature(path.increment(s), L));
  return sig;
}

double get_coefficient(const TruncatedTensor& S, const Word& w) { return S.at(w); }

PiecewiseLinearPath random_path(int d, int segments, double amplitude, std::uint64_t seed) {
  if (segments < 1) throw std::invalid_argument("random_path: at least one segment");
  auto rng = rng_stream(seed, "random_path");
  std::uniform_real_distribution<double> unif(-amplitude, amplitude);
  std::vector<double> times;
  std::vector<Eigen::VectorXd> points;
  for (int k = 0; k <= segments; ++k) {
    times.push_back(static_cast<double>(k) / segments);
    Eigen::VectorXd p(d);
    for (int i = 0; i < d; ++i) p[i] = unif(rng);
    points.push_back(std::move(p));
  }
  return PiecewiseLinearPath(std::move(times), std::move(points));
}

}  // namespace sigrec
