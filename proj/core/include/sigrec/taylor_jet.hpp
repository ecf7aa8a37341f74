#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "sigrec/errors.hpp"

namespace sigrec {

/// Monomial basis for dense truncated polynomials in `nvars` variables of
/// total degree <= `degree`. Shared between all TaylorJet values of the same
/// shape.
class TaylorJetSpace {
public:
  TaylorJetSpace(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(monomials_.size()); }

  const std::vector<int>& exponents(int idx) const { return monomials_[static_cast<std::size_t>(idx)]; }
  int total_degree(int idx) const { return degrees_[static_cast<std::size_t>(idx)]; }

  /// Index of the monomial with the given exponents; -1 when the total
  /// degree exceeds the truncation.
  int index(const std::vector<int>& exponents) const;

  /// Index of monomial idx with exponent of variable v reduced by one;
  /// only valid when that exponent is positive.
  int lower(int idx, int v) const { return lower_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(v)]; }

  /// Index of the product monomial, or -1 when truncated away.
  int product(int a, int b) const;

private:
  static std::uint64_t key(const std::vector<int>& exponents);

  int nvars_;
  int degree_;
  std::vector<std::vector<int>> monomials_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> lower_;
  std::unordered_map<std::uint64_t, int> lookup_;
};

/// A truncated multivariate Taylor polynomial over a shared space. Used as
/// the jet of a smooth function at a point: coefficient of x^beta is
/// (d^beta f)(x0)/beta!.
class TaylorJet {
public:
  explicit TaylorJet(std::shared_ptr<const TaylorJetSpace> space)
      : space_(std::move(space)), c_(static_cast<std::size_t>(space_->size()), 0.0) {}

  const TaylorJetSpace& space() const { return *space_; }
  std::shared_ptr<const TaylorJetSpace> space_ptr() const { return space_; }

  double& coeff(int idx) { return c_[static_cast<std::size_t>(idx)]; }
  double coeff(int idx) const { return c_[static_cast<std::size_t>(idx)]; }
  double value() const { return c_[0]; }

  TaylorJet& operator+=(const TaylorJet& o);
  TaylorJet operator*(const TaylorJet& o) const;

  /// Jet of the partial derivative with respect to variable v (0-based).
  TaylorJet derivative(int v) const;

private:
  std::shared_ptr<const TaylorJetSpace> space_;
  std::vector<double> c_;
};

}  // namespace sigrec
