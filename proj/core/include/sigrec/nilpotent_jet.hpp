#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sigrec/activation.hpp"
#include "sigrec/errors.hpp"

namespace sigrec {

/// Hard cap on the number of simultaneous perturbation directions; 2^k
/// coefficients are stored per jet.
inline constexpr int kJetOrderCap = 8;

/// Truncated Taylor value in k formal perturbation directions, each nilpotent
/// of order two (hyper-dual numbers). The coefficient of the full product
/// eps_1...eps_k of f(x + eps_1 e_{j_1} + ... + eps_k e_{j_k}) is the exact
/// mixed partial d^k f / dx_{j_k}...dx_{j_1}, repeats in the j's included.
class NilpotentJet {
public:
  NilpotentJet() : k_(0), c_(1, 0.0) {}
  explicit NilpotentJet(int k, double value = 0.0) : k_(check(k)), c_(std::size_t{1} << k, 0.0) {
    c_[0] = value;
  }

  static NilpotentJet constant(int k, double value) { return NilpotentJet(k, value); }

  /// The variable part: value + sum of eps_l over the given direction slots.
  static NilpotentJet seed(int k, double value, const std::vector<int>& slots) {
    NilpotentJet j(k, value);
    for (int s : slots) {
      if (s < 0 || s >= k) throw std::invalid_argument("jet seed slot out of range");
      j.c_[std::size_t{1} << s] += 1.0;
    }
    return j;
  }

  int directions() const { return k_; }
  double value() const { return c_[0]; }
  double coeff(std::uint32_t mask) const { return c_[mask]; }

  /// Coefficient of eps_1...eps_k: the order-k mixed partial.
  double top() const { return c_[c_.size() - 1]; }

  NilpotentJet& operator+=(const NilpotentJet& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  NilpotentJet& operator-=(const NilpotentJet& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  NilpotentJet& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend NilpotentJet operator+(NilpotentJet a, const NilpotentJet& b) { return a += b; }
  friend NilpotentJet operator-(NilpotentJet a, const NilpotentJet& b) { return a -= b; }
  friend NilpotentJet operator*(NilpotentJet a, double s) { return a *= s; }
  friend NilpotentJet operator*(double s, NilpotentJet a) { return a *= s; }

  friend NilpotentJet operator*(const NilpotentJet& a, const NilpotentJet& b) {
    NilpotentJet out(a.k_);
    const std::uint32_t full = static_cast<std::uint32_t>(a.c_.size() - 1);
    for (std::uint32_t s = 0; s <= full; ++s) {
      double acc = 0.0;
      std::uint32_t m = s;
      while (true) {  // all submasks m of s, including 0 and s
        acc += a.c_[m] * b.c_[s ^ m];
        if (m == 0) break;
        m = (m - 1) & s;
      }
      out.c_[s] = acc;
    }
    return out;
  }

  /// Composition with an entrywise analytic activation.
  NilpotentJet apply(Activation sigma) const {
    auto der = activation_derivatives(sigma, c_[0], k_);
    return apply_derivatives(der);
  }

  /// Composition with an analytic f given (f(z0), f'(z0), ..., f^{(k)}(z0))
  /// where z0 is the jet's value.
  NilpotentJet apply_derivatives(const std::vector<double>& der) const {
    if (static_cast<int>(der.size()) < k_ + 1)
      throw unsupported_order_error("jet composition: derivative table too short");
    NilpotentJet nil = *this;
    nil.c_[0] = 0.0;
    NilpotentJet out(k_, der[0]);
    NilpotentJet pow(k_, 1.0);
    double fact = 1.0;
    for (int p = 1; p <= k_; ++p) {
      pow = pow * nil;
      fact *= static_cast<double>(p);
      out += pow * (der[static_cast<std::size_t>(p)] / fact);
    }
    return out;
  }

private:
  static int check(int k) {
    if (k < 0 || k > kJetOrderCap)
      throw unsupported_order_error("jet direction count exceeds cap of " +
                                    std::to_string(kJetOrderCap));
    return k;
  }

  int k_;
  std::vector<double> c_;
};

}  // namespace sigrec
