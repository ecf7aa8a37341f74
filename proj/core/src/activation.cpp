#include "sigrec/activation.hpp"

#include <cmath>
#include <stdexcept>

namespace sigrec {

std::string to_string(Activation a) {
  switch (a) {
    case Activation::Identity: return "identity";
    case Activation::Tanh: return "tanh";
    case Activation::Exp: return "exp";
  }
  return "?";
}

Activation activation_from_string(const std::string& s) {
  if (s == "identity") return Activation::Identity;
  if (s == "tanh") return Activation::Tanh;
  if (s == "exp") return Activation::Exp;
  throw std::invalid_argument("unknown activation: " + s);
}

double activation_value(Activation a, double u) {
  switch (a) {
    case Activation::Identity: return u;
    case Activation::Tanh: return std::tanh(u);
    case Activation::Exp: return std::exp(u);
  }
  return 0.0;
}

std::vector<double> activation_derivatives(Activation a, double u, int order) {
  std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
  switch (a) {
    case Activation::Identity:
      out[0] = u;
      if (order >= 1) out[1] = 1.0;
      break;
    case Activation::Exp: {
      const double e = std::exp(u);
      for (auto& v : out) v = e;
      break;
    }
    case Activation::Tanh: {
      // Taylor coefficients c_n of tanh at u: (n+1)c_{n+1} = [n==0] - sum c_k c_{n-k}.
      std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
      c[0] = std::tanh(u);
      for (int n = 0; n < order; ++n) {
        double conv = 0.0;
        for (int k = 0; k <= n; ++k) conv += c[k] * c[n - k];
        c[n + 1] = ((n == 0 ? 1.0 : 0.0) - conv) / static_cast<double>(n + 1);
      }
      double fact = 1.0;
      for (int n = 0; n <= order; ++n) {
        out[n] = c[n] * fact;
        fact *= static_cast<double>(n + 1);
      }
      break;
    }
  }
  return out;
}

}  // namespace sigrec
