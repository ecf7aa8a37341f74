#pragma once

#include <string>
#include <vector>

namespace sigrec {

enum class Activation { Identity, Tanh, Exp };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

double activation_value(Activation a, double u);

/// (sigma(u), sigma'(u), ..., sigma^{(order)}(u)).
/// Tanh derivatives come from the Taylor recurrence y' = 1 - y^2.
std::vector<double> activation_derivatives(Activation a, double u, int order);

}  // namespace sigrec
