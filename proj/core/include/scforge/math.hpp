#pragma once

#include <span>
#include <vector>

namespace scforge {

/// GELU in its exact Gaussian-CDF form: x * Phi(x) = 0.5*x*(1 + erf(x/sqrt(2))).
double gelu(double x);

/// Numerically stable softmax (max-subtracted).
std::vector<double> exact_softmax(std::span<const double> x);

}  // namespace scforge
