#include "scforge/math.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scforge {

double gelu(double x) {
  return 0.5 * x * (1.0 + std::erf(x * 0.70710678118654752440));
}

std::vector<double> exact_softmax(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("softmax input must be non-empty");
  const double max = *std::max_element(x.begin(), x.end());
  std::vector<double> out(x.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = std::exp(x[i] - max);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

}  // namespace scforge
