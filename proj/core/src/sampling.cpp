#include "proxpair/sampling.hpp"

#include <cmath>

namespace proxpair {

double Sampler::exponential() {
  double u = uniform01();
  while (u <= 0.0) u = uniform01();
  return -std::log(u);
}

std::vector<double> Sampler::simplex_coefficients(std::size_t count) {
  std::vector<double> coeffs(count);
  double total = 0.0;
  for (auto& c : coeffs) {
    c = exponential();
    total += c;
  }
  for (auto& c : coeffs) c /= total;
  return coeffs;
}

std::vector<double> Sampler::sub_simplex_coefficients(std::size_t count) {
  auto coeffs = simplex_coefficients(count);
  const double factor = uniform01();
  for (auto& c : coeffs) c *= factor;
  return coeffs;
}

}  // namespace proxpair
