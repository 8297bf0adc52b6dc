#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <functional>
#include <random>

namespace kgnc::testing {

/// L^alpha_k(x) from its finite series sum_i (-1)^i C(k+alpha, k-i) x^i / i!.
inline long double laguerre_series(int k, long double alpha, long double x) {
  long double sum = 0.0L;
  for (int i = 0; i <= k; ++i) {
    const long double log_binom = std::lgamma(k + alpha + 1.0L) - std::lgamma(static_cast<long double>(k - i + 1)) -
                                  std::lgamma(alpha + i + 1.0L);
    const long double term = std::exp(log_binom) * std::pow(x, static_cast<long double>(i)) /
                             std::tgamma(static_cast<long double>(i + 1));
    sum += (i % 2 == 0 ? term : -term);
  }
  return sum;
}

/// a!/b! exactly for a >= b with the result below 2^128.
inline unsigned __int128 factorial_ratio_exact(int a, int b) {
  unsigned __int128 product = 1;
  for (int i = b + 1; i <= a; ++i) product *= static_cast<unsigned __int128>(i);
  return product;
}

inline long double to_long_double(unsigned __int128 value) {
  const auto high = static_cast<unsigned long long>(value >> 64);
  const auto low = static_cast<unsigned long long>(value);
  return std::ldexp(static_cast<long double>(high), 64) + static_cast<long double>(low);
}

/// Eighth-order central second derivative.
inline double second_derivative(const std::function<double(double)>& f, double x, double h) {
  static constexpr double c[] = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};
  double sum = c[0] * f(x);
  for (int j = 1; j <= 4; ++j) sum += c[j] * (f(x + j * h) + f(x - j * h));
  return sum / (h * h);
}

/// Composite Simpson on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

}  // namespace kgnc::testing
