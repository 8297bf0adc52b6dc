#include <doctest.h>

#include <cmath>
#include <random>

#include "kgnc/special_functions.hpp"
#include "oracles.hpp"

using kgnc::LaguerreSpec;

TEST_CASE("laguerre_eval low degrees") {
  CHECK(kgnc::laguerre_eval(LaguerreSpec<double>{0, 3.0}, 7.2) == 1.0);
  CHECK(kgnc::laguerre_eval(LaguerreSpec<double>{1, 3.0}, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("laguerre_eval matches the series definition") {
  // series: C(3,2) - C(3,1) 1.5 + C(3,0) 1.5^2 / 2 = 3 - 4.5 + 1.125
  const double frozen = -0.375;
  CHECK(static_cast<double>(kgnc::testing::laguerre_series(2, 1.0L, 1.5L)) == doctest::Approx(frozen).epsilon(1e-15));
  CHECK(kgnc::laguerre_eval(LaguerreSpec<double>{2, 1.0}, 1.5) == doctest::Approx(frozen).epsilon(1e-14));

  for (int k = 0; k <= 12; ++k) {
    for (double alpha : {0.0, 0.5, 1.0, 3.0, 7.0}) {
      for (double x : {0.0, 0.3, 1.7, 4.0, 9.5, 15.0}) {
        const double expected = static_cast<double>(kgnc::testing::laguerre_series(k, alpha, x));
        const double got = kgnc::laguerre_eval(LaguerreSpec<double>{k, alpha}, x);
        CHECK(std::abs(got - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
      }
    }
  }
}

TEST_CASE("laguerre_eval is templated on the scalar") {
  const long double value = kgnc::laguerre_eval(LaguerreSpec<long double>{2, 1.0L}, 1.5L);
  CHECK(std::abs(value + 0.375L) < 1e-17L);
}

TEST_CASE("laguerre domain errors") {
  CHECK_THROWS_AS(kgnc::laguerre_eval(LaguerreSpec<double>{-1, 1.0}, 1.0), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::laguerre_eval(LaguerreSpec<double>{2, -1.0}, 1.0), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::laguerre_eval(LaguerreSpec<double>{2, 1.0}, -0.1), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::laguerre_derivative(LaguerreSpec<double>{1, -2.0}, 1.0), kgnc::DomainError);
}

TEST_CASE("three-term recurrence residual") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> xs(0.0, 80.0);
  for (double alpha : {1.0, 3.0, 5.0, 7.0}) {
    for (int sample = 0; sample < 40; ++sample) {
      const double x = sample == 0 ? 0.0 : xs(rng);
      for (int k = 1; k <= 30; ++k) {
        const double lm = kgnc::laguerre_eval(LaguerreSpec<double>{k - 1, alpha}, x);
        const double l0 = kgnc::laguerre_eval(LaguerreSpec<double>{k, alpha}, x);
        const double lp = kgnc::laguerre_eval(LaguerreSpec<double>{k + 1, alpha}, x);
        const double residual = (k + 1) * lp - (2 * k + 1 + alpha - x) * l0 + (k + alpha) * lm;
        CHECK(std::abs(residual) <= 1e-9 * std::max(1.0, std::abs(lp)));
      }
    }
  }
}

TEST_CASE("laguerre_derivative") {
  CHECK(kgnc::laguerre_derivative(LaguerreSpec<double>{0, 2.0}, 3.0) == 0.0);
  CHECK(kgnc::laguerre_derivative(LaguerreSpec<double>{1, 3.0}, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));

  const auto fd = [](int k, double alpha, double x) {
    const double h = 1e-6;
    return (kgnc::laguerre_eval(LaguerreSpec<double>{k, alpha}, x + h) -
            kgnc::laguerre_eval(LaguerreSpec<double>{k, alpha}, x - h)) /
           (2 * h);
  };
  const double d = kgnc::laguerre_derivative(LaguerreSpec<double>{3, 1.0}, 0.7);
  CHECK(std::abs(d - fd(3, 1.0, 0.7)) <= 1e-6 * std::abs(d));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(0.01, 30.0);
  for (double alpha : {1.0, 3.0, 5.0, 7.0}) {
    for (int k = 0; k <= 12; ++k) {
      for (int sample = 0; sample < 10; ++sample) {
        const double x = xs(rng);
        const double exact = kgnc::laguerre_derivative(LaguerreSpec<double>{k, alpha}, x);
        const double value = kgnc::laguerre_eval(LaguerreSpec<double>{k, alpha}, x);
        const double scale = std::max({std::abs(exact), std::abs(value), 1.0});
        CHECK(std::abs(exact - fd(k, alpha, x)) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("log_factorial_ratio") {
  CHECK(kgnc::log_factorial_ratio(5, 5) == 0.0);
  CHECK(kgnc::log_factorial_ratio(3, 0) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
  CHECK(kgnc::log_factorial_ratio(0, 3) == doctest::Approx(-std::log(6.0)).epsilon(1e-15));

  const long double exact = std::log(kgnc::testing::to_long_double(kgnc::testing::factorial_ratio_exact(50, 30)));
  CHECK(std::abs(kgnc::log_factorial_ratio(50, 30) - static_cast<double>(exact)) < 1e-12);
  CHECK(std::abs(kgnc::log_factorial_ratio(30, 50) + static_cast<double>(exact)) < 1e-12);

  for (int a = 0; a <= 200; a += 7) {
    for (int b = 0; b <= 200; b += 11) {
      const long double reference = std::lgamma(a + 1.0L) - std::lgamma(b + 1.0L);
      CHECK(std::abs(kgnc::log_factorial_ratio(a, b) - static_cast<double>(reference)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(kgnc::log_factorial_ratio(-1, 2), kgnc::DomainError);
}
