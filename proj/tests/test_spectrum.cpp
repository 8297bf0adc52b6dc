#include <doctest.h>

#include <cmath>
#include <random>

#include "kgnc/spectrum.hpp"
#include "oracles.hpp"

using kgnc::FormulaMode;
using kgnc::PhysicalParams;
using kgnc::QuantumNumbers;

namespace {

PhysicalParams params(double z_alpha, FormulaMode mode, double mass = 1.0) { return {mass, z_alpha, 0.0, mode}; }

}  // namespace

TEST_CASE("energy_unperturbed weak-coupling limits") {
  const QuantumNumbers qn{3, 1, 0};
  CHECK(kgnc::energy_unperturbed(params(1e-9, FormulaMode::paper), qn) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(kgnc::energy_unperturbed(params(1e-9, FormulaMode::rederived), qn) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("energy_unperturbed closed forms") {
  const auto rederived = params(0.5, FormulaMode::rederived);
  CHECK(kgnc::energy_unperturbed(rederived, {1, 0, 0}) == doctest::Approx(0.6).epsilon(1e-15));
  // quantization at varsigma = n: (4 - 1/4) / (4 + 1/4)
  CHECK(kgnc::energy_unperturbed(rederived, {2, 1, 0}) == doctest::Approx(15.0 / 17.0).epsilon(1e-15));
  // printed form, M = 2: 2 (0.25 - 4) / (0.25 + 4)
  CHECK(kgnc::energy_unperturbed(params(0.5, FormulaMode::paper, 2.0), {2, 1, 0}) ==
        doctest::Approx(2.0 * (0.25 - 4.0) / 4.25).epsilon(1e-15));
}

TEST_CASE("paper energy is minus the rederived energy at principal number n - ell") {
  for (double za : {0.1, 0.3, 0.5, 0.9}) {
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) {
        const double paper = kgnc::energy_unperturbed(params(za, FormulaMode::paper), {n, l, 0});
        const double rederived = kgnc::energy_unperturbed(params(za, FormulaMode::rederived), {n - l, 0, 0});
        CHECK(paper == -rederived);
      }
    }
  }
}

TEST_CASE("rederived energies increase with n and stay bound") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> za(0.01, 0.99);
  std::uniform_real_distribution<double> mass(0.1, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double z = za(rng);
    const double m = mass(rng);
    double previous = -m;
    for (int n = 1; n <= 8; ++n) {
      const double e = kgnc::energy_unperturbed(params(z, FormulaMode::rederived, m), {n, 0, 0});
      CHECK(e > previous);
      CHECK(std::abs(e) < m);
      previous = e;
      for (int l = 0; l < n; ++l) {
        CHECK(std::abs(kgnc::energy_unperturbed(params(z, FormulaMode::paper, m), {n, l, 0})) < m);
      }
    }
  }
}

TEST_CASE("quantum-number validation") {
  const auto p = params(0.5, FormulaMode::rederived);
  CHECK_THROWS_AS(kgnc::energy_unperturbed(p, {1, 1, 0}), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::energy_unperturbed(p, {0, 0, 0}), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::energy_unperturbed(p, {3, 1, 2}), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::energy_unperturbed(p, {3, -1, 0}), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::make_radial_state(p, {2, 2, 0}), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::energy_unperturbed(params(0.0, FormulaMode::paper), {1, 0, 0}), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::energy_unperturbed({-1.0, 0.5, 0.0, FormulaMode::paper}, {1, 0, 0}), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::energy_unperturbed({1.0, 0.5, -1e-3, FormulaMode::paper}, {1, 0, 0}), kgnc::DomainError);
}

TEST_CASE("varsigma forms") {
  const auto v0 = kgnc::varsigma(params(0.5, FormulaMode::paper, 2.0), 0.0);
  CHECK(v0.paper == doctest::Approx(0.25).epsilon(1e-15));

  for (double e : {-0.7, 0.0, 0.3, 0.95}) {
    const auto v = kgnc::varsigma(params(0.4, FormulaMode::paper), e);
    CHECK(v.paper == doctest::Approx(v.rederived).epsilon(1e-14));
  }

  const auto v = kgnc::varsigma(params(0.5, FormulaMode::paper, 2.0), 1.0);
  CHECK(v.paper == doctest::Approx(0.25 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(v.rederived == doctest::Approx(0.5 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(v.rederived / v.paper == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(kgnc::varsigma(params(0.5, FormulaMode::paper), 1.0), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::varsigma(params(0.5, FormulaMode::paper), 1.5), kgnc::DomainError);
}

TEST_CASE("rederived varsigma equals n at the rederived energy") {
  for (int n = 1; n <= 6; ++n) {
    const auto p = params(0.37, FormulaMode::rederived, 1.7);
    const double e = kgnc::energy_unperturbed(p, {n, 0, 0});
    CHECK(kgnc::varsigma(p, e).rederived == doctest::Approx(n).epsilon(1e-13));
  }
}

TEST_CASE("effective quantities") {
  CHECK(kgnc::effective_quantities(params(0.5, FormulaMode::paper), 0.0, 0).e_eff == 1.0);
  const kgnc::EffectivePotential free_s{0.0, 0};
  for (double r : {0.01, 1.0, 50.0}) CHECK(free_s(r) == 0.0);

  const auto eff = kgnc::effective_quantities(params(0.5, FormulaMode::rederived), 0.6, 1);
  CHECK(eff.e_eff == doctest::Approx(0.64).epsilon(1e-15));
  CHECK(eff.v_eff(1.0) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK_THROWS_AS(kgnc::effective_quantities(params(0.5, FormulaMode::paper), 1.0, 0), kgnc::DomainError);
}

TEST_CASE("rho mapping") {
  CHECK(kgnc::rho_of_r(1.0, 1.0) == 2.0);
  CHECK(kgnc::rho_of_r(0.5, 4.0) == 2.0);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(1e-3, 1e3);
  for (int i = 0; i < 200; ++i) {
    const double r = u(rng);
    const double e_eff = u(rng) * 1e-3;
    CHECK(std::abs(kgnc::r_of_rho(kgnc::rho_of_r(r, e_eff), e_eff) - r) <= 1e-14 * r);
    CHECK(kgnc::rho_of_r(r * 1.001, e_eff) > kgnc::rho_of_r(r, e_eff));
  }
  CHECK_THROWS_AS(kgnc::rho_of_r(0.0, 1.0), kgnc::DomainError);
  CHECK_THROWS_AS(kgnc::rho_of_r(1.0, -1.0), kgnc::DomainError);
}

TEST_CASE("ground state is rho e^{-rho/2}") {
  const auto state = kgnc::make_radial_state(params(0.5, FormulaMode::rederived), {1, 0, 0});
  const double c = state(1.0) / std::exp(-0.5);
  for (double rho : {0.1, 2.0, 7.5, 30.0}) {
    CHECK(state(rho) / (rho * std::exp(-0.5 * rho)) == doctest::Approx(c).epsilon(1e-13));
  }
  CHECK(state(0.0) == 0.0);
}

TEST_CASE("node count is n - ell - 1") {
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto state = kgnc::make_radial_state(params(0.3, FormulaMode::rederived), {n, l, 0});
      int changes = 0;
      double last = state(0.01);
      for (int i = 2; i <= 10000; ++i) {
        const double value = state(0.01 * i);
        if ((value > 0.0) != (last > 0.0) && value != 0.0) ++changes;
        if (value != 0.0) last = value;
      }
      CHECK(changes == n - l - 1);
    }
  }
}

TEST_CASE("closed-form normalization integrates to 1/|E0|") {
  const auto state = kgnc::make_radial_state(params(0.5, FormulaMode::rederived), {2, 1, 0});
  const double abs_e = std::abs(state.energy());
  CHECK(state.measured_norm() == doctest::Approx(1.0 / abs_e).epsilon(1e-12));
  CHECK(state.measured_norm() * 2.0 * abs_e == doctest::Approx(2.0).epsilon(1e-12));
  // independent check by Simpson on a truncated interval
  const double simpson = kgnc::testing::simpson([&](double r) { return state(r) * state(r); }, 0.0, 80.0, 20000);
  CHECK(simpson == doctest::Approx(state.measured_norm()).epsilon(1e-10));
}

TEST_CASE("log-space normalization survives large factorials") {
  const auto state = kgnc::make_radial_state(params(0.5, FormulaMode::rederived), {90, 89, 0});
  CHECK(std::isfinite(state.norm_log()));
  CHECK(state.measured_norm() == doctest::Approx(1.0 / std::abs(state.energy())).epsilon(1e-10));
}

TEST_CASE("boundary behaviour") {
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto state = kgnc::make_radial_state(params(0.5, FormulaMode::rederived), {n, l, 0});
      const double near_zero = state(1e-6) / std::pow(1e-6, l + 1);
      CHECK(std::isfinite(near_zero));
      CHECK(near_zero != 0.0);
      CHECK(near_zero == doctest::Approx(state(2e-6) / std::pow(2e-6, l + 1)).epsilon(1e-4));
      // R e^{rho/2} grows like rho^n
      const auto envelope = [&](double rho) { return state(rho) * std::exp(0.5 * rho) / std::pow(rho, n); };
      CHECK(std::abs(envelope(200.0)) == doctest::Approx(std::abs(envelope(400.0))).epsilon(0.1));
    }
  }
}

TEST_CASE("closed-form state solves the theta = 0 rho equation") {
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto p = params(0.5, FormulaMode::rederived);
      const auto state = kgnc::make_radial_state(p, {n, l, 0});
      const double s = kgnc::varsigma(p, state.energy()).rederived;
      const auto f = [&](double rho) { return state(rho); };
      double max_r = 0.0;
      double max_residual = 0.0;
      for (double rho = 0.1; rho <= 50.0; rho += 0.05) {
        const double r = state(rho);
        const double residual = kgnc::testing::second_derivative(f, rho, 0.01) -
                                (l * (l + 1.0) / (rho * rho) - s / rho + 0.25) * r;
        max_r = std::max(max_r, std::abs(r));
        max_residual = std::max(max_residual, std::abs(residual));
      }
      INFO("n=" << n << " l=" << l);
      CHECK(max_residual <= 1e-8 * max_r);
    }
  }
}
