// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <doctest.h>

#include "tprh/errors.hpp"
#include "tprh/model_params.hpp"

using namespace tprh;

TEST_CASE("derive maps physical couplings to rescaled ones") {
    const auto p = ModelParams::derive(0.5, 1.0, 0.08838834765);
    CHECK(p.omega_tilde == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.lambda == doctest::Approx(0.3535533906).epsilon(1e-10));
    CHECK(p.resonant);

    const auto free = ModelParams::derive(1.0, 0.0, 0.0);
    CHECK(free.omega_tilde == 0.0);
    CHECK(free.lambda == 0.0);
    CHECK_FALSE(free.resonant);
}

TEST_CASE("derive enforces the normalizability bound") {
    CHECK_THROWS_AS(ModelParams::derive(1.0, 2.0, 0.3), DomainError);
    CHECK_THROWS_AS(ModelParams::derive(1.0, 0.0, 0.25), DomainError);  // lambda = 1/2 exactly
    CHECK_NOTHROW(ModelParams::derive(1.0, 2.0, 0.3, Validity::Unchecked));
    CHECK_THROWS_AS(ModelParams::derive(0.0, 1.0, 0.1), ParameterError);
    CHECK_THROWS_AS(ModelParams::derive(-1.0, 1.0, 0.1), ParameterError);
    CHECK_THROWS_AS(ModelParams::derive(1.0, NAN, 0.1), ParameterError);
    CHECK_THROWS_AS(ModelParams::from_rescaled(1.0, 1.0, -0.5), DomainError);
}

TEST_CASE("unit conversion") {
    const auto p = ModelParams::derive(0.5, 1.0, 0.1);
    CHECK(p.to_physical(2.0) == 1.0);
    CHECK(p.to_rescaled(1.0) == 2.0);
    CHECK(p.g_from_lambda(0.4) == doctest::Approx(0.1));
}

TEST_CASE("squeeze parameters") {
    for (auto branch : {SqueezeBranch::Judd, SqueezeBranch::Degenerate}) {
        const auto s = squeeze_params(0.0, branch);
        CHECK(s.Omega == 1.0);
        CHECK(s.sigma() == 0.0);
    }
    const double lam = 0.3535533906;
    const auto j = squeeze_params(lam, SqueezeBranch::Judd);
    CHECK(j.Omega == doctest::Approx(0.7071067812).epsilon(1e-9));
    CHECK(j.sigma() == doctest::Approx(-0.4142135624).epsilon(1e-9));
    CHECK(std::abs(j.sigma() + lam * (1 + j.sigma() * j.sigma())) < 1e-15);
    CHECK(j.kappa == doctest::Approx(1 - j.sigma() * j.sigma()));

    const auto d = squeeze_params(0.2, SqueezeBranch::Degenerate);
    CHECK(d.Omega == doctest::Approx(0.9165151390).epsilon(1e-10));
    CHECK(d.sigma() == doctest::Approx(0.2087121525).epsilon(1e-9));
    CHECK(std::abs(d.sigma() - 0.2 * (1 + d.sigma() * d.sigma())) < 1e-15);

    CHECK_THROWS_AS(squeeze_params(0.5, SqueezeBranch::Judd), DomainError);
    CHECK_THROWS_AS(big_omega(-0.6), DomainError);
}

TEST_CASE("Omega lies in (0, 1) and decreases strictly") {
    double prev = 1.0;
    for (int i = 1; i < 1000; ++i) {
        const double lam = 0.5 * i / 1000.0;
        const double om = big_omega(lam);
        CHECK(om > 0.0);
        CHECK(om < 1.0);
        CHECK(om < prev);
        prev = om;
    }
    CHECK(lambda_from_omega_sq(0.5) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))));
}

TEST_CASE("branch product sigma_judd sigma_degenerate = -sigma_degenerate^2") {
    for (double lam : {-0.4, -0.1, 0.0, 1e-8, 0.1, 0.3, 0.49}) {
        const auto s = squeeze_params(lam, SqueezeBranch::Judd);
        const double prod = s.sigma_judd * s.sigma_degenerate;
        CHECK(prod == doctest::Approx(-s.sigma_degenerate * s.sigma_degenerate).epsilon(1e-14));
        CHECK(prod <= 0.0);
        if (lam != 0.0) CHECK(prod < 0.0);
    }
}

TEST_CASE("round trip through physical units") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> w(0.1, 5.0), wt(-3.0, 3.0), lam(-0.499, 0.499);
    for (int i = 0; i < 200; ++i) {
        const double omega = w(rng), omega_tilde = wt(rng), lambda = lam(rng);
        const auto p = ModelParams::derive(omega, 2.0 * omega_tilde * omega, lambda * omega / 2.0);
        CHECK(std::abs(p.omega_tilde - omega_tilde) <= 1e-15 * std::abs(omega_tilde));
        CHECK(std::abs(p.lambda - lambda) <= 1e-15 * std::abs(lambda));
    }
}
