// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "tprh/errors.hpp"
#include "tprh/hamiltonian.hpp"
#include "tprh/model_params.hpp"
#include "tprh/squeezed.hpp"

using namespace tprh;
using namespace tprh::squeezed;

TEST_CASE("unsqueezed vacuum is the Fock vacuum") {
    const auto v = squeezed_vacuum(0.0, 20);
    CHECK(v.coeffs[0] == 1.0);
    for (std::size_t i = 1; i <= 20; ++i) CHECK(v.coeffs[i] == 0.0);
    CHECK(v.converged);
}

TEST_CASE("squeezed vacuum is annihilated by c") {
    const double sigma = 0.3;
    const auto v = squeezed_vacuum(sigma, 200);
    // Oracle: (b + sigma b^dag)/sqrt(1 - sigma^2) built from dense Fock matrices.
    const auto b = oracle::annihilation(201);
    const auto bd = oracle::creation(201);
    oracle::Dense c(201);
    for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] = (b.a[i] + sigma * bd.a[i]) / std::sqrt(1 - sigma * sigma);
    auto cv = c.apply(v.coeffs);
    cv.pop_back();  // the b^dag term leaks past the truncation
    CHECK(oracle::norm(cv) < 1e-12);
    CHECK(oracle::norm(apply_c(v.coeffs, sigma)) < 1e-12);
    CHECK(v.coeffs[2] / v.coeffs[0] == doctest::Approx(-sigma / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(v.converged);
    CHECK(std::abs(v.norm_deficit) < 1e-14);
}

TEST_CASE("squeezed vacuum matches the truncated exponential of -sigma b^dag^2 / 2") {
    for (double sigma : {0.3, -0.55, 0.8}) {
        const auto v = squeezed_vacuum(sigma, 160);
        const auto ref = oracle::squeezed_vacuum_expm(sigma, 160);
        CHECK(oracle::max_abs_diff(v.coeffs, ref) < 1e-12);
    }
}

TEST_CASE("squeezed number states") {
    for (std::size_t n = 0; n < 4; ++n) {
        const auto f = squeezed_number_state(n, 0.0, 40);
        for (std::size_t i = 0; i <= 40; ++i) CHECK(std::abs(f.coeffs[i]) == doctest::Approx(i == n ? 1.0 : 0.0));
    }
    const double sigma = 0.2;
    const auto one = squeezed_number_state(1, sigma, 200);
    const auto cv = apply_c(one.coeffs, sigma);
    CHECK(oracle::dot(cv, cv) == doctest::Approx(1.0).epsilon(1e-12));

    const auto two = squeezed_number_state(2, sigma, 200);
    const auto zero = squeezed_number_state(0, sigma, 200);
    CHECK(std::abs(oracle::dot(two.coeffs, zero.coeffs)) < 1e-12);

    // c^dag c |n;sigma> = n |n;sigma>
    for (std::size_t n : {0u, 1u, 3u, 5u}) {
        const auto f = squeezed_number_state(n, -0.35, 240);
        const auto ccf = apply_c_dag(apply_c(f.coeffs, -0.35), -0.35);
        std::vector<double> r(ccf.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ccf[i] - static_cast<double>(n) * f.coeffs[i];
        r.resize(r.size() - 2);
        CHECK(oracle::norm(r) < 1e-12);
    }
}

TEST_CASE("support parity is exact") {
    const auto even = squeezed_number_state(2, 0.4, 80);
    const auto odd = squeezed_number_state(3, 0.4, 80);
    CHECK(even.parity == SupportParity::Even);
    CHECK(odd.parity == SupportParity::Odd);
    for (std::size_t i = 1; i <= 80; i += 2) CHECK(even.coeffs[i] == 0.0);
    for (std::size_t i = 0; i <= 80; i += 2) CHECK(odd.coeffs[i] == 0.0);
}

TEST_CASE("squeezed states diagonalize the degenerate Hamiltonians") {
    // H(+) pairs with sigma = +sigma_degenerate, H(-) with -sigma_degenerate.
    const std::size_t n_max = 600;
    for (double lam : {0.1, 0.2, 0.3, 0.4}) {
        const double sigma = squeeze_params(lam, SqueezeBranch::Degenerate).sigma();
        const auto hp = ham::build_degenerate(lam, ham::SpinX::Plus, n_max);
        const auto hm = ham::build_degenerate(lam, ham::SpinX::Minus, n_max);
        for (std::size_t n = 0; n <= 5; ++n) {
            const double e = degenerate_energy(n, lam);
            for (int branch : {+1, -1}) {
                const auto f = squeezed_number_state(n, branch * sigma, n_max);
                const auto hf = (branch > 0 ? hp : hm).multiply(f.coeffs);
                std::vector<double> r(hf.size());
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = hf[i] - e * f.coeffs[i];
                CHECK(oracle::norm(r) < 1e-9);
            }
        }
    }
}

TEST_CASE("degenerate energies") {
    for (std::size_t n = 0; n < 5; ++n) CHECK(degenerate_energy(n, 0.0) == static_cast<double>(n));
    CHECK(degenerate_energy(0, 0.2) == doctest::Approx(-0.0417424305).epsilon(1e-9));
    CHECK(degenerate_energy(3, 0.3) == doctest::Approx(2.3).epsilon(1e-14));
    CHECK_THROWS_AS(degenerate_energy(0, 0.5), DomainError);
}

TEST_CASE("normalizability breaks down as sigma approaches 1") {
    const auto mild = squeezed_vacuum(0.5, 200);
    const auto strong = squeezed_vacuum(0.999, 200);
    MESSAGE("tail mass at sigma=0.999, n_max=200: " << strong.tail_mass);
    CHECK(mild.converged);
    CHECK_FALSE(strong.converged);
    CHECK(strong.norm_deficit > mild.norm_deficit);
    CHECK_THROWS_AS(squeezed_vacuum(1.0, 10), DomainError);
}

TEST_CASE("headroom policy") {
    CHECK_NOTHROW(squeezed_number_state(5, 0.1, 20));
    CHECK_THROWS_AS(squeezed_number_state(6, 0.1, 20), ParameterError);
}
