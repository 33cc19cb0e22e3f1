// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include "tprh/squeezed.hpp"

#include <cmath>
#include <string>

#include "tprh/errors.hpp"
#include "tprh/model_params.hpp"

namespace tprh::squeezed {
namespace {

void check_sigma(double sigma) {
    if (!std::isfinite(sigma) || !(std::abs(sigma) < 1.0)) {
        throw DomainError("squeezing parameter |sigma| = " + std::to_string(std::abs(sigma)) +
                          " >= 1: squeezed vacuum is not normalizable");
    }
}

double euclid(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

SupportParity support_parity(std::span<const double> v) {
    bool even = false, odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0.0) continue;
        (i % 2 == 0 ? even : odd) = true;
    }
    if (even && odd) return SupportParity::Mixed;
    return odd ? SupportParity::Odd : SupportParity::Even;
}

void finalize(FockVector& f) {
    f.norm = euclid(f.coeffs);
    if (!(f.norm > 0.0) || !std::isfinite(f.norm)) throw NumericalError("squeezed state has no weight in the basis");
    for (double& c : f.coeffs) c /= f.norm;
    const std::size_t top = f.coeffs.size() - 1;
    f.tail_mass = f.coeffs[top] * f.coeffs[top] + (top > 0 ? f.coeffs[top - 1] * f.coeffs[top - 1] : 0.0);
    f.converged = f.tail_mass < 1e-16;
    f.parity = support_parity(f.coeffs);
    f.norm = 1.0;
}

}  // namespace

std::vector<double> apply_c(std::span<const double> v, double sigma) {
    check_sigma(sigma);
    const double scale = 1.0 / std::sqrt(1.0 - sigma * sigma);
    const std::size_t n = v.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        if (j + 1 < n) s += std::sqrt(static_cast<double>(j + 1)) * v[j + 1];
        if (j > 0) s += sigma * std::sqrt(static_cast<double>(j)) * v[j - 1];
        out[j] = scale * s;
    }
    return out;
}

std::vector<double> apply_c_dag(std::span<const double> v, double sigma) {
    check_sigma(sigma);
    const double scale = 1.0 / std::sqrt(1.0 - sigma * sigma);
    const std::size_t n = v.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        if (j > 0) s += std::sqrt(static_cast<double>(j)) * v[j - 1];
        if (j + 1 < n) s += sigma * std::sqrt(static_cast<double>(j + 1)) * v[j + 1];
        out[j] = scale * s;
    }
    return out;
}

FockVector squeezed_vacuum(double sigma, std::size_t n_max) {
    check_sigma(sigma);
    FockVector f;
    f.coeffs.assign(n_max + 1, 0.0);
    f.coeffs[0] = 1.0;
    // c|0;sigma> = 0  =>  v_{j+2} = -sigma sqrt((j+1)/(j+2)) v_j
    for (std::size_t j = 0; j + 2 <= n_max; j += 2) {
        const double jd = static_cast<double>(j);
        f.coeffs[j + 2] = -sigma * std::sqrt((jd + 1.0) / (jd + 2.0)) * f.coeffs[j];
    }
    // Untruncated squared norm with v_0 = 1 is (1 - sigma^2)^(-1/2).
    double sq = 0.0;
    for (double c : f.coeffs) sq += c * c;
    f.norm_deficit = 1.0 - sq * std::sqrt(1.0 - sigma * sigma);
    finalize(f);
    return f;
}

FockVector squeezed_number_state(std::size_t n, double sigma, std::size_t n_max) {
    check_sigma(sigma);
    if (4 * n > n_max) {
        throw ParameterError("squeezed number state n = " + std::to_string(n) +
                             " needs n_max >= " + std::to_string(4 * n));
    }
    FockVector f = squeezed_vacuum(sigma, n_max);
    const double vacuum_deficit = f.norm_deficit;
    for (std::size_t i = 0; i < n; ++i) f.coeffs = apply_c_dag(f.coeffs, sigma);
    finalize(f);
    f.norm_deficit = vacuum_deficit;
    return f;
}

double degenerate_energy(std::size_t n, double lambda) {
    return (static_cast<double>(n) + 0.5) * big_omega(lambda) - 0.5;
}

}  // namespace tprh::squeezed
