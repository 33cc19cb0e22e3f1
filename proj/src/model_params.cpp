// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include "tprh/model_params.hpp"

#include <cmath>
#include <string>

#include "tprh/errors.hpp"

namespace tprh {
namespace {

void check_lambda(double lambda) {
    if (!std::isfinite(lambda) || !(std::abs(lambda) < 0.5)) {
        throw DomainError("coupling lambda = " + std::to_string(lambda) +
                          " violates the normalizability bound |lambda| < 1/2");
    }
}

}  // namespace

ModelParams ModelParams::derive(double omega, double omega0, double g, Validity validity) {
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw ParameterError("boson frequency omega must be positive");
    }
    if (!std::isfinite(omega0) || !std::isfinite(g)) {
        throw ParameterError("omega0 and g must be finite");
    }
    ModelParams p;
    p.omega = omega;
    p.omega0 = omega0;
    p.g = g;
    p.omega_tilde = omega0 / (2.0 * omega);
    p.lambda = 2.0 * g / omega;
    p.resonant = std::abs(p.omega_tilde - 1.0) <= 1e-12;
    if (validity == Validity::Checked) check_lambda(p.lambda);
    return p;
}

ModelParams ModelParams::from_rescaled(double omega, double omega_tilde, double lambda,
                                       Validity validity) {
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw ParameterError("boson frequency omega must be positive");
    }
    if (!std::isfinite(omega_tilde) || !std::isfinite(lambda)) {
        throw ParameterError("omega_tilde and lambda must be finite");
    }
    ModelParams p;
    p.omega = omega;
    p.omega0 = 2.0 * omega * omega_tilde;
    p.g = lambda * omega / 2.0;
    p.omega_tilde = omega_tilde;
    p.lambda = lambda;
    p.resonant = std::abs(omega_tilde - 1.0) <= 1e-12;
    if (validity == Validity::Checked) check_lambda(lambda);
    return p;
}

double big_omega(double lambda) {
    check_lambda(lambda);
    return std::sqrt(1.0 - 4.0 * lambda * lambda);
}

DerivedSqueeze squeeze_params(double lambda, SqueezeBranch branch) {
    DerivedSqueeze d;
    d.branch = branch;
    d.Omega = big_omega(lambda);
    if (lambda == 0.0) {
        // Both closed forms are 0/0 here; the limit is zero.
        d.sigma_degenerate = 0.0;
        d.sigma_judd = 0.0;
    } else {
        // (1 - Omega)/(2 lambda) rewritten as 2 lambda / (1 + Omega) to avoid
        // cancellation at small lambda.
        d.sigma_degenerate = 2.0 * lambda / (1.0 + d.Omega);
        d.sigma_judd = -d.sigma_degenerate;
    }
    const double s = d.sigma();
    d.kappa = 1.0 - s * s;
    return d;
}

}  // namespace tprh
