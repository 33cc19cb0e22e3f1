// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace tprh {

/// Whether construction enforces the normalizability bound |lambda| < 1/2.
enum class Validity { Checked, Unchecked };

/// Physical couplings of the two-photon Rabi model and their rescaled forms.
///
/// Rescaled Hamiltonian (energies in units of omega):
///   H~ = omega_tilde sigma_z + b^dag b + lambda (b^dag^2 + b^2) sigma_x
/// with omega_tilde = omega0 / (2 omega) and lambda = 2 g / omega.
struct ModelParams {
    double omega = 1.0;   ///< boson mode frequency
    double omega0 = 0.0;  ///< atomic level splitting
    double g = 0.0;       ///< atom-field coupling
    double omega_tilde = 0.0;
    double lambda = 0.0;
    bool resonant = false;  ///< omega_tilde == 1 within 1e-12

    /// Builds from physical units. Throws ParameterError for omega <= 0 and
    /// DomainError for |lambda| >= 1/2 unless `validity` is Unchecked.
    static ModelParams derive(double omega, double omega0, double g,
                              Validity validity = Validity::Checked);

    /// Builds from rescaled quantities, keeping omega as the energy unit.
    static ModelParams from_rescaled(double omega, double omega_tilde, double lambda,
                                     Validity validity = Validity::Checked);

    double to_physical(double rescaled_energy) const { return omega * rescaled_energy; }
    double to_rescaled(double physical_energy) const { return physical_energy / omega; }
    double g_from_lambda(double lam) const { return lam * omega / 2.0; }
};

enum class SqueezeBranch {
    Degenerate,  ///< sigma = (1 - Omega) / (2 lambda), root of sigma - lambda(1+sigma^2)
    Judd,        ///< sigma = (Omega - 1) / (2 lambda), root of sigma + lambda(1+sigma^2)
};

struct DerivedSqueeze {
    double Omega = 1.0;  ///< sqrt(1 - 4 lambda^2)
    double sigma_degenerate = 0.0;
    double sigma_judd = 0.0;
    double kappa = 1.0;  ///< 1 - sigma^2 for the requested branch
    SqueezeBranch branch = SqueezeBranch::Judd;

    double sigma() const {
        return branch == SqueezeBranch::Judd ? sigma_judd : sigma_degenerate;
    }
};

/// Omega = sqrt(1 - 4 lambda^2). Throws DomainError for |lambda| >= 1/2.
double big_omega(double lambda);

DerivedSqueeze squeeze_params(double lambda, SqueezeBranch branch);

/// Inverse of big_omega on lambda >= 0.
inline double lambda_from_omega_sq(double omega_sq) {
    return 0.5 * std::sqrt(1.0 - omega_sq);
}

}  // namespace tprh
