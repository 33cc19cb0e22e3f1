// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tprh::squeezed {

enum class SupportParity { Even, Odd, Mixed };

/// Truncated state over Fock states |0>..|n_max>.
struct FockVector {
    std::vector<double> coeffs;
    double norm = 1.0;          ///< Euclidean norm of `coeffs` (normalized on construction)
    double norm_deficit = 0.0;  ///< weight lost to truncation, when known analytically
    double tail_mass = 0.0;     ///< |c_{n_max-1}|^2 + |c_{n_max}|^2
    SupportParity parity = SupportParity::Mixed;
    bool converged = false;     ///< tail_mass < 1e-16

    std::size_t n_max() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Squeezed-boson annihilator c = (b + sigma b^dag) / sqrt(1 - sigma^2) on a
/// truncated Fock vector. Throws DomainError for |sigma| >= 1.
std::vector<double> apply_c(std::span<const double> v, double sigma);

/// c^dag = (b^dag + sigma b) / sqrt(1 - sigma^2). Components pushed above
/// n_max are dropped.
std::vector<double> apply_c_dag(std::span<const double> v, double sigma);

/// Normalized exp(-sigma b^dag^2 / 2)|0>, the state annihilated by c.
FockVector squeezed_vacuum(double sigma, std::size_t n_max);

/// Normalized eigenstate of c^dag c with eigenvalue n, built as
/// (c^dag)^n |0; sigma> / sqrt(n!). Requires n <= n_max / 4.
FockVector squeezed_number_state(std::size_t n, double sigma, std::size_t n_max);

/// (n + 1/2) sqrt(1 - 4 lambda^2) - 1/2, the rescaled energies of
/// b^dag b +- lambda (b^dag^2 + b^2).
double degenerate_energy(std::size_t n, double lambda);

}  // namespace tprh::squeezed
