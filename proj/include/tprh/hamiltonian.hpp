// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tprh/band_matrix.hpp"
#include "tprh/model_params.hpp"
#include "tprh/su11.hpp"

namespace tprh::ham {

/// Eigenvalue of sigma_x labelling the two spin components in the full basis.
enum class SpinX { Plus = 0, Minus = 1 };

/// Spin label M = +1 / -1 of the decoupled sector Hamiltonians.
enum class SectorSpin { Plus, Minus };

inline int sign(SectorSpin m) { return m == SectorSpin::Plus ? 1 : -1; }

struct SectorLabel {
    SectorSpin M;
    su11::Bargmann k;

    bool operator==(const SectorLabel&) const = default;
};

/// The four labels in a fixed order: (+,1/4), (+,3/4), (-,1/4), (-,3/4).
inline constexpr SectorLabel kAllSectors[4] = {
    {SectorSpin::Plus, su11::Bargmann::Quarter},
    {SectorSpin::Plus, su11::Bargmann::ThreeQuarters},
    {SectorSpin::Minus, su11::Bargmann::Quarter},
    {SectorSpin::Minus, su11::Bargmann::ThreeQuarters},
};

std::string to_string(const SectorLabel& label);

/// Rescaled Hamiltonian on Fock states 0..n_max tensored with the sigma_x
/// eigenbasis, interleaved as index 2n + s. In this frame the two-photon
/// coupling is spin-diagonal (sign s) and omega_tilde sigma_z flips s.
class FullMatrix {
public:
    FullMatrix(std::size_t n_max, SymBandMatrix band) : n_max_(n_max), band_(std::move(band)) {}

    std::size_t n_max() const { return n_max_; }
    std::size_t dim() const { return band_.dim(); }
    const SymBandMatrix& band() const { return band_; }

    static std::size_t index(std::size_t n, SpinX s) { return 2 * n + static_cast<std::size_t>(s); }

    std::vector<double> apply(std::span<const double> x) const { return band_.multiply(x); }

private:
    std::size_t n_max_;
    SymBandMatrix band_;
};

/// Throws ParameterError for n_max < 4.
FullMatrix build_full(const ModelParams& params, std::size_t n_max);

/// Real symmetric tridiagonal Hamiltonian of one decoupled (M, k) sector in
/// rescaled units: diag_m = M omega_tilde (-1)^m + 2(m + k) - 1/2,
/// offdiag_m = 2 lambda sqrt((m+1)(m+2k)).
struct SectorMatrix {
    SectorLabel label;
    std::size_t m_max = 0;
    std::vector<double> diag;
    std::vector<double> offdiag;
};

SectorMatrix build_sector(const ModelParams& params, SectorLabel label, std::size_t m_max);

/// Sector truncation covering exactly the Fock states 0..n_max of its parity.
std::size_t sector_m_max(std::size_t n_max, su11::Bargmann k);

/// b^dag b + sign * lambda (b^dag^2 + b^2) on Fock states 0..n_max, band kd = 2.
/// Throws DomainError for |lambda| >= 1/2.
SymBandMatrix build_degenerate(double lambda, SpinX sign, std::size_t n_max);

/// Pi = -sigma_z exp(i pi b^dag b / 2), diagonal in the Fock x sigma_z basis
/// with entries -s i^n.
class ParityMatrix {
public:
    explicit ParityMatrix(std::size_t n_max) : n_max_(n_max) {}

    std::size_t n_max() const { return n_max_; }

    /// Eigenvalue on |n> x |s_z>, s_z = +1 (up) or -1 (down).
    static std::complex<double> phase(std::size_t n, int s_z);

    /// Pi^2 = exp(i pi b^dag b) eigenvalue (-1)^n.
    static int square_phase(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

    /// Pi applied to a vector in the FullMatrix (sigma_x) basis, where
    /// Pi |n, +-x> = -i^n |n, -+x>.
    std::vector<std::complex<double>> apply_x_basis(std::span<const double> v) const;

    /// <v|Pi|v> for a real vector in the FullMatrix basis.
    std::complex<double> expectation_x_basis(std::span<const double> v) const;

    /// max |[H, Pi]_ij| with H given in the sigma_x basis.
    double commutator_max(const FullMatrix& h) const;

private:
    std::size_t n_max_;
};

ParityMatrix build_parity(std::size_t n_max);

}  // namespace tprh::ham
