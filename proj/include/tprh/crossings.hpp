// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tprh/eigensolver.hpp"
#include "tprh/hamiltonian.hpp"
#include "tprh/model_params.hpp"

namespace tprh::cross {

/// Eigenvalue of the conserved operator Pi; a fourth root of unity.
enum class Parity { PlusOne = 0, PlusI = 1, MinusOne = 2, MinusI = 3 };

inline constexpr Parity kAllParities[4] = {Parity::PlusOne, Parity::PlusI, Parity::MinusOne,
                                           Parity::MinusI};

std::string to_string(Parity p);
std::complex<double> to_complex(Parity p);

/// Pi^2 for a parity eigenvalue: +1 for {+1, -1}, -1 for {+i, -i}.
int square(Parity p);

/// Parity-pair rule: a crossing is described by the ansatz iff its pair is
/// {+1, -1} or {+i, -i}.
bool described_by_parity(Parity a, Parity b);

struct Window {
    double lo = 0.02;
    double hi = 0.45;
};

struct ScanOptions {
    double tol = 1e-11;  ///< truncation convergence of the tracked levels (rescaled)
    eig::ConvergencePolicy policy{};
    std::optional<std::size_t> fixed_n_max;  ///< skips the convergence loop when set
};

/// Lowest levels of the four decoupled sectors along a lambda grid, in
/// rescaled units. Sector order follows ham::kAllSectors.
struct SpectrumTable {
    double omega = 1.0;
    double omega_tilde = 0.0;
    std::size_t levels = 0;
    double tol = 0.0;
    std::vector<double> lambda_grid;
    std::vector<std::size_t> n_max;  ///< converged Fock truncation per grid point
    /// energies[s][t][i]: sector s, grid point t, level i.
    std::array<std::vector<std::vector<double>>, 4> energies;

    std::size_t max_n_max() const;
};

/// Lowest `levels` eigenvalues of each sector with Fock truncation n_max.
std::array<std::vector<double>, 4> sector_levels(const ModelParams& params, std::size_t n_max,
                                                 std::size_t levels);

/// Lowest `levels` eigenvalues of one sector.
std::vector<double> sector_spectrum(const ModelParams& params, ham::SectorLabel label,
                                    std::size_t n_max, std::size_t levels);

/// Diagonalizes the four sector tridiagonals on a uniform grid over the
/// window (inclusive), each at its converged truncation. Only omega and
/// omega_tilde are taken from `base`.
SpectrumTable scan(const ModelParams& base, Window window, std::size_t grid_size, std::size_t levels,
                   const ScanOptions& options = {});

struct BaselineMatch {
    bool juddian = true;  ///< -1/2 + (N + 1/2) Omega when true, else -1/2 + n Omega
    int order = 0;
    double distance = 0.0;  ///< rescaled
};

struct CrossingRecord {
    double lambda_star = 0.0;
    double E_tilde_star = 0.0;
    double g_star = 0.0;
    double E_star = 0.0;
    ham::SectorLabel sector_a;
    ham::SectorLabel sector_b;
    std::size_t level_a = 0;
    std::size_t level_b = 0;
    std::size_t n_max = 0;
    std::optional<Parity> parity_a;
    std::optional<Parity> parity_b;
    double parity_deviation = 0.0;  ///< worst pre-rounding deviation over both sides
    bool described = false;         ///< parity-pair rule, set once labelled
    bool same_k = false;            ///< Bargmann rule
    std::optional<BaselineMatch> nearest_baseline;
};

struct DetectOptions {
    double lambda_tol = 1e-11;
    double dedup_tol = 1e-9;
};

/// Sign changes of level differences between distinct sectors, each refined
/// by bisection on freshly diagonalized sector tridiagonals. Ordered by
/// lambda_star, then sector labels and levels.
std::vector<CrossingRecord> detect_crossings(const SpectrumTable& table, const DetectOptions& options = {});

struct ParityLabel {
    Parity value = Parity::PlusOne;
    std::complex<double> expectation;
    double deviation = 0.0;
    double energy = 0.0;  ///< eigenvalue of the selected full-basis state
};

/// Diagonalizes the full Hamiltonian, takes the eigenvector nearest
/// E_target (rescaled) and rounds <Pi> to a fourth root of unity. Throws
/// LabelingError if the deviation exceeds 1e-3.
ParityLabel parity_label(const ModelParams& params, double E_target, double lambda, std::size_t n_max);

struct LabelOptions {
    double offset = 1e-6;  ///< labels are taken at lambda* -+ offset
    int max_baseline_order = 40;
};

/// Attaches parity labels (checked on both sides of each crossing), the
/// Bargmann rule and the nearest baseline. Throws LabelingError when the two
/// sides disagree.
void label_crossings(std::vector<CrossingRecord>& records, double omega, double omega_tilde,
                     const LabelOptions& options = {});

struct ClassificationSummary {
    /// counts[a][b]: crossings with parity pair (a, b), symmetric, indexed by Parity.
    std::array<std::array<std::size_t, 4>, 4> counts{};
    std::size_t described = 0;
    std::size_t undescribed = 0;
    std::size_t rule_disagreements = 0;
    double max_parity_deviation = 0.0;
    double max_described_baseline_distance = 0.0;    ///< to a Juddian baseline
    double max_undescribed_baseline_distance = 0.0;  ///< to a conjectured baseline
    std::size_t described_off_baseline = 0;    ///< beyond 1e-6
    std::size_t undescribed_off_baseline = 0;  ///< beyond 1e-4
};

/// Partitions labelled crossings by the parity-pair rule and cross-checks the
/// Bargmann rule. Throws ConsistencyError if the rules disagree anywhere.
ClassificationSummary classify(const std::vector<CrossingRecord>& records);

/// The pattern of the published table: '-' on the diagonal, 'y' for
/// {+1,-1} and {+i,-i}, 'n' otherwise.
char expected_table_entry(Parity a, Parity b);

/// Nearest Juddian baseline (N >= 2) and nearest conjectured baseline (n >= 2).
BaselineMatch nearest_juddian_baseline(double lambda, double E_tilde, int max_order);
BaselineMatch nearest_conjectured_baseline(double lambda, double E_tilde, int max_order);

}  // namespace tprh::cross
