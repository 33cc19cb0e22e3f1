// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tprh/band_matrix.hpp"

namespace tprh::eig {

struct EigenResult {
    std::size_t dim = 0;
    std::vector<double> values;  ///< ascending
    /// Column-major, one column of length `dim` per value; empty when not requested.
    std::vector<double> vectors;
    /// max ||A v - lambda v|| over returned pairs; only set when vectors were computed.
    std::optional<double> residual_bound;
    /// Indices below this are outside the top 20% of the spectrum that the
    /// truncation is assumed to corrupt.
    std::size_t trusted_count = 0;

    bool has_vectors() const { return !vectors.empty(); }
    std::span<const double> vector(std::size_t i) const {
        return {vectors.data() + i * dim, dim};
    }
};

/// Full spectrum of the symmetric tridiagonal matrix with the given diagonal
/// and first off-diagonal, by implicit-shift QL. Throws NumericalError on
/// non-finite input and ParameterError on inconsistent lengths.
EigenResult eig_tridiagonal(std::span<const double> diag, std::span<const double> offdiag,
                            bool want_vectors);

/// Lowest `count` eigenpairs (all when unset) of a symmetric band matrix.
EigenResult eig_banded(const SymBandMatrix& matrix, bool want_vectors,
                       std::optional<std::size_t> count = std::nullopt);

/// Number of eigenvalues considered free of truncation effects.
std::size_t trusted_count(std::size_t dim);

/// Returns the lowest `levels` eigenvalues of a model truncated at n_max.
using SpectrumBuilder = std::function<std::vector<double>(std::size_t n_max)>;

struct ConvergencePolicy {
    std::size_t start_n_max = 128;
    std::size_t limit_n_max = 4096;
};

struct ConvergedSpectrum {
    std::vector<double> values;
    std::size_t n_max = 0;  ///< first truncation confirmed by its doubling
    std::vector<std::size_t> tried;
};

/// Doubles the truncation until the lowest `levels` eigenvalues move by less
/// than `tol` between successive truncations. Throws ConvergenceError when
/// the limit is reached.
ConvergedSpectrum converged_spectrum(const SpectrumBuilder& builder, std::size_t levels,
                                     double tol, const ConvergencePolicy& policy = {});

}  // namespace tprh::eig
