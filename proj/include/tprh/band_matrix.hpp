// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tprh {

/// Real symmetric band matrix holding the upper triangle in LAPACK 'U'
/// column-major band layout: A(i,j), max(0,j-kd) <= i <= j, lives at
/// ab[(kd + i - j) + j * (kd + 1)].
class SymBandMatrix {
public:
    SymBandMatrix() = default;
    SymBandMatrix(std::size_t dim, std::size_t kd);

    std::size_t dim() const { return dim_; }
    std::size_t kd() const { return kd_; }

    /// Zero outside the band.
    double at(std::size_t i, std::size_t j) const;

    /// Sets A(i,j) = A(j,i) = v. |i - j| must not exceed kd.
    void set(std::size_t i, std::size_t j, double v);
    void add(std::size_t i, std::size_t j, double v);

    std::vector<double> multiply(std::span<const double> x) const;

    double max_abs() const;
    bool all_finite() const;

    const std::vector<double>& band_storage() const { return ab_; }

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t dim_ = 0;
    std::size_t kd_ = 0;
    std::vector<double> ab_;
};

}  // namespace tprh
