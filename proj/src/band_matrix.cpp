// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include "tprh/band_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "tprh/errors.hpp"

namespace tprh {

SymBandMatrix::SymBandMatrix(std::size_t dim, std::size_t kd)
    : dim_(dim), kd_(kd), ab_((kd + 1) * dim, 0.0) {}

std::size_t SymBandMatrix::index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return (kd_ + i - j) + j * (kd_ + 1);
}

double SymBandMatrix::at(std::size_t i, std::size_t j) const {
    const std::size_t d = i > j ? i - j : j - i;
    if (d > kd_ || i >= dim_ || j >= dim_) return 0.0;
    return ab_[index(i, j)];
}

void SymBandMatrix::set(std::size_t i, std::size_t j, double v) {
    const std::size_t d = i > j ? i - j : j - i;
    if (d > kd_ || i >= dim_ || j >= dim_) throw ParameterError("band matrix entry outside the band");
    ab_[index(i, j)] = v;
}

void SymBandMatrix::add(std::size_t i, std::size_t j, double v) { set(i, j, at(i, j) + v); }

std::vector<double> SymBandMatrix::multiply(std::span<const double> x) const {
    if (x.size() != dim_) throw ParameterError("band matrix product: size mismatch");
    std::vector<double> y(dim_, 0.0);
    for (std::size_t j = 0; j < dim_; ++j) {
        const std::size_t i0 = j > kd_ ? j - kd_ : 0;
        for (std::size_t i = i0; i <= j; ++i) {
            const double a = ab_[index(i, j)];
            if (a == 0.0) continue;
            y[i] += a * x[j];
            if (i != j) y[j] += a * x[i];
        }
    }
    return y;
}

double SymBandMatrix::max_abs() const {
    double m = 0.0;
    for (double v : ab_) m = std::max(m, std::abs(v));
    return m;
}

bool SymBandMatrix::all_finite() const {
    return std::all_of(ab_.begin(), ab_.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace tprh
