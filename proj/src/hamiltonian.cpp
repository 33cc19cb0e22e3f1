// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include "tprh/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "tprh/errors.hpp"

namespace tprh::ham {
namespace {

// <n+2| b^dag^2 |n>
double two_photon(std::size_t n) {
    const double nd = static_cast<double>(n);
    return std::sqrt((nd + 1.0) * (nd + 2.0));
}

std::complex<double> i_pow(std::size_t n) {
    switch (n % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

std::string to_string(const SectorLabel& label) {
    return std::string(label.M == SectorSpin::Plus ? "+" : "-") + "," + su11::to_string(label.k);
}

FullMatrix build_full(const ModelParams& params, std::size_t n_max) {
    if (n_max < 4) throw ParameterError("full Hamiltonian needs n_max >= 4");
    const std::size_t dim = 2 * (n_max + 1);
    SymBandMatrix h(dim, 4);
    const double lam = params.lambda;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto plus = FullMatrix::index(n, SpinX::Plus);
        const auto minus = FullMatrix::index(n, SpinX::Minus);
        h.set(plus, plus, static_cast<double>(n));
        h.set(minus, minus, static_cast<double>(n));
        h.set(plus, minus, params.omega_tilde);
        if (n + 2 <= n_max) {
            const double c = lam * two_photon(n);
            h.set(FullMatrix::index(n + 2, SpinX::Plus), plus, c);
            h.set(FullMatrix::index(n + 2, SpinX::Minus), minus, -c);
        }
    }
    return FullMatrix(n_max, std::move(h));
}

std::size_t sector_m_max(std::size_t n_max, su11::Bargmann k) {
    const std::size_t off = static_cast<std::size_t>(su11::fock_offset(k));
    if (n_max < off) return 0;
    return (n_max - off) / 2;
}

SectorMatrix build_sector(const ModelParams& params, SectorLabel label, std::size_t m_max) {
    const su11::BargmannSector sector(label.k, m_max);
    const auto k0 = su11::k0_diag(sector);
    const auto kp = su11::kplus_offdiag(sector);
    const double M = sign(label.M);

    SectorMatrix s;
    s.label = label;
    s.m_max = m_max;
    s.diag.resize(sector.size());
    for (std::size_t m = 0; m < s.diag.size(); ++m) {
        const double alternating = (m % 2 == 0) ? 1.0 : -1.0;
        s.diag[m] = M * params.omega_tilde * alternating + 2.0 * k0[m] - 0.5;
    }
    s.offdiag.resize(kp.size());
    for (std::size_t m = 0; m < kp.size(); ++m) s.offdiag[m] = 2.0 * params.lambda * kp[m];
    return s;
}

SymBandMatrix build_degenerate(double lambda, SpinX sign, std::size_t n_max) {
    if (!(std::abs(lambda) < 0.5)) {
        throw DomainError("degenerate Hamiltonian requires |lambda| < 1/2 (squeezed vacuum not normalizable)");
    }
    const double s = sign == SpinX::Plus ? 1.0 : -1.0;
    SymBandMatrix h(n_max + 1, 2);
    for (std::size_t n = 0; n <= n_max; ++n) {
        h.set(n, n, static_cast<double>(n));
        if (n + 2 <= n_max) h.set(n + 2, n, s * lambda * two_photon(n));
    }
    return h;
}

std::complex<double> ParityMatrix::phase(std::size_t n, int s_z) {
    return -static_cast<double>(s_z) * i_pow(n);
}

std::vector<std::complex<double>> ParityMatrix::apply_x_basis(std::span<const double> v) const {
    const std::size_t dim = 2 * (n_max_ + 1);
    if (v.size() != dim) throw ParameterError("parity: vector size mismatch");
    std::vector<std::complex<double>> out(dim);
    for (std::size_t n = 0; n <= n_max_; ++n) {
        const auto ph = -i_pow(n);
        out[FullMatrix::index(n, SpinX::Minus)] = ph * v[FullMatrix::index(n, SpinX::Plus)];
        out[FullMatrix::index(n, SpinX::Plus)] = ph * v[FullMatrix::index(n, SpinX::Minus)];
    }
    return out;
}

std::complex<double> ParityMatrix::expectation_x_basis(std::span<const double> v) const {
    const auto pv = apply_x_basis(v);
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * pv[j];
    return s;
}

double ParityMatrix::commutator_max(const FullMatrix& h) const {
    if (h.n_max() != n_max_) throw ParameterError("parity: truncation mismatch");
    const std::size_t dim = h.dim();
    const auto partner = [](std::size_t i) { return i ^ std::size_t{1}; };
    const auto ph = [](std::size_t i) { return -i_pow(i / 2); };
    const auto& a = h.band();
    double worst = 0.0;
    // Nonzero entries of either product need |n_i - n_j| <= 2.
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t lo = i >= 6 ? i - 6 : 0;
        const std::size_t hi = std::min(dim - 1, i + 6);
        for (std::size_t j = lo; j <= hi; ++j) {
            const auto c = ph(j) * a.at(i, partner(j)) - ph(i) * a.at(partner(i), j);
            worst = std::max(worst, std::abs(c));
        }
    }
    return worst;
}

ParityMatrix build_parity(std::size_t n_max) { return ParityMatrix(n_max); }

}  // namespace tprh::ham
