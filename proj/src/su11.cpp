// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include "tprh/su11.hpp"

#include <algorithm>
#include <cmath>

#include "tprh/errors.hpp"

namespace tprh::su11 {
namespace {

// Small row-major dense helper; the checks run on modest truncations only.
struct Dense {
    std::size_t n;
    std::vector<double> a;
    explicit Dense(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

Dense multiply(const Dense& x, const Dense& y) {
    Dense r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t l = 0; l < x.n; ++l) {
            const double xil = x(i, l);
            if (xil == 0.0) continue;
            for (std::size_t j = 0; j < x.n; ++j) r(i, j) += xil * y(l, j);
        }
    return r;
}

struct Generators {
    Dense k0, kp, km;
};

Generators generators(const BargmannSector& sector) {
    const std::size_t n = sector.size();
    Generators g{Dense(n), Dense(n), Dense(n)};
    const auto d = k0_diag(sector);
    const auto up = kplus_offdiag(sector);
    for (std::size_t m = 0; m < n; ++m) g.k0(m, m) = d[m];
    for (std::size_t m = 0; m + 1 < n; ++m) {
        g.kp(m + 1, m) = up[m];
        g.km(m, m + 1) = up[m];
    }
    return g;
}

}  // namespace

BargmannSector::BargmannSector(Bargmann k, std::size_t m_max) : k_(k), m_max_(m_max) {
    if (m_max < 2) throw ParameterError("Bargmann sector truncation needs m_max >= 2");
}

std::vector<double> k0_diag(const BargmannSector& sector) {
    std::vector<double> out(sector.size());
    const double k = value(sector.k());
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = static_cast<double>(m) + k;
    return out;
}

std::vector<double> kplus_offdiag(const BargmannSector& sector) {
    std::vector<double> out(sector.m_max());
    const double two_k = 2.0 * value(sector.k());
    for (std::size_t m = 0; m < out.size(); ++m) {
        const double md = static_cast<double>(m);
        out[m] = std::sqrt((md + 1.0) * (md + two_k));
    }
    return out;
}

CasimirReport casimir_check(const BargmannSector& sector) {
    const auto g = generators(sector);
    const Dense k0sq = multiply(g.k0, g.k0);
    const Dense pm = multiply(g.kp, g.km);
    const Dense mp = multiply(g.km, g.kp);
    const std::size_t n = sector.size();
    const std::size_t interior = n - kEdgeSkip;
    const double expected = casimir_value(sector.k());

    CasimirReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double c = k0sq(i, j) - 0.5 * (pm(i, j) + mp(i, j));
            if (i == j) {
                if (i == 0) rep.sample_diagonal = c;
                if (i < interior)
                    rep.diagonal_deviation = std::max(rep.diagonal_deviation, std::abs(c - expected));
            } else {
                rep.offdiagonal_max = std::max(rep.offdiagonal_max, std::abs(c));
            }
        }
    return rep;
}

double commutator_check(const BargmannSector& sector) {
    const auto g = generators(sector);
    const Dense mp = multiply(g.km, g.kp);
    const Dense pm = multiply(g.kp, g.km);
    const std::size_t interior = sector.size() - kEdgeSkip;
    double worst = 0.0;
    for (std::size_t i = 0; i < interior; ++i)
        for (std::size_t j = 0; j < interior; ++j) {
            const double c = mp(i, j) - pm(i, j) - 2.0 * g.k0(i, j);
            worst = std::max(worst, std::abs(c));
        }
    return worst;
}

}  // namespace tprh::su11
