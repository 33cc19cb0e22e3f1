// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include "tprh/eigensolver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tprh/errors.hpp"

namespace tprh::eig {
namespace {

bool finite(std::span<const double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double v) { return std::isfinite(v); });
}

// Sorts eigenpairs ascending; equal values keep their relative order so the
// vector output is stable.
void sort_pairs(std::size_t n, std::vector<double>& d, std::vector<double>& z) {
    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    std::vector<double> ds(d.size());
    for (std::size_t i = 0; i < order.size(); ++i) ds[i] = d[order[i]];
    d.swap(ds);
    if (z.empty()) return;
    std::vector<double> zs(z.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        std::copy_n(z.begin() + order[i] * n, n, zs.begin() + i * n);
    z.swap(zs);
}

template <class Apply>
double max_residual(const EigenResult& r, Apply&& apply) {
    double worst = 0.0;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        const auto v = r.vector(i);
        const std::vector<double> av = apply(v);
        double s = 0.0;
        for (std::size_t k = 0; k < r.dim; ++k) {
            const double d = av[k] - r.values[i] * v[k];
            s += d * d;
        }
        worst = std::max(worst, std::sqrt(s));
    }
    return worst;
}

}  // namespace

std::size_t trusted_count(std::size_t dim) { return (dim * 4) / 5; }

EigenResult eig_tridiagonal(std::span<const double> diag, std::span<const double> offdiag,
                            bool want_vectors) {
    const std::size_t n = diag.size();
    if (n == 0) throw ParameterError("eig_tridiagonal: empty matrix");
    if (offdiag.size() + 1 != n) throw ParameterError("eig_tridiagonal: offdiag must have n-1 entries");
    if (!finite(diag) || !finite(offdiag)) throw NumericalError("eig_tridiagonal: non-finite input");

    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(n, 0.0);
    std::copy(offdiag.begin(), offdiag.end(), e.begin());
    std::vector<double> z;
    if (want_vectors) {
        z.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();

    // Implicit QL with Wilkinson-type shifts; e[i] couples rows i and i+1.
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 60) throw NumericalError("eig_tridiagonal: QL iteration did not converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool deflated = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (want_vectors) {
                    double* zi = z.data() + i * n;
                    double* zi1 = z.data() + (i + 1) * n;
                    for (std::size_t k = 0; k < n; ++k) {
                        f = zi1[k];
                        zi1[k] = s * zi[k] + c * f;
                        zi[k] = c * zi[k] - s * f;
                    }
                }
            }
            if (deflated) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    EigenResult out;
    out.dim = n;
    sort_pairs(n, d, z);
    out.values = std::move(d);
    out.vectors = std::move(z);
    out.trusted_count = trusted_count(n);
    if (want_vectors) {
        out.residual_bound = max_residual(out, [&](std::span<const double> v) {
            std::vector<double> av(n);
            for (std::size_t k = 0; k < n; ++k) {
                double s = diag[k] * v[k];
                if (k > 0) s += offdiag[k - 1] * v[k - 1];
                if (k + 1 < n) s += offdiag[k] * v[k + 1];
                av[k] = s;
            }
            return av;
        });
    }
    return out;
}

EigenResult eig_banded(const SymBandMatrix& matrix, bool want_vectors,
                       std::optional<std::size_t> count) {
    const std::size_t n = matrix.dim();
    if (n == 0) throw ParameterError("eig_banded: empty matrix");
    if (count && (*count == 0 || *count > n)) throw ParameterError("eig_banded: count out of range");
    if (!matrix.all_finite()) throw NumericalError("eig_banded: non-finite input");

    const auto kd = static_cast<lapack_int>(matrix.kd());
    const auto ni = static_cast<lapack_int>(n);
    std::vector<double> ab = matrix.band_storage();
    std::vector<double> q(want_vectors ? n * n : 1);
    const std::size_t want = count.value_or(n);
    std::vector<double> w(n);
    std::vector<double> z(want_vectors ? n * want : 1);
    std::vector<lapack_int> ifail(n);
    lapack_int found = 0;
    const char range = count ? 'I' : 'A';
    const double abstol = 2.0 * LAPACKE_dlamch('S');

    const lapack_int info = LAPACKE_dsbevx(
        LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', range, 'U', ni, kd, ab.data(), kd + 1,
        q.data(), want_vectors ? ni : 1, 0.0, 0.0, 1, static_cast<lapack_int>(want), abstol,
        &found, w.data(), z.data(), want_vectors ? ni : 1, ifail.data());
    if (info != 0) throw NumericalError("eig_banded: dsbevx failed, info=" + std::to_string(info));

    EigenResult out;
    out.dim = n;
    out.values.assign(w.begin(), w.begin() + found);
    if (want_vectors) out.vectors.assign(z.begin(), z.begin() + static_cast<std::size_t>(found) * n);
    sort_pairs(n, out.values, out.vectors);
    out.trusted_count = trusted_count(n);
    if (want_vectors) {
        out.residual_bound = max_residual(out, [&](std::span<const double> v) { return matrix.multiply(v); });
    }
    return out;
}

ConvergedSpectrum converged_spectrum(const SpectrumBuilder& builder, std::size_t levels,
                                     double tol, const ConvergencePolicy& policy) {
    if (levels == 0) throw ParameterError("converged_spectrum: need at least one level");
    if (!(tol > 0.0)) throw ParameterError("converged_spectrum: tolerance must be positive");

    ConvergedSpectrum out;
    std::size_t n_max = policy.start_n_max;
    std::vector<double> prev = builder(n_max);
    out.tried.push_back(n_max);
    while (n_max * 2 <= policy.limit_n_max) {
        const std::size_t next_n = n_max * 2;
        std::vector<double> next = builder(next_n);
        out.tried.push_back(next_n);
        if (prev.size() < levels || next.size() < levels)
            throw ParameterError("converged_spectrum: builder returned fewer levels than requested");
        double change = 0.0;
        for (std::size_t i = 0; i < levels; ++i) change = std::max(change, std::abs(next[i] - prev[i]));
        if (change < tol) {
            prev.resize(levels);
            out.values = std::move(prev);
            out.n_max = n_max;
            return out;
        }
        prev = std::move(next);
        n_max = next_n;
    }
    throw ConvergenceError("spectrum not converged by n_max = " + std::to_string(policy.limit_n_max));
}

}  // namespace tprh::eig
