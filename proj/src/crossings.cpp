// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include "tprh/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tprh/errors.hpp"
#include "tprh/juddian.hpp"

namespace tprh::cross {
namespace {

std::size_t sector_slot(const ham::SectorLabel& label) {
    for (std::size_t s = 0; s < 4; ++s)
        if (ham::kAllSectors[s] == label) return s;
    throw ParameterError("unknown sector label");
}

int order_key(const ham::SectorLabel& l) { return static_cast<int>(sector_slot(l)); }

}  // namespace

std::string to_string(Parity p) {
    switch (p) {
        case Parity::PlusOne: return "+1";
        case Parity::PlusI: return "+i";
        case Parity::MinusOne: return "-1";
        case Parity::MinusI: return "-i";
    }
    return "?";
}

std::complex<double> to_complex(Parity p) {
    switch (p) {
        case Parity::PlusOne: return {1.0, 0.0};
        case Parity::PlusI: return {0.0, 1.0};
        case Parity::MinusOne: return {-1.0, 0.0};
        case Parity::MinusI: return {0.0, -1.0};
    }
    return {};
}

int square(Parity p) { return (p == Parity::PlusOne || p == Parity::MinusOne) ? 1 : -1; }

bool described_by_parity(Parity a, Parity b) {
    const auto pair_is = [&](Parity x, Parity y) { return (a == x && b == y) || (a == y && b == x); };
    return pair_is(Parity::PlusOne, Parity::MinusOne) || pair_is(Parity::PlusI, Parity::MinusI);
}

char expected_table_entry(Parity a, Parity b) {
    if (a == b) return '-';
    return described_by_parity(a, b) ? 'y' : 'n';
}

std::size_t SpectrumTable::max_n_max() const {
    return n_max.empty() ? 0 : *std::max_element(n_max.begin(), n_max.end());
}

std::vector<double> sector_spectrum(const ModelParams& params, ham::SectorLabel label,
                                    std::size_t n_max, std::size_t levels) {
    const auto m_max = ham::sector_m_max(n_max, label.k);
    const auto s = ham::build_sector(params, label, m_max);
    auto r = eig::eig_tridiagonal(s.diag, s.offdiag, false);
    if (r.values.size() < levels) throw ParameterError("sector truncation smaller than requested levels");
    r.values.resize(levels);
    return r.values;
}

std::array<std::vector<double>, 4> sector_levels(const ModelParams& params, std::size_t n_max,
                                                 std::size_t levels) {
    std::array<std::vector<double>, 4> out;
    for (std::size_t s = 0; s < 4; ++s) out[s] = sector_spectrum(params, ham::kAllSectors[s], n_max, levels);
    return out;
}

SpectrumTable scan(const ModelParams& base, Window window, std::size_t grid_size, std::size_t levels,
                   const ScanOptions& options) {
    if (!(window.lo >= 0.0 && window.hi < 0.5 && window.lo < window.hi))
        throw DomainError("scan window must satisfy 0 <= lo < hi < 1/2");
    if (grid_size < 2) throw ParameterError("scan grid needs at least two points");
    if (levels < 2) throw ParameterError("scan needs at least two levels per sector");

    SpectrumTable t;
    t.omega = base.omega;
    t.omega_tilde = base.omega_tilde;
    t.levels = levels;
    t.tol = options.tol;
    const double step = (window.hi - window.lo) / static_cast<double>(grid_size - 1);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double lam = i + 1 == grid_size ? window.hi : window.lo + step * static_cast<double>(i);
        const auto params = ModelParams::from_rescaled(base.omega, base.omega_tilde, lam);
        const auto builder = [&](std::size_t n_max) {
            std::vector<double> all;
            for (const auto& v : sector_levels(params, n_max, levels)) all.insert(all.end(), v.begin(), v.end());
            return all;
        };
        // Convergence is judged on all 4 * levels tracked values at once.
        eig::ConvergedSpectrum conv;
        if (options.fixed_n_max) {
            conv.values = builder(*options.fixed_n_max);
            conv.n_max = *options.fixed_n_max;
        } else {
            conv = eig::converged_spectrum(builder, 4 * levels, options.tol, options.policy);
        }
        t.lambda_grid.push_back(lam);
        t.n_max.push_back(conv.n_max);
        for (std::size_t s = 0; s < 4; ++s) {
            const auto first = conv.values.begin() + static_cast<std::ptrdiff_t>(s * levels);
            t.energies[s].emplace_back(first, first + static_cast<std::ptrdiff_t>(levels));
        }
    }
    return t;
}

std::vector<CrossingRecord> detect_crossings(const SpectrumTable& table, const DetectOptions& options) {
    const std::size_t G = table.lambda_grid.size();
    if (G < 2) throw ParameterError("crossing detection needs at least two grid points");
    const std::size_t L = table.levels;
    std::vector<CrossingRecord> out;

    for (std::size_t sa = 0; sa < 4; ++sa)
        for (std::size_t sb = sa + 1; sb < 4; ++sb)
            for (std::size_t i = 0; i < L; ++i)
                for (std::size_t j = 0; j < L; ++j) {
                    const auto diff = [&](std::size_t t) {
                        return table.energies[sa][t][i] - table.energies[sb][t][j];
                    };
                    for (std::size_t t = 0; t + 1 < G; ++t) {
                        if ((diff(t) >= 0.0) == (diff(t + 1) >= 0.0)) continue;
                        const std::size_t n_ref = std::max(table.n_max[t], table.n_max[t + 1]);
                        const auto f = [&](double lam) {
                            const auto p = ModelParams::from_rescaled(table.omega, table.omega_tilde, lam);
                            return sector_spectrum(p, ham::kAllSectors[sa], n_ref, i + 1)[i] -
                                   sector_spectrum(p, ham::kAllSectors[sb], n_ref, j + 1)[j];
                        };
                        double lo = table.lambda_grid[t], hi = table.lambda_grid[t + 1];
                        double flo = f(lo);
                        const double fhi = f(hi);
                        double root;
                        if ((flo >= 0.0) == (fhi >= 0.0)) {
                            // Sign change sat within the convergence tolerance of a grid point.
                            root = std::abs(flo) < std::abs(fhi) ? lo : hi;
                        } else {
                            while (hi - lo > options.lambda_tol) {
                                const double mid = 0.5 * (lo + hi);
                                const double fm = f(mid);
                                if ((fm >= 0.0) == (flo >= 0.0)) {
                                    lo = mid;
                                    flo = fm;
                                } else {
                                    hi = mid;
                                }
                            }
                            root = 0.5 * (lo + hi);
                        }
                        const auto p = ModelParams::from_rescaled(table.omega, table.omega_tilde, root);
                        const double ea = sector_spectrum(p, ham::kAllSectors[sa], n_ref, i + 1)[i];
                        const double eb = sector_spectrum(p, ham::kAllSectors[sb], n_ref, j + 1)[j];

                        CrossingRecord rec;
                        rec.lambda_star = root;
                        rec.E_tilde_star = 0.5 * (ea + eb);
                        rec.g_star = root * table.omega / 2.0;
                        rec.E_star = table.omega * rec.E_tilde_star;
                        rec.sector_a = ham::kAllSectors[sa];
                        rec.sector_b = ham::kAllSectors[sb];
                        rec.level_a = i;
                        rec.level_b = j;
                        rec.n_max = n_ref;
                        rec.same_k = rec.sector_a.k == rec.sector_b.k;
                        out.push_back(rec);
                    }
                }

    std::sort(out.begin(), out.end(), [](const CrossingRecord& x, const CrossingRecord& y) {
        if (x.lambda_star != y.lambda_star) return x.lambda_star < y.lambda_star;
        if (x.sector_a != y.sector_a) return order_key(x.sector_a) < order_key(y.sector_a);
        if (x.sector_b != y.sector_b) return order_key(x.sector_b) < order_key(y.sector_b);
        if (x.level_a != y.level_a) return x.level_a < y.level_a;
        return x.level_b < y.level_b;
    });
    std::vector<CrossingRecord> unique;
    for (const auto& r : out) {
        const bool dup = std::any_of(unique.begin(), unique.end(), [&](const CrossingRecord& u) {
            return u.sector_a == r.sector_a && u.sector_b == r.sector_b &&
                   std::abs(u.lambda_star - r.lambda_star) < options.dedup_tol &&
                   std::abs(u.E_tilde_star - r.E_tilde_star) < options.dedup_tol;
        });
        if (!dup) unique.push_back(r);
    }
    return unique;
}

ParityLabel parity_label(const ModelParams& params, double E_target, double lambda, std::size_t n_max) {
    const auto p = ModelParams::from_rescaled(params.omega, params.omega_tilde, lambda);
    const auto h = ham::build_full(p, n_max);
    std::size_t count = std::min<std::size_t>(
        h.dim(), 16 + 8 * static_cast<std::size_t>(std::ceil(std::max(0.0, E_target + 3.0))));
    auto res = eig::eig_banded(h.band(), true, count);
    while (res.values.back() < E_target + 0.5 && count < h.dim()) {
        count = std::min(h.dim(), 2 * count);
        res = eig::eig_banded(h.band(), true, count);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < res.values.size(); ++i)
        if (std::abs(res.values[i] - E_target) < std::abs(res.values[best] - E_target)) best = i;

    const auto parity = ham::build_parity(n_max);
    ParityLabel out;
    out.energy = res.values[best];
    out.expectation = parity.expectation_x_basis(res.vector(best));
    double dev = std::numeric_limits<double>::infinity();
    for (Parity cand : kAllParities) {
        const double d = std::abs(out.expectation - to_complex(cand));
        if (d < dev) {
            dev = d;
            out.value = cand;
        }
    }
    out.deviation = dev;
    if (dev > 1e-3) {
        throw LabelingError("parity expectation (" + std::to_string(out.expectation.real()) + ", " +
                            std::to_string(out.expectation.imag()) + ") at lambda=" + std::to_string(lambda) +
                            " is not a fourth root of unity");
    }
    return out;
}

BaselineMatch nearest_juddian_baseline(double lambda, double E_tilde, int max_order) {
    BaselineMatch best{true, 0, std::numeric_limits<double>::infinity()};
    for (int N = 2; N <= max_order; ++N) {
        const double d = std::abs(E_tilde - judd::baseline(N, lambda));
        if (d < best.distance) best = {true, N, d};
    }
    return best;
}

BaselineMatch nearest_conjectured_baseline(double lambda, double E_tilde, int max_order) {
    BaselineMatch best{false, 0, std::numeric_limits<double>::infinity()};
    for (int n = 2; n <= max_order; ++n) {
        const double d = std::abs(E_tilde - judd::conjectured_baseline(n, lambda));
        if (d < best.distance) best = {false, n, d};
    }
    return best;
}

void label_crossings(std::vector<CrossingRecord>& records, double omega, double omega_tilde,
                     const LabelOptions& options) {
    for (auto& rec : records) {
        std::optional<Parity> side_a, side_b;
        double worst = 0.0;
        for (double sgn : {-1.0, 1.0}) {
            const double lam = rec.lambda_star + sgn * options.offset;
            const auto p = ModelParams::from_rescaled(omega, omega_tilde, lam);
            const double ea = sector_spectrum(p, rec.sector_a, rec.n_max, rec.level_a + 1)[rec.level_a];
            const double eb = sector_spectrum(p, rec.sector_b, rec.n_max, rec.level_b + 1)[rec.level_b];
            const auto la = parity_label(p, ea, lam, rec.n_max);
            const auto lb = parity_label(p, eb, lam, rec.n_max);
            worst = std::max({worst, la.deviation, lb.deviation});
            if (side_a && (*side_a != la.value || *side_b != lb.value)) {
                throw LabelingError("parity labels differ across the crossing at lambda=" +
                                    std::to_string(rec.lambda_star));
            }
            side_a = la.value;
            side_b = lb.value;
        }
        rec.parity_a = side_a;
        rec.parity_b = side_b;
        rec.parity_deviation = worst;
        rec.described = described_by_parity(*side_a, *side_b);
        rec.same_k = rec.sector_a.k == rec.sector_b.k;
        rec.nearest_baseline = rec.described
                                   ? nearest_juddian_baseline(rec.lambda_star, rec.E_tilde_star, options.max_baseline_order)
                                   : nearest_conjectured_baseline(rec.lambda_star, rec.E_tilde_star, options.max_baseline_order);
    }
}

ClassificationSummary classify(const std::vector<CrossingRecord>& records) {
    ClassificationSummary s;
    for (const auto& r : records) {
        if (!r.parity_a || !r.parity_b) throw ParameterError("classify needs labelled crossings");
        const auto a = static_cast<std::size_t>(*r.parity_a);
        const auto b = static_cast<std::size_t>(*r.parity_b);
        ++s.counts[a][b];
        if (a != b) ++s.counts[b][a];
        const bool described = described_by_parity(*r.parity_a, *r.parity_b);
        if (described != r.same_k) ++s.rule_disagreements;
        s.max_parity_deviation = std::max(s.max_parity_deviation, r.parity_deviation);
        if (described) {
            ++s.described;
            const auto m = r.nearest_baseline && r.nearest_baseline->juddian
                               ? *r.nearest_baseline
                               : nearest_juddian_baseline(r.lambda_star, r.E_tilde_star, 40);
            s.max_described_baseline_distance = std::max(s.max_described_baseline_distance, m.distance);
            if (m.distance > 1e-6) ++s.described_off_baseline;
        } else {
            ++s.undescribed;
            const auto m = r.nearest_baseline && !r.nearest_baseline->juddian
                               ? *r.nearest_baseline
                               : nearest_conjectured_baseline(r.lambda_star, r.E_tilde_star, 40);
            s.max_undescribed_baseline_distance = std::max(s.max_undescribed_baseline_distance, m.distance);
            if (m.distance > 1e-4) ++s.undescribed_off_baseline;
        }
    }
    if (s.rule_disagreements > 0) {
        throw ConsistencyError("parity-pair rule and Bargmann rule disagree on " +
                               std::to_string(s.rule_disagreements) + " crossing(s)");
    }
    return s;
}

}  // namespace tprh::cross
