// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include "tprh/juddian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tprh/eigensolver.hpp"
#include "tprh/errors.hpp"
#include "tprh/hamiltonian.hpp"
#include "tprh/model_params.hpp"
#include "tprh/squeezed.hpp"

namespace tprh::judd {
namespace {

using Dense = std::vector<double>;  // row-major square

// Partial-pivot LU determinant; `a` is consumed.
double lu_determinant(Dense a, std::size_t n) {
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        const double pv = a[piv * n + c];
        if (pv == 0.0) return 0.0;
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
            det = -det;
        }
        det *= pv;
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r * n + c] / pv;
            if (f == 0.0) continue;
            for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
        }
    }
    return det;
}

// Solves a x = b by partial-pivot elimination. Returns false when singular.
bool lu_solve(Dense a, std::vector<double> b, std::size_t n, std::vector<double>& x) {
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        if (a[piv * n + c] == 0.0) return false;
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
            std::swap(b[c], b[piv]);
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r * n + c] / a[c * n + c];
            if (f == 0.0) continue;
            for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
            b[r] -= f * b[c];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
        x[i] = s / a[i * n + i];
    }
    return true;
}

Dense row_scaled(const JuddianSystem& s) {
    const std::size_t n = s.dim();
    Dense a = s.matrix;
    for (std::size_t r = 0; r < n; ++r) {
        double m = 0.0;
        for (std::size_t c = 0; c < n; ++c) m = std::max(m, std::abs(a[r * n + c]));
        if (m > 0.0)
            for (std::size_t c = 0; c < n; ++c) a[r * n + c] /= m;
    }
    return a;
}

void check_order(int N) {
    if (N < 2) throw ParameterError("order N = " + std::to_string(N) + ": the minimum value of N is 2");
}

int chain_sign(int n, int parity) { return ((n - parity) / 2) % 2 == 0 ? 1 : -1; }

}  // namespace

std::size_t JuddianSystem::p_column(int n) const {
    const auto it = std::find(p_index.begin(), p_index.end(), n);
    if (it == p_index.end()) throw ParameterError("p index outside the chain");
    return static_cast<std::size_t>(it - p_index.begin());
}

std::size_t JuddianSystem::q_column(int m) const {
    const auto it = std::find(q_index.begin(), q_index.end(), m);
    if (it == q_index.end()) throw ParameterError("q index outside the chain");
    return p_index.size() + static_cast<std::size_t>(it - q_index.begin());
}

JuddianSystem build_system(int N, double omega_tilde, double lambda) {
    check_order(N);
    if (!std::isfinite(omega_tilde)) throw ParameterError("omega_tilde must be finite");
    if (lambda == 0.0) throw DomainError("the ansatz system is undefined at lambda = 0");

    JuddianSystem s;
    s.N = N;
    s.omega_tilde = omega_tilde;
    s.lambda = lambda;
    s.Omega = big_omega(lambda);
    for (int n = N % 2; n <= N; n += 2) s.p_index.push_back(n);
    for (int m = N % 2; m <= N - 2; m += 2) s.q_index.push_back(m);

    const std::size_t dim = s.dim();
    s.matrix.assign(dim * dim, 0.0);
    const double Om = s.Omega;
    const double Om2 = Om * Om;
    const double hop = 2.0 * lambda / Om;
    const auto set = [&](std::size_t r, std::size_t c, double v) { s.matrix[r * dim + c] += v; };
    const auto has_q = [&](int m) { return m >= N % 2 && m <= N - 2; };

    std::size_t row = 0;
    for (int m : s.q_index) {
        set(row, s.q_column(m), omega_tilde);
        set(row, s.p_column(m), (m - N) * Om);
        ++row;
    }
    for (int n : s.p_index) {
        const double nd = n;
        set(row, s.p_column(n), omega_tilde);
        if (has_q(n)) set(row, s.q_column(n), (2.0 * nd + 1.0 - (nd + N + 1.0) * Om2) / Om);
        if (has_q(n - 2)) set(row, s.q_column(n - 2), -hop * std::sqrt(nd * (nd - 1.0)));
        if (has_q(n + 2)) set(row, s.q_column(n + 2), -hop * std::sqrt((nd + 1.0) * (nd + 2.0)));
        ++row;
    }
    return s;
}

double baseline(int N, double lambda) {
    check_order(N);
    return -0.5 + (N + 0.5) * big_omega(lambda);
}

double conjectured_baseline(int n, double lambda) {
    if (n < 2) throw ParameterError("conjectured baselines start at n = 2");
    return -0.5 + n * big_omega(lambda);
}

double determinant(int N, double omega_tilde, double lambda) {
    const auto s = build_system(N, omega_tilde, lambda);
    return lu_determinant(row_scaled(s), s.dim());
}

double raw_determinant(const JuddianSystem& system) {
    return lu_determinant(system.matrix, system.dim());
}

int compatibility_degree(int N) {
    check_order(N);
    return N / 2;
}

double compatibility_value(int N, double omega_tilde, double omega_sq) {
    check_order(N);
    const double w2 = omega_tilde * omega_tilde;
    const double hop_sq = 1.0 - omega_sq;
    // Continuant of the tridiagonal q system (chain step 2).
    double prev2 = 0.0, prev = 1.0;
    bool first = true;
    for (int n = N % 2; n <= N - 2; n += 2) {
        const double nd = n;
        const double diag = w2 + (N - n) * (2.0 * nd + 1.0 - (nd + N + 1.0) * omega_sq);
        double cur;
        if (first) {
            cur = diag;
            first = false;
        } else {
            const double coupling = (N - n) * (N - n + 2) * hop_sq * nd * (nd - 1.0);
            cur = diag * prev - coupling * prev2;
        }
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

double CompatibilityPolynomial::operator()(double x) const {
    double s = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) s = s * x + coeffs[i];
    return s;
}

std::vector<double> CompatibilityPolynomial::roots_in_unit_interval() const {
    constexpr int samples = 4096;
    std::vector<double> roots;
    double x0 = 0.0, f0 = (*this)(x0);
    for (int i = 1; i <= samples; ++i) {
        const double x1 = static_cast<double>(i) / samples;
        const double f1 = (*this)(x1);
        if (f0 == 0.0 && x0 > 0.0) roots.push_back(x0);
        if (f0 * f1 < 0.0) {
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double fm = (*this)(mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

CompatibilityPolynomial fit_compatibility_polynomial(int N, double omega_tilde) {
    if (N < 2 || N > 12) throw ParameterError("compatibility fit supports 2 <= N <= 12");
    const int d = compatibility_degree(N);
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    Dense vander(n * n);
    std::vector<double> rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x =
            0.5 * (1.0 + std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * static_cast<double>(n))));
        double pw = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            vander[j * n + k] = pw;
            pw *= x;
        }
        rhs[j] = compatibility_value(N, omega_tilde, x);
    }
    std::vector<double> c;
    if (!lu_solve(vander, rhs, n, c)) throw NumericalError("compatibility fit: singular interpolation system");

    CompatibilityPolynomial poly;
    poly.N = N;
    poly.omega_tilde = omega_tilde;
    poly.leading = c.back();
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    if (!(std::abs(poly.leading) > 1e-12 * scale))
        throw NumericalError("compatibility fit: vanishing leading coefficient");
    for (double& v : c) v /= poly.leading;
    poly.coeffs = std::move(c);
    return poly;
}

JuddianPoint point_at(int N, double omega_tilde, double lambda, double omega) {
    const auto sys = build_system(N, omega_tilde, lambda);
    const std::size_t dim = sys.dim();
    const Dense scaled = row_scaled(sys);
    const std::size_t pin = sys.p_column(N);

    // Drop the row that leaves the best-conditioned square system.
    std::size_t best_row = dim;
    double best_det = -1.0;
    const auto reduced = [&](std::size_t drop) {
        Dense a;
        std::vector<double> b;
        a.reserve((dim - 1) * (dim - 1));
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == drop) continue;
            for (std::size_t c = 0; c < dim; ++c)
                if (c != pin) a.push_back(scaled[r * dim + c]);
            b.push_back(-scaled[r * dim + pin]);
        }
        return std::pair{a, b};
    };
    for (std::size_t r = 0; r < dim; ++r) {
        const double d = std::abs(lu_determinant(reduced(r).first, dim - 1));
        if (d > best_det) {
            best_det = d;
            best_row = r;
        }
    }
    auto [a, b] = reduced(best_row);
    std::vector<double> x;
    if (!lu_solve(std::move(a), std::move(b), dim - 1, x))
        throw NumericalError("ansatz coefficients: pinned system is singular");
    std::vector<double> full(dim);
    for (std::size_t c = 0, k = 0; c < dim; ++c) full[c] = (c == pin) ? 1.0 : x[k++];

    JuddianPoint pt;
    pt.N = N;
    pt.omega = omega;
    pt.omega_tilde = omega_tilde;
    pt.lambda = lambda;
    pt.g = lambda * omega / 2.0;
    pt.E_tilde = baseline(N, lambda);
    pt.E = omega * pt.E_tilde;
    pt.p_index = sys.p_index;
    pt.q_index = sys.q_index;
    pt.p.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(sys.p_index.size()));
    pt.q.assign(full.begin() + static_cast<std::ptrdiff_t>(sys.p_index.size()), full.end());
    pt.det_residual = lu_determinant(scaled, dim);
    pt.dropped_row = best_row;
    double res = 0.0;
    for (std::size_t c = 0; c < dim; ++c) res += scaled[best_row * dim + c] * full[c];
    pt.dropped_row_residual = std::abs(res);

    // The ansatz lives on the squeezing branch sigma + lambda(1 + sigma^2) = 0,
    // which in the c = (b + s b^dag) convention is s = -sigma_judd.
    pt.ansatz.sigma = -squeeze_params(lambda, SqueezeBranch::Judd).sigma_judd;
    pt.ansatz.upper_index = pt.p_index;
    pt.ansatz.upper = pt.p;
    pt.ansatz.lower_index = pt.q_index;
    pt.ansatz.lower = pt.q;
    return pt;
}

std::vector<JuddianPoint> find_points(int N, double omega_tilde, Window window,
                                      const SearchOptions& options) {
    check_order(N);
    if (!(window.lo > 0.0 && window.hi < 0.5 && window.lo < window.hi))
        throw DomainError("Juddian search window must lie inside (0, 1/2)");
    if (options.grid < 2) throw ParameterError("search grid needs at least two points");
    if (!(options.tol >= 1e-15)) throw ParameterError("bisection tolerance must be >= 1e-15");

    const auto f = [&](double lam) { return determinant(N, omega_tilde, lam); };
    const std::size_t n = options.grid;
    const double step = (window.hi - window.lo) / static_cast<double>(n - 1);
    const auto grid_at = [&](std::size_t i) {
        return i + 1 == n ? window.hi : window.lo + step * static_cast<double>(i);
    };

    std::vector<double> roots;
    std::vector<bool> edge;
    double x0 = grid_at(0), f0 = f(x0);
    if (f0 == 0.0) {
        roots.push_back(x0);
        edge.push_back(true);
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double x1 = grid_at(i);
        const double f1 = f(x1);
        if (f1 == 0.0) {
            roots.push_back(x1);
            edge.push_back(i + 1 == n);
        } else if (f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
            double lo = x0, hi = x1, flo = f0;
            while (hi - lo > options.tol) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            const double root = 0.5 * (lo + hi);
            roots.push_back(root);
            edge.push_back(root - window.lo <= options.tol || window.hi - root <= options.tol);
        }
        x0 = x1;
        f0 = f1;
    }

    std::vector<JuddianPoint> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        auto pt = point_at(N, omega_tilde, roots[i], options.omega);
        pt.at_window_edge = edge[i];
        out.push_back(std::move(pt));
    }
    return out;
}

std::vector<JuddianPoint> find_all_points(int n_lo, int n_hi, double omega_tilde, Window window,
                                          const SearchOptions& options) {
    check_order(n_lo);
    if (n_hi < n_lo) throw ParameterError("empty N range");
    std::vector<JuddianPoint> all;
    for (int N = n_lo; N <= n_hi; ++N) {
        auto pts = find_points(N, omega_tilde, window, options);
        all.insert(all.end(), pts.begin(), pts.end());
    }
    return all;
}

JuddianPoint mirror_solution(const JuddianPoint& point) {
    JuddianPoint m = point;
    const int par = point.N % 2;
    const auto& a = point.ansatz;
    m.ansatz.sigma = -a.sigma;
    m.ansatz.upper_index = a.lower_index;
    m.ansatz.lower_index = a.upper_index;
    m.ansatz.upper.resize(a.lower.size());
    m.ansatz.lower.resize(a.upper.size());
    for (std::size_t i = 0; i < a.lower.size(); ++i) m.ansatz.upper[i] = chain_sign(a.lower_index[i], par) * a.lower[i];
    for (std::size_t i = 0; i < a.upper.size(); ++i) m.ansatz.lower[i] = chain_sign(a.upper_index[i], par) * a.upper[i];
    m.mirrored = !point.mirrored;
    m.wavefunction_residual.reset();
    return m;
}

std::vector<double> ansatz_vector(const JuddianPoint& point, std::size_t n_max) {
    if (n_max < 4 * static_cast<std::size_t>(point.N + 2))
        throw ParameterError("ansatz reconstruction needs n_max >= 4 (N + 2)");
    const auto& a = point.ansatz;
    std::vector<double> psi(2 * (n_max + 1), 0.0);
    const auto add = [&](const std::vector<int>& idx, const std::vector<double>& coef, ham::SpinX s) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (coef[i] == 0.0) continue;
            const auto st = squeezed::squeezed_number_state(static_cast<std::size_t>(idx[i]), a.sigma, n_max);
            for (std::size_t n = 0; n <= n_max; ++n) psi[ham::FullMatrix::index(n, s)] += coef[i] * st.coeffs[n];
        }
    };
    add(a.upper_index, a.upper, ham::SpinX::Plus);
    add(a.lower_index, a.lower, ham::SpinX::Minus);
    return psi;
}

VerificationReport measure_point(const JuddianPoint& point, std::size_t n_max, double threshold) {
    const auto psi = ansatz_vector(point, n_max);
    const auto params = ModelParams::from_rescaled(1.0, point.omega_tilde, point.lambda);
    const auto h = ham::build_full(params, n_max);
    const auto hpsi = h.apply(psi);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double r = hpsi[i] - point.E_tilde * psi[i];
        num += r * r;
        den += psi[i] * psi[i];
    }
    VerificationReport rep;
    rep.residual = std::sqrt(num / den);
    rep.threshold = threshold;
    rep.n_max = n_max;
    rep.passed = rep.residual < threshold;
    return rep;
}

VerificationReport verify_point(const JuddianPoint& point, std::size_t n_max, double threshold) {
    auto rep = measure_point(point, n_max, threshold);
    if (!rep.passed) {
        throw VerificationError("Juddian point N=" + std::to_string(point.N) + " lambda=" +
                                std::to_string(point.lambda) + (point.mirrored ? " (mirror)" : "") +
                                ": residual " + std::to_string(rep.residual) + " exceeds " +
                                std::to_string(threshold));
    }
    return rep;
}

double overlap(const JuddianPoint& a, const JuddianPoint& b, std::size_t n_max) {
    const auto u = ansatz_vector(a, n_max);
    const auto v = ansatz_vector(b, n_max);
    double uv = 0.0, uu = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        uv += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    return std::abs(uv) / std::sqrt(uu * vv);
}

double degeneracy_gap(const JuddianPoint& point, std::size_t n_max) {
    const auto params = ModelParams::from_rescaled(1.0, point.omega_tilde, point.lambda);
    const auto h = ham::build_full(params, n_max);
    std::size_t count = std::min<std::size_t>(h.dim(), 16 + 8 * static_cast<std::size_t>(std::ceil(std::max(0.0, point.E_tilde + 2.0))));
    auto res = eig::eig_banded(h.band(), false, count);
    while (res.values.back() < point.E_tilde + 1.0 && count < h.dim()) {
        count = std::min(h.dim(), 2 * count);
        res = eig::eig_banded(h.band(), false, count);
    }
    std::vector<double> dist;
    for (double v : res.values) dist.push_back(std::abs(v - point.E_tilde));
    std::sort(dist.begin(), dist.end());
    return dist.size() >= 2 ? dist[1] : dist.front();
}

}  // namespace tprh::judd
