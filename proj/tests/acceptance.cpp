// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero if any asserted criterion (1-9) fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tprh/cli.hpp"
#include "tprh/crossings.hpp"
#include "tprh/eigensolver.hpp"
#include "tprh/errors.hpp"
#include "tprh/hamiltonian.hpp"
#include "tprh/juddian.hpp"
#include "tprh/model_params.hpp"
#include "tprh/squeezed.hpp"
#include "tprh/su11.hpp"
#include "tprh/table1.hpp"

using namespace tprh;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void note(const char* fmt, ...) __attribute__((format(printf, 2, 3))) {
        char buf[512];
        va_list ap;
        va_start(ap, fmt);
        std::vsnprintf(buf, sizeof buf, fmt, ap);
        va_end(ap);
        details.emplace_back(buf);
    }
    void require(bool ok, const char* what) {
        if (!ok) {
            pass = false;
            details.push_back(std::string("failed: ") + what);
        }
    }
};

int failures = 0;

void report(int id, const char* title, const Outcome& o, bool asserted = true) {
    std::printf("%s criterion %d: %s%s\n", o.pass ? "PASS" : "FAIL", id, title,
                asserted ? "" : " (reported, not asserted)");
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (asserted && !o.pass) ++failures;
}

void run_guarded(int id, const char* title, const std::function<void(Outcome&)>& body, bool asserted = true) {
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.details.push_back(std::string("exception: ") + e.what());
    }
    report(id, title, o, asserted);
}

const judd::Window kFullWindow{1e-6, 0.5 - 1e-6};

std::vector<judd::JuddianPoint> table1_points() {
    judd::SearchOptions opts;
    opts.omega = table1::kOmega;
    return judd::find_all_points(2, 7, table1::kOmega0 / (2 * table1::kOmega), kFullWindow, opts);
}

// Crossing of sectors (+,k) and (-,k) nearest lambda0, located by bisection on
// the sector tridiagonals alone (no ansatz involved).
double crossing_lambda(double lambda0, double E_tilde, double omega_tilde) {
    const std::size_t n_max = 512;
    auto gap = [&](double lam, su11::Bargmann k) {
        const auto p = ModelParams::from_rescaled(1.0, omega_tilde, lam);
        auto level_near = [&](ham::SectorSpin M) {
            const auto v = cross::sector_spectrum(p, {M, k}, n_max, 16);
            return *std::min_element(v.begin(), v.end(), [&](double a, double b) {
                return std::abs(a - E_tilde) < std::abs(b - E_tilde);
            });
        };
        return level_near(ham::SectorSpin::Plus) - level_near(ham::SectorSpin::Minus);
    };
    for (auto k : {su11::Bargmann::Quarter, su11::Bargmann::ThreeQuarters}) {
        double lo = lambda0 - 1e-5, hi = lambda0 + 1e-5;
        double glo = gap(lo, k), ghi = gap(hi, k);
        if (glo * ghi > 0) continue;
        for (int i = 0; i < 80 && hi - lo > 1e-16; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double gm = gap(mid, k);
            if ((gm < 0) == (glo < 0)) {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }
    return NAN;
}

void criterion1(Outcome& o) {
    const auto t0 = Clock::now();
    const auto pts = table1_points();
    const double elapsed = seconds_since(t0);
    o.note("found %zu points in %.3f s", pts.size(), elapsed);
    o.require(pts.size() == 12, "twelve points");
    o.require(elapsed < 10.0, "runtime < 10 s");
    double worst = 0.0;
    for (const auto& ref : table1::kRows) {
        const judd::JuddianPoint* best = nullptr;
        for (const auto& p : pts)
            if (p.N == ref.N && (!best || std::abs(p.g - ref.g) < std::abs(best->g - ref.g))) best = &p;
        if (!best) {
            o.require(false, "reference row without a computed point");
            continue;
        }
        const double dg = rel(best->g, ref.g), dE = rel(best->E, ref.E);
        worst = std::max({worst, dg, dE});
        const bool ok = dg <= table1::kRelTol && dE <= table1::kRelTol;
        if (!ok) {
            o.pass = false;
            const double lc = crossing_lambda(best->lambda, best->E_tilde, 1.0);
            o.note("N=%d: published g=%.10g E=%.10g; computed g=%.13g (rel %.2g) E=%.13g (rel %.2g); "
                   "independent level-crossing g=%.13g",
                   ref.N, ref.g, ref.E, best->g, dg, best->E, dE, lc * table1::kOmega / 2.0);
        }
    }
    o.note("worst relative deviation over all rows: %.3g (tolerance %.0e)", worst, table1::kRelTol);

    std::ostringstream out, log;
    const char* argv[] = {"tprh", "table1"};
    const int rc = cli::run(2, argv, out, log);
    o.note("CLI `table1` exit status %d", rc);
    o.require(rc == (o.pass ? 0 : 1), "CLI exit status agrees with the comparison");
}

void criterion2(Outcome& o) {
    judd::SearchOptions opts;
    opts.omega = 0.5;
    const auto two = judd::find_points(2, 1.0, kFullWindow, opts);
    const auto three = judd::find_points(3, 1.0, kFullWindow, opts);
    o.require(two.size() == 1 && three.size() == 1, "one root each for N=2 and N=3");
    if (!o.pass) return;
    const double g2 = 1 / (8 * std::sqrt(2.0)), E2 = (5 / std::sqrt(2.0) - 1) / 4;
    const double g3 = std::sqrt(3.0 / 10.0) / 8, E3 = (7 * std::sqrt(7.0 / 10.0) - 1) / 4;
    const double errs[4] = {rel(two[0].g, g2), rel(two[0].E, E2), rel(three[0].g, g3), rel(three[0].E, E3)};
    o.note("N=2: g rel %.2g, E rel %.2g; N=3: g rel %.2g, E rel %.2g", errs[0], errs[1], errs[2], errs[3]);
    for (double e : errs) o.require(e < 1e-12, "closed form to 1e-12 relative");
}

void criterion3(Outcome& o) {
    double worst = 0.0;
    for (int N = 2; N <= 4; ++N)
        for (double wt : {0.5, 1.0, 1.5}) {
            const double w2 = wt * wt;
            std::vector<double> printed;
            if (N == 2) printed = {2 + w2, -6};
            if (N == 3) printed = {6 + w2, -10};
            if (N == 4) printed = {8 * 3 + 2 * 7 * w2 + w2 * w2, -8 * 30 - 2 * 17 * w2, 8 * 35};
            const auto fit = judd::fit_compatibility_polynomial(N, wt);
            if (fit.coeffs.size() != printed.size()) {
                o.require(false, "polynomial degree");
                continue;
            }
            for (std::size_t i = 0; i < printed.size(); ++i) {
                const double ratio = printed[i] / printed.back();
                worst = std::max(worst, std::abs(fit.coeffs[i] - ratio) / std::max(1.0, std::abs(ratio)));
            }
        }
    o.note("worst coefficient-ratio error %.3g over N=2,3,4 and omega_tilde in {0.5, 1, 1.5}", worst);
    o.require(worst < 1e-8, "ratio error < 1e-8");
}

void criterion4(Outcome& o) {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (double lam : {0.1, 0.2, 0.3, 0.4}) {
        const auto conv = eig::converged_spectrum(
            [&](std::size_t n_max) {
                return eig::eig_banded(ham::build_degenerate(lam, ham::SpinX::Plus, n_max), false, 6).values;
            },
            6, 1e-12);
        for (std::size_t n = 0; n < 6; ++n)
            worst = std::max(worst, std::abs(conv.values[n] - squeezed::degenerate_energy(n, lam)));
        o.note("lambda=%.1f converged at n_max=%zu", lam, conv.n_max);
    }
    const double elapsed = seconds_since(t0);
    o.note("max |numeric - analytic| = %.3g, runtime %.3f s", worst, elapsed);
    o.require(worst < 1e-9, "agreement to 1e-9");
    o.require(elapsed < 5.0, "runtime < 5 s");

    bool rejected = false;
    try {
        (void)ham::build_degenerate(0.5, ham::SpinX::Plus, 16);
    } catch (const DomainError&) {
        rejected = true;
    }
    std::ostringstream out, log;
    const char* argv[] = {"tprh", "degenerate", "--lambda", "0.5"};
    const int rc = cli::run(4, argv, out, log);
    o.note("lambda=0.5: library %s, CLI exit %d", rejected ? "rejects" : "accepts", rc);
    o.require(rejected && rc == 2, "lambda = 0.5 rejected");
}

void criterion5(Outcome& o) {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> wt(-2.0, 2.0), lam(-0.45, 0.45);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto p = ModelParams::from_rescaled(1.0, wt(rng), lam(rng));
        const std::size_t n_max = 200;
        std::vector<double> all;
        for (const auto& v : cross::sector_levels(p, n_max, 12)) all.insert(all.end(), v.begin(), v.end());
        std::sort(all.begin(), all.end());
        all.resize(12);
        const auto full = eig::eig_banded(ham::build_full(p, n_max).band(), false, 12).values;
        worst = std::max(worst, oracle::max_abs_diff(all, full));
    }
    o.note("max deviation over 10 random samples, lowest 12 levels: %.3g", worst);
    o.require(worst < 1e-10, "agreement to 1e-10");
}

struct ScanResult {
    std::vector<cross::CrossingRecord> records;
    cross::ClassificationSummary summary;
    bool ok = false;
};

void criterion6(Outcome& o, ScanResult& out) {
    const auto t0 = Clock::now();
    const auto base = ModelParams::from_rescaled(table1::kOmega, 1.0, 0.0);
    const auto table = cross::scan(base, {0.02, 0.45}, 400, 12);
    auto records = cross::detect_crossings(table);
    cross::label_crossings(records, table1::kOmega, 1.0);
    const double elapsed = seconds_since(t0);
    cross::ClassificationSummary s;
    try {
        s = cross::classify(records);
    } catch (const ConsistencyError& e) {
        o.require(false, e.what());
        return;
    }
    o.note("%zu crossings (%zu described, %zu undescribed), max n_max %zu, %.1f s", records.size(), s.described,
           s.undescribed, table.max_n_max(), elapsed);
    o.note("rule disagreements %zu, max parity deviation %.3g", s.rule_disagreements, s.max_parity_deviation);
    o.require(s.rule_disagreements == 0, "zero rule disagreements");
    for (auto a : cross::kAllParities)
        for (auto b : cross::kAllParities) {
            const auto n = s.counts[static_cast<int>(a)][static_cast<int>(b)];
            if (n > 0 && cross::expected_table_entry(a, b) == '-') o.require(false, "crossing between equal parities");
        }
    for (const auto& r : records) {
        const bool bargmann = r.sector_a.k == r.sector_b.k;
        if (r.described != bargmann) o.require(false, "described <=> equal Bargmann k");
    }
    o.require(elapsed < 120.0, "runtime < 2 min");

    // Two of the twelve points lie above 0.45; those are matched against an
    // extension scan with the same grid spacing, labelled and classified alike.
    const auto ext_table = cross::scan(base, {0.45, 0.48}, 29, 6);
    auto ext = cross::detect_crossings(ext_table);
    cross::label_crossings(ext, table1::kOmega, 1.0);
    const auto ext_summary = cross::classify(ext);
    o.require(ext_summary.rule_disagreements == 0, "zero rule disagreements in the extension");

    double worst = 0.0;
    std::size_t inside = 0, matched_inside = 0, matched_outside = 0;
    for (const auto& p : table1_points()) {
        const bool in_window = p.lambda >= 0.02 && p.lambda <= 0.45;
        double best = 1e300;
        for (const auto& r : in_window ? records : ext)
            if (r.described) best = std::min(best, std::abs(r.lambda_star - p.lambda));
        worst = std::max(worst, best);
        inside += in_window;
        if (best < 1e-6) ++(in_window ? matched_inside : matched_outside);
        if (!in_window) o.note("N=%d point at lambda=%.10f lies outside the window; extension distance %.3g", p.N,
                               p.lambda, best);
    }
    o.note("%zu/%zu Juddian points inside the window and %zu/%zu outside it on a described crossing; "
           "worst lambda distance %.3g",
           matched_inside, inside, matched_outside, 12 - inside, worst);
    o.require(matched_inside + matched_outside == 12, "all twelve Juddian points within 1e-6 in lambda");
    out.records = std::move(records);
    out.summary = s;
    out.ok = true;
}

void criterion7(Outcome& o) {
    double worst = 0.0, worst_overlap = 0.0;
    const auto pts = table1_points();
    o.require(pts.size() == 12, "twelve points");
    for (const auto& p : pts) {
        const auto m = judd::mirror_solution(p);
        worst = std::max({worst, judd::measure_point(p, 600).residual, judd::measure_point(m, 600).residual});
        worst_overlap = std::max(worst_overlap, judd::overlap(p, m, 600));
    }
    o.note("max residual %.3g over states and partners at n_max=600; max partner overlap %.3g", worst,
           worst_overlap);
    o.require(worst < 1e-8, "residual < 1e-8");
    o.require(worst_overlap < 1 - 1e-6, "partners linearly independent");
}

void criterion8(Outcome& o) {
    double comm = 0.0, cas = 0.0, fock = 0.0;
    for (auto k : {su11::Bargmann::Quarter, su11::Bargmann::ThreeQuarters}) {
        const su11::BargmannSector s(k, 16);
        comm = std::max(comm, su11::commutator_check(s));
        const auto c = su11::casimir_check(s);
        cas = std::max({cas, c.diagonal_deviation, c.offdiagonal_max, std::abs(c.sample_diagonal + 3.0 / 16.0)});
        const auto kp = su11::kplus_offdiag(s);
        const double off = su11::fock_offset(k);
        for (std::size_t m = 0; m < kp.size(); ++m) {
            const double n = 2.0 * static_cast<double>(m) + off;
            fock = std::max(fock, std::abs(kp[m] - 0.5 * std::sqrt((n + 1) * (n + 2))));
        }
    }
    o.note("[K-,K+]-2K0: %.3g; Casimir deviation from -3/16: %.3g; K+ vs b^dag^2/2: %.3g", comm, cas, fock);
    o.require(comm < 1e-13, "commutator");
    o.require(cas < 1e-13, "Casimir");
    o.require(fock < 1e-14, "Fock correspondence");

    double eig_res = 0.0;
    for (double sigma : {0.2, -0.4}) {
        for (std::size_t n = 0; n < 5; ++n) {
            const auto f = squeezed::squeezed_number_state(n, sigma, 300);
            const auto ccf = squeezed::apply_c_dag(squeezed::apply_c(f.coeffs, sigma), sigma);
            double r = 0.0;
            for (std::size_t i = 0; i + 2 < ccf.size(); ++i) r += std::pow(ccf[i] - double(n) * f.coeffs[i], 2);
            eig_res = std::max(eig_res, std::sqrt(r));
        }
    }
    o.note("c^dag c eigen residual %.3g", eig_res);
    o.require(eig_res < 1e-12, "squeezed c^dag c eigenproperty");

    double parity = 0.0;
    for (double lam : {0.1, 0.3, 0.45})
        for (double wt : {0.5, 1.0})
            parity = std::max(parity, ham::build_parity(200).commutator_max(
                                          ham::build_full(ModelParams::from_rescaled(1.0, wt, lam), 200)));
    o.note("max |[H, Pi]| %.3g", parity);
    o.require(parity < 1e-13, "[H, Pi] = 0");
}

void criterion9(Outcome& o) {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = dim(rng);
        oracle::Dense m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
        SymBandMatrix b(n, n - 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) b.set(i, j, m(i, j));
        worst = std::max(worst, oracle::max_abs_diff(eig::eig_banded(b, false).values, oracle::eigenvalues(m)));

        std::vector<double> d(n), e(n - 1);
        for (auto& x : d) x = u(rng);
        for (auto& x : e) x = u(rng);
        worst = std::max(worst, oracle::max_abs_diff(eig::eig_tridiagonal(d, e, false).values,
                                                     oracle::eigenvalues(d, e)));
    }
    o.note("max deviation from bisection oracle over 100 dense + 100 tridiagonal matrices: %.3g", worst);
    o.require(worst < 1e-10, "agreement to 1e-10");
}

void criterion10(Outcome& o, const ScanResult& scan) {
    if (!scan.ok) {
        o.require(false, "scan unavailable");
        return;
    }
    const auto& s = scan.summary;
    o.note("%zu undescribed crossings; max distance to -1/2 + n Omega: %.3g; beyond 1e-4: %zu", s.undescribed,
           s.max_undescribed_baseline_distance, s.undescribed_off_baseline);
    o.require(s.undescribed_off_baseline == 0, "all undescribed crossings within 1e-4");
}

}  // namespace

int main() {
    ScanResult scan;
    run_guarded(1, "Table 1 reproduction to 1e-9 relative", criterion1);
    run_guarded(2, "closed-form N=2 and N=3 roots to 1e-12", criterion2);
    run_guarded(3, "compatibility polynomials N=2,3,4", criterion3);
    run_guarded(4, "degenerate-case spectrum", criterion4);
    run_guarded(5, "sector decoupling", criterion5);
    run_guarded(6, "parity classification of crossings", [&](Outcome& o) { criterion6(o, scan); });
    run_guarded(7, "wavefunction verification", criterion7);
    run_guarded(8, "algebra self-tests", criterion8);
    run_guarded(9, "eigensolver oracle", criterion9);
    run_guarded(10, "conjectured baselines", [&](Outcome& o) { criterion10(o, scan); }, false);
    std::printf("%d asserted criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
