// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tprh::judd {

/// Linear system for the ansatz coefficients of order N.
///
/// The upper spin component is expanded as sum_n p_n |n;s> (n = N mod 2 .. N,
/// step 2) and the lower as sum_m q_m |m;s> (m up to N - 2), with |n;s> the
/// squeezed number states of the Bogoliubov-rotated mode. Two row families
/// constrain them once the energy sits on the order-N baseline:
///
///   A_m:  omega_tilde q_m + (m - N) Omega p_m = 0
///   B_n:  omega_tilde p_n + [2n + 1 - (n + N + 1) Omega^2] / Omega q_n
///         - (2 lambda / Omega) [sqrt(n(n-1)) q_{n-2} + sqrt((n+1)(n+2)) q_{n+2}] = 0
///
/// Unknowns are ordered p (ascending) then q (ascending); rows are A then B.
struct JuddianSystem {
    int N = 2;
    double omega_tilde = 0.0;
    double lambda = 0.0;
    double Omega = 1.0;
    std::vector<int> p_index;
    std::vector<int> q_index;
    std::vector<double> matrix;  ///< row-major, dim x dim

    std::size_t dim() const { return p_index.size() + q_index.size(); }
    int parity() const { return N % 2; }
    double at(std::size_t r, std::size_t c) const { return matrix[r * dim() + c]; }
    std::size_t p_column(int n) const;
    std::size_t q_column(int m) const;
};

/// Throws ParameterError for N < 2 and DomainError unless 0 < |lambda| < 1/2.
JuddianSystem build_system(int N, double omega_tilde, double lambda);

/// Energy baseline -1/2 + (N + 1/2) Omega (rescaled units).
double baseline(int N, double lambda);

/// -1/2 + n Omega, the lines the remaining crossings appear to follow.
double conjectured_baseline(int n, double lambda);

/// Determinant of the system with each row scaled to unit max magnitude,
/// by partial-pivot elimination. Same zeros as the unscaled determinant.
double determinant(int N, double omega_tilde, double lambda);

/// Determinant of the unscaled system.
double raw_determinant(const JuddianSystem& system);

/// Determinant of the q-only system left after eliminating p_m through the
/// A rows, each row multiplied by (N - n). A polynomial in Omega^2 and
/// omega_tilde^2 whose omega_tilde^(2d) coefficient is 1; for omega_tilde != 0
/// it is proportional to raw_determinant at fixed omega_tilde.
double compatibility_value(int N, double omega_tilde, double omega_sq);

/// Degree in Omega^2 of the compatibility polynomial: floor(N / 2).
int compatibility_degree(int N);

/// Compatibility polynomial in x = Omega^2, normalized to leading coefficient 1.
struct CompatibilityPolynomial {
    int N = 2;
    double omega_tilde = 0.0;
    std::vector<double> coeffs;  ///< ascending powers of Omega^2
    double leading = 1.0;        ///< leading coefficient before normalization

    double operator()(double omega_sq) const;
    /// Real roots in (0, 1), ascending.
    std::vector<double> roots_in_unit_interval() const;
};

/// Interpolates compatibility_value at degree + 1 Chebyshev nodes on
/// Omega^2 in [0, 1]. Requires 2 <= N <= 12.
CompatibilityPolynomial fit_compatibility_polynomial(int N, double omega_tilde);

/// Two-component ansatz state: upper (sigma_x = +1) and lower (sigma_x = -1)
/// components expanded in squeezed number states with c = (b + sigma b^dag)/sqrt(1 - sigma^2).
struct AnsatzState {
    double sigma = 0.0;
    std::vector<int> upper_index;
    std::vector<double> upper;
    std::vector<int> lower_index;
    std::vector<double> lower;
};

struct JuddianPoint {
    int N = 2;
    double omega = 1.0;  ///< physical energy unit
    double omega_tilde = 0.0;
    double lambda = 0.0;
    double g = 0.0;
    double E_tilde = 0.0;
    double E = 0.0;
    std::vector<int> p_index;
    std::vector<int> q_index;
    std::vector<double> p;  ///< p_N = 1
    std::vector<double> q;
    double det_residual = 0.0;          ///< scaled determinant at lambda
    double dropped_row_residual = 0.0;  ///< residual of the row left out when pinning p_N
    std::size_t dropped_row = 0;
    bool at_window_edge = false;
    bool mirrored = false;
    AnsatzState ansatz;
    std::optional<double> degeneracy_gap;         ///< rescaled, second-nearest level to E_tilde
    std::optional<double> wavefunction_residual;  ///< ||(H - E)psi|| / ||psi||
};

/// Builds the point record at an arbitrary lambda: baseline energy, physical
/// units, and coefficients from the system with p_N pinned to 1. Away from a
/// root the dropped row is violated and the state is not an eigenstate.
JuddianPoint point_at(int N, double omega_tilde, double lambda, double omega = 1.0);

struct Window {
    double lo = 0.0;
    double hi = 0.5;
};

struct SearchOptions {
    std::size_t grid = 2000;
    double tol = 1e-15;  ///< bisection stops once the bracket is narrower
    double omega = 1.0;  ///< physical energy unit for g and E
};

/// Brackets sign changes of determinant() on a uniform lambda grid and
/// refines each by bisection. Points are sorted by lambda.
std::vector<JuddianPoint> find_points(int N, double omega_tilde, Window window,
                                      const SearchOptions& options = {});

/// find_points over N = n_lo..n_hi, ordered by N then lambda.
std::vector<JuddianPoint> find_all_points(int n_lo, int n_hi, double omega_tilde, Window window,
                                          const SearchOptions& options = {});

/// The degenerate partner at the same (lambda, E): opposite squeezing branch,
/// components swapped with the sign (-1)^((n - N mod 2) / 2) on each term.
JuddianPoint mirror_solution(const JuddianPoint& point);

/// Ansatz state in the full Fock x sigma_x basis (FullMatrix ordering).
std::vector<double> ansatz_vector(const JuddianPoint& point, std::size_t n_max);

struct VerificationReport {
    double residual = 0.0;  ///< ||(H - E) psi|| / ||psi||
    double threshold = 1e-8;
    std::size_t n_max = 0;
    bool passed = false;
};

/// Measures the ansatz residual against the full Hamiltonian. Requires
/// n_max >= 4 (N + 2).
VerificationReport measure_point(const JuddianPoint& point, std::size_t n_max = 600,
                                 double threshold = 1e-8);

/// As measure_point, throwing VerificationError when the residual exceeds
/// the threshold.
VerificationReport verify_point(const JuddianPoint& point, std::size_t n_max = 600,
                                double threshold = 1e-8);

/// |<a|b>| / (|a| |b|) of two ansatz states.
double overlap(const JuddianPoint& a, const JuddianPoint& b, std::size_t n_max = 600);

/// Distance from E_tilde to the second-nearest eigenvalue of the full
/// Hamiltonian at the point's lambda (rescaled units).
double degeneracy_gap(const JuddianPoint& point, std::size_t n_max = 500);

}  // namespace tprh::judd
