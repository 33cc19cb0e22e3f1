// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tprh::su11 {

/// Bargmann index of the single-mode realization: k = 1/4 carries the even
/// Fock states |2m>, k = 3/4 the odd ones |2m+1>.
enum class Bargmann { Quarter, ThreeQuarters };

inline double value(Bargmann k) { return k == Bargmann::Quarter ? 0.25 : 0.75; }

/// Lowest Fock number in the sector (0 or 1); |k,m> <-> |2m + offset>.
inline int fock_offset(Bargmann k) { return k == Bargmann::Quarter ? 0 : 1; }

inline std::string to_string(Bargmann k) { return k == Bargmann::Quarter ? "1/4" : "3/4"; }

/// Casimir eigenvalue k(k-1); equals -3/16 for both single-mode indices.
inline double casimir_value(Bargmann k) { return value(k) * (value(k) - 1.0); }

/// Truncated D+(k) basis |k,0>, ..., |k,m_max>.
class BargmannSector {
public:
    /// Throws ParameterError when m_max < 2.
    BargmannSector(Bargmann k, std::size_t m_max);

    Bargmann k() const { return k_; }
    std::size_t m_max() const { return m_max_; }
    std::size_t size() const { return m_max_ + 1; }

private:
    Bargmann k_;
    std::size_t m_max_;
};

/// Basis states excluded from algebra checks at the top of the truncation.
inline constexpr std::size_t kEdgeSkip = 2;

/// Entry m is m + k.
std::vector<double> k0_diag(const BargmannSector& sector);

/// Entry m is <k,m+1|K+|k,m> = sqrt((m+1)(m+2k)), m = 0..m_max-1. By
/// Hermitian conjugacy the same vector holds <k,m|K-|k,m+1>.
std::vector<double> kplus_offdiag(const BargmannSector& sector);

struct CasimirReport {
    double diagonal_deviation = 0.0;  ///< max |C_mm - k(k-1)| over interior states
    double offdiagonal_max = 0.0;
    double sample_diagonal = 0.0;     ///< C_00
};

/// Forms C = K0^2 - (K+K- + K-K+)/2 on the truncated basis by explicit
/// matrix products and compares against k(k-1).
CasimirReport casimir_check(const BargmannSector& sector);

/// Max entrywise |[K-, K+] - 2 K0| over interior rows and columns.
double commutator_check(const BargmannSector& sector);

}  // namespace tprh::su11
