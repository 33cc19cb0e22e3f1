// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

namespace tprh::table1 {

/// Reference parameters of the published table: 2 omega = omega0 = 1.
inline constexpr double kOmega = 0.5;
inline constexpr double kOmega0 = 1.0;
inline constexpr double kRelTol = 1e-9;

struct Row {
    int N;
    double g;
    double E;
};

/// First twelve isolated exact points of the resonant model as published,
/// 10 significant figures, transcribed verbatim including the non-monotone
/// N = 7 row order. Matching is by set, not by row position.
inline constexpr std::array<Row, 12> kRows = {{
    {2, 0.08838834765, 0.6338834765},
    {3, 0.06846531969, 1.214155046},
    {4, 0.1136829135, 0.6855144259},
    {4, 0.05510006004, 1.769611501},
    {5, 0.1017761788, 1.346571001},
    {5, 0.04587381623, 2.308117863},
    {6, 0.1195668196, 0.6977617553},
    {6, 0.09065527261, 1.987605007},
    {6, 0.03920841953, 2.835982030},
    {7, 0.1124265002, 1.389132039},
    {7, 0.03419600455, 3.356947455},
    {7, 0.08111783821, 2.603139795},
}};

}  // namespace tprh::table1
