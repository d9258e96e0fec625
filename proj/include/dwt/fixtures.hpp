#pragma once

// Parameters of the reference figures and the 87Rb worked example. Energies
// are in units of U (or J where U = 0) unless marked nK; times in hbar / energy.

#include <array>

namespace dwt::fixtures {

// Figure 1: noninteracting atoms, N = 100, tilt of 2J. Half the atoms tunnel.
namespace figure1 {
inline constexpr int kAtoms = 100;
inline constexpr double kHopping = 1.0;
inline constexpr double kTiltOverJ = 2.0;
inline constexpr double kTMax = 10.0;  // about 4.5 oscillations at 2 sqrt(2) J
inline constexpr int kTSteps = 1001;
// amplitude and frequency against dV / J; the suppression threshold 2J sqrt(N-1) ~ 19.9 J sits inside
inline constexpr double kSweepTiltOverJMax = 24.0;
inline constexpr int kSweepPoints = 241;
}  // namespace figure1

// Figure 2: Josephson regime, N = 10, zeta / N = 10; collapse and revival of
// the fast oscillation with period pi / U.
namespace figure2 {
inline constexpr int kAtoms = 10;
inline constexpr double kZetaOverN = 10.0;
inline constexpr double kRevivals = 3.0;  // t in [0, 3 pi / U]
inline constexpr int kTSteps = 6001;
}  // namespace figure2

// Figure 3: Fock regime, zeta = 0.1. N = 7 densities without tilt and on the
// p = 2 resonance (dV = 4U); N = 5 amplitude against dV / 2U.
namespace figure3 {
inline constexpr double kZeta = 0.1;
inline constexpr int kDensityAtoms = 7;
inline constexpr int kResonanceOrder = 2;
inline constexpr double kPeriods = 1.0;
inline constexpr int kTSteps = 801;
inline constexpr int kSweepAtoms = 5;
inline constexpr double kSweepTiltOver2UMax = 4.5;
inline constexpr int kSweepPoints = 91;
inline constexpr int kZoomOrder = 2;  // zoom around dV / 2U = 2
}  // namespace figure3

// Figure 4: tau against N for embedded NOON sizes p' = 10, 50, 100 at zeta = 0.1.
namespace figure4 {
inline constexpr double kZeta = 0.1;
inline constexpr std::array<int, 3> kNoonSizes = {10, 50, 100};
inline constexpr int kMaxMultiple = 10;  // N up to 10 p'
}  // namespace figure4

// Figure 5: periods at zeta = 0.1; T_N for N = 1..100 and T_N^p for N = 40..100.
namespace figure5 {
inline constexpr double kZeta = 0.1;
inline constexpr int kFirstAtoms = 1;
inline constexpr int kLastAtoms = 100;
inline constexpr std::array<int, 7> kResonanceAtoms = {40, 50, 60, 70, 80, 90, 100};
}  // namespace figure5

// 87Rb worked example: U = 0.53299 nK k_B, zeta = 0.0964, N = 200.
namespace rb87 {
inline constexpr double kInteractionNanoKelvin = 0.53299;
inline constexpr double kZeta = 0.0964;
inline constexpr int kAtoms = 200;
inline constexpr int kNoonSize = 3;  // p = 197
}  // namespace rb87

}  // namespace dwt::fixtures
