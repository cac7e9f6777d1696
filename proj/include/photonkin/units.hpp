// Unit conventions shared by all solvers.
//
// Everything that crosses a module boundary is in natural units:
//   hbar = 1, c = 1, packet centre wavenumber K = 1,
// so the atomic transition frequency is omega0 = 1 (exact resonance).
// Times are in units of 1/(cK), lengths in units of 1/K.
//
// The CGS constants below are only used by the semiclassical worked example.

#pragma once

#include <numbers>

namespace photonkin {

namespace natural {
inline constexpr double hbar = 1.0;
inline constexpr double c = 1.0;
inline constexpr double K = 1.0;
inline constexpr double omega0 = 1.0;
}  // namespace natural

namespace cgs {
inline constexpr double hbar = 1.054571817e-27;      // erg s
inline constexpr double c = 2.99792458e10;           // cm / s
inline constexpr double e = 4.80320471e-10;          // statC
inline constexpr double bohr_radius = 5.29177210903e-9;  // cm
}  // namespace cgs

inline constexpr double pi = std::numbers::pi;

}  // namespace photonkin
