#pragma once

// CODATA 2018 values. k_B and q_e are exact by definition.
namespace mirp::constants {

inline constexpr double k_boltzmann = 1.380649e-23;     // J/K
inline constexpr double hbar = 1.054571817e-34;         // J s
inline constexpr double electron_charge = 1.602176634e-19;  // C
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace mirp::constants
