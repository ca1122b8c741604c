// model.hpp — cyclic three-level Hamiltonian for either enantiomer

#pragma once

#include <numbers>
#include <stdexcept>
#include <string_view>

#include "esst/algebra.hpp"

namespace esst {

// Handedness of the molecule. The two enantiomers share Omega_x and Omega_z
// and see opposite signs on the Omega_y coupling.
enum class Chirality { Left, Right };

constexpr int sign(Chirality c) noexcept { return c == Chirality::Left ? +1 : -1; }

constexpr std::string_view to_string(Chirality c) noexcept {
    return c == Chirality::Left ? "left" : "right";
}

// Instantaneous Rabi frequencies (rad per time unit) and the loop phase.
struct RabiSample {
    double omega_x = 0.0;
    double omega_y = 0.0;
    double omega_z = 0.0;
    double phi = std::numbers::pi / 2.0;

    bool finite() const noexcept;
};

// Resonant interaction-picture Hamiltonian
//   [[0, Ox, Oz e^{-i phi}], [Ox, 0, s Oy], [Oz e^{i phi}, s Oy, 0]]
// with s = sign(c). Throws std::invalid_argument on non-finite input.
ComplexMatrix3 build_hamiltonian(const RabiSample& s, Chirality c);

// Ox Kx + s Oy Ky + Oz Kz; coincides with build_hamiltonian at phi = pi/2.
ComplexMatrix3 su2_hamiltonian(double omega_x, double omega_y, double omega_z, Chirality c);

} // namespace esst
