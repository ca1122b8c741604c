// model.cpp

#include "esst/model.hpp"

#include <cmath>
#include <sstream>

namespace esst {

bool RabiSample::finite() const noexcept {
    return std::isfinite(omega_x) && std::isfinite(omega_y) && std::isfinite(omega_z) &&
           std::isfinite(phi);
}

ComplexMatrix3 build_hamiltonian(const RabiSample& s, Chirality c) {
    if (!s.finite()) {
        std::ostringstream os;
        os << "build_hamiltonian: non-finite Rabi sample (" << s.omega_x << ", " << s.omega_y
           << ", " << s.omega_z << ", phi=" << s.phi << ")";
        throw std::invalid_argument(os.str());
    }
    const double oy = sign(c) * s.omega_y;
    ComplexMatrix3 h;
    h(0, 1) = h(1, 0) = s.omega_x;
    h(1, 2) = h(2, 1) = oy;
    // e^{-i pi/2} is evaluated exactly so the phi = pi/2 case matches the SU(2) form bit for bit.
    const Complex loop = (s.phi == std::numbers::pi / 2.0) ? -kI : std::polar(1.0, -s.phi);
    h(0, 2) = s.omega_z * loop;
    h(2, 0) = s.omega_z * std::conj(loop);
    return h;
}

ComplexMatrix3 su2_hamiltonian(double omega_x, double omega_y, double omega_z, Chirality c) {
    static const Su2Generators k = su2_generators();
    return omega_x * k.kx + (sign(c) * omega_y) * k.ky + omega_z * k.kz;
}

} // namespace esst
