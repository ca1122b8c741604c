// invariant.cpp

#include "esst/invariant.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace esst {

bool AuxAngles::finite() const noexcept {
    return std::isfinite(theta) && std::isfinite(psi) && std::isfinite(dtheta) &&
           std::isfinite(dpsi);
}

ComplexMatrix3 invariant_matrix(const InvariantSpec& spec) {
    if (!(spec.omega0 > 0.0) || !std::isfinite(spec.omega0))
        throw std::invalid_argument("invariant_matrix: omega0 must be positive and finite");
    if (!spec.angles.finite()) throw std::invalid_argument("invariant_matrix: non-finite angles");
    const double ct = std::cos(spec.angles.theta), st = std::sin(spec.angles.theta);
    const double cp = std::cos(spec.angles.psi), sp = std::sin(spec.angles.psi);
    static const Su2Generators k = su2_generators();
    return (0.5 * spec.omega0) * ((ct * sp) * k.kx + (ct * cp) * k.ky + st * k.kz);
}

const ComplexVector3& InvariantEigenbasis::operator[](EigenBranch n) const {
    switch (n) {
    case EigenBranch::Zero: return phi0;
    case EigenBranch::Plus: return phi_plus;
    case EigenBranch::Minus: return phi_minus;
    }
    throw std::invalid_argument("InvariantEigenbasis: unknown branch");
}

InvariantEigenbasis invariant_eigensystem(const AuxAngles& angles) {
    const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
    const double cp = std::cos(angles.psi), sp = std::sin(angles.psi);
    const double r = 1.0 / std::numbers::sqrt2;
    InvariantEigenbasis e;
    e.phi0 = {ct * cp, -kI * st, -ct * sp};
    e.phi_plus = r * ComplexVector3{st * cp + kI * sp, kI * ct, -st * sp + kI * cp};
    e.phi_minus = r * ComplexVector3{st * cp - kI * sp, kI * ct, -st * sp - kI * cp};
    return e;
}

double invariant_eigenvalue(EigenBranch n, double omega0) {
    switch (n) {
    case EigenBranch::Zero: return 0.0;
    case EigenBranch::Plus: return 0.5 * omega0;
    case EigenBranch::Minus: return -0.5 * omega0;
    }
    throw std::invalid_argument("invariant_eigenvalue: unknown branch");
}

AngleRates angle_rates(const RabiSample& rabi, double theta, double psi, Chirality c) {
    const double oy = sign(c) * rabi.omega_y;
    const double cp = std::cos(psi), sp = std::sin(psi);
    return {rabi.omega_x * cp - oy * sp, (rabi.omega_x * sp + oy * cp) * std::tan(theta) - rabi.omega_z};
}

double invariance_residual(const std::function<InvariantSpec(double)>& spec_at,
                           const std::function<ComplexMatrix3(double)>& hamiltonian_at,
                           double t, double dt, double t_begin, double t_end) {
    if (!(dt > 0.0)) throw std::invalid_argument("invariance_residual: dt must be positive");
    const double slack = 1e-12 * std::max(1.0, std::abs(t_end - t_begin));
    if (t - dt < t_begin - slack || t + dt > t_end + slack) {
        std::ostringstream os;
        os << "invariance_residual: stencil [" << t - dt << ", " << t + dt
           << "] leaves the interval [" << t_begin << ", " << t_end << "]";
        throw std::out_of_range(os.str());
    }
    const ComplexMatrix3 before = invariant_matrix(spec_at(t - dt));
    const ComplexMatrix3 after = invariant_matrix(spec_at(t + dt));
    const ComplexMatrix3 now = invariant_matrix(spec_at(t));
    const ComplexMatrix3 didt = (1.0 / (2.0 * dt)) * (after - before);
    return (didt - kI * commutator(now, hamiltonian_at(t))).max_abs();
}

} // namespace esst
