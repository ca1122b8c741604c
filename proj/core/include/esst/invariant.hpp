// invariant.hpp — Lewis-Riesenfeld invariant of the SU(2) three-level system
//
// The invariant is parametrized by two auxiliary angles (theta, psi): (gamma, beta)
// for the left-handed molecule and (xi, chi) for the right-handed one. Its
// eigenvectors are fixed with the phase convention
//
//   phi_0   = (cos t cos p, -i sin t, -cos t sin p)
//   phi_+/- = (sin t cos p +/- i sin p, i cos t, -sin t sin p +/- i cos p) / sqrt(2)
//
// which both branches share; only the Hamiltonian (sign of Omega_y) differs.

#pragma once

#include <functional>

#include "esst/algebra.hpp"
#include "esst/model.hpp"

namespace esst {

struct AuxAngles {
    double theta = 0.0;   // gamma (left) / xi (right)
    double psi = 0.0;     // beta (left) / chi (right)
    double dtheta = 0.0;  // time derivatives
    double dpsi = 0.0;

    bool finite() const noexcept;
};

struct InvariantSpec {
    double omega0 = 1.0;  // arbitrary positive frequency scale
    AuxAngles angles;
    Chirality chirality = Chirality::Left;
};

// (omega0/2)(cos t sin p Kx + cos t cos p Ky + sin t Kz). Eigenvalues are
// {-omega0/2, 0, +omega0/2}.
ComplexMatrix3 invariant_matrix(const InvariantSpec& spec);

enum class EigenBranch { Zero, Plus, Minus };

struct InvariantEigenbasis {
    ComplexVector3 phi0;
    ComplexVector3 phi_plus;
    ComplexVector3 phi_minus;

    const ComplexVector3& operator[](EigenBranch n) const;
};

InvariantEigenbasis invariant_eigensystem(const AuxAngles& angles);

// Eigenvalue of invariant_matrix for branch n: 0, +omega0/2, -omega0/2.
double invariant_eigenvalue(EigenBranch n, double omega0);

struct AngleRates {
    double dtheta;
    double dpsi;
};

// Equations of motion the auxiliary angles must satisfy for the invariant to
// be conserved under the chirality's Hamiltonian:
//   dtheta = Ox cos p - s Oy sin p
//   dpsi   = (Ox sin p + s Oy cos p) tan t - Oz
AngleRates angle_rates(const RabiSample& rabi, double theta, double psi, Chirality c);

// max_ij |dI/dt - i[I, H]| at t, with dI/dt from a central difference of step dt.
// Requires [t - dt, t + dt] within [t_begin, t_end]; throws std::out_of_range otherwise.
double invariance_residual(const std::function<InvariantSpec(double)>& spec_at,
                           const std::function<ComplexMatrix3(double)>& hamiltonian_at,
                           double t, double dt, double t_begin, double t_end);

} // namespace esst
