// design.hpp — invariant-based inverse engineering of the Rabi waveforms
//
// The auxiliary angles are chosen first; the Rabi frequencies that make the
// invariant exact follow from inverting the angle equations of motion under
// the constraint Omega_x = Omega_z. The closed-form design uses the cubic
//
//   left:  gamma = 0, beta = P(t) + eta
//   right: chi = 0,   xi   = -P(t) + eta'
//   P(t)  = 3 pi t^2 / (2 tau^2) - pi t^3 / tau^3
//
// which meets the zero-slope conditions at both ends exactly; the offset
// eta keeps Omega_y finite at t = 0. Left(eta) and Right(eta' = -eta) give the
// same field.

#pragma once

#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "esst/invariant.hpp"
#include "esst/model.hpp"
#include "esst/schedule.hpp"

namespace esst {

inline constexpr std::size_t kDefaultGridPoints = 4001;
inline constexpr double kMaxEta = 0.2;

struct DesignParams {
    double tau = 1.0;
    // Offset angle: eta for the left branch, eta' for the right branch.
    double eta = 0.02;
    std::size_t grid_points = kDefaultGridPoints;

    // Throws std::invalid_argument naming the violated constraint. The
    // closed-form pulses additionally require eta != 0.
    void validate(bool require_nonzero_eta = true) const;
    TimeGrid grid() const { return TimeGrid(tau, grid_points); }
};

class SingularDesignError : public std::domain_error {
public:
    SingularDesignError(double t, const AuxAngles& angles, double denominator);

    double time() const noexcept { return t_; }
    const AuxAngles& angles() const noexcept { return angles_; }

private:
    double t_;
    AuxAngles angles_;
};

struct RabiPair {
    double omega_x;  // = omega_z
    double omega_y;
};

// Rabi frequencies realizing the given angle trajectory (with Omega_z = Omega_x):
//   Ox = (dp sin p + dt cos p tan t) / (tan t - sin p)
//   s Oy = (dp cos p + dt (1 - tan t sin p)) / (tan t - sin p)
// Throws SingularDesignError when |tan t - sin p| <= 1e-9 or cos t vanishes;
// `t` only labels the diagnostic.
RabiPair aux_to_rabi(const AuxAngles& angles, Chirality c,
                     double t = std::numeric_limits<double>::quiet_NaN());

AuxAngles polynomial_angles(const DesignParams& p, Chirality c, double t);
AngleSchedule polynomial_schedule(const DesignParams& p, Chirality c);

struct BoundaryAngles {
    double nominal_start;  // target of the driven angle at t = 0
    double nominal_end;    // target at t = tau
    double actual_start;   // eta-shifted values of the chosen cubic
    double actual_end;
};

// The driven angle is beta (left) or xi (right).
BoundaryAngles boundary_angles(const DesignParams& p, Chirality c);

// Closed-form designed waveforms at time t (phi = pi/2).
RabiSample designed_rabi(const DesignParams& p, Chirality c, double t);
PulseSet designed_pulses(const DesignParams& p, Chirality c);

// Invariance residual of the designed trajectory at each time, central
// difference step = spacing of `times` (uniform). Samples whose stencil
// leaves [0, tau] are NaN.
std::vector<double> designed_invariance_residuals(const DesignParams& p, Chirality c,
                                                  const std::vector<double>& times,
                                                  double omega0 = 1.0);

// Header `t,omega_x,omega_y,omega_z`, one row per grid sample.
void write_pulses_csv(std::ostream& os, const PulseSet& pulses);

} // namespace esst
