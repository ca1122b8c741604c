// lr_phase.hpp — Lewis-Riesenfeld phases of the invariant eigenstates
//
// alpha_n(t) = int_0^t <phi_n| i d/dt' - H |phi_n> dt'. For the SU(2)
// eigenbasis this reduces to alpha_0 = 0 and
//   alpha_+/-(t) = -/+ int_0^t [dpsi sin t + Ox sin p cos t + s Oy cos p cos t + Oz sin t] dt'
// with s = sign(chirality).

#pragma once

#include <vector>

#include "esst/invariant.hpp"
#include "esst/schedule.hpp"

namespace esst {

// d alpha_n / dt at one instant.
double lr_phase_rate(EigenBranch n, const AuxAngles& angles, const RabiSample& rabi, Chirality c);

// alpha_n(t) by composite Simpson on [0, t] at the schedule's grid resolution,
// re-evaluating schedule and pulses at the quadrature nodes.
// Throws std::out_of_range if t is outside the schedule's span.
double lr_phase(EigenBranch n, const AngleSchedule& schedule, const PulseSet& pulses, Chirality c,
                double t);

// alpha_n at every grid sample (cumulative Simpson; the odd-indexed samples
// close with the three-point half-panel rule). Schedule and pulses must share
// the same grid size.
std::vector<double> lr_phase_track(EigenBranch n, const AngleSchedule& schedule,
                                   const PulseSet& pulses, Chirality c);

} // namespace esst
