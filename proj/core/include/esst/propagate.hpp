// propagate.hpp — unitary time stepping of the three-level Schrodinger equation

#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "esst/algebra.hpp"
#include "esst/model.hpp"
#include "esst/schedule.hpp"

namespace esst {

using QuantumState = ComplexVector3;

enum class Integrator {
    // exp(-i H(t + h/2) h): second order
    Midpoint,
    // exp(-i h [(H1 + H2)/2 - i sqrt(3) h/12 [H2, H1]]) with H1, H2 at the
    // Gauss-Legendre nodes: fourth order, one exponential per step
    Magnus4,
};

inline constexpr std::size_t kDefaultSteps = 4000;
inline constexpr std::size_t kMinSteps = 100;
inline constexpr double kNormTolerance = 1e-9;

struct Trajectory {
    std::vector<double> times;
    std::vector<QuantumState> states;
    std::vector<std::array<double, 3>> populations;
    std::vector<double> norm_error;
    // Empty unless attached; same length as times otherwise.
    std::vector<double> invariant_residual;

    std::size_t size() const noexcept { return times.size(); }
    const QuantumState& final_state() const { return states.back(); }
    const std::array<double, 3>& final_populations() const { return populations.back(); }
};

// Advances psi0 over [0, tau] in `steps` equal steps; every step is an exact
// unitary built from the pulses' closed form (or interpolated samples).
// Throws std::invalid_argument if |psi0| deviates from 1 by more than 1e-9,
// steps < 100, or a sampled Hamiltonian is non-finite.
Trajectory propagate(const PulseSet& pulses, Chirality c, const QuantumState& psi0,
                     std::size_t steps = kDefaultSteps, Integrator method = Integrator::Magnus4);

// Final state only, without recording the trajectory.
QuantumState propagate_final(const PulseSet& pulses, Chirality c, const QuantumState& psi0,
                             std::size_t steps = kDefaultSteps,
                             Integrator method = Integrator::Magnus4);

// max_k |psi_k(steps) - psi_k(2 steps)| at t = tau.
double convergence_check(const PulseSet& pulses, Chirality c, const QuantumState& psi0,
                         std::size_t steps = kDefaultSteps, Integrator method = Integrator::Magnus4);

// Header `t,P1,P2,P3,norm_error` plus `,invariant_residual` when attached.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);

} // namespace esst
