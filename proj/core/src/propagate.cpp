// propagate.cpp

#include "esst/propagate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "esst/csv.hpp"

namespace esst {

namespace {

void check_inputs(const QuantumState& psi0, std::size_t steps) {
    const double dev = std::abs(psi0.norm2() - 1.0);
    if (!(dev <= kNormTolerance)) {
        std::ostringstream os;
        os << "propagate: initial state not normalized (|norm^2 - 1| = " << dev << ")";
        throw std::invalid_argument(os.str());
    }
    if (steps < kMinSteps) {
        std::ostringstream os;
        os << "propagate: steps = " << steps << " is below the minimum of " << kMinSteps;
        throw std::invalid_argument(os.str());
    }
}

ComplexMatrix3 hamiltonian_at(const PulseSet& pulses, Chirality c, double t) {
    const RabiSample s = pulses.at(t);
    if (!s.finite()) {
        std::ostringstream os;
        os << "propagate: non-finite pulse sample at t = " << t;
        throw std::invalid_argument(os.str());
    }
    return build_hamiltonian(s, c);
}

// Unitary for the step [t, t + h].
ComplexMatrix3 step_unitary(const PulseSet& pulses, Chirality c, double t, double h,
                            Integrator method) {
    if (method == Integrator::Midpoint) return hermitian_expm(hamiltonian_at(pulses, c, t + 0.5 * h), h);
    constexpr double kNode = 0.28867513459481288225;  // sqrt(3)/6
    const ComplexMatrix3 h1 = hamiltonian_at(pulses, c, t + (0.5 - kNode) * h);
    const ComplexMatrix3 h2 = hamiltonian_at(pulses, c, t + (0.5 + kNode) * h);
    constexpr double kSqrt3Over12 = 0.14433756729740644113;
    ComplexMatrix3 m = 0.5 * (h1 + h2) - (kI * (kSqrt3Over12 * h)) * commutator(h2, h1);
    m = 0.5 * (m + m.adjoint());
    return hermitian_expm(m, h);
}

std::array<double, 3> populations_of(const QuantumState& psi) {
    return {std::norm(psi[0]), std::norm(psi[1]), std::norm(psi[2])};
}

template <typename Record>
QuantumState evolve(const PulseSet& pulses, Chirality c, const QuantumState& psi0,
                    std::size_t steps, Integrator method, Record&& record) {
    check_inputs(psi0, steps);
    const double tau = pulses.grid().t_end();
    const TimeGrid grid(tau, steps + 1);
    const double h = grid.step();
    QuantumState psi = psi0;
    record(0.0, psi);
    for (std::size_t k = 0; k < steps; ++k) {
        psi = step_unitary(pulses, c, grid[k], h, method) * psi;
        record(grid[k + 1], psi);
    }
    return psi;
}

} // namespace

Trajectory propagate(const PulseSet& pulses, Chirality c, const QuantumState& psi0,
                     std::size_t steps, Integrator method) {
    Trajectory tr;
    tr.times.reserve(steps + 1);
    tr.states.reserve(steps + 1);
    tr.populations.reserve(steps + 1);
    tr.norm_error.reserve(steps + 1);
    evolve(pulses, c, psi0, steps, method, [&](double t, const QuantumState& psi) {
        tr.times.push_back(t);
        tr.states.push_back(psi);
        tr.populations.push_back(populations_of(psi));
        tr.norm_error.push_back(std::abs(std::sqrt(psi.norm2()) - 1.0));
    });
    return tr;
}

QuantumState propagate_final(const PulseSet& pulses, Chirality c, const QuantumState& psi0,
                             std::size_t steps, Integrator method) {
    return evolve(pulses, c, psi0, steps, method, [](double, const QuantumState&) {});
}

double convergence_check(const PulseSet& pulses, Chirality c, const QuantumState& psi0,
                         std::size_t steps, Integrator method) {
    const QuantumState coarse = propagate_final(pulses, c, psi0, steps, method);
    const QuantumState fine = propagate_final(pulses, c, psi0, 2 * steps, method);
    return (coarse - fine).max_abs();
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
    const bool with_residual = !tr.invariant_residual.empty();
    if (with_residual && tr.invariant_residual.size() != tr.size())
        throw std::invalid_argument("write_trajectory_csv: residual column length mismatch");
    os << "t,P1,P2,P3,norm_error" << (with_residual ? ",invariant_residual" : "") << '\n';
    for (std::size_t i = 0; i < tr.size(); ++i) {
        const auto& p = tr.populations[i];
        if (with_residual)
            csv::write_row(os, {tr.times[i], p[0], p[1], p[2], tr.norm_error[i],
                                tr.invariant_residual[i]});
        else
            csv::write_row(os, {tr.times[i], p[0], p[1], p[2], tr.norm_error[i]});
    }
}

} // namespace esst
