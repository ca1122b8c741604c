// design.cpp

#include "esst/design.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "esst/csv.hpp"

namespace esst {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularThreshold = 1e-9;

// P(s) = pi s^2 (3/2 - s) and its derivative in s, with s = t / tau.
double cubic(double s) { return kPi * s * s * (1.5 - s); }
double cubic_rate(double s) { return 3.0 * kPi * s * (1.0 - s); }

} // namespace

void DesignParams::validate(bool require_nonzero_eta) const {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("design: tau must be positive and finite");
    if (grid_points < 2) throw std::invalid_argument("design: grid_points must be at least 2");
    if (!std::isfinite(eta) || std::abs(eta) > kMaxEta)
        throw std::invalid_argument("design: |eta| must not exceed 0.2");
    if (require_nonzero_eta && eta == 0.0)
        throw std::invalid_argument(
            "design: eta must be nonzero (Omega_y diverges at t = 0 when eta = 0)");
}

SingularDesignError::SingularDesignError(double t, const AuxAngles& angles, double denominator)
    : std::domain_error([&] {
          std::ostringstream os;
          os << "singular design at t = " << t << ": theta = " << angles.theta
             << ", psi = " << angles.psi << ", denominator = " << denominator;
          return os.str();
      }()),
      t_(t), angles_(angles) {}

RabiPair aux_to_rabi(const AuxAngles& a, Chirality c, double t) {
    const double ct = std::cos(a.theta);
    if (std::abs(ct) <= kSingularThreshold) throw SingularDesignError(t, a, ct);
    const double tt = std::tan(a.theta);
    const double sp = std::sin(a.psi), cp = std::cos(a.psi);
    const double den = tt - sp;
    if (std::abs(den) <= kSingularThreshold) throw SingularDesignError(t, a, den);
    const double ox = (a.dpsi * sp + a.dtheta * cp * tt) / den;
    const double oy = (a.dpsi * cp + a.dtheta * (1.0 - tt * sp)) / den;
    return {ox, sign(c) * oy};
}

AuxAngles polynomial_angles(const DesignParams& p, Chirality c, double t) {
    const double s = t / p.tau;
    const double angle = cubic(s);
    const double rate = cubic_rate(s) / p.tau;
    if (c == Chirality::Left) return {0.0, angle + p.eta, 0.0, rate};
    return {-angle + p.eta, 0.0, -rate, 0.0};
}

AngleSchedule polynomial_schedule(const DesignParams& p, Chirality c) {
    p.validate(false);
    return AngleSchedule(p.grid(), [p, c](double t) { return polynomial_angles(p, c, t); });
}

BoundaryAngles boundary_angles(const DesignParams& p, Chirality c) {
    p.validate(false);
    const double end = c == Chirality::Left ? kPi / 2.0 : -kPi / 2.0;
    const double actual_start = c == Chirality::Left ? polynomial_angles(p, c, 0.0).psi
                                                      : polynomial_angles(p, c, 0.0).theta;
    const double actual_end = c == Chirality::Left ? polynomial_angles(p, c, p.tau).psi
                                                    : polynomial_angles(p, c, p.tau).theta;
    return {0.0, end, actual_start, actual_end};
}

RabiSample designed_rabi(const DesignParams& p, Chirality c, double t) {
    const double s = t / p.tau;
    // 0.0 - x keeps the endpoint samples at +0 rather than -0
    const double ox = 0.0 - cubic_rate(s) / p.tau;
    // cot(P + eta) for the left branch, cot(P - eta') for the right branch
    const double arg = c == Chirality::Left ? cubic(s) + p.eta : cubic(s) - p.eta;
    return {ox, ox / std::tan(arg) + 0.0, ox, kPi / 2.0};
}

PulseSet designed_pulses(const DesignParams& p, Chirality c) {
    p.validate(true);
    return PulseSet::from_function(p.grid(), [p, c](double t) { return designed_rabi(p, c, t); });
}

std::vector<double> designed_invariance_residuals(const DesignParams& p, Chirality c,
                                                  const std::vector<double>& times,
                                                  double omega0) {
    p.validate(true);
    std::vector<double> out(times.size(), std::numeric_limits<double>::quiet_NaN());
    if (times.size() < 3) return out;
    const double dt = times[1] - times[0];
    auto spec_at = [&](double t) { return InvariantSpec{omega0, polynomial_angles(p, c, t), c}; };
    auto h_at = [&](double t) { return build_hamiltonian(designed_rabi(p, c, t), c); };
    for (std::size_t i = 1; i + 1 < times.size(); ++i)
        out[i] = invariance_residual(spec_at, h_at, times[i], dt, 0.0, p.tau);
    return out;
}

void write_pulses_csv(std::ostream& os, const PulseSet& pulses) {
    os << "t,omega_x,omega_y,omega_z\n";
    const auto& g = pulses.grid();
    for (std::size_t i = 0; i < g.size(); ++i)
        csv::write_row(os, {g[i], pulses.omega_x()[i], pulses.omega_y()[i], pulses.omega_z()[i]});
}

} // namespace esst
