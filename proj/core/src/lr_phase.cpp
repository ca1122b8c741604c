// lr_phase.cpp

#include "esst/lr_phase.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace esst {

double lr_phase_rate(EigenBranch n, const AuxAngles& a, const RabiSample& r, Chirality c) {
    if (n == EigenBranch::Zero) return 0.0;
    const double ct = std::cos(a.theta), st = std::sin(a.theta);
    const double cp = std::cos(a.psi), sp = std::sin(a.psi);
    const double oy = sign(c) * r.omega_y;
    const double integrand =
        a.dpsi * st + r.omega_x * sp * ct + oy * cp * ct + r.omega_z * st;
    return n == EigenBranch::Plus ? -integrand : integrand;
}

double lr_phase(EigenBranch n, const AngleSchedule& schedule, const PulseSet& pulses, Chirality c,
                double t) {
    const double span = schedule.grid().t_end();
    if (t < 0.0 || t > span * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "lr_phase: t = " << t << " outside [0, " << span << "]";
        throw std::out_of_range(os.str());
    }
    if (n == EigenBranch::Zero || t == 0.0) return 0.0;
    auto m = static_cast<std::size_t>(std::ceil(t / schedule.grid().step() - 1e-9));
    m = std::max<std::size_t>(2, m + (m % 2));
    const double h = t / static_cast<double>(m);
    auto f = [&](std::size_t k) {
        const double tk = k == m ? t : h * static_cast<double>(k);
        return lr_phase_rate(n, schedule.at(tk), pulses.at(tk), c);
    };
    double sum = f(0) + f(m);
    for (std::size_t k = 1; k < m; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(k);
    return sum * h / 3.0;
}

std::vector<double> lr_phase_track(EigenBranch n, const AngleSchedule& schedule,
                                   const PulseSet& pulses, Chirality c) {
    const std::size_t size = schedule.grid().size();
    if (pulses.grid().size() != size)
        throw std::invalid_argument("lr_phase_track: schedule and pulses use different grids");
    std::vector<double> alpha(size, 0.0);
    if (n == EigenBranch::Zero) return alpha;

    std::vector<double> f(size);
    for (std::size_t i = 0; i < size; ++i)
        f[i] = lr_phase_rate(n, schedule.samples()[i], pulses.sample(i), c);
    const double h = schedule.grid().step();

    // even samples: composite Simpson; odd samples: previous even + half panel
    for (std::size_t i = 2; i < size; i += 2)
        alpha[i] = alpha[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    for (std::size_t i = 1; i < size; i += 2) {
        if (i + 1 < size)
            alpha[i] = alpha[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
        else if (i >= 2)
            alpha[i] = alpha[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
        else
            alpha[i] = 0.5 * h * (f[0] + f[1]);
    }
    return alpha;
}

} // namespace esst
