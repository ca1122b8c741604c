// schedule.cpp

#include "esst/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace esst {

TimeGrid::TimeGrid(double t_end, std::size_t points) : t_end_(t_end), points_(points) {
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw std::invalid_argument("TimeGrid: duration must be positive and finite");
    if (points < 2) throw std::invalid_argument("TimeGrid: need at least 2 samples");
}

double TimeGrid::operator[](std::size_t i) const noexcept {
    if (i + 1 >= points_) return t_end_;
    return t_end_ * static_cast<double>(i) / static_cast<double>(points_ - 1);
}

std::vector<double> TimeGrid::samples() const {
    std::vector<double> t(points_);
    for (std::size_t i = 0; i < points_; ++i) t[i] = (*this)[i];
    return t;
}

AngleSchedule::AngleSchedule(TimeGrid grid, Function f) : grid_(grid), f_(std::move(f)) {
    samples_.reserve(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) samples_.push_back(f_(grid_[i]));
}

PulseSet::PulseSet(TimeGrid grid, Function f, double phi)
    : grid_(grid), f_(std::move(f)), phi_(phi) {}

PulseSet PulseSet::from_function(TimeGrid grid, Function f) {
    if (!f) throw std::invalid_argument("PulseSet: empty waveform function");
    PulseSet p(grid, std::move(f), 0.0);
    const std::size_t n = grid.size();
    p.omega_x_.resize(n);
    p.omega_y_.resize(n);
    p.omega_z_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const RabiSample s = p.f_(grid[i]);
        p.omega_x_[i] = s.omega_x;
        p.omega_y_[i] = s.omega_y;
        p.omega_z_[i] = s.omega_z;
        if (i == 0) p.phi_ = s.phi;
    }
    return p;
}

PulseSet PulseSet::sampled(TimeGrid grid, std::vector<double> omega_x, std::vector<double> omega_y,
                           std::vector<double> omega_z, double phi) {
    const std::size_t n = grid.size();
    if (omega_x.size() != n || omega_y.size() != n || omega_z.size() != n)
        throw std::invalid_argument("PulseSet: waveform length does not match the time grid");
    PulseSet p(grid, {}, phi);
    p.omega_x_ = std::move(omega_x);
    p.omega_y_ = std::move(omega_y);
    p.omega_z_ = std::move(omega_z);
    return p;
}

RabiSample PulseSet::sample(std::size_t i) const {
    return {omega_x_.at(i), omega_y_.at(i), omega_z_.at(i), phi_};
}

RabiSample PulseSet::at(double t) const {
    if (f_) return f_(t);
    if (t < 0.0 || t > grid_.t_end()) {
        std::ostringstream os;
        os << "PulseSet::at: t = " << t << " outside [0, " << grid_.t_end() << "]";
        throw std::out_of_range(os.str());
    }
    const double u = t / grid_.step();
    const std::size_t i = std::min(static_cast<std::size_t>(u), grid_.size() - 2);
    const double w = u - static_cast<double>(i);
    auto lerp = [&](const std::vector<double>& v) { return (1.0 - w) * v[i] + w * v[i + 1]; };
    return {lerp(omega_x_), lerp(omega_y_), lerp(omega_z_), phi_};
}

} // namespace esst
