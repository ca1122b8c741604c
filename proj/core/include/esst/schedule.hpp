// schedule.hpp — uniform time grid and time-indexed angle / pulse containers

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "esst/invariant.hpp"
#include "esst/model.hpp"

namespace esst {

// Uniform samples t_i = t_end * i / (n - 1), i = 0..n-1; the last sample is exactly t_end.
class TimeGrid {
public:
    TimeGrid(double t_end, std::size_t points);

    double t_end() const noexcept { return t_end_; }
    std::size_t size() const noexcept { return points_; }
    double step() const noexcept { return t_end_ / static_cast<double>(points_ - 1); }
    double operator[](std::size_t i) const noexcept;

    std::vector<double> samples() const;

private:
    double t_end_;
    std::size_t points_;
};

class AngleSchedule {
public:
    using Function = std::function<AuxAngles(double)>;

    AngleSchedule(TimeGrid grid, Function f);

    const TimeGrid& grid() const noexcept { return grid_; }
    const std::vector<AuxAngles>& samples() const noexcept { return samples_; }
    AuxAngles at(double t) const { return f_(t); }

private:
    TimeGrid grid_;
    Function f_;
    std::vector<AuxAngles> samples_;
};

// Sampled Rabi waveforms on [0, tau]. When built from a closed form, at(t)
// re-evaluates it exactly; otherwise at(t) interpolates linearly.
class PulseSet {
public:
    using Function = std::function<RabiSample(double)>;

    static PulseSet from_function(TimeGrid grid, Function f);
    static PulseSet sampled(TimeGrid grid, std::vector<double> omega_x, std::vector<double> omega_y,
                            std::vector<double> omega_z, double phi);

    const TimeGrid& grid() const noexcept { return grid_; }
    const std::vector<double>& omega_x() const noexcept { return omega_x_; }
    const std::vector<double>& omega_y() const noexcept { return omega_y_; }
    const std::vector<double>& omega_z() const noexcept { return omega_z_; }
    double phi() const noexcept { return phi_; }
    bool has_closed_form() const noexcept { return static_cast<bool>(f_); }

    RabiSample at(double t) const;
    RabiSample sample(std::size_t i) const;

private:
    PulseSet(TimeGrid grid, Function f, double phi);

    TimeGrid grid_;
    Function f_;
    double phi_;
    std::vector<double> omega_x_, omega_y_, omega_z_;
};

} // namespace esst
