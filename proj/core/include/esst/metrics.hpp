// metrics.hpp — transfer figures of merit and the eta sweep

#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "esst/propagate.hpp"
#include "esst/schedule.hpp"

namespace esst {

class UndefinedExcessError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// |(P3L - P3R) / (P3L + P3R)|. Inputs must lie in [0, 1] and not both be zero.
double enantiomeric_excess(double p3_left, double p3_right);

// max over t of {|Ox|, |Oy|, |Oz|}. With a closed form available, each
// waveform's discrete maximum is refined by golden-section search over the
// neighbouring grid cells.
double omega_max(const PulseSet& pulses);

// n log-spaced values in [lo, hi], endpoints exact.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

struct SweepRow {
    double eta = 0.0;
    double p3_left = 0.0;
    double p3_right = 0.0;
    double p2_right = 0.0;
    double excess = 0.0;
    double omega_max = 0.0;
    // population sums minus one, for each enantiomer
    double sum_error_left = 0.0;
    double sum_error_right = 0.0;
    bool failed = false;
    std::string error;
};

struct SweepOptions {
    std::size_t steps = kDefaultSteps;
    // 0 = one worker per hardware thread
    unsigned workers = 0;
    Integrator method = Integrator::Magnus4;
};

// For each eta, designs the shared field (left eta = right -eta) on [0, tau],
// propagates both enantiomers from |1>, and records a row. Rows are sorted
// by eta; per-row failures are reported in the row rather than thrown.
// Throws std::invalid_argument for an empty list or eta outside (0, 0.2].
std::vector<SweepRow> sweep_eta(const std::vector<double>& etas, double tau,
                                const SweepOptions& options = {});

// Header `eta,P3_L,P3_R,P2_R,excess,omega_max`. Failed rows are written as nan.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

} // namespace esst
