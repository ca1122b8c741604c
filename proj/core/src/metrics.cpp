// metrics.cpp

#include "esst/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "esst/csv.hpp"
#include "esst/design.hpp"

namespace esst {

double enantiomeric_excess(double p3_left, double p3_right) {
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(p3_left) || !in_unit(p3_right)) {
        std::ostringstream os;
        os << "enantiomeric_excess: probabilities must lie in [0, 1] (got " << p3_left << ", "
           << p3_right << ")";
        throw std::invalid_argument(os.str());
    }
    if (p3_left == 0.0 && p3_right == 0.0)
        throw UndefinedExcessError("enantiomeric_excess: undefined when both populations are zero");
    return std::abs((p3_left - p3_right) / (p3_left + p3_right));
}

namespace {

template <typename F>
double golden_section_max(F&& f, double a, double b) {
    constexpr double kInvPhi = 0.61803398874989484820;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    const double tol = 1e-15 * std::max(1.0, std::abs(b));
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return std::max(fc, fd);
}

} // namespace

double omega_max(const PulseSet& pulses) {
    const TimeGrid& g = pulses.grid();
    const std::vector<double>* waves[3] = {&pulses.omega_x(), &pulses.omega_y(), &pulses.omega_z()};
    double best = 0.0;
    for (int w = 0; w < 3; ++w) {
        const auto& v = *waves[w];
        std::size_t k = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (std::abs(v[i]) > std::abs(v[k])) k = i;
        best = std::max(best, std::abs(v[k]));
        if (!pulses.has_closed_form()) continue;
        const double lo = g[k == 0 ? 0 : k - 1];
        const double hi = g[std::min(k + 1, g.size() - 1)];
        auto magnitude = [&](double t) {
            const RabiSample s = pulses.at(t);
            return std::abs(w == 0 ? s.omega_x : w == 1 ? s.omega_y : s.omega_z);
        };
        best = std::max(best, golden_section_max(magnitude, lo, hi));
    }
    return best;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("log_spaced: need 0 < lo <= hi");
    if (n == 0) return {};
    if (n == 1) return {lo};
    std::vector<double> out(n);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

namespace {

SweepRow sweep_point(double eta, double tau, const SweepOptions& opt) {
    SweepRow row;
    row.eta = eta;
    try {
        const DesignParams params{tau, eta, opt.steps + 1};
        const PulseSet field = designed_pulses(params, Chirality::Left);
        const QuantumState ground = QuantumState::basis(0);
        const QuantumState left = propagate_final(field, Chirality::Left, ground, opt.steps, opt.method);
        const QuantumState right = propagate_final(field, Chirality::Right, ground, opt.steps, opt.method);
        row.p3_left = std::norm(left[2]);
        row.p3_right = std::norm(right[2]);
        row.p2_right = std::norm(right[1]);
        row.sum_error_left = left.norm2() - 1.0;
        row.sum_error_right = right.norm2() - 1.0;
        row.excess = enantiomeric_excess(std::clamp(row.p3_left, 0.0, 1.0),
                                         std::clamp(row.p3_right, 0.0, 1.0));
        row.omega_max = omega_max(field);
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
    }
    return row;
}

} // namespace

std::vector<SweepRow> sweep_eta(const std::vector<double>& etas, double tau,
                                const SweepOptions& options) {
    if (etas.empty()) throw std::invalid_argument("sweep_eta: eta list is empty");
    for (double eta : etas) {
        if (!(eta > 0.0 && eta <= kMaxEta)) {
            std::ostringstream os;
            os << "sweep_eta: eta = " << eta << " outside (0, 0.2]";
            throw std::invalid_argument(os.str());
        }
    }
    std::vector<SweepRow> rows(etas.size());
    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, etas.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < etas.size(); i = next++) rows[i] = sweep_point(etas[i], tau, options);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return a.eta < b.eta; });
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "eta,P3_L,P3_R,P2_R,excess,omega_max\n";
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& r : rows) {
        if (r.failed)
            csv::write_row(os, {r.eta, nan, nan, nan, nan, nan});
        else
            csv::write_row(os, {r.eta, r.p3_left, r.p3_right, r.p2_right, r.excess, r.omega_max});
    }
}

} // namespace esst
