#include "zeno/directions.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <thread>

#include "zeno/errors.hpp"
#include "zeno/format.hpp"
#include "zeno/measurement.hpp"

namespace zeno {

OptimalDirections optimal_directions(const BathParams& p) {
    const double cos_theta = -1.0 / (2.0 * (p.n() + p.m() + 0.5));
    const double theta = std::acos(std::clamp(cos_theta, -1.0, 1.0));
    const double phi1 = 0.5 * (kPi - p.psi());
    return {MeasurementDirection(theta, phi1), MeasurementDirection(theta, phi1 + kPi)};
}

LandscapeGrid::LandscapeGrid(std::size_t phi_count, std::size_t theta_count, BathParams bath,
                             std::vector<double> values)
    : phi_count_(phi_count), theta_count_(theta_count), bath_(bath), values_(std::move(values)) {
    if (phi_count_ < 2 || theta_count_ < 2) throw DomainError("LandscapeGrid: counts must be >= 2");
    if (values_.size() != phi_count_ * theta_count_)
        throw DomainError("LandscapeGrid: value count does not match the grid dimensions");
}

double LandscapeGrid::phi(std::size_t k) const {
    return 2.0 * kPi * static_cast<double>(k) / static_cast<double>(phi_count_);
}

double LandscapeGrid::theta(std::size_t j) const {
    if (j + 1 == theta_count_) return kPi;
    return kPi * static_cast<double>(j) / static_cast<double>(theta_count_ - 1);
}

double LandscapeGrid::at(std::size_t theta_index, std::size_t phi_index) const {
    return values_[theta_index * phi_count_ + phi_index];
}

LandscapeGrid::Cell LandscapeGrid::argmax() const {
    const auto it = std::max_element(values_.begin(), values_.end());
    const auto idx = static_cast<std::size_t>(it - values_.begin());
    return {idx / phi_count_, idx % phi_count_, *it};
}

LandscapeGrid landscape_scan(const BathParams& p, std::size_t phi_count, std::size_t theta_count) {
    if (phi_count < 2 || theta_count < 2) throw DomainError("landscape_scan: counts must be >= 2");
    // Grid geometry only; values are filled below.
    const LandscapeGrid shape(phi_count, theta_count, p, std::vector<double>(phi_count * theta_count));
    std::vector<double> values(phi_count * theta_count);

    const auto fill_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            for (std::size_t k = 0; k < phi_count; ++k) {
                const MeasurementDirection dir(shape.theta(j), shape.phi(k));
                values[j * phi_count + k] = decay_exponent_closed_form(p, dir) / p.gamma();
            }
        }
    };

    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, theta_count);
    const std::size_t chunk = (theta_count + workers - 1) / workers;
    std::vector<std::future<void>> jobs;
    for (std::size_t begin = 0; begin < theta_count; begin += chunk)
        jobs.push_back(std::async(std::launch::async, fill_rows, begin, std::min(theta_count, begin + chunk)));
    for (auto& j : jobs) j.get();

    return LandscapeGrid(phi_count, theta_count, p, std::move(values));
}

void write_csv(std::ostream& out, const LandscapeGrid& grid) {
    out << "phi,theta,F_over_gamma\n";
    for (std::size_t j = 0; j < grid.theta_count(); ++j) {
        const std::string theta = format_number(grid.theta(j));
        for (std::size_t k = 0; k < grid.phi_count(); ++k)
            out << format_number(grid.phi(k)) << ',' << theta << ',' << format_number(grid.at(j, k)) << '\n';
    }
}

MeasurementDirection numeric_maximize(const BathParams& p, const MeasurementDirection& seed,
                                      const MaximizerOptions& options) {
    long evaluations = 0;
    const auto objective = [&](double theta, double phi) {
        ++evaluations;
        return decay_exponent_closed_form(p, MeasurementDirection::folded(theta, phi));
    };

    double theta = seed.theta();
    double phi = seed.phi();
    double best = objective(theta, phi);
    double step = options.initial_step;

    while (step >= options.min_step) {
        bool improved = false;
        for (int axis = 0; axis < 2; ++axis) {
            for (const double sign : {1.0, -1.0}) {
                const double t = axis == 0 ? theta + sign * step : theta;
                const double f = axis == 1 ? phi + sign * step : phi;
                const double value = objective(t, f);
                if (value > best) {
                    best = value;
                    theta = t;
                    phi = f;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= options.shrink;
        if (evaluations >= options.max_evaluations)
            throw NumericError("numeric_maximize: no convergence within " +
                               std::to_string(options.max_evaluations) + " evaluations");
    }
    return MeasurementDirection::folded(theta, phi);
}

} // namespace zeno
