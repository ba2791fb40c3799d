// directions.hpp: measurement directions that freeze the decay

#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "zeno/algebra.hpp"
#include "zeno/bath.hpp"

namespace zeno {

struct OptimalDirections {
    MeasurementDirection first;  // phi = (pi - psi) / 2
    MeasurementDirection second; // phi = (pi - psi) / 2 + pi
};

// Both zeros of F: cos(theta) = -1 / (2 (N + M + 1/2)).
OptimalDirections optimal_directions(const BathParams& p);

// F / gamma sampled on phi_k = 2 pi k / phi_count (k < phi_count) and
// theta_j = pi j / (theta_count - 1) (j < theta_count), stored row-major with
// theta as the outer index.
class LandscapeGrid {
public:
    LandscapeGrid(std::size_t phi_count, std::size_t theta_count, BathParams bath,
                  std::vector<double> values);

    std::size_t phi_count() const { return phi_count_; }
    std::size_t theta_count() const { return theta_count_; }
    const BathParams& bath() const { return bath_; }

    double phi(std::size_t k) const;
    double theta(std::size_t j) const;
    double at(std::size_t theta_index, std::size_t phi_index) const;
    const std::vector<double>& values() const { return values_; }

    struct Cell {
        std::size_t theta_index;
        std::size_t phi_index;
        double value;
    };
    Cell argmax() const;

private:
    std::size_t phi_count_;
    std::size_t theta_count_;
    BathParams bath_;
    std::vector<double> values_;
};

inline constexpr std::size_t kDefaultPhiCount = 400;
inline constexpr std::size_t kDefaultThetaCount = 200;

// Rows are evaluated concurrently; assembly order is fixed, so the result
// does not depend on the thread count. Throws DomainError for counts < 2.
LandscapeGrid landscape_scan(const BathParams& p, std::size_t phi_count = kDefaultPhiCount,
                             std::size_t theta_count = kDefaultThetaCount);

// CSV with header "phi,theta,F_over_gamma".
void write_csv(std::ostream& out, const LandscapeGrid& grid);

struct MaximizerOptions {
    double initial_step = 0.1;
    double shrink = 0.5;
    double min_step = 1e-10;
    long max_evaluations = 1'000'000;
};

// Compass-search ascent of F over (theta, phi) from a seed. Throws
// NumericError when the evaluation budget runs out.
MeasurementDirection numeric_maximize(const BathParams& p, const MeasurementDirection& seed,
                                      const MaximizerOptions& options = {});

} // namespace zeno
