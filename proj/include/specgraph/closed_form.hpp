#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace specgraph {

/// Exact predicted spectrum as (value, multiplicity) entries, sorted
/// descending by value, coincident values merged.
struct ClosedFormSpectrum {
    std::vector<std::pair<double, int>> entries;
    int total = 0;

    std::string to_json() const;
};

/// Spectral measure of the infinite limit graph: point atoms plus
/// continuous bands, masses summing to 1.
struct LimitMeasure {
    std::vector<std::pair<double, double>> atoms;             // (location, mass)
    std::vector<std::tuple<double, double, double>> bands;    // (lo, hi, mass)

    double total_mass() const;
    std::string to_json() const;
};

struct GramCheckReport {
    bool pass = false;
    double max_abs_deviation_qqt = 0.0;
    double max_abs_deviation_qtq = 0.0;
};

inline constexpr double kCoincidenceTol = 1e-9;

double tau(int n, int k, int j);
ClosedFormSpectrum closed_form_spectrum(int n, int k);
std::vector<double> cycle_spectrum(int n);
std::pair<double, double> alpha_beta(int k);
Eigen::MatrixXd build_q(int n, int k);
GramCheckReport gram_identities_check(int n, int k, double tol);
LimitMeasure zk_limit_measure(int k);

}  // namespace specgraph
