#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "specgraph/closed_form.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

inline constexpr double kDefaultSolverTol = 1e-9;
inline constexpr double kDefaultClusterTol = 1e-6;

/// Full spectrum of a symmetric matrix: values sorted descending, a
/// certified residual bound, and multiplicity clusters.
struct SpectrumReport {
    std::vector<double> values;  // lambda_1 >= ... >= lambda_N
    int order = 0;
    double residual_bound = 0.0;
    std::vector<std::pair<double, int>> clusters;

    std::string to_json() const;
    std::string to_csv() const;
};

/// The two middle eigenvalues; indices are 1-based to match lambda_i.
struct MedianPair {
    double high = 0.0;
    double low = 0.0;
    int high_index = 0;
    int low_index = 0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct IntervalViolation {
    int index = 0;  // 1-based eigenvalue index
    double value = 0.0;
    Interval interval;
};

struct IntervalCheckResult {
    std::vector<Interval> intervals;
    std::vector<IntervalViolation> violations;
    bool pass = false;
};

struct InterlacingReport {
    bool pass = false;
    double worst_margin = 0.0;  // most negative slack seen, before the guard
};

struct SpectralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SpectrumReport eigenvalues_symmetric(const Eigen::MatrixXd& m, double tol = kDefaultSolverTol,
                                     double cluster_tol = kDefaultClusterTol);
SpectrumReport spectrum_of(const Graph& g, double tol = kDefaultSolverTol,
                           double cluster_tol = kDefaultClusterTol);

std::vector<std::pair<double, int>> cluster_multiplicities(const std::vector<double>& values, double cluster_tol);

double multiset_distance(const std::vector<double>& a, const std::vector<double>& b);
double multiset_distance(const SpectrumReport& a, const ClosedFormSpectrum& b);

MedianPair median_eigenvalues(const SpectrumReport& s);

/// Flags eigenvalues strictly inside the open intervals; a value within the
/// guard band of a boundary is not a violation.
IntervalCheckResult forbidden_interval_check(const SpectrumReport& s, const std::vector<Interval>& intervals,
                                             double guard);
IntervalCheckResult forbidden_interval_check(const SpectrumReport& s, const std::vector<Interval>& intervals);

InterlacingReport interlacing_check(const SpectrumReport& spec_w, const SpectrumReport& spec_p, int k);

Eigen::MatrixXd to_real(const IntMatrix& m);

}  // namespace specgraph
