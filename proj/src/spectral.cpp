#include "specgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace specgraph {

Eigen::MatrixXd to_real(const IntMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = static_cast<double>(m(r, c));
    return out;
}

SpectrumReport eigenvalues_symmetric(const Eigen::MatrixXd& m, double tol, double cluster_tol) {
    if (m.rows() != m.cols()) throw SpectralError("matrix must be square");
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12)
        throw SpectralError("matrix not symmetric: max |m - m^T| = " + std::to_string(asym));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw SpectralError("eigensolver failed to converge");

    const int n = static_cast<int>(m.rows());
    SpectrumReport report;
    report.order = n;
    report.values.resize(n);
    // Eigen returns ascending; reports are descending.
    for (int i = 0; i < n; ++i) report.values[i] = solver.eigenvalues()(n - 1 - i);

    const double scale = std::max(1.0, m.cwiseAbs().rowwise().sum().maxCoeff());
    const Eigen::MatrixXd residual =
        m * solver.eigenvectors() - solver.eigenvectors() * solver.eigenvalues().asDiagonal();
    report.residual_bound = residual.colwise().norm().maxCoeff() / scale;
    if (report.residual_bound > tol)
        throw SpectralError("residual bound " + std::to_string(report.residual_bound) +
                            " exceeds tolerance " + std::to_string(tol));

    report.clusters = cluster_multiplicities(report.values, cluster_tol);
    return report;
}

SpectrumReport spectrum_of(const Graph& g, double tol, double cluster_tol) {
    return eigenvalues_symmetric(to_real(adjacency_matrix(g)), tol, cluster_tol);
}

std::vector<std::pair<double, int>> cluster_multiplicities(const std::vector<double>& values, double cluster_tol) {
    std::vector<std::pair<double, int>> clusters;
    std::size_t start = 0;
    while (start < values.size()) {
        std::size_t end = start + 1;
        while (end < values.size() && values[start] - values[end] <= cluster_tol) ++end;
        double sum = 0.0;
        for (std::size_t i = start; i < end; ++i) sum += values[i];
        clusters.emplace_back(sum / (end - start), static_cast<int>(end - start));
        start = end;
    }
    return clusters;
}

double multiset_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw SpectralError("multiset count mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    std::vector<double> sa = a, sb = b;
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    double worst = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) worst = std::max(worst, std::abs(sa[i] - sb[i]));
    return worst;
}

double multiset_distance(const SpectrumReport& a, const ClosedFormSpectrum& b) {
    std::vector<double> expanded;
    expanded.reserve(b.total);
    for (const auto& [value, mult] : b.entries)
        for (int i = 0; i < mult; ++i) expanded.push_back(value);
    return multiset_distance(a.values, expanded);
}

MedianPair median_eigenvalues(const SpectrumReport& s) {
    if (s.values.empty()) throw SpectralError("median of an empty spectrum");
    const int n = s.order;
    const int hi = (n + 1) / 2;        // floor((N+1)/2), 1-based
    const int lo = n / 2 + 1;          // ceil((N+1)/2)
    return {s.values[hi - 1], s.values[lo - 1], hi, lo};
}

IntervalCheckResult forbidden_interval_check(const SpectrumReport& s, const std::vector<Interval>& intervals,
                                             double guard) {
    IntervalCheckResult result;
    result.intervals = intervals;
    for (const auto& iv : intervals) {
        if (!(iv.lo < iv.hi)) throw SpectralError("interval must have lo < hi");
        for (int i = 0; i < s.order; ++i) {
            const double v = s.values[i];
            if (v > iv.lo + guard && v < iv.hi - guard)
                result.violations.push_back({i + 1, v, iv});
        }
    }
    result.pass = result.violations.empty();
    return result;
}

IntervalCheckResult forbidden_interval_check(const SpectrumReport& s, const std::vector<Interval>& intervals) {
    return forbidden_interval_check(s, intervals, 10.0 * s.residual_bound);
}

InterlacingReport interlacing_check(const SpectrumReport& spec_w, const SpectrumReport& spec_p, int k) {
    if (spec_w.order != spec_p.order + k)
        throw SpectralError("order mismatch: expected difference " + std::to_string(k) + ", got " +
                            std::to_string(spec_w.order - spec_p.order));
    // residual bounds are normalized; rescale by the spectral radius to bound
    // the absolute eigenvalue error
    const double radius = spec_w.values.empty() ? 1.0 : std::max(std::abs(spec_w.values.front()), std::abs(spec_w.values.back()));
    const double guard = (spec_w.residual_bound + spec_p.residual_bound) * std::max(1.0, radius);
    double worst = 0.0;
    bool pass = true;
    for (int i = 0; i < spec_p.order; ++i) {
        const double upper_slack = spec_w.values[i] - spec_p.values[i];
        worst = std::min(worst, upper_slack);
        if (upper_slack + guard < 0) pass = false;
        const double lower_slack = spec_p.values[i] - spec_w.values[i + k];
        worst = std::min(worst, lower_slack);
        if (lower_slack + guard < 0) pass = false;
    }
    return {pass, worst};
}

std::string SpectrumReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["values"] = values;
    doc["residual_bound"] = residual_bound;
    nlohmann::ordered_json cl = nlohmann::ordered_json::array();
    for (const auto& [value, mult] : clusters) cl.push_back(nlohmann::ordered_json::array({value, mult}));
    doc["clusters"] = std::move(cl);
    return doc.dump(2) + "\n";
}

std::string SpectrumReport::to_csv() const {
    std::ostringstream out;
    out << "index,value,cluster_id\n";
    out.precision(17);
    int cluster_id = 0;
    int remaining = clusters.empty() ? 0 : clusters[0].second;
    for (int i = 0; i < order; ++i) {
        while (remaining == 0 && cluster_id + 1 < static_cast<int>(clusters.size()))
            remaining = clusters[++cluster_id].second;
        out << (i + 1) << ',' << values[i] << ',' << cluster_id << '\n';
        --remaining;
    }
    return out.str();
}

}  // namespace specgraph
