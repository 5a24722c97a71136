#include "specgraph/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "specgraph/graph.hpp"

namespace specgraph {

namespace {

void check_params(int n, int k) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    if (k < 2) throw std::invalid_argument("k >= 2 required");
}

}  // namespace

double tau(int n, int k, int j) {
    check_params(n, k);
    if (j < 0 || j >= n) throw std::invalid_argument("j must lie in 0..n-1");
    const double angle = 2.0 * std::numbers::pi * j / n;
    return std::sqrt(k * k + 1.0 + 2.0 * k * std::cos(angle));
}

ClosedFormSpectrum closed_form_spectrum(int n, int k) {
    check_params(n, k);
    // +-tau_j once per j, plus +-1 with multiplicity (k-1)n each; equal
    // values within the coincidence tolerance merge with summed multiplicity.
    std::vector<std::pair<double, int>> raw;
    for (int j = 0; j < n; ++j) {
        const double t = tau(n, k, j);
        raw.emplace_back(t, 1);
        raw.emplace_back(-t, 1);
    }
    raw.emplace_back(1.0, (k - 1) * n);
    raw.emplace_back(-1.0, (k - 1) * n);

    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    ClosedFormSpectrum out;
    for (const auto& [value, mult] : raw) {
        if (!out.entries.empty() && out.entries.back().first - value <= kCoincidenceTol) {
            out.entries.back().second += mult;
        } else {
            out.entries.emplace_back(value, mult);
        }
        out.total += mult;
    }
    return out;
}

std::vector<double> cycle_spectrum(int n) {
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    std::vector<double> values(n);
    for (int j = 0; j < n; ++j) values[j] = 2.0 * std::cos(2.0 * std::numbers::pi * j / n);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

std::pair<double, double> alpha_beta(int k) {
    if (k < 2) throw std::invalid_argument("k >= 2 required");
    const double alpha = std::sqrt(k / 2.0 + 0.5 * std::sqrt(static_cast<double>(k) * k - 4.0));
    return {alpha, 1.0 / alpha};
}

Eigen::MatrixXd build_q(int n, int k) {
    check_params(n, k);
    const auto [alpha, beta] = alpha_beta(k);
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n * k);
    for (int i = 0; i < n; ++i) {
        const int prev = (i + n - 1) % n;
        for (int c = 0; c < k; ++c) {
            q(i, i * k + c) = alpha;
            q(i, prev * k + c) = beta;
        }
    }
    return q;
}

GramCheckReport gram_identities_check(int n, int k, double tol) {
    check_params(n, k);
    if (tol <= 0) throw std::invalid_argument("tol > 0 required");
    const Eigen::MatrixXd q = build_q(n, k);

    // QQ^T against k^2 I + k A(C_n)
    Eigen::MatrixXd expected_qqt = Eigen::MatrixXd::Identity(n, n) * (static_cast<double>(k) * k);
    const IntMatrix cycle = adjacency_matrix(build_cycle(std::max(n, 3)));
    if (n >= 3) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) expected_qqt(r, c) += k * static_cast<double>(cycle(r, c));
    } else {
        // C_2 degenerates to a doubled edge: A(C_2) has 2 in both off-diagonal slots
        expected_qqt(0, 1) += 2.0 * k;
        expected_qqt(1, 0) += 2.0 * k;
    }
    const double dev_qqt = (q * q.transpose() - expected_qqt).cwiseAbs().maxCoeff();

    // Q^T Q against k I + A_V
    const auto [a_v, a_w] = square_decompose(build_wnk(n, k));
    Eigen::MatrixXd expected_qtq = Eigen::MatrixXd::Identity(n * k, n * k) * k;
    for (int r = 0; r < n * k; ++r)
        for (int c = 0; c < n * k; ++c) expected_qtq(r, c) += static_cast<double>(a_v(r, c));
    const double dev_qtq = (q.transpose() * q - expected_qtq).cwiseAbs().maxCoeff();

    return {dev_qqt <= tol && dev_qtq <= tol, dev_qqt, dev_qtq};
}

LimitMeasure zk_limit_measure(int k) {
    if (k < 2) throw std::invalid_argument("k >= 2 required");
    const double atom_mass = 0.5 - 0.5 / k;
    const double band_mass = 0.5 / k;
    LimitMeasure m;
    m.atoms = {{1.0, atom_mass}, {-1.0, atom_mass}};
    m.bands = {{k - 1.0, k + 1.0, band_mass}, {-k - 1.0, -k + 1.0, band_mass}};
    return m;
}

double LimitMeasure::total_mass() const {
    double s = 0.0;
    for (const auto& [loc, mass] : atoms) s += mass;
    for (const auto& [lo, hi, mass] : bands) s += mass;
    return s;
}

std::string ClosedFormSpectrum::to_json() const {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [value, mult] : entries) arr.push_back(nlohmann::ordered_json::array({value, mult}));
    doc["entries"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string LimitMeasure::to_json() const {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json atom_arr = nlohmann::ordered_json::array();
    for (const auto& [loc, mass] : atoms) atom_arr.push_back(nlohmann::ordered_json::array({loc, mass}));
    nlohmann::ordered_json band_arr = nlohmann::ordered_json::array();
    for (const auto& [lo, hi, mass] : bands) band_arr.push_back(nlohmann::ordered_json::array({lo, hi, mass}));
    doc["atoms"] = std::move(atom_arr);
    doc["bands"] = std::move(band_arr);
    return doc.dump(2) + "\n";
}

}  // namespace specgraph
