#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specgraph/closed_form.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

inline constexpr double kDefaultAtomTol = 1e-6;

/// Aggregate verdict for one (n, k) point: spectrum oracle match, median
/// pair, forbidden intervals, and the Gram identities.
struct VerificationReport {
    int n = 0;
    int k = 0;
    bool pass = false;
    double multiset_dist = 0.0;
    MedianPair median;
    bool median_ok = false;
    bool intervals_ok = false;
    bool gram_ok = false;
    std::vector<std::string> notes;

    std::string to_json() const;
};

struct ExceptionCountReport {
    int n = 0;
    int k = 0;
    int count_total = 0;
    int count_in_pm_open_unit = 0;
    int count_in_pos_gap = 0;
    int count_in_neg_gap = 0;
};

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

struct ESDReport {
    int n = 0;
    int k = 0;
    int order = 0;
    double atom_mass_plus1 = 0.0;
    double atom_mass_minus1 = 0.0;
    double band_mass_pos = 0.0;
    double band_mass_neg = 0.0;
    int out_of_support_count = 0;
    std::vector<HistogramBin> histogram;

    std::string to_json() const;
    std::string histogram_csv() const;
};

struct ESDConvergenceRow {
    ESDReport report;
    double atom_deviation = 0.0;  // max abs deviation of the two atom masses
    double band_deviation = 0.0;
};

struct ScanRecord {
    std::string id;
    int order = 0;
    MedianPair median;
    double fraction_in_unit = 0.0;  // eigenvalues in [-1,1] / order
    bool heawood = false;
    bool exception = false;
};

struct ScanReport {
    int graphs_examined = 0;
    std::vector<std::string> exceptions;  // ids of non-Heawood median exceptions
    std::vector<Graph> exception_graphs;  // retained for replay, same order as ids
    int heawood_hits = 0;
    double delta_min = 1.0;  // over non-Heawood graphs
    std::vector<ScanRecord> records;
    std::uint64_t rng_seed = 0;

    std::string to_json() const;
};

VerificationReport verify_theorem_evals(int n, int k, double tol, int size_cap = kDefaultSizeCap);
ExceptionCountReport exception_count_pnk(int n, int k, double atom_tol = kDefaultAtomTol,
                                         int size_cap = kDefaultSizeCap);
ESDReport esd(int n, int k, int bins, double atom_tol = kDefaultAtomTol, int size_cap = kDefaultSizeCap);
std::vector<ESDConvergenceRow> esd_convergence(int k, const std::vector<int>& n_list, int bins,
                                               double atom_tol = kDefaultAtomTol, int size_cap = kDefaultSizeCap);

Graph random_subcubic_bipartite(int order, std::uint64_t seed);
ScanReport scan_subcubic_bipartite(int order_min, int order_max, int samples_per_order, std::uint64_t seed,
                                   bool include_catalog = true, int jobs = 1);
bool is_heawood(const Graph& g);

/// The fixed scan catalog: even cycles, paths, the cube graph, K_{3,3} minus
/// a perfect matching, and the Heawood graph.
std::vector<std::pair<std::string, Graph>> scan_catalog();

}  // namespace specgraph
