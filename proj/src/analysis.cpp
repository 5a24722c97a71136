#include "specgraph/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace specgraph {

namespace {

constexpr double kMedianGuard = 1e-7;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

VerificationReport verify_theorem_evals(int n, int k, double tol, int size_cap) {
    VerificationReport report;
    report.n = n;
    report.k = k;

    const Graph g = build_wnk(n, k, size_cap);
    const SpectrumReport spec = spectrum_of(g);
    const ClosedFormSpectrum predicted = closed_form_spectrum(n, k);

    report.multiset_dist = multiset_distance(spec, predicted);
    report.median = median_eigenvalues(spec);
    report.median_ok = std::abs(report.median.high - 1.0) <= tol && std::abs(report.median.low + 1.0) <= tol;

    std::vector<Interval> forbidden{{-1.0, 1.0}};
    if (k > 2) {
        forbidden.push_back({1.0, k - 1.0});
        forbidden.push_back({-(k - 1.0), -1.0});
    }
    report.intervals_ok = forbidden_interval_check(spec, forbidden).pass;

    const GramCheckReport gram = gram_identities_check(n, k, 1e-10);
    report.gram_ok = gram.pass;

    if (k == 2 && n % 2 == 0)
        report.notes.push_back("tau coincidence: tau_{n/2} = 1 (k=2, n even)");

    report.pass = report.multiset_dist <= tol && report.median_ok && report.intervals_ok && report.gram_ok;
    return report;
}

ExceptionCountReport exception_count_pnk(int n, int k, double atom_tol, int size_cap) {
    const SpectrumReport spec = spectrum_of(build_pnk(n, k, size_cap));
    ExceptionCountReport report;
    report.n = n;
    report.k = k;
    for (double v : spec.values) {
        const bool atom = std::abs(v - 1.0) <= atom_tol || std::abs(v + 1.0) <= atom_tol;
        const bool in_band = (v >= k - 1.0 - atom_tol && v <= k + 1.0 + atom_tol) ||
                             (v >= -k - 1.0 - atom_tol && v <= -k + 1.0 + atom_tol);
        if (atom || in_band) continue;
        ++report.count_total;
        if (v > -1.0 && v < 1.0) ++report.count_in_pm_open_unit;
        else if (v >= 1.0 && v < k - 1.0) ++report.count_in_pos_gap;
        else if (v > -(k - 1.0) && v <= -1.0) ++report.count_in_neg_gap;
    }
    return report;
}

ESDReport esd(int n, int k, int bins, double atom_tol, int size_cap) {
    if (bins < 1) throw std::invalid_argument("bins >= 1 required");
    const SpectrumReport spec = spectrum_of(build_pnk(n, k, size_cap));

    ESDReport report;
    report.n = n;
    report.k = k;
    report.order = spec.order;

    int plus1 = 0, minus1 = 0, pos_band = 0, neg_band = 0;
    std::vector<double> pos_values, neg_values;
    for (double v : spec.values) {
        if (std::abs(v - 1.0) <= atom_tol) ++plus1;
        else if (std::abs(v + 1.0) <= atom_tol) ++minus1;
        else if (v >= k - 1.0 - atom_tol && v <= k + 1.0 + atom_tol) {
            ++pos_band;
            pos_values.push_back(v);
        } else if (v >= -k - 1.0 - atom_tol && v <= -k + 1.0 + atom_tol) {
            ++neg_band;
            neg_values.push_back(v);
        } else {
            ++report.out_of_support_count;
        }
    }
    const double order = spec.order;
    report.atom_mass_plus1 = plus1 / order;
    report.atom_mass_minus1 = minus1 / order;
    report.band_mass_pos = pos_band / order;
    report.band_mass_neg = neg_band / order;

    // histogram over the two support bands, negative band first
    auto bin_band = [&](double lo, double hi, const std::vector<double>& values) {
        const double width = (hi - lo) / bins;
        std::vector<int> counts(bins, 0);
        for (double v : values) {
            int b = static_cast<int>((v - lo) / width);
            b = std::clamp(b, 0, bins - 1);
            ++counts[b];
        }
        for (int b = 0; b < bins; ++b)
            report.histogram.push_back({lo + b * width, lo + (b + 1) * width, counts[b]});
    };
    bin_band(-k - 1.0, -k + 1.0, neg_values);
    bin_band(k - 1.0, k + 1.0, pos_values);
    return report;
}

std::vector<ESDConvergenceRow> esd_convergence(int k, const std::vector<int>& n_list, int bins, double atom_tol,
                                               int size_cap) {
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw std::invalid_argument("n list must be ascending");
    const LimitMeasure limit = zk_limit_measure(k);
    const double atom_mass = limit.atoms[0].second;
    const double band_mass = std::get<2>(limit.bands[0]);

    std::vector<ESDConvergenceRow> rows;
    for (int n : n_list) {
        ESDConvergenceRow row;
        row.report = esd(n, k, bins, atom_tol, size_cap);
        row.atom_deviation = std::max(std::abs(row.report.atom_mass_plus1 - atom_mass),
                                      std::abs(row.report.atom_mass_minus1 - atom_mass));
        row.band_deviation = std::max(std::abs(row.report.band_mass_pos - band_mass),
                                      std::abs(row.report.band_mass_neg - band_mass));
        rows.push_back(std::move(row));
    }
    return rows;
}

Graph random_subcubic_bipartite(int order, std::uint64_t seed) {
    if (order < 2) throw GraphError("order >= 2 required");
    std::mt19937_64 rng(splitmix64(seed));

    // Random spanning tree with degree cap 3: each new vertex attaches to a
    // uniformly chosen earlier vertex of degree < 3 and takes the opposite side.
    Graph g(order);
    std::vector<int> side(order, 0);
    for (int v = 1; v < order; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (g.degree(u) < 3) candidates.push_back(u);
        const int u = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        g.add_edge(u, v);
        side[v] = 1 - side[u];
    }

    // Sprinkle extra cross-side edges, respecting the degree cap.
    const int extra_target = std::uniform_int_distribution<int>(0, order)(rng);
    int added = 0;
    for (int attempt = 0; attempt < 20 * order && added < extra_target; ++attempt) {
        std::uniform_int_distribution<int> pick(0, order - 1);
        const int u = pick(rng);
        const int v = pick(rng);
        if (u == v || side[u] == side[v]) continue;
        if (g.degree(u) >= 3 || g.degree(v) >= 3) continue;
        if (g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++added;
    }
    g.set_family({FamilyKind::Other, 0, 0});
    return g;
}

bool is_heawood(const Graph& g) {
    if (g.order() != 14) return false;
    for (int v = 0; v < 14; ++v)
        if (g.degree(v) != 3) return false;
    if (!g.bipartition()) return false;
    if (g.girth() != 6) return false;
    const SpectrumReport spec = spectrum_of(g);
    const double root2 = std::sqrt(2.0);
    std::vector<double> expected{3.0};
    expected.insert(expected.end(), 6, root2);
    expected.insert(expected.end(), 6, -root2);
    expected.push_back(-3.0);
    return multiset_distance(spec.values, expected) <= 1e-8;
}

namespace {

Graph build_path(int order) {
    Graph g(order);
    for (int i = 0; i + 1 < order; ++i) g.add_edge(i, i + 1);
    g.set_family({FamilyKind::Other, 0, 0});
    return g;
}

Graph build_cube() {
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    g.set_family({FamilyKind::Other, 0, 0});
    return g;
}

Graph build_k33_minus_matching() {
    Graph g(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            if (v - 3 != u) g.add_edge(u, v);
    g.set_family({FamilyKind::Other, 0, 0});
    return g;
}

}  // namespace

std::vector<std::pair<std::string, Graph>> scan_catalog() {
    std::vector<std::pair<std::string, Graph>> catalog;
    for (int n = 4; n <= 14; n += 2) {
        Graph c = build_cycle(n);
        catalog.emplace_back("cycle-" + std::to_string(n), std::move(c));
    }
    for (int n = 2; n <= 10; ++n)
        catalog.emplace_back("path-" + std::to_string(n), build_path(n));
    catalog.emplace_back("cube", build_cube());
    catalog.emplace_back("k33-minus-pm", build_k33_minus_matching());
    catalog.emplace_back("heawood", build_heawood());
    return catalog;
}

ScanReport scan_subcubic_bipartite(int order_min, int order_max, int samples_per_order, std::uint64_t seed,
                                   bool include_catalog, int jobs) {
    if (order_min < 2 || order_min > order_max)
        throw GraphError("order range must satisfy 2 <= min <= max");
    if (samples_per_order < 0) throw GraphError("samples per order must be non-negative");
    if (jobs < 1) jobs = 1;

    struct WorkItem {
        std::string id;
        Graph graph;
    };
    std::vector<WorkItem> items;
    if (include_catalog)
        for (auto& [id, g] : scan_catalog()) items.push_back({id, std::move(g)});
    for (int order = order_min; order <= order_max; ++order)
        for (int s = 0; s < samples_per_order; ++s) {
            const std::uint64_t item_seed =
                splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(order) * 1000003ULL + s));
            items.push_back({"random-o" + std::to_string(order) + "-s" + std::to_string(s),
                             random_subcubic_bipartite(order, item_seed)});
        }

    std::vector<ScanRecord> records(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            const Graph& g = items[i].graph;
            const SpectrumReport spec = spectrum_of(g);
            ScanRecord rec;
            rec.id = items[i].id;
            rec.order = g.order();
            rec.median = median_eigenvalues(spec);
            int in_unit = 0;
            for (double v : spec.values)
                if (v >= -1.0 - kMedianGuard && v <= 1.0 + kMedianGuard) ++in_unit;
            rec.fraction_in_unit = static_cast<double>(in_unit) / g.order();
            rec.heawood = is_heawood(g);
            rec.exception = rec.median.high > 1.0 + kMedianGuard || rec.median.low < -1.0 - kMedianGuard;
            records[i] = std::move(rec);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // deterministic merge: ordered by work-item index
    ScanReport report;
    report.rng_seed = seed;
    report.graphs_examined = static_cast<int>(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ScanRecord& rec = records[i];
        if (rec.heawood) ++report.heawood_hits;
        if (rec.exception && !rec.heawood) {
            report.exceptions.push_back(rec.id);
            report.exception_graphs.push_back(items[i].graph);
        }
        if (!rec.heawood) report.delta_min = std::min(report.delta_min, rec.fraction_in_unit);
        report.records.push_back(rec);
    }
    return report;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["pass"] = pass;
    doc["multiset_distance"] = multiset_dist;
    doc["median"] = {{"high", median.high}, {"low", median.low}};
    doc["median_ok"] = median_ok;
    doc["intervals_ok"] = intervals_ok;
    doc["gram_ok"] = gram_ok;
    doc["notes"] = notes;
    return doc.dump(2) + "\n";
}

std::string ESDReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["order"] = order;
    doc["atom_mass_plus1"] = atom_mass_plus1;
    doc["atom_mass_minus1"] = atom_mass_minus1;
    doc["band_mass_pos"] = band_mass_pos;
    doc["band_mass_neg"] = band_mass_neg;
    doc["out_of_support_count"] = out_of_support_count;
    nlohmann::ordered_json hist = nlohmann::ordered_json::array();
    for (const auto& bin : histogram) hist.push_back(nlohmann::ordered_json::array({bin.lo, bin.hi, bin.count}));
    doc["histogram"] = std::move(hist);
    return doc.dump(2) + "\n";
}

std::string ESDReport::histogram_csv() const {
    std::ostringstream out;
    out << "bin_lo,bin_hi,count,mass\n";
    out.precision(17);
    for (const auto& bin : histogram)
        out << bin.lo << ',' << bin.hi << ',' << bin.count << ',' << static_cast<double>(bin.count) / order << '\n';
    return out.str();
}

std::string ScanReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["rng_seed"] = rng_seed;
    doc["graphs_examined"] = graphs_examined;
    doc["heawood_hits"] = heawood_hits;
    doc["delta_min"] = delta_min;
    doc["exceptions"] = exceptions;
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json r;
        r["id"] = rec.id;
        r["order"] = rec.order;
        r["median_high"] = rec.median.high;
        r["median_low"] = rec.median.low;
        r["fraction_in_unit"] = rec.fraction_in_unit;
        r["heawood"] = rec.heawood;
        r["exception"] = rec.exception;
        recs.push_back(std::move(r));
    }
    doc["records"] = std::move(recs);
    return doc.dump(2) + "\n";
}

}  // namespace specgraph
