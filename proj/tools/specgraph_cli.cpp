// Command-line front end: graph generation, spectrum computation, theorem
// verification, ESD experiments, and the subcubic-bipartite scan.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "specgraph/analysis.hpp"
#include "specgraph/closed_form.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/spectral.hpp"

namespace {

using namespace specgraph;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GlobalOpts {
    double tol = kDefaultSolverTol;
    double cluster_tol = kDefaultClusterTol;
    double atom_tol = kDefaultAtomTol;
    int cap = kDefaultSizeCap;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out;
};

void add_global_flags(CLI::App* cmd, GlobalOpts& opts) {
    cmd->add_option("--tol", opts.tol, "solver residual tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--cluster-tol", opts.cluster_tol, "multiplicity clustering tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--atom-tol", opts.atom_tol, "tolerance for classifying an eigenvalue as +-1")->check(CLI::PositiveNumber);
    cmd->add_option("--cap", opts.cap, "vertex count cap")->check(CLI::Range(2, 1 << 24));
    cmd->add_option("--jobs", opts.jobs, "parallel worker count");
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out, "output file path");
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw GraphError("cannot open for writing: " + path);
    f << content;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoi(text.substr(0, colon));
        hi = std::stoi(text.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

Graph build_family(const std::string& family, int n, int k, int cap) {
    if (family == "wnk") return build_wnk(n, k, cap);
    if (family == "pnk") return build_pnk(n, k, cap);
    if (family == "heawood") return build_heawood();
    if (family == "cycle") return build_cycle(n);
    throw GraphError("unknown family: " + family);
}

int cmd_generate(const std::string& family, int n, int k, const GlobalOpts& opts) {
    Graph g = build_family(family, n, k, opts.cap);
    if (!opts.out.empty()) save_graph(g, opts.out);

    std::map<int, int> degree_profile;
    for (int v = 0; v < g.order(); ++v) ++degree_profile[g.degree(v)];
    std::cout << "order: " << g.order() << "\n";
    std::cout << "degrees:";
    for (auto [deg, count] : degree_profile) std::cout << " " << deg << "x" << count;
    std::cout << "\n";
    if (auto coloring = g.bipartition()) {
        int part0 = 0;
        for (int c : *coloring) part0 += (c == 0);
        std::cout << "bipartite: yes (" << part0 << " + " << (g.order() - part0) << ")\n";
    } else {
        std::cout << "bipartite: no\n";
    }
    return kExitOk;
}

int cmd_spectrum(const std::string& in, const std::string& family, int n, int k, const std::string& method,
                 const GlobalOpts& opts) {
    Graph g;
    if (!in.empty()) g = load_graph(in);
    else g = build_family(family, n, k, opts.cap);

    const bool is_wnk = g.family().kind == FamilyKind::Wnk;
    if ((method == "closed-form" || method == "both") && !is_wnk)
        throw GraphError("closed-form spectra apply to the wnk family only");

    if (method == "closed-form") {
        write_or_print(opts.out, closed_form_spectrum(g.family().n, g.family().k).to_json());
        return kExitOk;
    }

    const SpectrumReport spec = eigenvalues_symmetric(to_real(adjacency_matrix(g)), opts.tol, opts.cluster_tol);
    if (method == "both") {
        const ClosedFormSpectrum predicted = closed_form_spectrum(g.family().n, g.family().k);
        const double dist = multiset_distance(spec, predicted);
        std::ostringstream combined;
        combined << "{\n\"numeric\": " << spec.to_json() << ",\n\"closed_form\": " << predicted.to_json()
                 << ",\n\"multiset_distance\": " << dist << "\n}\n";
        write_or_print(opts.out, combined.str());
        std::cout << "multiset_distance: " << dist << "\n";
        return kExitOk;
    }

    write_or_print(opts.out, opts.format == "csv" ? spec.to_csv() : spec.to_json());
    const MedianPair median = median_eigenvalues(spec);
    std::cout << "median pair: (" << median.high << ", " << median.low << ")\n";
    return kExitOk;
}

int cmd_verify(int n, int k, const std::string& grid_n, const std::string& grid_k, double tol,
               const std::string& out_dir, const GlobalOpts& opts) {
    int n_lo = n, n_hi = n, k_lo = k, k_hi = k;
    if (!grid_n.empty() && !parse_range(grid_n, n_lo, n_hi)) throw GraphError("bad --grid-n range, expected lo:hi");
    if (!grid_k.empty() && !parse_range(grid_k, k_lo, k_hi)) throw GraphError("bad --grid-k range, expected lo:hi");

    bool all_pass = true;
    std::vector<VerificationReport> failures;
    for (int kk = k_lo; kk <= k_hi; ++kk)
        for (int nn = n_lo; nn <= n_hi; ++nn) {
            VerificationReport report = verify_theorem_evals(nn, kk, tol, opts.cap);
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                std::ofstream f(out_dir + "/verify_n" + std::to_string(nn) + "_k" + std::to_string(kk) + ".json");
                f << report.to_json();
            }
            if (!report.pass) {
                all_pass = false;
                failures.push_back(report);
            }
        }

    const int points = (n_hi - n_lo + 1) * (k_hi - k_lo + 1);
    std::cout << points << " point(s) checked, " << failures.size() << " failed\n";
    for (const auto& f : failures)
        std::cout << "FAIL n=" << f.n << " k=" << f.k << " dist=" << f.multiset_dist << " median_ok=" << f.median_ok
                  << " intervals_ok=" << f.intervals_ok << " gram_ok=" << f.gram_ok << "\n";
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_esd(int n, const std::string& n_list_text, int k, int bins, const GlobalOpts& opts) {
    std::vector<int> n_list;
    if (!n_list_text.empty()) {
        std::stringstream ss(n_list_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) n_list.push_back(std::stoi(tok));
    } else {
        n_list.push_back(n);
    }

    const auto rows = esd_convergence(k, n_list, bins, opts.atom_tol, opts.cap);
    const LimitMeasure limit = zk_limit_measure(k);
    std::cout << "limit: atom mass " << limit.atoms[0].second << ", band mass " << std::get<2>(limit.bands[0]) << "\n";
    std::ostringstream json_out;
    json_out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        std::cout << "n=" << row.report.n << " atom_dev=" << row.atom_deviation << " band_dev=" << row.band_deviation
                  << "\n";
        json_out << row.report.to_json();
        if (i + 1 < rows.size()) json_out << ",";
        if (!opts.out.empty()) {
            std::ofstream csv(opts.out + ".n" + std::to_string(row.report.n) + ".csv");
            csv << row.report.histogram_csv();
        }
    }
    json_out << "]\n";
    if (!opts.out.empty()) {
        std::ofstream f(opts.out);
        f << json_out.str();
    }
    return kExitOk;
}

int cmd_scan(const std::string& orders, int samples, bool catalog_only, const GlobalOpts& opts) {
    int lo = 4, hi = 16;
    if (!catalog_only && !parse_range(orders, lo, hi)) throw GraphError("bad --orders range, expected lo:hi");

    ScanReport report;
    if (catalog_only)
        report = scan_subcubic_bipartite(2, 2, 0, opts.seed, true, opts.jobs);
    else
        report = scan_subcubic_bipartite(lo, hi, samples, opts.seed, true, opts.jobs);

    write_or_print(opts.out, report.to_json());
    std::cout << "graphs examined: " << report.graphs_examined << "\n";
    std::cout << "heawood hits: " << report.heawood_hits << "\n";
    std::cout << "delta_min: " << report.delta_min << "\n";
    std::cout << "non-heawood exceptions: " << report.exceptions.size() << "\n";

    if (!report.exceptions.empty()) {
        const std::string run_dir = "scan-exceptions-seed" + std::to_string(opts.seed);
        std::filesystem::create_directories(run_dir);
        for (std::size_t i = 0; i < report.exceptions.size(); ++i)
            save_graph(report.exception_graphs[i], run_dir + "/" + report.exceptions[i] + ".json");
        std::cout << "exception graphs saved under " << run_dir << "\n";
    }
    return report.exceptions.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of the W/P graph families"};
    app.require_subcommand(1);

    GlobalOpts opts;
    std::string family = "wnk", in, method = "numeric", grid_n, grid_k, n_list_text, orders = "4:16", out_dir;
    int n = 0, k = 0, bins = 40, samples = 200;
    bool catalog_only = false;

    auto* generate = app.add_subcommand("generate", "build a graph and write its file");
    generate->add_option("--family", family, "wnk|pnk|heawood|cycle")->check(CLI::IsMember({"wnk", "pnk", "heawood", "cycle"}));
    generate->add_option("--n", n, "ring count (or cycle length)");
    generate->add_option("--k", k, "ring width");
    add_global_flags(generate, opts);

    auto* spectrum = app.add_subcommand("spectrum", "compute a spectrum report");
    spectrum->add_option("--in", in, "input graph file");
    spectrum->add_option("--family", family, "family to build when no input file");
    spectrum->add_option("--n", n, "ring count");
    spectrum->add_option("--k", k, "ring width");
    spectrum->add_option("--method", method, "numeric|closed-form|both")->check(CLI::IsMember({"numeric", "closed-form", "both"}));
    add_global_flags(spectrum, opts);

    auto* verify = app.add_subcommand("verify", "verify the spectrum prediction at one point or a grid");
    verify->add_option("--n", n, "ring count");
    verify->add_option("--k", k, "ring width");
    verify->add_option("--grid-n", grid_n, "inclusive range lo:hi");
    verify->add_option("--grid-k", grid_k, "inclusive range lo:hi");
    verify->add_option("--out-dir", out_dir, "directory for per-point reports");
    add_global_flags(verify, opts);

    auto* esd_cmd = app.add_subcommand("esd", "empirical spectral distribution of P graphs");
    esd_cmd->add_option("--n", n, "ring count");
    esd_cmd->add_option("--n-list", n_list_text, "comma-separated ascending ring counts");
    esd_cmd->add_option("--k", k, "ring width");
    esd_cmd->add_option("--bins", bins, "histogram bins per band")->check(CLI::PositiveNumber);
    add_global_flags(esd_cmd, opts);

    auto* scan = app.add_subcommand("scan", "median-eigenvalue scan over subcubic bipartite graphs");
    scan->add_option("--orders", orders, "inclusive order range lo:hi");
    scan->add_option("--samples", samples, "random samples per order")->check(CLI::PositiveNumber);
    scan->add_flag("--catalog-only", catalog_only, "scan only the fixed catalog");
    add_global_flags(scan, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(family, n, k, opts);
        if (spectrum->parsed()) return cmd_spectrum(in, family, n, k, method, opts);
        if (verify->parsed()) return cmd_verify(n, k, grid_n, grid_k, opts.tol, out_dir, opts);
        if (esd_cmd->parsed()) return cmd_esd(n, n_list_text, k, bins, opts);
        if (scan->parsed()) return cmd_scan(orders, samples, catalog_only, opts);
    } catch (const SpectralError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
