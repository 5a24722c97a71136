#include "specgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace specgraph {

std::int64_t IntMatrix::row_sum(int r) const {
    std::int64_t s = 0;
    for (int c = 0; c < cols_; ++c) s += (*this)(r, c);
    return s;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency_) twice += nbrs.size();
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw GraphError("loop edge rejected: " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw GraphError("edge endpoint out of range");
    if (has_edge(u, v)) throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    auto& nu = adjacency_[u];
    auto& nv = adjacency_[v];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < order(); ++u)
        for (int v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already lexicographic: outer u ascending, neighbor lists sorted
}

void Graph::set_labels(std::vector<VertexLabel> labels) {
    if (static_cast<int>(labels.size()) != order())
        throw GraphError("label count does not match order");
    labels_ = std::move(labels);
}

bool Graph::is_connected() const {
    if (order() == 0) return true;
    std::vector<char> seen(order(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adjacency_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
    }
    return reached == order();
}

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> color(order(), -1);
    for (int start = 0; start < order(); ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adjacency_[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

int Graph::girth() const {
    // BFS from every vertex; shortest cycle through the root is detected when
    // a non-tree edge closes between two visited vertices.
    int best = 0;
    for (int root = 0; root < order(); ++root) {
        std::vector<int> dist(order(), -1), parent(order(), -1);
        dist[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adjacency_[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int cycle = dist[u] + dist[v] + 1;
                    if (best == 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    return best;
}

int wnk_vertex_index(Side side, int ring, int column, int n, int k) {
    int base = (side == Side::V) ? 0 : n * k;
    return base + (ring - 1) * k + (column - 1);
}

namespace {

void check_wnk_params(int n, int k, int size_cap) {
    if (n < 2) throw GraphError("n >= 2 required");
    if (k < 2) throw GraphError("k >= 2 required");
    if (2 * n * k > size_cap)
        throw GraphError("order " + std::to_string(2 * n * k) + " exceeds size cap " + std::to_string(size_cap));
}

std::vector<VertexLabel> wnk_labels(int n, int k) {
    std::vector<VertexLabel> labels(static_cast<std::size_t>(2) * n * k);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) {
            labels[wnk_vertex_index(Side::V, i, j, n, k)] = {Side::V, i, j};
            labels[wnk_vertex_index(Side::W, i, j, n, k)] = {Side::W, i, j};
        }
    return labels;
}

}  // namespace

Graph build_wnk(int n, int k, int size_cap) {
    check_wnk_params(n, k, size_cap);
    Graph g(2 * n * k);
    for (int i = 1; i <= n; ++i) {
        // complete bipartite join within ring i
        for (int j = 1; j <= k; ++j)
            for (int l = 1; l <= k; ++l)
                g.add_edge(wnk_vertex_index(Side::V, i, j, n, k), wnk_vertex_index(Side::W, i, l, n, k));
        // matching to the next ring, wrapping n -> 1
        int next = (i % n) + 1;
        for (int j = 1; j <= k; ++j)
            g.add_edge(wnk_vertex_index(Side::W, i, j, n, k), wnk_vertex_index(Side::V, next, j, n, k));
    }
    g.set_labels(wnk_labels(n, k));
    g.set_family({FamilyKind::Wnk, n, k});
    return g;
}

Graph build_pnk(int n, int k, int size_cap) {
    Graph w = build_wnk(n, k, size_cap);
    // delete w_{n,1..k}; they occupy the last k indices of the canonical order
    int keep = 2 * n * k - k;
    Graph g(keep);
    for (auto [u, v] : w.edges())
        if (u < keep && v < keep) g.add_edge(u, v);
    std::vector<VertexLabel> labels(w.labels()->begin(), w.labels()->begin() + keep);
    g.set_labels(std::move(labels));
    g.set_family({FamilyKind::Pnk, n, k});
    return g;
}

Graph build_heawood() {
    // 14-cycle with a chord from each even vertex i to i+5 mod 14.
    Graph g(14);
    for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
    g.set_family({FamilyKind::Heawood, 0, 0});
    return g;
}

Graph build_cycle(int n) {
    if (n < 3) throw GraphError("n >= 3 required for a cycle");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.set_family({FamilyKind::Cycle, n, 0});
    return g;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.order(), g.order());
    for (auto [u, v] : g.edges()) {
        m(u, v) = 1;
        m(v, u) = 1;
    }
    return m;
}

std::pair<IntMatrix, IntMatrix> square_decompose(const Graph& g) {
    if (g.family().kind != FamilyKind::Wnk)
        throw GraphError("square_decompose requires a WNK-family graph");
    const int n = g.family().n;
    const int k = g.family().k;
    const int order = g.order();
    const int half = n * k;
    IntMatrix a = adjacency_matrix(g);

    IntMatrix sq(order, order);
    for (int r = 0; r < order; ++r)
        for (int c = 0; c < order; ++c) {
            std::int64_t s = 0;
            for (int t = 0; t < order; ++t) s += a(r, t) * a(t, c);
            sq(r, c) = s;
        }
    for (int d = 0; d < order; ++d) sq(d, d) -= k + 1;

    for (int r = 0; r < half; ++r)
        for (int c = half; c < order; ++c)
            if (sq(r, c) != 0 || sq(c, r) != 0)
                throw GraphError("nonzero cross-block entry in A^2 - (k+1)I");

    IntMatrix a_v(half, half), a_w(half, half);
    for (int r = 0; r < half; ++r)
        for (int c = 0; c < half; ++c) {
            a_v(r, c) = sq(r, c);
            a_w(r, c) = sq(half + r, half + c);
        }
    return {std::move(a_v), std::move(a_w)};
}

namespace {

std::string family_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Wnk: return "wnk";
        case FamilyKind::Pnk: return "pnk";
        case FamilyKind::Heawood: return "heawood";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::Other: return "other";
    }
    return "other";
}

}  // namespace

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["format_version"] = 1;
    doc["family"] = family_string(g.family().kind);
    if (g.family().kind == FamilyKind::Wnk || g.family().kind == FamilyKind::Pnk) {
        doc["n"] = g.family().n;
        doc["k"] = g.family().k;
    } else if (g.family().kind == FamilyKind::Cycle) {
        doc["n"] = g.family().n;
    }
    doc["order"] = g.order();
    if (g.labels()) {
        nlohmann::ordered_json labels = nlohmann::ordered_json::array();
        for (const auto& lab : *g.labels()) {
            nlohmann::ordered_json entry;
            entry["side"] = (lab.side == Side::V) ? "V" : "W";
            entry["ring"] = lab.ring;
            entry["column"] = lab.column;
            labels.push_back(std::move(entry));
        }
        doc["labels"] = std::move(labels);
    } else {
        doc["labels"] = nullptr;
    }
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back(nlohmann::ordered_json::array({u, v}));
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphError(std::string("graph file parse error: ") + e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != 1)
            throw GraphError("unsupported format_version");
        const int order = doc.at("order").get<int>();
        if (order < 0) throw GraphError("negative order");
        Graph g(order);

        const std::string fam = doc.at("family").get<std::string>();
        FamilyTag tag;
        if (fam == "wnk") tag = {FamilyKind::Wnk, doc.at("n").get<int>(), doc.at("k").get<int>()};
        else if (fam == "pnk") tag = {FamilyKind::Pnk, doc.at("n").get<int>(), doc.at("k").get<int>()};
        else if (fam == "heawood") tag = {FamilyKind::Heawood, 0, 0};
        else if (fam == "cycle") tag = {FamilyKind::Cycle, doc.at("n").get<int>(), 0};
        else if (fam == "other") tag = {FamilyKind::Other, 0, 0};
        else throw GraphError("unknown family tag: " + fam);
        g.set_family(tag);

        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw GraphError("edge record must be a [u, v] pair");
            int u = e[0].get<int>();
            int v = e[1].get<int>();
            if (u >= v) throw GraphError("edge record not in u < v form: [" + std::to_string(u) + "," + std::to_string(v) + "]");
            g.add_edge(u, v);  // rejects duplicates and out-of-range endpoints
        }

        const auto& labels = doc.at("labels");
        if (!labels.is_null()) {
            std::vector<VertexLabel> parsed;
            parsed.reserve(labels.size());
            for (const auto& lab : labels) {
                const std::string side = lab.at("side").get<std::string>();
                if (side != "V" && side != "W") throw GraphError("label side must be V or W");
                parsed.push_back({side == "V" ? Side::V : Side::W, lab.at("ring").get<int>(), lab.at("column").get<int>()});
            }
            g.set_labels(std::move(parsed));
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("graph file validation error: ") + e.what());
    }
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot open for writing: " + path);
    out << graph_to_json(g);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

}  // namespace specgraph
