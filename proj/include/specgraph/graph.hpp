#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace specgraph {

enum class Side : std::uint8_t { V, W };

/// Structured label v_{i,j} / w_{i,j}: bipartition side, ring index i (1..n),
/// column index j (1..k).
struct VertexLabel {
    Side side = Side::V;
    int ring = 0;
    int column = 0;

    bool operator==(const VertexLabel&) const = default;
};

enum class FamilyKind : std::uint8_t { Wnk, Pnk, Heawood, Cycle, Other };

struct FamilyTag {
    FamilyKind kind = FamilyKind::Other;
    int n = 0;
    int k = 0;

    bool operator==(const FamilyTag&) const = default;
};

/// Dense integer matrix. Adjacency exports are 0/1; the squared-graph blocks
/// carry small non-negative multiplicities.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::int64_t operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::int64_t row_sum(int r) const;
    bool is_symmetric() const;

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> entries_;
};

/// Finite undirected simple graph over vertex indices 0..order-1, with
/// optional structured labels and a family tag.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order) : adjacency_(order) {}

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    /// Edge list with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    const std::optional<std::vector<VertexLabel>>& labels() const { return labels_; }
    void set_labels(std::vector<VertexLabel> labels);

    const FamilyTag& family() const { return family_; }
    void set_family(FamilyTag tag) { family_ = tag; }

    bool is_connected() const;
    /// Returns a 2-coloring (0/1 per vertex) if bipartite, nullopt otherwise.
    std::optional<std::vector<int>> bipartition() const;
    /// Shortest cycle length; 0 for a forest.
    int girth() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
    std::optional<std::vector<VertexLabel>> labels_;
    FamilyTag family_;
};

inline constexpr int kDefaultSizeCap = 10000;

// Canonical vertex ordering for W/P families: v_{1,1},...,v_{1,k},
// v_{2,1},...,v_{n,k}, then w_{1,1},...,w_{n,k}. 1-based ring/column.
int wnk_vertex_index(Side side, int ring, int column, int n, int k);

Graph build_wnk(int n, int k, int size_cap = kDefaultSizeCap);
Graph build_pnk(int n, int k, int size_cap = kDefaultSizeCap);
Graph build_heawood();
Graph build_cycle(int n);

IntMatrix adjacency_matrix(const Graph& g);

/// Blocks A_V, A_W of A^2 - (k+1)I for a W_{n,k} instance, V block first.
/// Throws if the input is not WNK-tagged or the cross blocks are nonzero.
std::pair<IntMatrix, IntMatrix> square_decompose(const Graph& g);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace specgraph
