#pragma once

#include <utility>
#include <vector>

namespace dendrite {

// Finite simple connected graph on vertices 0..n-1. Construction validates
// simplicity and connectivity and rejects anything else loudly.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    // Edges normalized to (min,max), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Connectivity of the subgraph induced on `verts` (sorted unique not required).
    bool induced_connected(const std::vector<int>& verts) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Connected components of G - removed, each sorted ascending, components
// ordered by their least vertex. Vertices listed in `removed` are dropped.
std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed);

// Same partition as a label array: component index per vertex, -1 if removed.
// Components numbered by least vertex, matching components_after_removal.
std::vector<int> component_labels(const Graph& g, const std::vector<int>& removed);

// Does removing `s` leave p and q in different components? p,q must survive.
bool separates(const Graph& g, const std::vector<int>& s, int p, int q);

bool is_cut_point(const Graph& g, int v);
std::vector<int> cut_points(const Graph& g);

// No cut points and at least 3 vertices.
bool is_two_connected(const Graph& g);

// Cut pair = pair of vertices in a 2-connected graph whose removal
// disconnects. The pair may span an edge (a chord). Callers must decompose at
// cut points first; we refuse otherwise.
bool is_cut_pair(const Graph& g, int a, int b);
std::vector<std::pair<int, int>> cut_pairs(const Graph& g);

} // namespace dendrite
