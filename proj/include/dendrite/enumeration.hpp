#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dendrite/graph.hpp"
#include "dendrite/group.hpp"
#include "dendrite/pretree.hpp"

namespace dendrite {

// articulation vertices and biconnected components, computed by the classic
// lowpoint scan — deliberately a second, independent route to the same facts
// the pretree construction derives from separation oracles
struct BlockCutData {
    std::vector<int> cut_vertices;        // sorted
    std::vector<std::vector<int>> blocks; // vertex sets, each sorted; list sorted
    std::vector<std::vector<std::pair<int, int>>> block_edges; // aligned with blocks
};

BlockCutData blocks_and_cuts(const Graph& g);

// the tree the cut-point construction must reproduce, assembled from block
// data alone: cut vertices become cut nodes; a block becomes a class node
// holding its non-cut vertices (plus its edges when it has at least three
// vertices); a single-edge block between two cut vertices becomes a direct
// cut-cut edge instead of a node
DecompositionTree expected_cutpoint_tree(const Graph& g);

// node labels are unique in both trees, so labeled isomorphism is label-set
// plus labeled-edge-set equality
bool trees_equal_labeled(const DecompositionTree& a, const DecompositionTree& b);

std::vector<VertexPermutation> graph_automorphisms(const Graph& g);

// all labeled connected graphs on vertices 0..n-1, in edge-mask order
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);
std::uint64_t connected_graph_count(int n); // published values for n <= 7

struct CheckCounter {
    std::string name;
    std::uint64_t runs = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> witnesses; // first few, with the offending graph
};

struct ValidationSummary {
    int max_n = 0;
    std::vector<std::uint64_t> graphs_per_order; // graphs_per_order[n]
    std::vector<CheckCounter> checks;
    bool ok() const;
    std::uint64_t total_graphs() const;
    std::string text() const;
};

// Enumerates every labeled connected graph with at most max_n vertices
// (max_n <= 7 guards the blowup) and runs the whole battery: block-cut
// equivalence, pretree axioms and interval laws, adjacency shapes,
// separation-oracle laws, JSJ invariants on 2-connected instances, and
// automorphism equivariance. Failures are counted and witnessed, never
// repaired.
ValidationSummary exhaustive_validate(int max_n);

std::string graph_text(const Graph& g); // "n=3 edges=[(0,1),(1,2)]"

} // namespace dendrite
