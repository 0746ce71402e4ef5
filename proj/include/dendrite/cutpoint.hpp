#pragma once

#include "dendrite/graph.hpp"
#include "dendrite/pretree.hpp"

namespace dendrite {

// Edge-subdivision of a graph: one extra vertex in the middle of each edge.
// Midpoints stand in for edge interiors, which the vertex-only model would
// otherwise lose (a block whose vertices are all cut points still has body).
struct Subdivision {
    Graph graph;    // on n + m vertices; midpoint of edges()[i] has id n + i
    int original_n; // vertices 0..original_n-1 are the original ones

    bool is_midpoint(int v) const { return v >= original_n; }
};

Subdivision subdivide(const Graph& g);

// The cut-point pretree: one element per cut point, plus one inseparable
// class per equivalence class of the non-separation relation on the
// subdivision (members listed are original vertices; a class of midpoints
// only — the body of a block all of whose vertices are cut points — has an
// empty member list). Betweenness: z lies in (x,y) when deleting z's whole
// footprint in the subdivision leaves x's and y's footprints in different
// components.
Pretree inseparable_classes(const Graph& g);

// Tree on the pretree's adjacent pairs. trim=true drops terminal elements
// before gluing.
DecompositionTree build_cutpoint_tree(const Graph& g, bool trim = false);

// Structure of adjacent pairs in the cut-point pretree. In the continuum,
// an adjacent pair has exactly one cut point in it; the graph model keeps
// that for cut/class pairs but also produces cut/cut adjacencies across
// bridges whose endpoints are both cut points. Checked shapes:
//   - never class/class;
//   - cut/class only when the cut point lies in the closure of the class;
//   - cut/cut only across a bridge.
ValidationReport adjacency_structure_report(const Graph& g);

} // namespace dendrite
