#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dendrite/graph.hpp"
#include "dendrite/graph_of_groups.hpp"
#include "dendrite/pretree.hpp"

namespace dendrite {

// permutation of graph vertices, stored as an image array
struct VertexPermutation {
    std::vector<int> img;

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int v) const { return img[v]; }
    bool is_identity() const;
    VertexPermutation then(const VertexPermutation& o) const; // v -> o(this(v))
    VertexPermutation inverse() const;
    auto operator<=>(const VertexPermutation&) const = default;

    static VertexPermutation identity(int n);
};

std::string cycle_notation(const VertexPermutation& p); // "(1 5)(2 4)", identity "()"

bool is_automorphism(const Graph& g, const VertexPermutation& p);

// finite permutation group materialized by closing generators
class SymmetryGroup {
public:
    // throws input_error when a generator is no automorphism of g, or the
    // closure outgrows cap
    static SymmetryGroup generate(const Graph& g, std::vector<VertexPermutation> gens,
                                  std::size_t cap = 10080);

    int order() const { return static_cast<int>(elems_.size()); }
    // sorted by image array; elements()[0] is always the identity
    const std::vector<VertexPermutation>& elements() const { return elems_; }
    const std::vector<VertexPermutation>& generators() const { return gens_; }
    int index_of(const VertexPermutation& p) const; // -1 if absent

private:
    SymmetryGroup() = default;
    std::vector<VertexPermutation> gens_, elems_;
};

// Node permutation induced on elements by pointwise image. Throws model_error
// when an element's image is no element, images collide, or the between /
// adjacency relation is not preserved — the construction is supposed to be
// canonical, so any of these means a bug upstream.
std::vector<int> induced_action(const Graph& g, const VertexPermutation& sigma,
                                const Pretree& p);
std::vector<int> induced_action(const Graph& g, const VertexPermutation& sigma,
                                const DecompositionTree& t);

struct OrbitData {
    std::vector<std::vector<int>> node_orbits; // each sorted; ordered by least node
    std::vector<int> orbit_of_node;
    std::vector<int> node_rep;                      // least node of its orbit
    std::vector<std::vector<int>> node_stabilizer;  // element indices fixing the rep
    std::vector<std::vector<std::pair<int, int>>> edge_orbits;
    std::vector<std::pair<int, int>> edge_rep;
    std::vector<std::vector<int>> edge_stabilizer; // fixing both endpoints of the rep
    std::vector<std::vector<int>> node_action;     // per group element, node permutation
};

OrbitData orbits_and_stabilizers(const Graph& g, const SymmetryGroup& h,
                                 const DecompositionTree& t);

// One vertex per node orbit labeled by the representative's stabilizer, one
// edge per edge orbit labeled by the pointwise edge stabilizer. The pointwise
// convention keeps edge groups inside endpoint groups even when some group
// element flips an edge end for end. Containment of each conjugated edge
// stabilizer in the endpoint stabilizers is checked concretely.
GraphOfGroups quotient_graph_of_groups(const Graph& g, const SymmetryGroup& h,
                                       const DecompositionTree& t);

struct NonNestingReport {
    int elements_checked = 0;
    int intervals_checked = 0;
    std::vector<std::string> violations; // "g maps [x,y] strictly inside itself"
    bool ok() const { return violations.empty(); }
};

// No group element maps a closed node interval strictly inside itself;
// exhaustive over elements and intervals.
NonNestingReport check_nonnesting(const Graph& g, const SymmetryGroup& h,
                                  const DecompositionTree& t);

} // namespace dendrite
