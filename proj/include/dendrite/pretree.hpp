#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dendrite {

enum class ElementKind {
    CutPoint,         // single separating vertex
    InseparableClass, // equivalence class of non-separated vertex pairs
    Necklace,         // cyclically ordered separating structure
    InseparablePair,  // inseparable cut pair
    MaxInseparable,   // maximal inseparable set that is not a necklace
};

std::string kind_name(ElementKind k);

struct PretreeElement {
    ElementKind kind;
    std::vector<int> members; // sorted vertices of the underlying graph
    std::vector<int> cycle;   // necklaces only: members in one cyclic order

    // inseparable classes only: edges of the graph whose midpoints belong to
    // the class. A class may have no vertex members at all (a triangle of cut
    // points, say) and is then told apart by its edges.
    std::vector<std::pair<int, int>> edge_span;

    bool operator==(const PretreeElement& o) const {
        return kind == o.kind && members == o.members && edge_span == o.edge_span;
    }
};

// "cut:3", "class:{1,2}", "pair:{0,4}", "necklace:<0,1,2,3>", "rigid:{0,2,5}";
// a memberless class is labeled by its edges, "class:edges{0-1,0-2,1-2}"
std::string element_label(const PretreeElement& e);

struct AxiomViolation {
    std::string axiom;       // which axiom failed
    std::vector<int> elems;  // witness tuple, element indices
};

struct ValidationReport {
    bool ok = true;
    std::vector<AxiomViolation> violations;
    std::string summary() const;
};

// Betweenness relation on a finite element set, checked against the pretree
// axioms. The callable is sampled once into a dense table; between(x, y, z)
// reads "z lies strictly in the open interval (x,y)".
class Pretree {
public:
    Pretree(std::vector<PretreeElement> elems,
            const std::function<bool(int, int, int)>& between_callable);

    int size() const { return static_cast<int>(elems_.size()); }
    const PretreeElement& element(int i) const;
    const std::vector<PretreeElement>& elements() const { return elems_; }

    bool between(int x, int y, int z) const; // z in (x,y)?

    // {x} ∪ (x,y) ∪ {y}, ordered from x to y by how much of the interval
    // sits on the x side of each element.
    std::vector<int> closed_interval(int x, int y) const;

    bool adjacent(int x, int y) const; // x != y and (x,y) empty
    bool terminal(int x) const;        // x interior to no interval

    // Symmetry, irreflexivity, exchange, transitivity — every failing tuple
    // is reported, none are repaired.
    ValidationReport validate() const;

private:
    std::vector<PretreeElement> elems_;
    std::vector<std::vector<std::vector<char>>> tab_; // tab_[x][y][z]: z in (x,y)
};

// Discrete tree whose nodes are pretree elements; edges join adjacent ones.
struct DecompositionTree {
    std::vector<PretreeElement> nodes;
    std::vector<std::pair<int, int>> edges; // node indices, normalized+sorted
    bool is_tree = false;                   // connected and acyclic

    int find_node(const PretreeElement& e) const; // -1 if absent
    std::vector<int> neighbors_of(int i) const;
    int degree_of(int i) const { return static_cast<int>(neighbors_of(i).size()); }
};

// Nodes = elements, edges = adjacency in the pretree.
DecompositionTree tree_from_pretree(const Pretree& p);

} // namespace dendrite
