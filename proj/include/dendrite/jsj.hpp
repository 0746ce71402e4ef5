#pragma once

#include <optional>
#include <vector>

#include "dendrite/graph.hpp"
#include "dendrite/pretree.hpp"

namespace dendrite {

// Witness that a vertex set is cyclic: points in cyclic order, and one part
// per consecutive point pair. parts[i] joins points[i] to points[(i+1)%k].
// For a 2-set the witness is degenerate (two sides of a cut pair).
struct CyclicDecomposition {
    std::vector<int> points;
    std::vector<std::vector<int>> parts;
};

// No cut pair separates two members. Adjacent vertices are never separated
// by vertex removal, so edges are always inseparable. 2-connected input only.
bool is_inseparable_set(const Graph& g, const std::vector<int>& a);

// Canonical cyclic witness or nothing. For |S| >= 3: every component of G-S
// must hang between exactly two points, no two components may share a slot,
// and the slot demands (component attachments plus S-S edges) must form a
// single cycle through all of S. Canonical order: least point first, then its
// lesser neighbor.
std::optional<CyclicDecomposition> cyclic_decomposition(const Graph& g,
                                                        const std::vector<int>& s);

// Elements: necklaces (maximal cyclic sets, >2 points), maximal inseparable
// sets, inseparable cut pairs; same vertex set deduplicated with precedence
// necklace > pair > plain set. A necklace spanning every vertex crowds out
// the rest: the whole graph is a circle and the circle is the one element.
//
// Betweenness: z in (x,y) when some cut pair inside z separates x from y
// with z itself straddling the split — members of z on both sides, except
// that a pair element is its own straddle. The axioms are validated; a
// violation throws with a witness.
Pretree jsj_elements(const Graph& g);

// The canonical cyclic order of a necklace (least vertex first, lesser
// neighbor second). Errors if the set is not cyclic.
std::vector<int> cyclic_order(const Graph& g, const std::vector<int>& necklace);

struct Gap {
    std::vector<int> interior; // a component of G - necklace
    std::vector<int> boundary; // necklace vertices it attaches to
};

// Gaps of a necklace, ordered by least interior vertex. Empty classes are
// not emitted (a chord's "gap" has no interior to report).
std::vector<Gap> necklace_gaps(const Graph& g, const std::vector<int>& necklace);

// trim=true removes terminal elements before gluing; the result may be empty
// (a circle's one-element pretree trims away entirely).
DecompositionTree jsj_tree(const Graph& g, bool trim);

} // namespace dendrite
