#pragma once

#include <map>
#include <string>
#include <vector>

namespace dendrite {

// Labeled multigraph standing for a graph of groups. Labels are opaque group
// identifiers; the algebra lives in the declared containments (edge label
// sits inside vertex label), not in presentations. A label may optionally
// carry a concrete permutation payload (image arrays) when the graph came out
// of a quotient computation.
struct GogVertex {
    std::string id;
    std::string label;
};

struct GogEdge {
    std::string u, v;
    std::string label;
};

struct GraphOfGroups {
    std::vector<GogVertex> vertices;
    std::vector<GogEdge> edges;
    // declared containments: (edge label, vertex label)
    std::vector<std::pair<std::string, std::string>> containments;
    std::map<std::string, std::vector<std::vector<int>>> payloads;

    bool contains(const std::string& edge_label, const std::string& vertex_label) const;
    int vertex_index(const std::string& id) const; // -1 if absent
    int degree(const std::string& id) const;       // loops count twice

    // ids unique, endpoints exist, connected, every edge label declared
    // contained in both endpoint labels; throws model_error with the offender
    void validate() const;
};

// Substitute vertex v by the decomposition delta: v's edges are reattached to
// the delta vertex declared (in delta's containment list) to contain their
// label. Refuses, naming the edge, when no such declaration exists. Inserted
// vertices get ids "<v>.<delta id>".
GraphOfGroups refine(const GraphOfGroups& gamma, const std::string& v,
                     const GraphOfGroups& delta);

// Contract, least edge index first and repeatedly, any non-loop edge whose
// label equals an endpoint's label when that endpoint has at most 2 edge
// ends on it; the matching endpoint is absorbed into the other (the greater
// id when both match). A graph admitting no such move is reduced.
GraphOfGroups collapse_to_reduced(GraphOfGroups g);

} // namespace dendrite
