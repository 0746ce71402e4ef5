#pragma once

#include <string>
#include <vector>

#include "dendrite/graph.hpp"
#include "dendrite/graph_of_groups.hpp"
#include "dendrite/pretree.hpp"
#include "dendrite/tits.hpp"

namespace dendrite {

// {"n": 6, "edges": [[0,1],[1,2],...]}
Graph graph_from_json_text(const std::string& text);
Graph graph_from_json_file(const std::string& path);
std::string graph_to_json(const Graph& g);

std::string tree_to_json(const DecompositionTree& t);
std::string tree_to_dot(const DecompositionTree& t);

// {"vertices":[{"id":"B","label":"B"},...],
//  "edges":[["B","A","E"],...], "containments":[["E","B"],...]}
GraphOfGroups gog_from_json_text(const std::string& text);
GraphOfGroups gog_from_json_file(const std::string& path);
std::string gog_to_json(const GraphOfGroups& g);
std::string gog_to_dot(const GraphOfGroups& g);

std::string certificates_to_json(const std::vector<PiConvergenceCertificate>& certs);
std::string dynamics_to_json(const DynamicsReport& r);

} // namespace dendrite
