#include "dendrite/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dendrite/error.hpp"

namespace dendrite {

using nlohmann::json;

namespace {

json parse_checked(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw input_error("malformed JSON");
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

Graph graph_from_json_text(const std::string& text) {
    json j = parse_checked(text);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw input_error("graph JSON needs an integer field \"n\"");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw input_error("graph JSON field \"edges\" must be an array of pairs");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw input_error("graph JSON edges must be integer pairs");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }
    return Graph(j["n"].get<int>(), std::move(edges));
}

Graph graph_from_json_file(const std::string& path) {
    return graph_from_json_text(slurp(path));
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.order();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges())
        j["edges"].push_back({u, v});
    return j.dump(2);
}

std::string tree_to_json(const DecompositionTree& t) {
    json j;
    j["is_tree"] = t.is_tree;
    j["nodes"] = json::array();
    for (const auto& e : t.nodes) {
        json n;
        n["kind"] = kind_name(e.kind);
        n["label"] = element_label(e);
        n["members"] = e.members;
        if (!e.cycle.empty())
            n["cycle"] = e.cycle;
        if (!e.edge_span.empty()) {
            n["edge_span"] = json::array();
            for (auto [u, v] : e.edge_span)
                n["edge_span"].push_back({u, v});
        }
        j["nodes"].push_back(std::move(n));
    }
    j["edges"] = json::array();
    for (auto [a, b] : t.edges)
        j["edges"].push_back({a, b});
    return j.dump(2);
}

std::string tree_to_dot(const DecompositionTree& t) {
    std::ostringstream os;
    os << "graph decomposition {\n  node [shape=box];\n";
    for (size_t i = 0; i < t.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << element_label(t.nodes[i]) << "\"];\n";
    for (auto [a, b] : t.edges)
        os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

GraphOfGroups gog_from_json_text(const std::string& text) {
    json j = parse_checked(text);
    GraphOfGroups g;
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw input_error("graph-of-groups JSON needs a \"vertices\" array");
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("label"))
            throw input_error("each vertex needs \"id\" and \"label\"");
        g.vertices.push_back({v["id"].get<std::string>(), v["label"].get<std::string>()});
    }
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 3)
                throw input_error("each edge is [from, to, label]");
            g.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                               e[2].get<std::string>()});
        }
    if (j.contains("containments"))
        for (const auto& c : j["containments"]) {
            if (!c.is_array() || c.size() != 2)
                throw input_error("each containment is [small, large]");
            g.containments.push_back(
                {c[0].get<std::string>(), c[1].get<std::string>()});
        }
    g.validate();
    return g;
}

GraphOfGroups gog_from_json_file(const std::string& path) {
    return gog_from_json_text(slurp(path));
}

std::string gog_to_json(const GraphOfGroups& g) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : g.vertices)
        j["vertices"].push_back({{"id", v.id}, {"label", v.label}});
    j["edges"] = json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({e.u, e.v, e.label});
    j["containments"] = json::array();
    for (const auto& c : g.containments)
        j["containments"].push_back({c.first, c.second});
    return j.dump(2);
}

std::string gog_to_dot(const GraphOfGroups& g) {
    std::ostringstream os;
    os << "graph groups {\n  node [shape=ellipse];\n";
    for (size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << g.vertices[i].id << "\\n"
           << g.vertices[i].label << "\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << g.vertex_index(e.u) << " -- v" << g.vertex_index(e.v)
           << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string certificates_to_json(const std::vector<PiConvergenceCertificate>& certs) {
    json j;
    bool all = true;
    j["certificates"] = json::array();
    for (size_t i = 0; i < certs.size(); ++i) {
        const auto& c = certs[i];
        json e;
        e["index"] = i;
        e["g"] = {{"w1", word_text(c.g.w1)}, {"w2", word_text(c.g.w2)}};
        e["n"] = point_text(c.n);
        e["p"] = point_text(c.p);
        e["c"] = point_text(c.c);
        e["limit"] = point_text(c.limit);
        e["theta"] = c.theta;
        e["d_c_n"] = c.d_c_n;
        e["d_limit_p"] = c.d_limit_p;
        e["pass"] = c.pass;
        all = all && c.pass;
        j["certificates"].push_back(std::move(e));
    }
    j["count"] = certs.size();
    j["all_pass"] = all;
    return j.dump(2);
}

std::string dynamics_to_json(const DynamicsReport& r) {
    json j;
    j["word"] = word_text(r.word);
    j["translation_length"] = r.axes.length;
    j["repelling"] = end_text(r.axes.repelling);
    j["attracting"] = end_text(r.axes.attracting);
    j["traces"] = json::array();
    for (const auto& t : r.traces) {
        json e;
        e["start"] = end_text(t.start);
        e["frozen"] = t.frozen;
        e["nondecreasing"] = t.nondecreasing;
        e["agreement"] = t.agreement;
        j["traces"].push_back(std::move(e));
    }
    return j.dump(2);
}

} // namespace dendrite
