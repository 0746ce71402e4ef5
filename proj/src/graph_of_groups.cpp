#include "dendrite/graph_of_groups.hpp"

#include <algorithm>
#include <set>

#include "dendrite/error.hpp"

namespace dendrite {

bool GraphOfGroups::contains(const std::string& edge_label,
                             const std::string& vertex_label) const {
    for (const auto& [e, v] : containments)
        if (e == edge_label && v == vertex_label)
            return true;
    return false;
}

int GraphOfGroups::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id)
            return static_cast<int>(i);
    return -1;
}

int GraphOfGroups::degree(const std::string& id) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.u == id)
            ++d;
        if (e.v == id)
            ++d;
    }
    return d;
}

void GraphOfGroups::validate() const {
    std::set<std::string> ids;
    for (const auto& v : vertices)
        if (!ids.insert(v.id).second)
            throw model_error("duplicate vertex id '" + v.id + "'");
    for (const auto& e : edges) {
        if (!ids.count(e.u) || !ids.count(e.v))
            throw model_error("edge '" + e.label + "' has an unknown endpoint");
        for (const std::string* end : {&e.u, &e.v}) {
            const auto& vl = vertices[vertex_index(*end)].label;
            if (!contains(e.label, vl))
                throw model_error("edge label '" + e.label +
                                  "' not declared contained in vertex label '" + vl + "'");
        }
    }
    if (vertices.empty())
        return; // nothing to connect (a trimmed circle quotient, say)
    std::set<std::string> seen = {vertices[0].id};
    std::vector<std::string> stack = {vertices[0].id};
    while (!stack.empty()) {
        std::string at = stack.back();
        stack.pop_back();
        for (const auto& e : edges)
            for (const auto& next : {e.u == at ? e.v : "", e.v == at ? e.u : ""})
                if (!next.empty() && seen.insert(next).second)
                    stack.push_back(next);
    }
    if (seen.size() != vertices.size())
        throw model_error("graph of groups is not connected");
}

GraphOfGroups refine(const GraphOfGroups& gamma, const std::string& v,
                     const GraphOfGroups& delta) {
    gamma.validate();
    delta.validate();
    if (gamma.vertex_index(v) < 0)
        throw input_error("no vertex '" + v + "' to refine at");
    if (delta.vertices.empty())
        throw input_error("cannot refine by an empty decomposition");

    // where does a dangling edge go? the first delta vertex declared to
    // contain its label
    auto attach = [&](const std::string& edge_label) -> std::string {
        for (const auto& w : delta.vertices)
            if (delta.contains(edge_label, w.label))
                return v + "." + w.id;
        throw input_error("refine refused: edge label '" + edge_label + "' at '" + v +
                          "' has no declared containing vertex in the decomposition");
    };

    GraphOfGroups out;
    for (const auto& w : gamma.vertices)
        if (w.id != v)
            out.vertices.push_back(w);
    for (const auto& w : delta.vertices)
        out.vertices.push_back({v + "." + w.id, w.label});

    for (const auto& e : gamma.edges) {
        GogEdge moved = e;
        if (moved.u == v)
            moved.u = attach(e.label);
        if (moved.v == v)
            moved.v = attach(e.label);
        out.edges.push_back(moved);
    }
    for (const auto& e : delta.edges)
        out.edges.push_back({v + "." + e.u, v + "." + e.v, e.label});

    out.containments = gamma.containments;
    for (const auto& c : delta.containments)
        out.containments.push_back(c);
    std::sort(out.containments.begin(), out.containments.end());
    out.containments.erase(std::unique(out.containments.begin(), out.containments.end()),
                           out.containments.end());
    out.payloads = gamma.payloads;
    for (const auto& [k, p] : delta.payloads)
        out.payloads[k] = p;

    out.validate();
    return out;
}

GraphOfGroups collapse_to_reduced(GraphOfGroups g) {
    g.validate();
    for (;;) {
        int pick = -1;
        std::string absorbed, kept;
        for (size_t i = 0; i < g.edges.size() && pick < 0; ++i) {
            const auto& e = g.edges[i];
            if (e.u == e.v)
                continue;
            const auto& lu = g.vertices[g.vertex_index(e.u)].label;
            const auto& lv = g.vertices[g.vertex_index(e.v)].label;
            bool u_matches = (lu == e.label) && g.degree(e.u) <= 2;
            bool v_matches = (lv == e.label) && g.degree(e.v) <= 2;
            if (u_matches && v_matches) {
                // both collapsible: absorb the greater id, keep the lesser
                absorbed = std::max(e.u, e.v);
                kept = std::min(e.u, e.v);
                pick = static_cast<int>(i);
            } else if (u_matches) {
                absorbed = e.u;
                kept = e.v;
                pick = static_cast<int>(i);
            } else if (v_matches) {
                absorbed = e.v;
                kept = e.u;
                pick = static_cast<int>(i);
            }
        }
        if (pick < 0) {
            g.validate();
            return g;
        }

        // whatever sat inside the absorbed label now sits inside the kept one
        const std::string label_absorbed = g.vertices[g.vertex_index(absorbed)].label;
        const std::string label_kept = g.vertices[g.vertex_index(kept)].label;
        std::vector<std::pair<std::string, std::string>> lifted;
        for (const auto& [e, vl] : g.containments)
            if (vl == label_absorbed)
                lifted.emplace_back(e, label_kept);
        for (auto& c : lifted)
            g.containments.push_back(std::move(c));
        std::sort(g.containments.begin(), g.containments.end());
        g.containments.erase(std::unique(g.containments.begin(), g.containments.end()),
                             g.containments.end());

        g.edges.erase(g.edges.begin() + pick);
        for (auto& e : g.edges) {
            if (e.u == absorbed)
                e.u = kept;
            if (e.v == absorbed)
                e.v = kept;
        }
        g.vertices.erase(g.vertices.begin() + g.vertex_index(absorbed));
    }
}

} // namespace dendrite
