#include "dendrite/graph.hpp"

#include <algorithm>
#include <string>

#include "dendrite/error.hpp"

namespace dendrite {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n <= 0)
        throw input_error("graph must have at least one vertex");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw input_error("loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw input_error("duplicate edge in input");
    edges_ = std::move(edge_list);

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());

    // connectivity
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i)
        all[i] = i;
    if (!induced_connected(all))
        throw input_error("graph is not connected");
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw input_error("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw input_error("vertex out of range");
    if (u == v)
        return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::induced_connected(const std::vector<int>& verts) const {
    if (verts.empty())
        return false;
    std::vector<char> in(n_, 0), seen(n_, 0);
    for (int v : verts) {
        if (v < 0 || v >= n_)
            throw input_error("vertex out of range: " + std::to_string(v));
        in[v] = 1;
    }
    std::vector<int> stack = {verts[0]};
    seen[verts[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u])
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    int want = 0;
    for (int v = 0; v < n_; ++v)
        if (in[v])
            ++want;
    return reached == want;
}

std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed) {
    std::vector<char> gone(g.order(), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.order())
            throw input_error("removed vertex out of range: " + std::to_string(v));
        gone[v] = 1;
    }
    std::vector<char> seen(g.order(), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.order(); ++s) {
        if (gone[s] || seen[s])
            continue;
        std::vector<int> comp, stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // scanning s in ascending order already yields components ordered by least vertex
    return comps;
}

std::vector<int> component_labels(const Graph& g, const std::vector<int>& removed) {
    std::vector<int> label(g.order(), -1);
    std::vector<char> gone(g.order(), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.order())
            throw input_error("removed vertex out of range: " + std::to_string(v));
        gone[v] = 1;
    }
    int next = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (gone[s] || label[s] >= 0)
            continue;
        std::vector<int> stack = {s};
        label[s] = next;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!gone[w] && label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

bool separates(const Graph& g, const std::vector<int>& s, int p, int q) {
    for (int v : s)
        if (v == p || v == q)
            throw input_error("separates: endpoint " + std::to_string(v) +
                              " lies in the removed set");
    if (p == q)
        return false;
    auto comps = components_after_removal(g, s);
    for (const auto& c : comps) {
        bool hasp = std::binary_search(c.begin(), c.end(), p);
        bool hasq = std::binary_search(c.begin(), c.end(), q);
        if (hasp || hasq)
            return !(hasp && hasq);
    }
    throw input_error("separates: endpoint not found after removal");
}

bool is_cut_point(const Graph& g, int v) {
    if (g.order() <= 2)
        return false;
    return components_after_removal(g, {v}).size() > 1;
}

std::vector<int> cut_points(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (is_cut_point(g, v))
            out.push_back(v);
    return out;
}

bool is_two_connected(const Graph& g) {
    return g.order() >= 3 && cut_points(g).empty();
}

bool is_cut_pair(const Graph& g, int a, int b) {
    if (!is_two_connected(g))
        throw input_error("cut pairs live in 2-connected graphs; decompose at cut points first");
    if (a < 0 || a >= g.order() || b < 0 || b >= g.order())
        throw input_error("vertex out of range");
    if (a == b)
        return false;
    return components_after_removal(g, {a, b}).size() > 1;
}

std::vector<std::pair<int, int>> cut_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (is_cut_pair(g, a, b))
                out.emplace_back(a, b);
    return out;
}

} // namespace dendrite
