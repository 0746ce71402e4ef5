#include "dendrite/group.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "dendrite/error.hpp"

namespace dendrite {

bool VertexPermutation::is_identity() const {
    for (int v = 0; v < degree(); ++v)
        if (img[v] != v)
            return false;
    return true;
}

VertexPermutation VertexPermutation::then(const VertexPermutation& o) const {
    if (o.degree() != degree())
        throw input_error("composing permutations of different degrees");
    VertexPermutation r;
    r.img.resize(img.size());
    for (int v = 0; v < degree(); ++v)
        r.img[v] = o.img[img[v]];
    return r;
}

VertexPermutation VertexPermutation::inverse() const {
    VertexPermutation r;
    r.img.resize(img.size());
    for (int v = 0; v < degree(); ++v)
        r.img[img[v]] = v;
    return r;
}

VertexPermutation VertexPermutation::identity(int n) {
    VertexPermutation r;
    r.img.resize(n);
    for (int v = 0; v < n; ++v)
        r.img[v] = v;
    return r;
}

std::string cycle_notation(const VertexPermutation& p) {
    std::string s;
    std::vector<char> seen(p.degree(), 0);
    for (int v = 0; v < p.degree(); ++v) {
        if (seen[v] || p.img[v] == v)
            continue;
        s += '(';
        int at = v;
        bool first = true;
        while (!seen[at]) {
            seen[at] = 1;
            if (!first)
                s += ' ';
            s += std::to_string(at);
            first = false;
            at = p.img[at];
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

bool is_automorphism(const Graph& g, const VertexPermutation& p) {
    if (p.degree() != g.order())
        return false;
    std::vector<char> hit(g.order(), 0);
    for (int v : p.img) {
        if (v < 0 || v >= g.order() || hit[v])
            return false;
        hit[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!g.has_edge(p.img[u], p.img[v]))
            return false;
    return true;
}

SymmetryGroup SymmetryGroup::generate(const Graph& g, std::vector<VertexPermutation> gens,
                                      std::size_t cap) {
    for (const auto& p : gens)
        if (!is_automorphism(g, p))
            throw input_error("generator " + cycle_notation(p) +
                              " is not an automorphism of the graph");

    std::set<VertexPermutation> closure;
    std::queue<VertexPermutation> work;
    auto push = [&](VertexPermutation p) {
        if (closure.insert(p).second) {
            if (closure.size() > cap)
                throw input_error("group closure exceeds the cap of " + std::to_string(cap));
            work.push(std::move(p));
        }
    };
    push(VertexPermutation::identity(g.order()));
    for (const auto& p : gens)
        push(p);
    while (!work.empty()) {
        VertexPermutation p = work.front();
        work.pop();
        push(p.inverse());
        for (const auto& q : gens)
            push(p.then(q));
    }

    SymmetryGroup h;
    h.gens_ = std::move(gens);
    h.elems_.assign(closure.begin(), closure.end());
    return h;
}

int SymmetryGroup::index_of(const VertexPermutation& p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || !(*it == p))
        return -1;
    return static_cast<int>(it - elems_.begin());
}

namespace {

PretreeElement image_element(const PretreeElement& e, const VertexPermutation& sigma) {
    PretreeElement im;
    im.kind = e.kind;
    for (int v : e.members)
        im.members.push_back(sigma(v));
    std::sort(im.members.begin(), im.members.end());
    for (auto [u, v] : e.edge_span)
        im.edge_span.push_back(std::minmax(sigma(u), sigma(v)));
    std::sort(im.edge_span.begin(), im.edge_span.end());
    return im;
}

std::vector<int> node_images(const Graph& g, const VertexPermutation& sigma,
                             const std::vector<PretreeElement>& nodes) {
    if (!is_automorphism(g, sigma))
        throw input_error("permutation " + cycle_notation(sigma) +
                          " is not an automorphism of the graph");
    const int m = static_cast<int>(nodes.size());
    std::vector<int> perm(m, -1);
    std::vector<char> taken(m, 0);
    for (int i = 0; i < m; ++i) {
        PretreeElement im = image_element(nodes[i], sigma);
        int at = -1;
        for (int j = 0; j < m; ++j)
            if (nodes[j] == im) {
                at = j;
                break;
            }
        if (at < 0)
            throw model_error("image of " + element_label(nodes[i]) + " under " +
                              cycle_notation(sigma) + " is not an element");
        if (taken[at])
            throw model_error("two elements collide at " + element_label(nodes[at]) +
                              " under " + cycle_notation(sigma));
        taken[at] = 1;
        perm[i] = at;
    }
    return perm;
}

} // namespace

std::vector<int> induced_action(const Graph& g, const VertexPermutation& sigma,
                                const Pretree& p) {
    std::vector<int> perm = node_images(g, sigma, p.elements());
    const int m = p.size();
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                if (p.between(x, y, z) != p.between(perm[x], perm[y], perm[z]))
                    throw model_error("betweenness not preserved by " + cycle_notation(sigma) +
                                      " at (" + element_label(p.element(x)) + ", " +
                                      element_label(p.element(y)) + ", " +
                                      element_label(p.element(z)) + ")");
    return perm;
}

std::vector<int> induced_action(const Graph& g, const VertexPermutation& sigma,
                                const DecompositionTree& t) {
    std::vector<int> perm = node_images(g, sigma, t.nodes);
    std::set<std::pair<int, int>> edge_set(t.edges.begin(), t.edges.end());
    for (auto [a, b] : t.edges)
        if (!edge_set.count(std::minmax(perm[a], perm[b])))
            throw model_error("tree adjacency not preserved by " + cycle_notation(sigma) +
                              " at edge (" + element_label(t.nodes[a]) + ", " +
                              element_label(t.nodes[b]) + ")");
    return perm;
}

OrbitData orbits_and_stabilizers(const Graph& g, const SymmetryGroup& h,
                                 const DecompositionTree& t) {
    OrbitData od;
    const int m = static_cast<int>(t.nodes.size());
    for (const auto& sigma : h.elements())
        od.node_action.push_back(induced_action(g, sigma, t));

    od.orbit_of_node.assign(m, -1);
    for (int v = 0; v < m; ++v) {
        if (od.orbit_of_node[v] >= 0)
            continue;
        int oi = static_cast<int>(od.node_orbits.size());
        std::set<int> orbit;
        for (const auto& act : od.node_action)
            orbit.insert(act[v]);
        for (int w : orbit)
            od.orbit_of_node[w] = oi;
        od.node_orbits.emplace_back(orbit.begin(), orbit.end());
        od.node_rep.push_back(*orbit.begin());
        std::vector<int> stab;
        for (int k = 0; k < h.order(); ++k)
            if (od.node_action[k][od.node_rep[oi]] == od.node_rep[oi])
                stab.push_back(k);
        od.node_stabilizer.push_back(std::move(stab));
    }

    std::set<std::pair<int, int>> seen_edges;
    for (auto [a, b] : t.edges) {
        if (seen_edges.count({a, b}))
            continue;
        std::set<std::pair<int, int>> orbit;
        for (const auto& act : od.node_action)
            orbit.insert(std::minmax(act[a], act[b]));
        for (auto e : orbit)
            seen_edges.insert(e);
        od.edge_orbits.emplace_back(orbit.begin(), orbit.end());
        auto rep = *orbit.begin();
        od.edge_rep.push_back(rep);
        std::vector<int> stab;
        for (int k = 0; k < h.order(); ++k)
            if (od.node_action[k][rep.first] == rep.first &&
                od.node_action[k][rep.second] == rep.second)
                stab.push_back(k);
        od.edge_stabilizer.push_back(std::move(stab));
    }
    return od;
}

namespace {

std::string subgroup_name(const SymmetryGroup& h, const std::vector<int>& idx) {
    if (idx.size() <= 1)
        return "1";
    std::string s = "<";
    bool first = true;
    for (int k : idx) {
        const auto& p = h.elements()[k];
        if (p.is_identity())
            continue;
        if (!first)
            s += ',';
        s += cycle_notation(p);
        first = false;
    }
    return s + ">";
}

} // namespace

GraphOfGroups quotient_graph_of_groups(const Graph& g, const SymmetryGroup& h,
                                       const DecompositionTree& t) {
    OrbitData od = orbits_and_stabilizers(g, h, t);
    GraphOfGroups q;

    auto payload_of = [&](const std::vector<int>& idx) {
        std::vector<std::vector<int>> arrays;
        for (int k : idx)
            arrays.push_back(h.elements()[k].img);
        return arrays;
    };

    std::vector<std::string> orbit_id(od.node_orbits.size());
    for (size_t i = 0; i < od.node_orbits.size(); ++i) {
        orbit_id[i] = element_label(t.nodes[od.node_rep[i]]);
        std::string label = subgroup_name(h, od.node_stabilizer[i]);
        q.vertices.push_back({orbit_id[i], label});
        q.payloads[label] = payload_of(od.node_stabilizer[i]);
    }

    // an element carrying a tree node onto its orbit representative
    auto carrier = [&](int node) {
        int rep = od.node_rep[od.orbit_of_node[node]];
        for (int k = 0; k < h.order(); ++k)
            if (od.node_action[k][node] == rep)
                return k;
        throw model_error("no group element carries " + element_label(t.nodes[node]) +
                          " to its orbit representative");
    };

    for (size_t j = 0; j < od.edge_rep.size(); ++j) {
        auto [a, b] = od.edge_rep[j];
        std::string label = subgroup_name(h, od.edge_stabilizer[j]);
        q.payloads[label] = payload_of(od.edge_stabilizer[j]);
        q.edges.push_back({orbit_id[od.orbit_of_node[a]], orbit_id[od.orbit_of_node[b]], label});

        // conjugate the edge stabilizer onto each endpoint representative and
        // check it lands inside the endpoint stabilizer
        for (int end : {a, b}) {
            int rep = od.node_rep[od.orbit_of_node[end]];
            const auto& c = h.elements()[carrier(end)];
            for (int s : od.edge_stabilizer[j]) {
                VertexPermutation conj = c.inverse().then(h.elements()[s]).then(c);
                int ci = h.index_of(conj);
                if (ci < 0)
                    throw model_error("conjugate of a stabilizer element left the group");
                if (od.node_action[ci][rep] != rep)
                    throw model_error(
                        "edge stabilizer does not embed in the vertex stabilizer at " +
                        element_label(t.nodes[rep]));
            }
            q.containments.emplace_back(label,
                                        q.vertices[od.orbit_of_node[end]].label);
        }
    }

    std::sort(q.containments.begin(), q.containments.end());
    q.containments.erase(std::unique(q.containments.begin(), q.containments.end()),
                         q.containments.end());
    q.validate();
    return q;
}

NonNestingReport check_nonnesting(const Graph& g, const SymmetryGroup& h,
                                  const DecompositionTree& t) {
    NonNestingReport rep;
    const int m = static_cast<int>(t.nodes.size());
    rep.elements_checked = h.order();
    if (m == 0)
        return rep;
    if (!t.is_tree)
        throw input_error("interval nesting is defined on trees only");

    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // interval[x][y]: sorted nodes on the tree path from x to y
    std::vector<std::vector<std::vector<int>>> interval(m, std::vector<std::vector<int>>(m));
    for (int x = 0; x < m; ++x) {
        std::vector<int> parent(m, -2);
        parent[x] = -1;
        std::vector<int> queue = {x};
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : adj[queue[qi]])
                if (parent[w] == -2) {
                    parent[w] = queue[qi];
                    queue.push_back(w);
                }
        for (int y = 0; y < m; ++y) {
            std::vector<int> path;
            for (int at = y; at != -1; at = parent[at])
                path.push_back(at);
            std::sort(path.begin(), path.end());
            interval[x][y] = std::move(path);
        }
    }

    for (int k = 0; k < h.order(); ++k) {
        auto act = induced_action(g, h.elements()[k], t);
        for (int x = 0; x < m; ++x)
            for (int y = x; y < m; ++y) {
                ++rep.intervals_checked;
                const auto& before = interval[x][y];
                const auto& after = interval[act[x]][act[y]];
                if (after.size() < before.size() &&
                    std::includes(before.begin(), before.end(), after.begin(), after.end()))
                    rep.violations.push_back(
                        cycle_notation(h.elements()[k]) + " maps [" +
                        element_label(t.nodes[x]) + ", " + element_label(t.nodes[y]) +
                        "] strictly inside itself");
            }
    }
    return rep;
}

} // namespace dendrite
