#include "dendrite/cutpoint.hpp"

#include <algorithm>
#include <string>

#include "dendrite/error.hpp"

namespace dendrite {

Subdivision subdivide(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.size());
    for (int i = 0; i < g.size(); ++i) {
        auto [u, v] = g.edges()[i];
        edges.emplace_back(u, n + i);
        edges.emplace_back(v, n + i);
    }
    return {Graph(n + g.size(), edges), n};
}

namespace {

// pretree elements plus their footprints in the subdivision
struct Analysis {
    Subdivision sub;
    std::vector<PretreeElement> elems;
    std::vector<std::vector<int>> spans; // sorted subdivision vertex sets
};

Analysis analyze(const Graph& g) {
    Analysis a{subdivide(g), {}, {}};
    const int n = g.order();

    if (n <= 2) {
        // no cut points possible; everything is one class
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i)
            all[i] = i;
        a.elems.push_back({ElementKind::InseparableClass, all, {}});
        a.spans.push_back(all);
        return a;
    }

    const Graph& star = a.sub.graph;
    std::vector<int> star_cuts = cut_points(star);
    std::vector<char> is_star_cut(star.order(), 0);
    for (int c : star_cuts)
        is_star_cut[c] = 1;

    // non-separation relation on the subdivision's non-cut vertices
    std::vector<std::vector<int>> cut_comps;
    cut_comps.reserve(star_cuts.size());
    for (int c : star_cuts)
        cut_comps.push_back(component_labels(star, {c}));

    std::vector<int> free_verts;
    for (int v = 0; v < star.order(); ++v)
        if (!is_star_cut[v])
            free_verts.push_back(v);

    auto equivalent = [&](int u, int v) {
        for (size_t i = 0; i < star_cuts.size(); ++i) {
            int c = star_cuts[i];
            if (c == u || c == v)
                continue;
            if (cut_comps[i][u] != cut_comps[i][v])
                return false;
        }
        return true;
    };

    const int f = static_cast<int>(free_verts.size());
    std::vector<std::vector<char>> eq(f, std::vector<char>(f, 0));
    for (int i = 0; i < f; ++i)
        for (int j = i; j < f; ++j)
            eq[i][j] = eq[j][i] = (i == j) || equivalent(free_verts[i], free_verts[j]);

    // the relation must be an equivalence before we may speak of classes
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j)
            for (int k = 0; k < f; ++k)
                if (eq[i][j] && eq[j][k] && !eq[i][k])
                    throw model_error(
                        "non-separation relation is not transitive: vertices " +
                        std::to_string(free_verts[i]) + ", " + std::to_string(free_verts[j]) +
                        ", " + std::to_string(free_verts[k]) + " in the subdivision");

    for (int c = 0; c < n; ++c)
        if (is_cut_point(g, c)) {
            a.elems.push_back({ElementKind::CutPoint, {c}, {}});
            a.spans.push_back({c});
        }

    std::vector<char> used(f, 0);
    for (int i = 0; i < f; ++i) {
        if (used[i])
            continue;
        std::vector<int> span, members;
        std::vector<std::pair<int, int>> edge_span;
        for (int j = i; j < f; ++j)
            if (eq[i][j]) {
                used[j] = 1;
                span.push_back(free_verts[j]);
                if (free_verts[j] < n)
                    members.push_back(free_verts[j]);
                else
                    edge_span.push_back(g.edges()[free_verts[j] - n]);
            }
        std::sort(edge_span.begin(), edge_span.end());
        a.elems.push_back({ElementKind::InseparableClass, members, {}, edge_span});
        a.spans.push_back(std::move(span));
    }
    return a;
}

Pretree pretree_of(const Analysis& a) {
    const int m = static_cast<int>(a.elems.size());
    std::vector<std::vector<int>> comps(m);
    for (int z = 0; z < m; ++z)
        comps[z] = component_labels(a.sub.graph, a.spans[z]);

    // components of the z-removed subdivision met by each element's span
    std::vector<std::vector<std::vector<int>>> hit(m, std::vector<std::vector<int>>(m));
    for (int z = 0; z < m; ++z)
        for (int x = 0; x < m; ++x) {
            if (x == z)
                continue;
            std::vector<int> ids;
            for (int v : a.spans[x])
                ids.push_back(comps[z][v]);
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            hit[z][x] = std::move(ids);
        }

    auto between_fn = [hit = std::move(hit)](int x, int y, int z) {
        if (x == y || x == z || y == z)
            return false;
        const auto& hx = hit[z][x];
        const auto& hy = hit[z][y];
        if (hx.empty() || hy.empty())
            return false;
        std::vector<int> common;
        std::set_intersection(hx.begin(), hx.end(), hy.begin(), hy.end(),
                              std::back_inserter(common));
        return common.empty();
    };
    return Pretree(a.elems, between_fn);
}

} // namespace

Pretree inseparable_classes(const Graph& g) {
    return pretree_of(analyze(g));
}

DecompositionTree build_cutpoint_tree(const Graph& g, bool trim) {
    Pretree p = inseparable_classes(g);
    if (!trim)
        return tree_from_pretree(p);

    std::vector<int> keep;
    for (int i = 0; i < p.size(); ++i)
        if (!p.terminal(i))
            keep.push_back(i);
    std::vector<PretreeElement> elems;
    for (int i : keep)
        elems.push_back(p.element(i));
    Pretree trimmed(elems, [&](int x, int y, int z) {
        return p.between(keep[x], keep[y], keep[z]);
    });
    return tree_from_pretree(trimmed);
}

ValidationReport adjacency_structure_report(const Graph& g) {
    Analysis a = analyze(g);
    Pretree p = pretree_of(a);
    ValidationReport rep;

    auto is_bridge = [&](int c, int d) {
        if (!g.has_edge(c, d))
            return false;
        // does c still reach d without the edge?
        std::vector<char> seen(g.order(), 0);
        std::vector<int> stack = {c};
        seen[c] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if ((u == c && w == d) || (u == d && w == c))
                    continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return !seen[d];
    };

    auto in_closure = [&](int c, int cls) {
        // c belongs to the closure of a class when one of its edges leads
        // into the class: endpoint among the members, or midpoint in the span
        const auto& members = p.element(cls).members;
        const auto& span = a.spans[cls];
        for (int i = 0; i < g.size(); ++i) {
            auto [u, v] = g.edges()[i];
            if (u != c && v != c)
                continue;
            int other = (u == c) ? v : u;
            if (std::binary_search(members.begin(), members.end(), other))
                return true;
            if (std::binary_search(span.begin(), span.end(), g.order() + i))
                return true;
        }
        return false;
    };

    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y) {
            if (!p.adjacent(x, y))
                continue;
            bool xc = p.element(x).kind == ElementKind::CutPoint;
            bool yc = p.element(y).kind == ElementKind::CutPoint;
            if (!xc && !yc) {
                rep.ok = false;
                rep.violations.push_back({"adjacent classes with no cut point between", {x, y}});
            } else if (xc && yc) {
                if (!is_bridge(p.element(x).members[0], p.element(y).members[0])) {
                    rep.ok = false;
                    rep.violations.push_back({"adjacent cut points not joined by a bridge", {x, y}});
                }
            } else {
                int c = xc ? x : y, cls = xc ? y : x;
                if (!in_closure(p.element(c).members[0], cls)) {
                    rep.ok = false;
                    rep.violations.push_back(
                        {"adjacent cut point outside the class closure", {x, y}});
                }
            }
        }
    return rep;
}

} // namespace dendrite
