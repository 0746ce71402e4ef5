#include "dendrite/jsj.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "dendrite/error.hpp"

namespace dendrite {

namespace {

void require_two_connected(const Graph& g) {
    if (!is_two_connected(g))
        throw input_error("2-connected graph required here; decompose at cut points first");
}

std::vector<int> checked_vertex_set(const Graph& g, std::vector<int> s, size_t min_size) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw input_error("vertex out of range: " + std::to_string(v));
    if (s.size() < min_size)
        throw input_error("vertex set too small (need at least " + std::to_string(min_size) +
                          " distinct vertices)");
    return s;
}

// Demand-driven cyclicity: every component of G-S must hang between exactly
// two points of S, one component per slot at most, and the attachment pairs
// together with the S-S edges must form one cycle visiting all of S.
std::optional<CyclicDecomposition> cyclic_of(const Graph& g, const std::vector<int>& s) {
    const int k = static_cast<int>(s.size());

    if (k == 2) {
        // degenerate: a cut pair splits the rest into two sides
        int a = s[0], b = s[1];
        auto comps = components_after_removal(g, s);
        if (comps.size() < 2)
            return std::nullopt;
        CyclicDecomposition d;
        d.points = {a, b};
        std::vector<int> side1 = {a, b}, side2 = {a, b};
        side1.insert(side1.end(), comps[0].begin(), comps[0].end());
        for (size_t i = 1; i < comps.size(); ++i)
            side2.insert(side2.end(), comps[i].begin(), comps[i].end());
        std::sort(side1.begin(), side1.end());
        std::sort(side2.begin(), side2.end());
        d.parts = {side1, side2};
        return d;
    }

    std::vector<char> in_s(g.order(), 0);
    for (int v : s)
        in_s[v] = 1;

    auto comps = components_after_removal(g, s);
    std::map<std::pair<int, int>, int> slot_comp; // attachment pair -> component index
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        std::set<int> bd;
        for (int v : comps[ci])
            for (int w : g.neighbors(v))
                if (in_s[w])
                    bd.insert(w);
        if (bd.size() != 2)
            return std::nullopt;
        auto key = std::make_pair(*bd.begin(), *bd.rbegin());
        if (slot_comp.count(key))
            return std::nullopt; // two hanging pieces in one slot
        slot_comp[key] = static_cast<int>(ci);
    }

    std::set<std::pair<int, int>> demand;
    for (auto& [key, ci] : slot_comp)
        demand.insert(key);
    for (auto [u, v] : g.edges())
        if (in_s[u] && in_s[v])
            demand.insert({u, v});

    std::map<int, std::vector<int>> nb;
    for (auto [u, v] : demand) {
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    for (int v : s)
        if (static_cast<int>(nb[v].size()) != 2)
            return std::nullopt;    // every demanded adjacency must be exactly two
    if (static_cast<int>(demand.size()) != k)
        return std::nullopt;

    // walk the cycle canonically: least point first, lesser neighbor second
    std::vector<int> cycle = {s[0]};
    int prev = s[0], cur = std::min(nb[s[0]][0], nb[s[0]][1]);
    while (cur != s[0]) {
        cycle.push_back(cur);
        int next = (nb[cur][0] == prev) ? nb[cur][1] : nb[cur][0];
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(cycle.size()) != k)
        return std::nullopt; // demands split into several cycles

    CyclicDecomposition d;
    d.points = cycle;
    for (int i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        std::vector<int> part = {a, b};
        auto it = slot_comp.find(std::minmax(a, b));
        if (it != slot_comp.end())
            part.insert(part.end(), comps[it->second].begin(), comps[it->second].end());
        std::sort(part.begin(), part.end());
        d.parts.push_back(std::move(part));
    }
    return d;
}

std::vector<int> mask_vertices(std::uint32_t m, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (m >> v & 1u)
            out.push_back(v);
    return out;
}

} // namespace

bool is_inseparable_set(const Graph& g, const std::vector<int>& a) {
    require_two_connected(g);
    auto set = checked_vertex_set(g, a, 2);
    for (auto [c, d] : cut_pairs(g)) {
        auto label = component_labels(g, {c, d});
        int seen = -1;
        for (int v : set) {
            if (v == c || v == d)
                continue;
            if (seen == -1)
                seen = label[v];
            else if (label[v] != seen)
                return false;
        }
    }
    return true;
}

std::optional<CyclicDecomposition> cyclic_decomposition(const Graph& g,
                                                        const std::vector<int>& s) {
    require_two_connected(g);
    return cyclic_of(g, checked_vertex_set(g, s, 2));
}

std::vector<int> cyclic_order(const Graph& g, const std::vector<int>& necklace) {
    require_two_connected(g);
    auto set = checked_vertex_set(g, necklace, 3);
    auto d = cyclic_of(g, set);
    if (!d)
        throw input_error("vertex set is not cyclic, so it has no cyclic order");
    return d->points;
}

std::vector<Gap> necklace_gaps(const Graph& g, const std::vector<int>& necklace) {
    require_two_connected(g);
    auto set = checked_vertex_set(g, necklace, 3);
    if (!cyclic_of(g, set))
        throw input_error("vertex set is not cyclic, so it has no gaps");
    std::vector<char> in_s(g.order(), 0);
    for (int v : set)
        in_s[v] = 1;
    std::vector<Gap> gaps;
    for (auto& comp : components_after_removal(g, set)) {
        std::set<int> bd;
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (in_s[w])
                    bd.insert(w);
        gaps.push_back({comp, std::vector<int>(bd.begin(), bd.end())});
    }
    return gaps;
}

Pretree jsj_elements(const Graph& g) {
    require_two_connected(g);
    const int n = g.order();
    if (n > 20)
        throw input_error("element search is exhaustive over vertex subsets; "
                          "20 vertices is the supported ceiling");

    const auto pairs = cut_pairs(g);
    std::vector<std::vector<int>> pair_labels;
    pair_labels.reserve(pairs.size());
    for (auto [c, d] : pairs)
        pair_labels.push_back(component_labels(g, {c, d}));

    auto inseparable = [&](std::uint32_t m) {
        for (size_t i = 0; i < pairs.size(); ++i) {
            std::uint32_t rest = m & ~((1u << pairs[i].first) | (1u << pairs[i].second));
            int seen = -1;
            for (int v = 0; v < n; ++v)
                if (rest >> v & 1u) {
                    int l = pair_labels[i][v];
                    if (seen == -1)
                        seen = l;
                    else if (l != seen)
                        return false;
                }
        }
        return true;
    };

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    std::vector<std::uint32_t> cyclic_masks, insep_masks;
    std::vector<std::vector<int>> cyclic_orders;
    for (std::uint32_t m = 1; m <= full; ++m) {
        int pc = std::popcount(m);
        if (pc >= 3) {
            if (auto d = cyclic_of(g, mask_vertices(m, n))) {
                cyclic_masks.push_back(m);
                cyclic_orders.push_back(d->points);
            }
        }
        if (pc >= 2 && inseparable(m))
            insep_masks.push_back(m);
    }

    auto is_maximal = [](std::uint32_t m, const std::vector<std::uint32_t>& all) {
        for (std::uint32_t o : all)
            if (o != m && (m & ~o) == 0)
                return false;
        return true;
    };

    std::vector<PretreeElement> elems;
    std::set<std::vector<int>> taken;
    auto add = [&](PretreeElement e) {
        if (taken.insert(e.members).second)
            elems.push_back(std::move(e));
    };

    for (size_t i = 0; i < cyclic_masks.size(); ++i) {
        if (!is_maximal(cyclic_masks[i], cyclic_masks))
            continue;
        PretreeElement e{ElementKind::Necklace, mask_vertices(cyclic_masks[i], n),
                         cyclic_orders[i], {}};
        if (cyclic_masks[i] == full) {
            // the whole graph is a circle; the circle is the only element
            elems = {std::move(e)};
            taken.clear();
            return Pretree(elems, [](int, int, int) { return false; });
        }
        add(std::move(e));
    }
    for (auto [c, d] : pairs)
        if (inseparable((1u << c) | (1u << d)))
            add({ElementKind::InseparablePair, {c, d}, {}, {}});
    for (std::uint32_t m : insep_masks)
        if (is_maximal(m, insep_masks))
            add({ElementKind::MaxInseparable, mask_vertices(m, n), {}, {}});

    std::sort(elems.begin(), elems.end(),
              [](const PretreeElement& a, const PretreeElement& b) {
                  return a.members < b.members;
              });

    // Assembly by incidence. Separation picked the elements; the gluing is
    // containment: a pair element hangs between every element containing it,
    // and a pair-free element hangs inside the elements containing it. An
    // element that carries a cut pair of its own reaches its neighbors through
    // that pair instead of a direct containment edge (two triangles stacked on
    // overlapping pairs would otherwise close a cycle: no single pair can
    // order a middle piece against its own boundary pairs, since their
    // realizations nest).
    const int m = static_cast<int>(elems.size());
    std::vector<char> is_pair_elem(m, 0), has_pair(m, 0);
    for (int e = 0; e < m; ++e) {
        is_pair_elem[e] = elems[e].kind == ElementKind::InseparablePair;
        for (auto [c, d] : pairs) {
            const auto& mem = elems[e].members;
            if (std::binary_search(mem.begin(), mem.end(), c) &&
                std::binary_search(mem.begin(), mem.end(), d)) {
                has_pair[e] = 1;
                break;
            }
        }
    }
    auto strict_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::set<std::pair<int, int>> tset;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (x == y || !strict_subset(elems[x].members, elems[y].members))
                continue;
            if (is_pair_elem[x] || !has_pair[x])
                tset.insert({std::min(x, y), std::max(x, y)});
        }

    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : tset) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> order = {0};
    std::vector<char> seen(m, 0);
    seen[0] = 1;
    for (size_t q = 0; q < order.size(); ++q)
        for (int w : adj[order[q]])
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
    if (static_cast<int>(order.size()) != m || tset.size() + 1 != static_cast<size_t>(m))
        throw model_error("JSJ elements do not assemble into a tree (" +
                          std::to_string(m) + " elements, " + std::to_string(tset.size()) +
                          " incidences)");

    // betweenness = strict interiors of tree paths
    std::vector<std::vector<int>> par(m, std::vector<int>(m, -2));
    for (int r = 0; r < m; ++r) {
        par[r][r] = -1;
        std::vector<int> queue = {r};
        for (size_t q = 0; q < queue.size(); ++q)
            for (int w : adj[queue[q]])
                if (par[r][w] == -2) {
                    par[r][w] = queue[q];
                    queue.push_back(w);
                }
    }
    auto between_fn = [par](int x, int y, int z) {
        if (x == y || z == x || z == y)
            return false;
        for (int v = par[x][y]; v != x && v >= 0; v = par[x][v])
            if (v == z)
                return true;
        return false;
    };

    Pretree p(elems, between_fn);
    auto rep = p.validate();
    if (!rep.ok)
        throw model_error("JSJ betweenness violates the pretree axioms: " + rep.summary());
    return p;
}

DecompositionTree jsj_tree(const Graph& g, bool trim) {
    Pretree p = jsj_elements(g);
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

} // namespace dendrite
