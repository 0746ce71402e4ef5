#include "dendrite/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "dendrite/cutpoint.hpp"
#include "dendrite/error.hpp"
#include "dendrite/jsj.hpp"

namespace dendrite {

namespace {

std::pair<int, int> norm(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string clip(std::string s) {
    if (s.size() > 300) {
        s.resize(297);
        s += "...";
    }
    return s;
}

// kind + members + edge span; unique per node, unlike the display label which
// hides the span of a member-bearing class
std::string node_key(const PretreeElement& e) {
    std::ostringstream os;
    os << kind_name(e.kind) << '|';
    for (int v : e.members)
        os << v << ',';
    os << '|';
    for (auto [u, v] : e.edge_span)
        os << u << '-' << v << ',';
    return os.str();
}

bool tree_connected(int nodes, const std::vector<std::pair<int, int>>& edges) {
    if (nodes == 0)
        return false;
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(nodes, 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    for (size_t q = 0; q < queue.size(); ++q)
        for (int w : adj[queue[q]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

DecompositionTree expected_from(const Graph& g, const BlockCutData& bc) {
    DecompositionTree t;
    const int n = g.order();
    if (n <= 2) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        t.nodes.push_back({ElementKind::InseparableClass, all, {}, {}});
        t.is_tree = true;
        return t;
    }

    std::vector<char> cut(n, 0);
    std::map<int, int> cutnode;
    for (int c : bc.cut_vertices) {
        cut[c] = 1;
        cutnode[c] = static_cast<int>(t.nodes.size());
        t.nodes.push_back({ElementKind::CutPoint, {c}, {}, {}});
    }

    std::set<std::pair<int, int>> eset;
    struct ClassDraft {
        PretreeElement elem;
        std::vector<int> cuts;
    };
    std::vector<ClassDraft> classes;
    for (size_t b = 0; b < bc.blocks.size(); ++b) {
        const auto& block = bc.blocks[b];
        std::vector<int> mem, bcuts;
        for (int v : block)
            (cut[v] ? bcuts : mem).push_back(v);
        if (block.size() == 2 && mem.empty()) {
            // a bridge between two cut vertices contributes no class node,
            // just the direct cut-cut adjacency
            eset.insert(norm(cutnode[bcuts[0]], cutnode[bcuts[1]]));
            continue;
        }
        PretreeElement e{ElementKind::InseparableClass, mem, {}, {}};
        if (block.size() >= 3)
            e.edge_span = bc.block_edges[b]; // a lone edge has no interior span
        classes.push_back({std::move(e), std::move(bcuts)});
    }
    std::sort(classes.begin(), classes.end(), [](const ClassDraft& a, const ClassDraft& b) {
        return std::tie(a.elem.members, a.elem.edge_span) <
               std::tie(b.elem.members, b.elem.edge_span);
    });
    for (auto& cd : classes) {
        int idx = static_cast<int>(t.nodes.size());
        t.nodes.push_back(cd.elem);
        for (int c : cd.cuts)
            eset.insert(norm(cutnode[c], idx));
    }

    t.edges.assign(eset.begin(), eset.end());
    t.is_tree = t.edges.size() + 1 == t.nodes.size() &&
                tree_connected(static_cast<int>(t.nodes.size()), t.edges);
    return t;
}

// does the tree reproduce the pretree's betweenness as strict path interiors?
bool tree_matches_pretree(const DecompositionTree& t, const Pretree& p, std::string* why) {
    const int m = p.size();
    if (static_cast<int>(t.nodes.size()) != m) {
        *why = "node count differs from element count";
        return false;
    }
    for (int i = 0; i < m; ++i)
        if (!(t.nodes[i] == p.element(i))) {
            *why = "node order differs from element order";
            return false;
        }
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int x = 0; x < m; ++x) {
        std::vector<int> parent(m, -2);
        parent[x] = -1;
        std::vector<int> queue = {x};
        for (size_t q = 0; q < queue.size(); ++q)
            for (int w : adj[queue[q]])
                if (parent[w] == -2) {
                    parent[w] = queue[q];
                    queue.push_back(w);
                }
        for (int y = 0; y < m; ++y) {
            if (y == x)
                continue;
            std::vector<char> onpath(m, 0);
            for (int v = y; v != -1; v = parent[v])
                onpath[v] = 1;
            for (int z = 0; z < m; ++z) {
                bool interior = onpath[z] && z != x && z != y;
                if (interior != p.between(x, y, z)) {
                    std::ostringstream os;
                    os << "path and betweenness disagree at (" << x << "," << y << "," << z
                       << ")";
                    *why = os.str();
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

BlockCutData blocks_and_cuts(const Graph& g) {
    const int n = g.order();
    BlockCutData out;
    if (n == 1) {
        out.blocks.push_back({0});
        out.block_edges.emplace_back();
        return out;
    }

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> raw_blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (v == parent)
                continue;
            if (disc[v] == -1) {
                ++children;
                estack.push_back({u, v});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1 || children > 1)
                        is_cut[u] = 1;
                    std::vector<std::pair<int, int>> be;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        be.push_back(norm(e.first, e.second));
                        if (e.first == u && e.second == v)
                            break;
                    }
                    raw_blocks.push_back(std::move(be));
                }
            } else if (disc[v] < disc[u]) {
                estack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(0, -1);

    struct BlockDraft {
        std::vector<int> verts;
        std::vector<std::pair<int, int>> edges;
    };
    std::vector<BlockDraft> drafts;
    for (auto& be : raw_blocks) {
        std::set<int> vs;
        for (auto [a, b] : be) {
            vs.insert(a);
            vs.insert(b);
        }
        std::sort(be.begin(), be.end());
        drafts.push_back({std::vector<int>(vs.begin(), vs.end()), std::move(be)});
    }
    std::sort(drafts.begin(), drafts.end(), [](const BlockDraft& a, const BlockDraft& b) {
        return std::tie(a.verts, a.edges) < std::tie(b.verts, b.edges);
    });
    for (auto& d : drafts) {
        out.blocks.push_back(std::move(d.verts));
        out.block_edges.push_back(std::move(d.edges));
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v])
            out.cut_vertices.push_back(v);
    return out;
}

DecompositionTree expected_cutpoint_tree(const Graph& g) {
    return expected_from(g, blocks_and_cuts(g));
}

bool trees_equal_labeled(const DecompositionTree& a, const DecompositionTree& b) {
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size())
        return false;
    auto key_map = [](const DecompositionTree& t) {
        std::map<std::string, int> m;
        for (size_t i = 0; i < t.nodes.size(); ++i)
            if (!m.insert({node_key(t.nodes[i]), static_cast<int>(i)}).second)
                throw model_error("decomposition tree repeats a node: " +
                                  element_label(t.nodes[i]));
        return m;
    };
    auto ka = key_map(a), kb = key_map(b);
    auto it = ka.begin(), jt = kb.begin();
    for (; it != ka.end(); ++it, ++jt)
        if (it->first != jt->first)
            return false;

    auto edge_keys = [](const DecompositionTree& t) {
        std::set<std::pair<std::string, std::string>> out;
        for (auto [x, y] : t.edges) {
            auto kx = node_key(t.nodes[x]), ky = node_key(t.nodes[y]);
            out.insert({std::min(kx, ky), std::max(kx, ky)});
        }
        return out;
    };
    return edge_keys(a) == edge_keys(b);
}

std::vector<VertexPermutation> graph_automorphisms(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges())
        adj[u][v] = adj[v][u] = 1;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);

    std::vector<VertexPermutation> out;
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> extend = [&](int v) {
        if (v == n) {
            out.push_back({img});
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || deg[w] != deg[v])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = adj[u][v] == adj[img[u]][w];
            if (!ok)
                continue;
            img[v] = w;
            used[w] = 1;
            extend(v + 1);
            used[w] = 0;
            img[v] = -1;
        }
    };
    extend(0);
    return out; // lexicographic by image array, identity first
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7)
        throw input_error("graph enumeration runs on 1..7 vertices only");
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            all.push_back({i, j});
    const int m = static_cast<int>(all.size());
    const std::uint32_t vfull = (1u << n) - 1u;

    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::array<std::uint32_t, 8> nb{};
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u) {
                nb[all[e].first] |= 1u << all[e].second;
                nb[all[e].second] |= 1u << all[e].first;
            }
        std::uint32_t reach = 1, frontier = 1;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t fresh = nb[v] & ~reach;
            reach |= fresh;
            frontier |= fresh;
        }
        if (reach != vfull)
            continue;
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u)
                edges.push_back(all[e]);
        fn(Graph(n, std::move(edges)));
    }
}

std::uint64_t connected_graph_count(int n) {
    static const std::uint64_t counts[] = {0, 1, 1, 4, 38, 728, 26704, 1866256};
    if (n < 1 || n > 7)
        throw input_error("connected graph counts are tabulated for 1..7 vertices");
    return counts[n];
}

std::string graph_text(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << " edges=[";
    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (i)
            os << ",";
        os << "(" << g.edges()[i].first << "," << g.edges()[i].second << ")";
    }
    os << "]";
    return os.str();
}

bool ValidationSummary::ok() const {
    for (const auto& c : checks)
        if (c.failures)
            return false;
    return true;
}

std::uint64_t ValidationSummary::total_graphs() const {
    std::uint64_t t = 0;
    for (auto k : graphs_per_order)
        t += k;
    return t;
}

std::string ValidationSummary::text() const {
    std::ostringstream os;
    os << "exhaustive validation up to " << max_n << " vertices\n";
    os << "graphs:";
    for (size_t n = 1; n < graphs_per_order.size(); ++n)
        os << " n=" << n << ":" << graphs_per_order[n];
    os << " total:" << total_graphs() << "\n";
    for (const auto& c : checks) {
        os << "  " << std::left << std::setw(32) << c.name << " runs " << std::right
           << std::setw(9) << c.runs << "   failures " << c.failures << "\n";
    }
    for (const auto& c : checks)
        for (const auto& w : c.witnesses)
            os << "  ! " << c.name << ": " << w << "\n";
    os << (ok() ? "all checks passed" : "CHECKS FAILED");
    return os.str();
}

ValidationSummary exhaustive_validate(int max_n) {
    if (max_n < 1 || max_n > 7)
        throw input_error("exhaustive validation runs on 1..7 vertices only");

    ValidationSummary s;
    s.max_n = max_n;
    s.graphs_per_order.assign(max_n + 1, 0);

    auto counter = [](const char* name) {
        CheckCounter c;
        c.name = name;
        return c;
    };
    CheckCounter c_count = counter("enumeration count");
    CheckCounter c_ax = counter("pretree axioms");
    CheckCounter c_int = counter("interval monotonicity");
    CheckCounter c_nest = counter("nested interval chains");
    CheckCounter c_adj = counter("adjacency shapes");
    CheckCounter c_bc = counter("block-cut equivalence");
    CheckCounter c_cc = counter("cut-node count");
    CheckCounter c_tb = counter("tree-path betweenness");
    CheckCounter c_sep = counter("separation laws");
    CheckCounter c_pa = counter("cut-pair agreement");
    CheckCounter c_eqc = counter("equivariance (cut-point tree)");
    CheckCounter c_jx = counter("JSJ axioms");
    CheckCounter c_ji = counter("JSJ intersections");
    CheckCounter c_ns = counter("necklace subsets");
    CheckCounter c_jt = counter("JSJ tree");
    CheckCounter c_jm = counter("adjacent JSJ elements meet");
    CheckCounter c_eqj = counter("equivariance (JSJ tree)");

    auto fail = [](CheckCounter& c, const std::string& w) {
        ++c.failures;
        if (c.witnesses.size() < 12)
            c.witnesses.push_back(clip(w));
    };

    for (int n = 1; n <= max_n; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            ++s.graphs_per_order[n];
            auto gt = [&] { return graph_text(g); };

            // ---- cut-point construction ----
            std::optional<Pretree> popt;
            try {
                popt = inseparable_classes(g);
            } catch (const model_error& e) {
                ++c_ax.runs;
                fail(c_ax, gt() + " : " + e.what());
            }

            std::vector<VertexPermutation> autos = graph_automorphisms(g);

            if (popt) {
                const Pretree& p = *popt;
                {
                    auto rep = p.validate();
                    ++c_ax.runs;
                    ++c_int.runs;
                    ++c_nest.runs;
                    bool ax = false, iv = false, ne = false;
                    for (const auto& v : rep.violations) {
                        if (v.axiom.starts_with("interval monotonicity"))
                            iv = true;
                        else if (v.axiom.starts_with("nested union"))
                            ne = true;
                        else
                            ax = true;
                    }
                    if (ax)
                        fail(c_ax, gt() + " : " + rep.summary());
                    if (iv)
                        fail(c_int, gt() + " : " + rep.summary());
                    if (ne)
                        fail(c_nest, gt() + " : " + rep.summary());
                }
                {
                    ++c_adj.runs;
                    auto rep = adjacency_structure_report(g);
                    if (!rep.ok)
                        fail(c_adj, gt() + " : " + rep.summary());
                }

                DecompositionTree actual = tree_from_pretree(p);
                BlockCutData bc = blocks_and_cuts(g);
                {
                    ++c_bc.runs;
                    DecompositionTree expect = expected_from(g, bc);
                    if (!trees_equal_labeled(expect, actual))
                        fail(c_bc, gt());
                }
                {
                    ++c_cc.runs;
                    int ncut = 0;
                    for (const auto& e : actual.nodes)
                        if (e.kind == ElementKind::CutPoint)
                            ++ncut;
                    if (ncut != static_cast<int>(bc.cut_vertices.size()))
                        fail(c_cc, gt() + " : " + std::to_string(ncut) + " cut nodes vs " +
                                        std::to_string(bc.cut_vertices.size()) +
                                        " articulation vertices");
                }
                {
                    ++c_tb.runs;
                    if (!actual.is_tree)
                        fail(c_tb, gt() + " : decomposition is not a tree");
                    else {
                        std::string why;
                        if (!tree_matches_pretree(actual, p, &why))
                            fail(c_tb, gt() + " : " + why);
                    }
                }
                for (const auto& sig : autos) {
                    ++c_eqc.runs;
                    try {
                        induced_action(g, sig, p);
                    } catch (const model_error& e) {
                        fail(c_eqc, gt() + " sigma=" + cycle_notation(sig) + " : " + e.what());
                    }
                }
            }

            // ---- separation oracle laws ----
            {
                ++c_sep.runs;
                std::vector<std::vector<int>> lab(1u << n);
                for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                    std::vector<int> removed;
                    for (int v = 0; v < n; ++v)
                        if (mask >> v & 1u)
                            removed.push_back(v);
                    lab[mask] = component_labels(g, removed);
                }

                bool bad = false;
                std::string why;
                // symmetry through the public oracle, on small separators
                for (std::uint32_t mask = 0; mask < (1u << n) && !bad; ++mask) {
                    if (std::popcount(mask) > 2)
                        continue;
                    std::vector<int> sep;
                    for (int v = 0; v < n; ++v)
                        if (mask >> v & 1u)
                            sep.push_back(v);
                    for (int p2 = 0; p2 < n && !bad; ++p2)
                        for (int q2 = p2 + 1; q2 < n && !bad; ++q2) {
                            if ((mask >> p2 & 1u) || (mask >> q2 & 1u))
                                continue;
                            if (separates(g, sep, p2, q2) != separates(g, sep, q2, p2)) {
                                bad = true;
                                why = "separation is not symmetric";
                            }
                        }
                }
                // monotonicity: a separating set keeps separating when it grows
                for (std::uint32_t sup = 0; sup < (1u << n) && !bad; ++sup) {
                    for (std::uint32_t sub = (sup - 1) & sup;; sub = (sub - 1) & sup) {
                        for (int p2 = 0; p2 < n && !bad; ++p2)
                            for (int q2 = p2 + 1; q2 < n && !bad; ++q2) {
                                if ((sup >> p2 & 1u) || (sup >> q2 & 1u))
                                    continue;
                                if (lab[sub][p2] != lab[sub][q2] &&
                                    lab[sup][p2] == lab[sup][q2]) {
                                    bad = true;
                                    why = "separation lost under a superset";
                                }
                            }
                        if (sub == 0 || bad)
                            break;
                    }
                }
                if (bad)
                    fail(c_sep, gt() + " : " + why);

                // ---- 2-connected battery ----
                if (is_two_connected(g)) {
                    {
                        ++c_pa.runs;
                        bool agree = true;
                        for (int a = 0; a < n && agree; ++a)
                            for (int b = a + 1; b < n && agree; ++b) {
                                std::uint32_t mask = (1u << a) | (1u << b);
                                bool def = false;
                                for (int p2 = 0; p2 < n && !def; ++p2)
                                    for (int q2 = p2 + 1; q2 < n && !def; ++q2) {
                                        if (p2 == a || p2 == b || q2 == a || q2 == b)
                                            continue;
                                        def = lab[mask][p2] != lab[mask][q2];
                                    }
                                if (is_cut_pair(g, a, b) != def)
                                    agree = false;
                            }
                        if (!agree)
                            fail(c_pa, gt());
                    }

                    ++c_jx.runs;
                    std::optional<Pretree> jopt;
                    try {
                        jopt = jsj_elements(g);
                    } catch (const model_error& e) {
                        fail(c_jx, gt() + " : " + e.what());
                    }
                    if (jopt) {
                        const Pretree& jp = *jopt;
                        const auto cps = cut_pairs(g);
                        std::vector<std::vector<int>> cplab;
                        cplab.reserve(cps.size());
                        for (auto [a, b] : cps)
                            cplab.push_back(component_labels(g, {a, b}));
                        auto insep_set = [&](const std::vector<int>& verts) {
                            for (size_t i = 0; i < cps.size(); ++i) {
                                int seen = -1;
                                for (int v : verts) {
                                    if (v == cps[i].first || v == cps[i].second)
                                        continue;
                                    if (seen == -1)
                                        seen = cplab[i][v];
                                    else if (cplab[i][v] != seen)
                                        return false;
                                }
                            }
                            return true;
                        };

                        {
                            ++c_ji.runs;
                            bool good = true;
                            std::string why2;
                            for (int i = 0; i < jp.size() && good; ++i)
                                for (int j = i + 1; j < jp.size() && good; ++j) {
                                    std::vector<int> inter;
                                    std::set_intersection(
                                        jp.element(i).members.begin(),
                                        jp.element(i).members.end(),
                                        jp.element(j).members.begin(),
                                        jp.element(j).members.end(),
                                        std::back_inserter(inter));
                                    if (inter.size() > 2) {
                                        good = false;
                                        why2 = element_label(jp.element(i)) + " and " +
                                               element_label(jp.element(j)) +
                                               " share more than a pair";
                                    } else if (inter.size() == 2 && !insep_set(inter)) {
                                        good = false;
                                        why2 = element_label(jp.element(i)) + " and " +
                                               element_label(jp.element(j)) +
                                               " meet in a separable pair";
                                    }
                                }
                            if (!good)
                                fail(c_ji, gt() + " : " + why2);
                        }
                        {
                            ++c_ns.runs;
                            bool good = true;
                            std::string why2;
                            for (int i = 0; i < jp.size() && good; ++i) {
                                const auto& e = jp.element(i);
                                if (e.kind != ElementKind::Necklace)
                                    continue;
                                const int k = static_cast<int>(e.members.size());
                                for (std::uint32_t sm = 0; sm < (1u << k) && good; ++sm) {
                                    if (std::popcount(sm) < 2)
                                        continue;
                                    std::vector<int> sub;
                                    for (int b = 0; b < k; ++b)
                                        if (sm >> b & 1u)
                                            sub.push_back(e.members[b]);
                                    if (sub.size() == 2) {
                                        bool pairlike = is_cut_pair(g, sub[0], sub[1]);
                                        // a direct edge between consecutive beads
                                        // has nothing to hang between them
                                        if (!pairlike && !g.has_edge(sub[0], sub[1])) {
                                            good = false;
                                            why2 = "2-subset neither an edge nor a cut pair";
                                        }
                                        continue;
                                    }
                                    if (!cyclic_decomposition(g, sub)) {
                                        good = false;
                                        std::ostringstream os;
                                        os << "subset of " << element_label(e)
                                           << " is not cyclic: {";
                                        for (size_t z = 0; z < sub.size(); ++z)
                                            os << (z ? "," : "") << sub[z];
                                        os << "}";
                                        why2 = os.str();
                                    }
                                }
                            }
                            if (!good)
                                fail(c_ns, gt() + " : " + why2);
                        }
                        {
                            ++c_jt.runs;
                            DecompositionTree jt = tree_from_pretree(jp);
                            if (!jt.is_tree)
                                fail(c_jt, gt() + " : JSJ elements do not glue to a tree");
                            else {
                                ++c_jm.runs;
                                bool meet = true;
                                std::string why2;
                                for (auto [x, y] : jt.edges) {
                                    std::vector<int> inter;
                                    std::set_intersection(
                                        jt.nodes[x].members.begin(), jt.nodes[x].members.end(),
                                        jt.nodes[y].members.begin(), jt.nodes[y].members.end(),
                                        std::back_inserter(inter));
                                    if (inter.empty()) {
                                        meet = false;
                                        why2 = element_label(jt.nodes[x]) + " -- " +
                                               element_label(jt.nodes[y]);
                                        break;
                                    }
                                }
                                if (!meet)
                                    fail(c_jm, gt() + " : " + why2);
                            }
                        }
                        for (const auto& sig : autos) {
                            ++c_eqj.runs;
                            try {
                                induced_action(g, sig, jp);
                            } catch (const model_error& e) {
                                fail(c_eqj,
                                     gt() + " sigma=" + cycle_notation(sig) + " : " + e.what());
                            }
                        }
                    }
                }
            }
        });

        ++c_count.runs;
        if (s.graphs_per_order[n] != connected_graph_count(n))
            fail(c_count, "n=" + std::to_string(n) + ": enumerated " +
                              std::to_string(s.graphs_per_order[n]) + ", published count is " +
                              std::to_string(connected_graph_count(n)));
    }

    s.checks = {c_count, c_ax, c_int, c_nest, c_adj, c_bc, c_cc,  c_tb, c_sep,
                c_pa,    c_jx, c_ji,  c_ns,   c_jt,  c_jm, c_eqc, c_eqj};
    return s;
}

} // namespace dendrite
