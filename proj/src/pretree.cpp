#include "dendrite/pretree.hpp"

#include <algorithm>

#include "dendrite/error.hpp"

namespace dendrite {

std::string kind_name(ElementKind k) {
    switch (k) {
    case ElementKind::CutPoint: return "cut-point";
    case ElementKind::InseparableClass: return "inseparable-class";
    case ElementKind::Necklace: return "necklace";
    case ElementKind::InseparablePair: return "inseparable-pair";
    case ElementKind::MaxInseparable: return "rigid";
    }
    return "?";
}

static std::string join_ints(const std::vector<int>& v, char sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string element_label(const PretreeElement& e) {
    switch (e.kind) {
    case ElementKind::CutPoint:
        return "cut:" + join_ints(e.members, ',');
    case ElementKind::InseparableClass:
        if (e.members.empty()) {
            std::string s = "class:edges{";
            for (size_t i = 0; i < e.edge_span.size(); ++i) {
                if (i)
                    s += ',';
                s += std::to_string(e.edge_span[i].first) + '-' +
                     std::to_string(e.edge_span[i].second);
            }
            return s + "}";
        }
        return "class:{" + join_ints(e.members, ',') + "}";
    case ElementKind::Necklace:
        return "necklace:<" + join_ints(e.cycle.empty() ? e.members : e.cycle, ',') + ">";
    case ElementKind::InseparablePair:
        return "pair:{" + join_ints(e.members, ',') + "}";
    case ElementKind::MaxInseparable:
        return "rigid:{" + join_ints(e.members, ',') + "}";
    }
    return "?";
}

std::string ValidationReport::summary() const {
    if (ok)
        return "all pretree axioms hold";
    std::string s = std::to_string(violations.size()) + " axiom violation(s):";
    for (const auto& v : violations) {
        s += "\n  " + v.axiom + " at (" + join_ints(v.elems, ',') + ")";
    }
    return s;
}

Pretree::Pretree(std::vector<PretreeElement> elems,
                 const std::function<bool(int, int, int)>& between_callable)
    : elems_(std::move(elems)) {
    const int n = static_cast<int>(elems_.size());
    tab_.assign(n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                tab_[x][y][z] = between_callable(x, y, z) ? 1 : 0;
}

const PretreeElement& Pretree::element(int i) const {
    if (i < 0 || i >= size())
        throw input_error("pretree element index out of range");
    return elems_[i];
}

bool Pretree::between(int x, int y, int z) const {
    if (x < 0 || x >= size() || y < 0 || y >= size() || z < 0 || z >= size())
        throw input_error("pretree element index out of range");
    return tab_[x][y][z] != 0;
}

std::vector<int> Pretree::closed_interval(int x, int y) const {
    std::vector<int> iv = {x};
    for (int z = 0; z < size(); ++z)
        if (between(x, y, z))
            iv.push_back(z);
    if (y != x)
        iv.push_back(y);
    // rank each element by how much of the interval lies weakly on its x side
    auto rank = [&](int z) {
        int r = 0;
        for (int w : iv)
            if (w == x || w == z || between(x, z, w))
                ++r;
        return r;
    };
    std::stable_sort(iv.begin(), iv.end(),
                     [&](int a, int b) { return rank(a) < rank(b); });
    return iv;
}

bool Pretree::adjacent(int x, int y) const {
    if (x == y)
        return false;
    for (int z = 0; z < size(); ++z)
        if (between(x, y, z))
            return false;
    return true;
}

bool Pretree::terminal(int x) const {
    for (int y = 0; y < size(); ++y)
        for (int z = 0; z < size(); ++z)
            if (y != x && z != x && between(y, z, x))
                return false;
    return true;
}

ValidationReport Pretree::validate() const {
    ValidationReport rep;
    const int n = size();
    auto flag = [&](const char* axiom, std::initializer_list<int> w) {
        rep.ok = false;
        rep.violations.push_back({axiom, std::vector<int>(w)});
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (between(x, y, z) != between(y, x, z))
                    flag("symmetry: (x,y) != (y,x)", {x, y, z});
                if ((z == x || z == y) && between(x, y, z))
                    flag("endpoint inside own interval", {x, y, z});
                if (x == y && between(x, y, z))
                    flag("(x,x) must be empty", {x, y, z});
            }
            for (int z = 0; z < n; ++z) {
                if (!between(x, y, z))
                    continue;
                if (between(z, y, x))
                    flag("exchange: z in (x,y) yet x in (z,y)", {x, y, z});
                for (int w = 0; w < n; ++w)
                    if (between(x, z, w) && !between(x, y, w))
                        flag("transitivity: w in (x,z) but not (x,y)", {x, y, z, w});
            }
        }

    // interval structure: for y in [x,z] the interval [x,y] sits inside [x,z],
    // the family {[x,y] : y in [x,z]} is a chain under inclusion, and its
    // union (= its maximum, this being finite) gives back [x,z]
    auto as_set = [&](int x, int y) {
        auto iv = closed_interval(x, y);
        std::sort(iv.begin(), iv.end());
        return iv;
    };
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            auto whole = as_set(x, z);
            std::vector<std::vector<int>> family;
            for (int y : whole) {
                auto part = as_set(x, y);
                if (!subset(part, whole))
                    flag("interval monotonicity: [x,y] not inside [x,z]", {x, z, y});
                family.push_back(std::move(part));
            }
            std::vector<int> union_all;
            for (size_t i = 0; i < family.size(); ++i) {
                for (size_t j = i + 1; j < family.size(); ++j)
                    if (!subset(family[i], family[j]) && !subset(family[j], family[i]))
                        flag("nested union: intervals from x into [x,z] not a chain", {x, z});
                for (int v : family[i])
                    union_all.push_back(v);
            }
            std::sort(union_all.begin(), union_all.end());
            union_all.erase(std::unique(union_all.begin(), union_all.end()), union_all.end());
            if (union_all != whole)
                flag("nested union: chain union is not the whole interval", {x, z});
        }
    return rep;
}

int DecompositionTree::find_node(const PretreeElement& e) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == e)
            return static_cast<int>(i);
    return -1;
}

std::vector<int> DecompositionTree::neighbors_of(int i) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == i)
            out.push_back(b);
        if (b == i)
            out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DecompositionTree tree_from_pretree(const Pretree& p) {
    DecompositionTree t;
    t.nodes = p.elements();
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p.adjacent(a, b))
                t.edges.emplace_back(a, b);
    // connected + acyclic?
    if (n == 0) {
        t.is_tree = true; // empty tree is fine (trimmed circles)
        return t;
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    t.is_tree = (reached == n) && (static_cast<int>(t.edges.size()) == n - 1);
    return t;
}

} // namespace dendrite
