#include "dendrite/tits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "dendrite/error.hpp"

namespace dendrite {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    return splitmix(seed ^ splitmix(stream));
}

// avoid std::uniform_int_distribution: its stream is not pinned by the
// standard, and reruns must be byte-identical everywhere
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

int draw_letter(std::mt19937_64& rng, int rank, int prev) {
    for (;;) {
        auto idx = static_cast<int>(draw(rng, 2 * static_cast<std::uint64_t>(rank)));
        int l = idx < rank ? idx + 1 : -(idx - rank + 1);
        if (l != -prev)
            return l;
    }
}

FreeWord draw_reduced(std::mt19937_64& rng, int rank, int len) {
    std::vector<int> letters;
    int prev = 0;
    for (int i = 0; i < len; ++i) {
        int l = draw_letter(rng, rank, prev);
        letters.push_back(l);
        prev = l;
    }
    return make_word(rank, std::move(letters));
}

FreeWord draw_cyclic(std::mt19937_64& rng, int rank, int len) {
    for (;;) {
        FreeWord w = draw_reduced(rng, rank, len);
        if (w.length() == len && is_cyclically_reduced(w))
            return w;
    }
}

} // namespace

TreeEnd canonical_end(const FreeWord& u0, const FreeWord& w0) {
    if (u0.rank != w0.rank)
        throw input_error("end prefix and period have different ranks");
    if (w0.trivial())
        throw input_error("end period must be nontrivial");
    FreeWord conj;
    FreeWord w = cyclic_reduction(w0, &conj);
    FreeWord u = concat(u0, conj);
    // march the seam into the period until the prefix is as short as it gets
    bool moved = true;
    while (moved && !u.letters.empty()) {
        moved = false;
        if (u.letters.back() == -w.letters.front()) {
            // u x · (x^{-1} s)^inf = u · (s x^{-1})^inf
            u.letters.pop_back();
            std::rotate(w.letters.begin(), w.letters.begin() + 1, w.letters.end());
            moved = true;
        } else if (u.letters.back() == w.letters.back()) {
            // u y · (s y)^inf = u · (y s)^inf
            u.letters.pop_back();
            std::rotate(w.letters.begin(), w.letters.end() - 1, w.letters.end());
            moved = true;
        }
    }
    return {u, primitive_root(w)};
}

std::vector<int> expand_end(const TreeEnd& e, int count) {
    std::vector<int> out;
    out.reserve(count);
    const int ul = e.prefix.length(), pl = e.period.length();
    for (int i = 0; i < count; ++i)
        out.push_back(i < ul ? e.prefix.letters[i] : e.period.letters[(i - ul) % pl]);
    return out;
}

std::string end_text(const TreeEnd& e) {
    std::string s;
    if (!e.prefix.trivial())
        s = word_text(e.prefix) + ".";
    return s + "(" + word_text(e.period) + ")^inf";
}

TreeEnd end_action(const FreeWord& v, const TreeEnd& e) {
    return canonical_end(concat(v, e.prefix), e.period);
}

AxisEnds axis_ends(const FreeWord& v) {
    if (v.trivial())
        throw input_error("trivial word has no axis");
    FreeWord c;
    FreeWord r = cyclic_reduction(v, &c);
    return {canonical_end(c, inverse_word(r)), canonical_end(c, r), r.length()};
}

double single_tree_distance(const TreeEnd& x, const TreeEnd& y) {
    return x == y ? 0.0 : std::numeric_limits<double>::infinity();
}

JoinPoint make_join(std::optional<TreeEnd> xi, double theta, std::optional<TreeEnd> eta) {
    if (!(theta >= 0.0 && theta <= kHalfPi))
        throw input_error("join angle must lie in [0, pi/2]");
    if (theta == 0.0)
        eta.reset();
    if (theta == kHalfPi)
        xi.reset();
    if (theta != kHalfPi && !xi)
        throw input_error("join point needs its factor-1 end");
    if (theta != 0.0 && !eta)
        throw input_error("join point needs its factor-2 end");
    return {std::move(xi), std::move(eta), theta};
}

bool same_point(const JoinPoint& x, const JoinPoint& y) {
    return x.theta == y.theta && x.xi == y.xi && x.eta == y.eta;
}

std::string point_text(const JoinPoint& x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x.theta);
    std::string s = "[";
    s += x.xi ? end_text(*x.xi) : "-";
    s += " | theta=";
    s += buf;
    s += " | ";
    s += x.eta ? end_text(*x.eta) : "-";
    return s + "]";
}

double tits_distance(const JoinPoint& x, const JoinPoint& y) {
    if (same_point(x, y))
        return 0.0;
    // a missing coordinate carries an exactly-zero coefficient; never trust
    // cos(pi/2) to vanish on its own
    double cx = x.xi ? std::cos(x.theta) : 0.0;
    double cy = y.xi ? std::cos(y.theta) : 0.0;
    double sx = x.eta ? std::sin(x.theta) : 0.0;
    double sy = y.eta ? std::sin(y.theta) : 0.0;
    double c1 = (x.xi && y.xi && *x.xi == *y.xi) ? 1.0 : -1.0;
    double c2 = (x.eta && y.eta && *x.eta == *y.eta) ? 1.0 : -1.0;
    double cosd = cx * cy * c1 + sx * sy * c2;
    cosd = std::clamp(cosd, -1.0, 1.0);
    return std::acos(cosd);
}

JoinPoint join_action(const ProductIsometry& g, const JoinPoint& x) {
    std::optional<TreeEnd> xi, eta;
    if (x.xi)
        xi = end_action(g.w1, *x.xi);
    if (x.eta)
        eta = end_action(g.w2, *x.eta);
    return make_join(std::move(xi), x.theta, std::move(eta));
}

std::pair<JoinPoint, JoinPoint> limit_points(const ProductIsometry& g) {
    if (g.w1.trivial() && g.w2.trivial())
        throw input_error("identity isometry has no limit points");
    std::optional<AxisEnds> a1, a2;
    int l1 = 0, l2 = 0;
    if (!g.w1.trivial()) {
        a1 = axis_ends(g.w1);
        l1 = a1->length;
    }
    if (!g.w2.trivial()) {
        a2 = axis_ends(g.w2);
        l2 = a2->length;
    }
    double theta_star = std::atan2(static_cast<double>(l2), static_cast<double>(l1));
    auto pick = [&](bool attract) {
        std::optional<TreeEnd> e1, e2;
        if (a1)
            e1 = attract ? a1->attracting : a1->repelling;
        if (a2)
            e2 = attract ? a2->attracting : a2->repelling;
        return make_join(std::move(e1), theta_star, std::move(e2));
    };
    return {pick(false), pick(true)};
}

JoinPoint iterate_limit(const ProductIsometry& g, const JoinPoint& c) {
    if (g.w1.trivial() && g.w2.trivial())
        throw input_error("identity isometry has no limit dynamics");
    std::optional<TreeEnd> xi = c.xi, eta = c.eta;
    if (!g.w1.trivial() && xi) {
        AxisEnds a = axis_ends(g.w1);
        xi = (*xi == a.repelling) ? a.repelling : a.attracting;
    }
    if (!g.w2.trivial() && eta) {
        AxisEnds a = axis_ends(g.w2);
        eta = (*eta == a.repelling) ? a.repelling : a.attracting;
    }
    return make_join(std::move(xi), c.theta, std::move(eta));
}

TreeEnd sample_end(std::uint64_t seed, int rank) {
    std::mt19937_64 rng(splitmix(seed));
    int plen = 1 + static_cast<int>(draw(rng, 6));
    int ulen = static_cast<int>(draw(rng, 9));
    FreeWord period = draw_cyclic(rng, rank, plen);
    FreeWord prefix = draw_reduced(rng, rank, ulen);
    return canonical_end(prefix, period);
}

FreeWord sample_cyclic_word(std::uint64_t seed, int rank) {
    std::mt19937_64 rng(splitmix(seed));
    return draw_cyclic(rng, rank, 1 + static_cast<int>(draw(rng, 6)));
}

JoinPoint sample_join_point(std::uint64_t seed, int rank1, int rank2) {
    std::mt19937_64 rng(splitmix(seed ^ 0xA11CE5ULL));
    double theta = static_cast<double>(draw(rng, 9)) * (kPi / 16);
    std::optional<TreeEnd> xi, eta;
    if (theta != kHalfPi)
        xi = sample_end(rng(), rank1);
    if (theta != 0.0)
        eta = sample_end(rng(), rank2);
    return make_join(std::move(xi), theta, std::move(eta));
}

std::vector<double> default_theta_grid() {
    std::vector<double> grid;
    for (int j = 0; j <= 8; ++j)
        grid.push_back(static_cast<double>(j) * (kPi / 8));
    return grid;
}

std::vector<PiConvergenceCertificate> verify_pi_convergence(
    const ProductIsometry& g, int samples, const std::vector<double>& theta_grid,
    std::uint64_t seed, double tol) {
    if (tol <= 0.0)
        throw input_error("tolerance must be positive");
    auto [n, p] = limit_points(g);

    std::vector<PiConvergenceCertificate> certs;
    certs.reserve(static_cast<size_t>(samples) * theta_grid.size());
    for (int i = 0; i < samples; ++i) {
        std::mt19937_64 rng(mix(seed, static_cast<std::uint64_t>(i)));
        double theta_c = static_cast<double>(draw(rng, 9)) * (kPi / 16);
        // mostly fresh ends, sometimes an axis end of the isometry itself so
        // the equality branches of the metric get exercised
        auto factor_end = [&](const FreeWord& w, int rank) {
            std::uint64_t roll = draw(rng, 8);
            std::uint64_t sub = rng();
            if (!w.trivial() && roll < 2) {
                AxisEnds a = axis_ends(w);
                return roll == 0 ? a.attracting : a.repelling;
            }
            return sample_end(sub, rank);
        };
        std::optional<TreeEnd> xi, eta;
        if (theta_c != kHalfPi)
            xi = factor_end(g.w1, g.w1.rank);
        if (theta_c != 0.0)
            eta = factor_end(g.w2, g.w2.rank);
        JoinPoint c = make_join(std::move(xi), theta_c, std::move(eta));

        JoinPoint limit = iterate_limit(g, c);
        double d_c_n = tits_distance(c, n);
        double d_limit_p = tits_distance(limit, p);
        for (double theta : theta_grid) {
            PiConvergenceCertificate cert;
            cert.g = g;
            cert.n = n;
            cert.p = p;
            cert.c = c;
            cert.limit = limit;
            cert.theta = theta;
            cert.d_c_n = d_c_n;
            cert.d_limit_p = d_limit_p;
            cert.pass = (d_c_n <= theta) || (d_limit_p <= kPi - theta + tol);
            certs.push_back(std::move(cert));
        }
    }
    return certs;
}

DynamicsTrace trace_orbit(const FreeWord& w, const TreeEnd& xi, int k_max) {
    AxisEnds a = axis_ends(w);
    DynamicsTrace tr;
    tr.start = xi;
    tr.frozen = (xi == a.repelling);
    const int depth = 4 * k_max + 64;
    auto target = expand_end(a.attracting, depth);
    TreeEnd at = xi;
    for (int k = 0; k <= k_max; ++k) {
        auto ray = expand_end(at, depth);
        int agree = 0;
        while (agree < depth && ray[agree] == target[agree])
            ++agree;
        tr.agreement.push_back(agree);
        if (k < k_max)
            at = end_action(w, at);
    }
    tr.nondecreasing = std::is_sorted(tr.agreement.begin(), tr.agreement.end());
    return tr;
}

DynamicsReport single_tree_dynamics(const FreeWord& w, int samples, int k_max,
                                    std::uint64_t seed) {
    if (w.rank < 2)
        throw input_error("single-tree dynamics wants rank at least 2");
    if (w.trivial())
        throw input_error("trivial word has no dynamics");
    DynamicsReport rep;
    rep.word = w;
    rep.axes = axis_ends(w);
    for (int i = 0; i < samples; ++i) {
        std::uint64_t sub = mix(seed, static_cast<std::uint64_t>(i));
        TreeEnd xi = sample_end(sub, w.rank);
        while (xi == rep.axes.repelling)
            xi = sample_end(splitmix(sub), w.rank), sub = splitmix(sub);
        rep.traces.push_back(trace_orbit(w, xi, k_max));
    }
    return rep;
}

DiameterReport tits_diameter_sample(int rank1, int rank2, int pairs, std::uint64_t seed) {
    DiameterReport rep;
    rep.pairs = pairs;
    for (int i = 0; i < pairs; ++i) {
        JoinPoint x = sample_join_point(mix(seed, 2 * static_cast<std::uint64_t>(i)),
                                        rank1, rank2);
        JoinPoint y = sample_join_point(mix(seed, 2 * static_cast<std::uint64_t>(i) + 1),
                                        rank1, rank2);
        rep.max_distance = std::max(rep.max_distance, tits_distance(x, y));
    }
    return rep;
}

} // namespace dendrite
