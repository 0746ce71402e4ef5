#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dendrite/free_word.hpp"

namespace dendrite {

// End of the Cayley tree of a free group: the eventually periodic ray
// u w w w ... in canonical form (shortest prefix, primitive period), so that
// equality of ends is equality of the two words.
struct TreeEnd {
    FreeWord prefix;
    FreeWord period; // cyclically reduced, primitive, nonempty
    auto operator<=>(const TreeEnd&) const = default;
};

TreeEnd canonical_end(const FreeWord& u, const FreeWord& w);
std::vector<int> expand_end(const TreeEnd& e, int count); // first letters of the ray
std::string end_text(const TreeEnd& e);                   // "ab.(ba)^inf" style

TreeEnd end_action(const FreeWord& v, const TreeEnd& e); // canonical form of v·e

struct AxisEnds {
    TreeEnd repelling;  // v^{-inf}
    TreeEnd attracting; // v^{+inf}
    int length;         // translation length = cyclic reduction length
};
AxisEnds axis_ends(const FreeWord& v); // v nontrivial

// distinct tree ends sit at infinite Tits distance within one factor
double single_tree_distance(const TreeEnd& x, const TreeEnd& y);

// Point of the spherical join of the two factors' end spaces. theta = 0 is
// the factor-1 pole circle (eta dropped), theta = pi/2 the factor-2 one
// (xi dropped); strictly between, both ends are meaningful.
struct JoinPoint {
    std::optional<TreeEnd> xi;  // factor 1
    std::optional<TreeEnd> eta; // factor 2
    double theta = 0.0;         // [0, pi/2]
};

JoinPoint make_join(std::optional<TreeEnd> xi, double theta, std::optional<TreeEnd> eta);
bool same_point(const JoinPoint& x, const JoinPoint& y);
std::string point_text(const JoinPoint& x);

// Spherical-join evaluation: cos d = cos t cos t' c1 + sin t sin t' c2 where
// c_i is +1 when the factor ends agree and -1 otherwise (factor distance
// truncated at pi). A missing coordinate contributes an exactly-zero term.
double tits_distance(const JoinPoint& x, const JoinPoint& y);

// isometry of the product: one word per factor, acting factor-wise
struct ProductIsometry {
    FreeWord w1, w2;
};

JoinPoint join_action(const ProductIsometry& g, const JoinPoint& x);

// attracting/repelling fixed points at slope theta* = atan2(len2, len1)
std::pair<JoinPoint, JoinPoint> limit_points(const ProductIsometry& g); // (n, p)

// closed form of lim_k g^k(c): factor-wise north-south, slope untouched
JoinPoint iterate_limit(const ProductIsometry& g, const JoinPoint& c);

struct PiConvergenceCertificate {
    ProductIsometry g;
    JoinPoint n, p, c, limit;
    double theta = 0.0; // radius parameter in [0, pi]
    double d_c_n = 0.0;
    double d_limit_p = 0.0;
    bool pass = false; // d(c,n) <= theta  or  d(limit,p) <= pi - theta + tol
};

// Deterministic seeded sampling of join points; every sample is checked
// against every grid angle. A failed certificate is an implementation bug,
// never an acceptable outcome.
std::vector<PiConvergenceCertificate> verify_pi_convergence(
    const ProductIsometry& g, int samples, const std::vector<double>& theta_grid,
    std::uint64_t seed, double tol);

std::vector<double> default_theta_grid(); // 0, pi/8, ..., pi (9 values)

// orbit trace of one end under one word, against the attracting end
struct DynamicsTrace {
    TreeEnd start;
    std::vector<int> agreement; // prefix agreement with w^{+inf} at k = 0..k_max
    bool frozen = false;        // start == repelling end
    bool nondecreasing = false;
};

DynamicsTrace trace_orbit(const FreeWord& w, const TreeEnd& xi, int k_max);

struct DynamicsReport {
    FreeWord word;
    AxisEnds axes;
    std::vector<DynamicsTrace> traces;
};

// north-south dynamics in a single factor: sampled ends never equal the
// repelling end (those are reported frozen when passed explicitly)
DynamicsReport single_tree_dynamics(const FreeWord& w, int samples, int k_max,
                                    std::uint64_t seed);

struct DiameterReport {
    int pairs = 0;
    double max_distance = 0.0;
};

DiameterReport tits_diameter_sample(int rank1, int rank2, int pairs, std::uint64_t seed);

// seeded samplers, exposed so tests and tools draw identical distributions
TreeEnd sample_end(std::uint64_t seed, int rank);
JoinPoint sample_join_point(std::uint64_t seed, int rank1, int rank2);
FreeWord sample_cyclic_word(std::uint64_t seed, int rank);

} // namespace dendrite
