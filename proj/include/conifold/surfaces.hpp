#pragma once

#include "conifold/monodromy.hpp"
#include "conifold/rational_point.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace conifold {

using RatPoint = P1Q;

/// Kodaira fiber I_b at a point of P^1.
struct Fiber {
    RatPoint at;
    int b;
};

/// Finite descriptor of a rational semistable elliptic surface: fiber data,
/// Mordell-Weil torsion order and Picard rank are catalog constants; the
/// monodromy tuple, when present, must match the fiber widths anchor by
/// anchor.
struct SurfaceDesc {
    std::string name;
    std::vector<Fiber> fibers;
    int mw_torsion_order = 1;
    int picard_rank = 0;
    std::optional<MonodromyTuple> tuple;
    std::string provenance;
};

/// Structural checks: pairwise distinct fiber locations; tuple (if any)
/// validates and its widths match the fiber b's at the anchor points.
std::vector<std::string> surface_violations(const SurfaceDesc& s);

/// Sum of b over the fibers (the topological Euler characteristic; 12 for the
/// extremal semistable surfaces in scope).
int euler_char(const SurfaceDesc& s);

/// Rank bookkeeping for the generic-fiber Picard group of a fibration:
/// total_rank - (fiber_component_count - relations).
int generic_fiber_picard_rank(int total_rank, int fiber_component_count, int relations);

/// Automorphism of P^1 over Q: integer 2x2 matrix up to scale, det != 0,
/// content 1, first nonzero entry (row-major) positive.
struct MoebiusQ {
    std::array<Int, 4> m;  // ((a, b), (c, d)), z -> (a z + b) / (c z + d)

    MoebiusQ() : m{1, 0, 0, 1} {}
    MoebiusQ(Int a, Int b, Int c, Int d);

    bool is_identity() const { return m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 1; }
    MoebiusQ inverse() const { return MoebiusQ(m[3], -m[1], -m[2], m[0]); }

    bool operator==(const MoebiusQ& o) const { return m == o.m; }
    bool operator!=(const MoebiusQ& o) const { return !(*this == o); }

    std::string str() const;
};

MoebiusQ operator*(const MoebiusQ& f, const MoebiusQ& g);

/// Projective action (p : q) -> (a p + b q : c p + d q), reduced.
RatPoint moebius_apply(const MoebiusQ& f, const RatPoint& x);

/// Permutation of the three marked points {inf, 0, 1}, indexed 0, 1, 2.
struct MarkedPermutation {
    std::array<int, 3> image;  // image[i] = j means point i -> point j

    static MarkedPermutation identity() { return {{0, 1, 2}}; }
    static MarkedPermutation swap01() { return {{0, 2, 1}}; }      // 0 <-> 1
    static MarkedPermutation swap_inf0() { return {{1, 0, 2}}; }   // inf <-> 0
    static MarkedPermutation swap_inf1() { return {{2, 1, 0}}; }   // inf <-> 1
    static MarkedPermutation cycle() { return {{1, 2, 0}}; }       // inf->0->1->inf
    static MarkedPermutation cycle2() { return {{2, 0, 1}}; }      // inf->1->0->inf

    static std::vector<MarkedPermutation> all();           // all 6
    static std::vector<MarkedPermutation> non_identity();  // the admissible 5

    bool is_identity() const { return image == std::array<int, 3>{0, 1, 2}; }
    MarkedPermutation after(const MarkedPermutation& first) const;  // this o first

    bool operator==(const MarkedPermutation& o) const { return image == o.image; }
    std::string str() const;
};

RatPoint marked_point(int i);

/// Named permutations accepted by the command line:
/// swap01, swap0inf, swap1inf, cycle, cycle2.
MarkedPermutation parse_permutation(const std::string& name);

/// The unique Moebius transformation realizing the three point images.
MoebiusQ moebius_from_permutation(const MarkedPermutation& perm);

/// The level-6 extremal surface: fibers I_6, I_3, I_2, I_1 over inf, 0, 1, -8,
/// Mordell-Weil torsion Z/6, Picard rank 10, with its monodromy tuple.
const SurfaceDesc& beauville_surface();

/// Built-in surface catalog (currently the single level-6 entry).
const std::vector<SurfaceDesc>& surfaces_catalog();

}  // namespace conifold
