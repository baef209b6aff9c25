#pragma once

#include "conifold/surfaces.hpp"

#include <array>
#include <string>
#include <vector>

namespace conifold {

/// Matched singular value of the fiber product: both projections degenerate
/// over t, with types I_b (first factor) and I_{b'} (second factor,
/// b' = b(phi^{-1}(t))).  The fiber contributes b*b' conifold points;
/// a projective small resolution needs b, b' > 1.
struct MatchedFiber {
    RatPoint t;
    int b = 0;
    int b_prime = 0;
    bool resolution_obstructed = false;  // min(b, b') = 1
};

struct FiberProduct {
    std::string surface;
    MoebiusQ phi;
    std::vector<MatchedFiber> matched;
    std::vector<RatPoint> unmatched_critical;  // singular on one factor only
};

/// Identity phi is rejected: matching every critical value with itself is a
/// smoothing, not a conifold construction.
FiberProduct build_fiber_product(const SurfaceDesc& s, const MoebiusQ& phi);

/// Number of conifold points: sum of b*b' over the matched fibers.
int conifold_count(const FiberProduct& fp);

/// Hodge and Betti data of a Calabi-Yau threefold with b_1 = 0.
struct HodgeSummary {
    int n = 0;  // conifold count of the resolved threefold (0 for a smoothing)
    int h11 = 0;
    int h12 = 0;
    int chi = 0;
    std::array<int, 7> betti{};
};

/// Consistency of the summary: chi = 2(h11 - h12), betti = (1, 0, h11,
/// 2 + 2 h12, h11, 0, 1), chi equal to the alternating sum.
std::vector<std::string> hodge_violations(const HodgeSummary& h);

/// Invariants of the small resolution with n conifold points: the n divisor
/// classes over the matched values satisfy 2 relations and each factor
/// contributes a rank-1 generic Picard group, so h11 = (n - 2) + 2 = n;
/// chi = 2n and h12 = h11 - chi/2 = 0 (rigidity).
HodgeSummary hodge_of_resolution(int n);

/// Invariants of the smoothing (the Schoen manifold): chi = 0,
/// h11 = h12 = 19, betti (1, 0, 19, 40, 19, 0, 1).
HodgeSummary schoen_smoothing_invariants();

using Betti = std::array<int, 7>;

/// Conifold transition bookkeeping between the smoothing Y and the small
/// resolution: r is the rank of the span of the vanishing-sphere classes.
struct TransitionData {
    int n = 0;
    int r = 0;
    Betti betti_Y{};
    Betti betti_Xhat{};
};

/// Solves r = (b3(Y) - b3(Xhat)) / 2 and verifies the surgery relations
/// b2(Xhat) = b2(Y) + n - r and b4(Xhat) = b4(Y) + n - r; throws naming the
/// violated relation.
TransitionData transition_solve_r(const Betti& betti_Y, const Betti& betti_Xhat, int n);

/// Finite abelian group as a product of cyclic factors.
struct GroupDesc {
    std::vector<int> cyclic_factors;

    long long order() const;
    int exponent() const;  // largest cyclic order
    std::string str() const;
};

/// Fibration-preserving automorphisms: with at least three non-isomorphic
/// singular fibers every automorphism preserves the fibration, and the group
/// is the square of the generic fiber's Mordell-Weil torsion.
GroupDesc automorphism_group(const SurfaceDesc& s);

/// Bound on the order of monodromy of an isotrivial degeneration acting on
/// middle homology: min(exponent of the automorphism group, largest finite
/// order in SL_2(Z)).
int degeneration_bound(const GroupDesc& aut);

}  // namespace conifold
