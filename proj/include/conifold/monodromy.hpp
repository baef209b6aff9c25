#pragma once

#include "conifold/congruence.hpp"
#include "conifold/rational_point.hpp"
#include "conifold/sl2.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace conifold {

/// Global monodromy of a semistable elliptic fibration over P^1: an ordered
/// list of trace +2 parabolics whose product is the identity.  Anchors are
/// optional base-point metadata (the critical values, in the same order);
/// algebraic validity never consults them.
struct MonodromyTuple {
    std::optional<Level> level;    // declared => entries must be members
    std::vector<UniMat> entries;
    std::vector<P1Q> anchors;      // empty, or one per entry
};

struct TupleEntryReport {
    ElementClass cls;
    Int width;    // 0 when not a trace +2 parabolic
    bool member;  // vacuously true when no level is declared
};

struct TupleReport {
    bool product_is_identity = false;
    std::vector<TupleEntryReport> entries;
    std::vector<Int> widths;                // sorted multiset
    std::vector<std::string> violations;    // empty iff valid
    bool valid() const { return violations.empty(); }
};

TupleReport validate_tuple(const MonodromyTuple& t);

/// Conjugates every entry by g; product identity and widths are preserved.
MonodromyTuple conjugate_tuple(const MonodromyTuple& t, const UniMat& g);

/// (..., M_i, M_{i+1}, ...) -> (..., M_i M_{i+1} M_i^{-1}, M_i, ...);
/// requires 0 <= i < len - 1.
MonodromyTuple hurwitz_move(const MonodromyTuple& t, std::size_t i);

/// Inverse move: (..., M_i, M_{i+1}, ...) -> (..., M_{i+1}, M_{i+1}^{-1} M_i M_{i+1}, ...).
MonodromyTuple hurwitz_move_inverse(const MonodromyTuple& t, std::size_t i);

/// Monodromy of the universal elliptic family over X_1(6): widths (1, 6, 2, 3)
/// anchored at the critical values (-8, inf, 1, 0) of the degree-12 pencil it
/// models.  Validates fully at level 6.
const MonodromyTuple& x16_tuple();

/// All trace +2 parabolics of the given positive width with |entries| <= bound,
/// via M = I + k((-ag, a^2), (-g^2, ag)), gcd(a, g) = 1, k = width.
std::vector<UniMat> parabolic_family(long long width, long long entry_bound);

using WidthMultiset = std::array<int, 4>;  // sorted ascending

struct BeauvilleSearchResult {
    long long entry_bound = 0;
    int workers = 1;
    // Realized width multisets; complete only up to entry_bound.
    std::vector<WidthMultiset> multisets;  // sorted
};

/// Enumerates 4-tuples (A, B, C, D) of positive-width trace +2 parabolics with
/// all |entries| <= entry_bound, A*B*C*D = I and widths summing to 12; D is
/// derived as (A*B*C)^{-1}, never scanned.  Returns the deduplicated set of
/// realized width multisets.  Result is identical for any worker count.
/// Requires entry_bound >= 36 (smaller bounds miss known families).
BeauvilleSearchResult beauville_search(long long entry_bound, int workers = 1);

}  // namespace conifold
