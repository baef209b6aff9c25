#pragma once

#include "conifold/rational_point.hpp"
#include "conifold/sl2.hpp"

#include <string>
#include <vector>

namespace conifold {

/// Level N of the congruence subgroup Gamma_1(N).
struct Level {
    int n;
    explicit Level(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("level must be >= 1");
    }
    bool operator==(const Level& o) const { return n == o.n; }
};

/// Gamma_1(N) membership: a == d == 1 (mod N) and c == 0 (mod N).
bool is_member(Level level, const UniMat& m);

/// +-class of a pair in (Z/N)^2, stored as the lexicographically smaller of
/// the pair and its negation.
struct CosetLabel {
    int x, y;
    bool operator==(const CosetLabel& o) const { return x == o.x && y == o.y; }
    bool operator<(const CosetLabel& o) const { return x != o.x ? x < o.x : y < o.y; }
    std::string str() const;
};

/// Label of the left coset g * Gamma_1(N): the +-class of the first column of
/// g reduced mod N.  Gamma_1(N) stabilizes e_1 mod N, so this is invariant
/// under right multiplication by members and separates cosets.
CosetLabel coset_label(Level level, const UniMat& g);

/// Size of the PSL_2(Z) orbit of (1,0) in (Z/N)^2 / {+-1}, computed by
/// breadth-first enumeration under the standard generators T and S.  This is
/// the index of the image of Gamma_1(N) in PSL_2(Z).
int psl_index(Level level);

struct CosetTable {
    Level level;
    std::vector<UniMat> representatives;
    std::vector<CosetLabel> labels;  // parallel to representatives
};

/// A transversal of the left cosets of Gamma_1(N), built by orbit BFS.
CosetTable make_coset_table(Level level);

/// The twelve embedded level-6 coset representatives: the classical
/// transversal whose translates of the PSL_2(Z) strip domain assemble a
/// fundamental domain for Gamma_1(6), labeled by the +-orbit of (1,0) in
/// (Z/6)^2.
CosetTable gamma1_level6_transversal();

struct TransversalReport {
    bool ok = false;
    int expected_count = 0;
    int actual_count = 0;
    int collision_i = -1;  // first colliding pair, when !ok
    int collision_j = -1;
    std::string message;
};

/// Checks that the table's labels are pairwise distinct and that their count
/// equals psl_index(level).
TransversalReport verify_transversal(const CosetTable& table);

using Cusp = P1Q;

struct CuspClass {
    Cusp cusp;
    long long width;
};

/// Gamma_1(N)-equivalence of cusps: (p1,q1) ~ (p2,q2) iff
/// (p2,q2) == +-(p1 + j*q1, q1) (mod N) for some shift j.
bool cusp_equivalent(Level level, const Cusp& a, const Cusp& b);

/// Det-1 matrix with first column (p, q), sending infinity to the cusp.
UniMat scaling_to_cusp(const Cusp& cusp);

/// Width of the cusp's class: least h > 0 with sigma T^h sigma^{-1} in
/// +-Gamma_1(N).  The search is bounded by psl_index(N) and throws beyond it.
long long cusp_width(Level level, const Cusp& cusp);

/// One representative per Gamma_1(N)-class of P^1(Q), each with its width.
/// Representatives are chosen with small denominator, then small numerator.
std::vector<CuspClass> cusp_classes(Level level);

/// Trace +2 generator sigma T^w sigma^{-1} of the Gamma_1(N)-stabilizer of
/// the given cusp, w = class width.  At an irregular cusp (level 4, cusp 1/2
/// is the only one for these groups) the returned unipotent generator needs
/// exponent 2w; everywhere else the width class of the result equals w.
/// Generators are normalized to positive width class; flipping the global
/// orientation would replace every generator by its inverse simultaneously.
UniMat cusp_stabilizer_generator(Level level, const Cusp& cusp);

}  // namespace conifold
