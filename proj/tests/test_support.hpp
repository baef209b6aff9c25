#pragma once

#include "conifold/congruence.hpp"
#include "conifold/sl2.hpp"

#include <random>

namespace conifold::testing {

using Rng = std::mt19937_64;

/// Random word in {T^{+-1}, S}: a generic element of SL_2(Z).
inline UniMat random_sl2(Rng& rng, int max_len = 10) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> pick(0, 2);
    const UniMat t = UniMat::translation(1);
    const UniMat s(0, -1, 1, 0);
    UniMat g;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (pick(rng)) {
            case 0: g = g * t; break;
            case 1: g = g * t.inverse(); break;
            default: g = g * s; break;
        }
    }
    return g;
}

/// Random word in {T^{+-1}, L^{+-1}} with L the lower translation by N:
/// always a member of Gamma_1(N).
inline UniMat random_member(Rng& rng, int level, int max_len = 10) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    const UniMat t = UniMat::translation(1);
    const UniMat l = UniMat::lower_translation(level);
    UniMat g;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (pick(rng)) {
            case 0: g = g * t; break;
            case 1: g = g * t.inverse(); break;
            case 2: g = g * l; break;
            default: g = g * l.inverse(); break;
        }
    }
    return g;
}

/// Random trace +2 parabolic with signed width class k != 0.
inline UniMat random_parabolic(Rng& rng, int max_width = 9, int max_vec = 6) {
    std::uniform_int_distribution<int> width(1, max_width);
    std::uniform_int_distribution<int> comp(-max_vec, max_vec);
    std::uniform_int_distribution<int> sign(0, 1);
    for (;;) {
        Int a = comp(rng), g = comp(rng);
        if (a == 0 && g == 0) continue;
        Int d = gcd_int(a < 0 ? Int(-a) : a, g < 0 ? Int(-g) : g);
        a /= d;
        g /= d;
        Int k = width(rng) * (sign(rng) ? 1 : -1);
        return UniMat(1 - k * a * g, k * a * a, -k * g * g, 1 + k * a * g);
    }
}

}  // namespace conifold::testing
