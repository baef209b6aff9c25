#pragma once

#include "conifold/integer.hpp"

#include <iosfwd>
#include <vector>

namespace conifold {

/// Element of SL_2(Z): a 2x2 integer matrix with determinant 1, row-major
/// ((a, b), (c, d)).  The determinant is checked at construction; every
/// operation below is closed, so the invariant holds for all reachable values.
struct UniMat {
    Int a, b, c, d;

    UniMat() : a(1), b(0), c(0), d(1) {}
    UniMat(Int a_, Int b_, Int c_, Int d_);

    static UniMat identity() { return UniMat(); }
    /// T^k = ((1, k), (0, 1)).
    static UniMat translation(const Int& k) { return UniMat(1, k, 0, 1); }
    /// Transpose of T^k: ((1, 0), (k, 1)).
    static UniMat lower_translation(const Int& k) { return UniMat(1, 0, k, 1); }

    Int trace() const { return a + d; }
    Int det() const { return a * d - b * c; }

    UniMat inverse() const { return UniMat(d, -b, -c, a); }
    UniMat operator-() const { return UniMat(-a, -b, -c, -d); }

    bool operator==(const UniMat& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const UniMat& o) const { return !(*this == o); }
    bool operator<(const UniMat& o) const;

    std::string str() const;
};

UniMat operator*(const UniMat& m, const UniMat& n);
std::ostream& operator<<(std::ostream& os, const UniMat& m);

inline UniMat compose(const UniMat& m, const UniMat& n) { return m * n; }
inline UniMat invert(const UniMat& m) { return m.inverse(); }
inline UniMat conjugate(const UniMat& m, const UniMat& g) {
    return g * m * g.inverse();
}

/// m^k for k >= 0.
UniMat power(const UniMat& m, unsigned k);

enum class MatrixKind { Identity, MinusIdentity, Elliptic, Parabolic, Hyperbolic };

/// Trace classification of an SL_2(Z) element.  `order` is the exact
/// multiplicative order for the finite-order kinds (1, 2, or one of 3, 4, 6)
/// and 0 for parabolic and hyperbolic elements, which have infinite order.
struct ElementClass {
    MatrixKind kind;
    int order;
};

const char* to_string(MatrixKind k);

/// |trace| < 2 and m != +-I  =>  elliptic (order computed by repeated
/// composition, always one of 3, 4, 6); |trace| = 2 => parabolic;
/// |trace| > 2 => hyperbolic.
ElementClass classify(const UniMat& m);

/// The unique nonzero k such that m is SL_2(Z)-conjugate to T^k.
///
/// Requires trace(m) = +2 and m != I; trace -2 inputs are rejected, callers
/// negate first (the projective convention).  m - I = k * v * (Jv)^t for a
/// primitive column v, so k is the gcd of the entries of m - I, with the sign
/// read off the upper-right entry (or from -c when the upper-right is zero).
Int parabolic_width_class(const UniMat& m);

struct FiniteOrderWitness {
    int order;
    UniMat element;
};

struct FiniteOrderBound {
    int bound;  // always 6
    std::vector<FiniteOrderWitness> witnesses;  // orders 1, 2, 3, 4, 6
};

/// Largest order of a finite-order element of SL_2(Z).  Finite order forces
/// trace in {-1, 0, 1} or m = +-I (integral trace, root-of-unity eigenvalues),
/// giving orders {1, 2, 3, 4, 6}; the witness list exhibits each order and is
/// re-verified by repeated composition on every call.
FiniteOrderBound max_finite_order();

/// Element of Z^2 carrying the symplectic pairing
/// <(x,y),(x',y')> = x*y' - y*x'.
struct LatticeVec {
    Int x, y;

    LatticeVec() : x(0), y(0) {}
    LatticeVec(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool operator==(const LatticeVec& o) const { return x == o.x && y == o.y; }
    bool operator!=(const LatticeVec& o) const { return !(*this == o); }
};

inline Int symplectic_product(const LatticeVec& u, const LatticeVec& v) {
    return u.x * v.y - u.y * v.x;
}

/// k-th power of the symplectic transvection by ell, applied to v:
/// v + k * <v, ell> * ell.
LatticeVec transvection_apply(const LatticeVec& ell, const Int& k, const LatticeVec& v);

}  // namespace conifold
