#include "conifold/sl2.hpp"

#include <ostream>
#include <sstream>

namespace conifold {

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, xx = 0;
    Int old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

UniMat::UniMat(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1)
        throw std::invalid_argument("matrix has determinant != 1: " + str());
}

bool UniMat::operator<(const UniMat& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return d < o.d;
}

std::string UniMat::str() const {
    std::ostringstream os;
    os << "((" << a << "," << b << "),(" << c << "," << d << "))";
    return os.str();
}

UniMat operator*(const UniMat& m, const UniMat& n) {
    return UniMat(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                  m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

std::ostream& operator<<(std::ostream& os, const UniMat& m) { return os << m.str(); }

UniMat power(const UniMat& m, unsigned k) {
    UniMat acc;
    UniMat base = m;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return acc;
}

const char* to_string(MatrixKind k) {
    switch (k) {
        case MatrixKind::Identity: return "identity";
        case MatrixKind::MinusIdentity: return "minus_identity";
        case MatrixKind::Elliptic: return "elliptic";
        case MatrixKind::Parabolic: return "parabolic";
        case MatrixKind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

ElementClass classify(const UniMat& m) {
    static const UniMat kId = UniMat::identity();
    if (m == kId) return {MatrixKind::Identity, 1};
    if (m == -kId) return {MatrixKind::MinusIdentity, 2};
    Int t = m.trace();
    if (t > 2 || t < -2) return {MatrixKind::Hyperbolic, 0};
    if (t == 2 || t == -2) return {MatrixKind::Parabolic, 0};
    // |trace| < 2: finite order, reached within 6 steps.
    UniMat acc = m;
    for (int r = 1; r <= 6; ++r) {
        if (acc == kId) return {MatrixKind::Elliptic, r};
        acc = acc * m;
    }
    throw std::logic_error("elliptic element of order > 6: " + m.str());
}

Int parabolic_width_class(const UniMat& m) {
    ElementClass cls = classify(m);
    if (cls.kind != MatrixKind::Parabolic)
        throw std::invalid_argument("width class requires a parabolic element, got " +
                                    std::string(to_string(cls.kind)));
    if (m.trace() != 2)
        throw std::invalid_argument(
            "width class requires trace +2; negate trace -2 inputs first");
    Int g = gcd_int(gcd_int(m.a - 1, m.b), gcd_int(m.c, m.d - 1));
    bool positive = m.b != 0 ? m.b > 0 : -m.c > 0;
    return positive ? g : -g;
}

FiniteOrderBound max_finite_order() {
    FiniteOrderBound out;
    out.bound = 6;
    out.witnesses = {
        {1, UniMat::identity()},
        {2, -UniMat::identity()},
        {3, UniMat(0, -1, 1, -1)},  // trace -1
        {4, UniMat(0, -1, 1, 0)},   // trace  0
        {6, UniMat(0, -1, 1, 1)},   // trace +1
    };
    for (const auto& w : out.witnesses) {
        UniMat acc = w.element;
        for (int r = 1; r < w.order; ++r) {
            if (acc == UniMat::identity())
                throw std::logic_error("finite-order witness has smaller order than claimed");
            acc = acc * w.element;
        }
        if (acc != UniMat::identity())
            throw std::logic_error("finite-order witness does not have the claimed order");
    }
    return out;
}

LatticeVec transvection_apply(const LatticeVec& ell, const Int& k, const LatticeVec& v) {
    Int pairing = symplectic_product(v, ell);
    return LatticeVec(v.x + k * pairing * ell.x, v.y + k * pairing * ell.y);
}

}  // namespace conifold
