#include "conifold/surfaces.hpp"

#include <algorithm>
#include <sstream>

namespace conifold {

std::vector<std::string> surface_violations(const SurfaceDesc& s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.fibers.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (s.fibers[i].at == s.fibers[j].at)
                out.push_back("duplicate fiber location " + s.fibers[i].at.str());
    for (const auto& f : s.fibers)
        if (f.b < 1) out.push_back("fiber at " + f.at.str() + " has b < 1");
    if (s.mw_torsion_order < 1) out.push_back("torsion order < 1");
    if (s.tuple) {
        TupleReport rep = validate_tuple(*s.tuple);
        for (const auto& v : rep.violations) out.push_back("tuple: " + v);
        if (s.tuple->anchors.size() == s.tuple->entries.size()) {
            for (std::size_t i = 0; i < s.tuple->anchors.size(); ++i) {
                const RatPoint& at = s.tuple->anchors[i];
                auto fib = std::find_if(s.fibers.begin(), s.fibers.end(),
                                        [&](const Fiber& f) { return f.at == at; });
                if (fib == s.fibers.end()) {
                    out.push_back("tuple anchor " + at.str() + " has no fiber");
                } else if (rep.entries.size() == s.tuple->entries.size() &&
                           rep.entries[i].width != fib->b) {
                    out.push_back("width of entry " + std::to_string(i) +
                                  " does not match fiber b at " + at.str());
                }
            }
        } else {
            out.push_back("tuple anchors do not cover the entries");
        }
    }
    return out;
}

int euler_char(const SurfaceDesc& s) {
    int sum = 0;
    for (const auto& f : s.fibers) sum += f.b;
    return sum;
}

int generic_fiber_picard_rank(int total_rank, int fiber_component_count, int relations) {
    int span = fiber_component_count - relations;
    if (span < 0 || total_rank < span)
        throw std::invalid_argument("rank bookkeeping requires total >= components - relations >= 0");
    return total_rank - span;
}

namespace {

std::array<Int, 4> normalized(Int a, Int b, Int c, Int d) {
    if (a * d - b * c == 0)
        throw std::invalid_argument("Moebius matrix must have nonzero determinant");
    Int g = gcd_int(gcd_int(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b),
                    gcd_int(c < 0 ? Int(-c) : c, d < 0 ? Int(-d) : d));
    if (g > 1) { a /= g; b /= g; c /= g; d /= g; }
    for (const Int* e : {&a, &b, &c, &d}) {
        if (*e == 0) continue;
        if (*e < 0) { a = -a; b = -b; c = -c; d = -d; }
        break;
    }
    return {a, b, c, d};
}

}  // namespace

MoebiusQ::MoebiusQ(Int a, Int b, Int c, Int d) : m(normalized(a, b, c, d)) {}

std::string MoebiusQ::str() const {
    std::ostringstream os;
    os << "((" << m[0] << "," << m[1] << "),(" << m[2] << "," << m[3] << "))";
    return os.str();
}

MoebiusQ operator*(const MoebiusQ& f, const MoebiusQ& g) {
    return MoebiusQ(f.m[0] * g.m[0] + f.m[1] * g.m[2], f.m[0] * g.m[1] + f.m[1] * g.m[3],
                    f.m[2] * g.m[0] + f.m[3] * g.m[2], f.m[2] * g.m[1] + f.m[3] * g.m[3]);
}

RatPoint moebius_apply(const MoebiusQ& f, const RatPoint& x) {
    return RatPoint(f.m[0] * x.p + f.m[1] * x.q, f.m[2] * x.p + f.m[3] * x.q);
}

std::vector<MarkedPermutation> MarkedPermutation::all() {
    return {identity(), swap01(), swap_inf0(), swap_inf1(), cycle(), cycle2()};
}

std::vector<MarkedPermutation> MarkedPermutation::non_identity() {
    return {swap01(), swap_inf0(), swap_inf1(), cycle(), cycle2()};
}

MarkedPermutation MarkedPermutation::after(const MarkedPermutation& first) const {
    MarkedPermutation out{};
    for (int i = 0; i < 3; ++i) out.image[i] = image[first.image[i]];
    return out;
}

std::string MarkedPermutation::str() const {
    static const char* names[3] = {"inf", "0", "1"};
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        if (i) os << " ";
        os << names[i] << "->" << names[image[i]];
    }
    return os.str();
}

RatPoint marked_point(int i) {
    switch (i) {
        case 0: return RatPoint::infinity();
        case 1: return RatPoint(0, 1);
        case 2: return RatPoint(1, 1);
    }
    throw std::out_of_range("marked point index");
}

MarkedPermutation parse_permutation(const std::string& name) {
    if (name == "id") return MarkedPermutation::identity();
    if (name == "swap01") return MarkedPermutation::swap01();
    if (name == "swap0inf") return MarkedPermutation::swap_inf0();
    if (name == "swap1inf") return MarkedPermutation::swap_inf1();
    if (name == "cycle") return MarkedPermutation::cycle();
    if (name == "cycle2") return MarkedPermutation::cycle2();
    throw std::invalid_argument(
        "unknown permutation '" + name +
        "' (expected swap01, swap0inf, swap1inf, cycle, or cycle2)");
}

MoebiusQ moebius_from_permutation(const MarkedPermutation& perm) {
    // Each constraint phi(x) = y is linear in (a, b, c, d):
    // qy*(a px + b qx) - py*(c px + d qx) = 0.  Three rows leave a rank-1
    // kernel, one vector of which is the signed 3x3 minors.
    Int rows[3][4];
    for (int i = 0; i < 3; ++i) {
        RatPoint x = marked_point(i);
        RatPoint y = marked_point(perm.image[i]);
        rows[i][0] = y.q * x.p;
        rows[i][1] = y.q * x.q;
        rows[i][2] = -y.p * x.p;
        rows[i][3] = -y.p * x.q;
    }
    Int k[4];
    int sign = 1;
    for (int drop = 0; drop < 4; ++drop, sign = -sign) {
        Int sub[3][3];
        for (int r = 0; r < 3; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c)
                if (c != drop) sub[r][cc++] = rows[r][c];
        }
        Int det = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                  sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                  sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
        k[drop] = sign * det;
    }
    MoebiusQ out(k[0], k[1], k[2], k[3]);
    for (int i = 0; i < 3; ++i)
        if (moebius_apply(out, marked_point(i)) != marked_point(perm.image[i]))
            throw std::logic_error("interpolated Moebius map misses a marked point");
    return out;
}

const SurfaceDesc& beauville_surface() {
    static const SurfaceDesc s = [] {
        SurfaceDesc d;
        d.name = "X_1(6)";
        d.fibers = {{RatPoint::infinity(), 6},
                    {RatPoint(0, 1), 3},
                    {RatPoint(1, 1), 2},
                    {RatPoint(-8, 1), 1}};
        d.mw_torsion_order = 6;
        d.picard_rank = 10;
        d.tuple = x16_tuple();
        d.provenance =
            "universal elliptic family over the modular curve X_1(6); one of "
            "Beauville's six extremal semistable families with four singular "
            "fibers; Mordell-Weil torsion Z/6Z and rho = 10 from the standard "
            "tables for extremal rational elliptic surfaces; cusp dictionary "
            "i*inf -> -8, 0 -> inf, 1/3 -> 1, 1/2 -> 0 under the degree-1 "
            "Hauptmodul";
        return d;
    }();
    return s;
}

const std::vector<SurfaceDesc>& surfaces_catalog() {
    static const std::vector<SurfaceDesc> cat = {beauville_surface()};
    return cat;
}

}  // namespace conifold
