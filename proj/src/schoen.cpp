#include "conifold/schoen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace conifold {

FiberProduct build_fiber_product(const SurfaceDesc& s, const MoebiusQ& phi) {
    if (phi.is_identity())
        throw std::invalid_argument(
            "identity automorphism gives a smoothing, not a conifold construction");
    FiberProduct fp;
    fp.surface = s.name;
    fp.phi = phi;
    MoebiusQ phi_inv = phi.inverse();

    auto b_at = [&s](const RatPoint& t) -> int {
        for (const auto& f : s.fibers)
            if (f.at == t) return f.b;
        return 0;
    };

    std::set<RatPoint> critical_of_product;
    for (const auto& f : s.fibers) {
        critical_of_product.insert(f.at);                     // first projection
        critical_of_product.insert(moebius_apply(phi, f.at)); // second projection
    }
    for (const auto& t : critical_of_product) {
        int b = b_at(t);
        int b_prime = b_at(moebius_apply(phi_inv, t));
        if (b > 0 && b_prime > 0) {
            fp.matched.push_back({t, b, b_prime, std::min(b, b_prime) == 1});
        } else {
            fp.unmatched_critical.push_back(t);
        }
    }
    return fp;
}

int conifold_count(const FiberProduct& fp) {
    int n = 0;
    for (const auto& m : fp.matched) n += m.b * m.b_prime;
    return n;
}

std::vector<std::string> hodge_violations(const HodgeSummary& h) {
    std::vector<std::string> out;
    if (h.chi != 2 * (h.h11 - h.h12)) out.push_back("chi != 2(h11 - h12)");
    Betti want{1, 0, h.h11, 2 + 2 * h.h12, h.h11, 0, 1};
    if (h.betti != want) out.push_back("betti vector inconsistent with (h11, h12)");
    int alt = 0, sign = 1;
    for (int b : h.betti) { alt += sign * b; sign = -sign; }
    if (alt != h.chi) out.push_back("chi != alternating betti sum");
    return out;
}

HodgeSummary hodge_of_resolution(int n) {
    if (n < 1) throw std::invalid_argument("conifold count must be >= 1");
    HodgeSummary h;
    h.n = n;
    int divisor_span = n - 2;       // n classes over the matched values, 2 relations
    int generic_picard = 1 + 1;     // rank 1 per elliptic surface factor
    h.h11 = divisor_span + generic_picard;
    h.chi = 2 * n;                  // each conifold resolved by a P^1
    h.h12 = h.h11 - h.chi / 2;
    h.betti = {1, 0, h.h11, 2 + 2 * h.h12, h.h11, 0, 1};
    if (auto v = hodge_violations(h); !v.empty())
        throw std::logic_error("resolution invariants inconsistent: " + v.front());
    return h;
}

HodgeSummary schoen_smoothing_invariants() {
    HodgeSummary h;
    h.n = 0;
    h.chi = 0;
    h.h11 = 19;
    h.h12 = h.h11 - h.chi / 2;
    h.betti = {1, 0, h.h11, 2 + 2 * h.h12, h.h11, 0, 1};
    if (auto v = hodge_violations(h); !v.empty())
        throw std::logic_error("smoothing invariants inconsistent: " + v.front());
    return h;
}

TransitionData transition_solve_r(const Betti& betti_Y, const Betti& betti_Xhat, int n) {
    int drop = betti_Y[3] - betti_Xhat[3];
    if (drop < 0 || drop % 2 != 0)
        throw std::invalid_argument("b3(Y) - b3(Xhat) must be even and nonnegative");
    TransitionData t;
    t.n = n;
    t.r = drop / 2;
    t.betti_Y = betti_Y;
    t.betti_Xhat = betti_Xhat;
    if (betti_Xhat[2] != betti_Y[2] + n - t.r)
        throw std::domain_error("transition relation violated: b2(Xhat) = b2(Y) + n - r");
    if (betti_Xhat[3] != betti_Y[3] - 2 * t.r)
        throw std::domain_error("transition relation violated: b3(Xhat) = b3(Y) - 2r");
    if (betti_Xhat[4] != betti_Y[4] + n - t.r)
        throw std::domain_error("transition relation violated: b4(Xhat) = b4(Y) + n - r");
    return t;
}

long long GroupDesc::order() const {
    long long o = 1;
    for (int f : cyclic_factors) o *= f;
    return o;
}

int GroupDesc::exponent() const {
    long long e = 1;
    for (int f : cyclic_factors) e = std::lcm(e, static_cast<long long>(f));
    return static_cast<int>(e);
}

std::string GroupDesc::str() const {
    if (cyclic_factors.empty() || order() == 1) return "trivial";
    std::ostringstream os;
    for (std::size_t i = 0; i < cyclic_factors.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << cyclic_factors[i];
    }
    return os.str();
}

GroupDesc automorphism_group(const SurfaceDesc& s) {
    std::set<int> types;
    for (const auto& f : s.fibers) types.insert(f.b);
    if (types.size() < 3)
        throw std::invalid_argument(
            "fibration-preserving argument inapplicable: fewer than three "
            "non-isomorphic singular fibers");
    int t = s.mw_torsion_order;
    GroupDesc g;
    if (t > 1) g.cyclic_factors = {t, t};
    return g;
}

int degeneration_bound(const GroupDesc& aut) {
    return std::min(aut.exponent(), max_finite_order().bound);
}

}  // namespace conifold
