#include "conifold/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace conifold {

bool is_member(Level level, const UniMat& m) {
    Int n = level.n;
    return mod_floor(m.a - 1, n) == 0 && mod_floor(m.d - 1, n) == 0 &&
           mod_floor(m.c, n) == 0;
}

std::string CosetLabel::str() const {
    std::ostringstream os;
    os << "(" << x << "," << y << ")";
    return os.str();
}

namespace {

CosetLabel canon_pm(int x, int y, int n) {
    x = ((x % n) + n) % n;
    y = ((y % n) + n) % n;
    int nx = (n - x) % n, ny = (n - y) % n;
    if (nx < x || (nx == x && ny < y)) return {nx, ny};
    return {x, y};
}

}  // namespace

CosetLabel coset_label(Level level, const UniMat& g) {
    int n = level.n;
    return canon_pm(static_cast<int>(mod_floor(g.a, n)),
                    static_cast<int>(mod_floor(g.c, n)), n);
}

int psl_index(Level level) {
    int n = level.n;
    std::set<CosetLabel> seen;
    std::queue<CosetLabel> frontier;
    CosetLabel start = canon_pm(1 % n, 0, n);
    seen.insert(start);
    frontier.push(start);
    while (!frontier.empty()) {
        auto [x, y] = frontier.front();
        frontier.pop();
        // Column action of T, T^{-1}, S; S^{-1} agrees with S on +-classes.
        CosetLabel next[3] = {canon_pm(x + y, y, n), canon_pm(x - y, y, n),
                              canon_pm(-y, x, n)};
        for (const auto& lbl : next) {
            if (seen.insert(lbl).second) frontier.push(lbl);
        }
    }
    return static_cast<int>(seen.size());
}

CosetTable make_coset_table(Level level) {
    CosetTable table{level, {}, {}};
    std::set<CosetLabel> seen;
    std::queue<UniMat> frontier;
    const UniMat gens[3] = {UniMat::translation(1), UniMat::translation(-1),
                            UniMat(0, -1, 1, 0)};
    UniMat id = UniMat::identity();
    seen.insert(coset_label(level, id));
    table.representatives.push_back(id);
    table.labels.push_back(coset_label(level, id));
    frontier.push(id);
    while (!frontier.empty()) {
        UniMat g = frontier.front();
        frontier.pop();
        for (const auto& x : gens) {
            UniMat h = x * g;
            CosetLabel lbl = coset_label(level, h);
            if (seen.insert(lbl).second) {
                table.representatives.push_back(h);
                table.labels.push_back(lbl);
                frontier.push(h);
            }
        }
    }
    return table;
}

CosetTable gamma1_level6_transversal() {
    // Transversal of Gamma_1(6) in PSL_2(Z): translating the strip fundamental
    // domain by the inverses of these twelve matrices tiles a fundamental
    // domain with cusps at infinity, 0, 1/3, 1/2.
    CosetTable table{Level(6), {}, {}};
    table.representatives = {
        UniMat(1, 0, 0, 1),     UniMat(0, 1, -1, 0),   UniMat(-1, 1, -1, 0),
        UniMat(-2, 1, -1, 0),   UniMat(-3, 1, -1, 0),  UniMat(-4, 1, -1, 0),
        UniMat(-5, 1, -1, 0),   UniMat(-5, 3, -2, 1),  UniMat(-7, 4, -2, 1),
        UniMat(-9, 5, -2, 1),   UniMat(-11, 4, -3, 1), UniMat(-14, 5, -3, 1),
    };
    table.labels.reserve(table.representatives.size());
    for (const auto& g : table.representatives)
        table.labels.push_back(coset_label(table.level, g));
    return table;
}

TransversalReport verify_transversal(const CosetTable& table) {
    TransversalReport rep;
    rep.expected_count = psl_index(table.level);
    rep.actual_count = static_cast<int>(table.representatives.size());
    for (std::size_t i = 0; i < table.representatives.size(); ++i) {
        CosetLabel li = coset_label(table.level, table.representatives[i]);
        if (!(li == table.labels[i])) {
            rep.message = "stored label mismatch at index " + std::to_string(i);
            return rep;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (table.labels[j] == li) {
                rep.collision_i = static_cast<int>(j);
                rep.collision_j = static_cast<int>(i);
                rep.message = "representatives " + std::to_string(j) + " and " +
                              std::to_string(i) + " share label " + li.str();
                return rep;
            }
        }
    }
    if (rep.actual_count != rep.expected_count) {
        rep.message = "expected " + std::to_string(rep.expected_count) +
                      " representatives, got " + std::to_string(rep.actual_count);
        return rep;
    }
    rep.ok = true;
    rep.message = "transversal verified";
    return rep;
}

namespace {

// Canonical key of the residue orbit {+-(p + j*q, q) mod N}.
std::pair<int, int> cusp_orbit_key(Level level, const Int& p, const Int& q) {
    long long n = level.n;
    long long pr = static_cast<long long>(mod_floor(p, n));
    long long qr = static_cast<long long>(mod_floor(q, n));
    std::pair<long long, long long> best{n, n};
    for (int s = 0; s < 2; ++s) {
        long long sp = s == 0 ? pr : (n - pr) % n;
        long long sq = s == 0 ? qr : (n - qr) % n;
        long long shifted = sp;
        for (long long j = 0; j < n; ++j) {
            best = std::min(best, {shifted, sq});
            shifted = (shifted + sq) % n;
        }
    }
    return {static_cast<int>(best.first), static_cast<int>(best.second)};
}

}  // namespace

bool cusp_equivalent(Level level, const Cusp& a, const Cusp& b) {
    return cusp_orbit_key(level, a.p, a.q) == cusp_orbit_key(level, b.p, b.q);
}

UniMat scaling_to_cusp(const Cusp& cusp) {
    Int s, t;
    Int g = ext_gcd(cusp.p, cusp.q, s, t);
    if (g != 1) throw std::logic_error("cusp not in lowest terms");
    // p*s + q*t = 1, so ((p, -t), (q, s)) has determinant 1.
    return UniMat(cusp.p, -t, cusp.q, s);
}

long long cusp_width(Level level, const Cusp& cusp) {
    UniMat sigma = scaling_to_cusp(cusp);
    UniMat inv = sigma.inverse();
    int bound = psl_index(level);
    for (int h = 1; h <= bound; ++h) {
        UniMat m = sigma * UniMat::translation(h) * inv;
        if (is_member(level, m) || is_member(level, -m)) return h;
    }
    throw std::logic_error("cusp width exceeds the coset index bound");
}

std::vector<CuspClass> cusp_classes(Level level) {
    int n = level.n;
    // All residue orbits that honest cusps can hit: gcd(p, q, N) = 1.
    std::set<std::pair<int, int>> orbits;
    for (int pr = 0; pr < n; ++pr)
        for (int qr = 0; qr < n; ++qr)
            if (std::gcd(std::gcd(pr, qr), n) == 1)
                orbits.insert(cusp_orbit_key(level, pr, qr));

    std::vector<CuspClass> out;
    std::set<std::pair<int, int>> covered;
    // Small-denominator lifts first: infinity, then q = 1, 2, ... with
    // numerators ordered 0, 1, -1, 2, -2, ...
    auto consider = [&](const Cusp& c) {
        auto key = cusp_orbit_key(level, c.p, c.q);
        if (covered.insert(key).second) out.push_back({c, cusp_width(level, c)});
    };
    consider(Cusp::infinity());
    for (int box = n; covered.size() < orbits.size(); box += n) {
        for (int q = 1; q <= box && covered.size() < orbits.size(); ++q) {
            for (int ap = 0; ap <= box && covered.size() < orbits.size(); ++ap) {
                for (int p : {ap, -ap}) {
                    if (std::gcd(std::abs(p), q) != 1) continue;
                    consider(Cusp(p, q));
                    if (p == 0) break;
                }
            }
        }
    }
    return out;
}

UniMat cusp_stabilizer_generator(Level level, const Cusp& cusp) {
    long long w = cusp_width(level, cusp);
    UniMat sigma = scaling_to_cusp(cusp);
    UniMat inv = sigma.inverse();
    // Regular cusps land on the first try; the lone irregular case in range
    // (level 4, cusp 1/2) needs the doubled exponent.
    int bound = psl_index(level);
    for (long long h = w; h <= 2 * bound; h += w) {
        UniMat m = sigma * UniMat::translation(h) * inv;
        if (is_member(level, m)) return m;
    }
    throw std::logic_error("no unipotent stabilizer generator within bound");
}

}  // namespace conifold
