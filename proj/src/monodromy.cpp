#include "conifold/monodromy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace conifold {

TupleReport validate_tuple(const MonodromyTuple& t) {
    TupleReport rep;
    if (t.entries.empty()) {
        rep.violations.push_back("tuple has no entries");
        return rep;
    }
    if (!t.anchors.empty() && t.anchors.size() != t.entries.size())
        rep.violations.push_back("anchor count differs from entry count");

    UniMat prod;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        const UniMat& m = t.entries[i];
        prod = prod * m;
        TupleEntryReport er{classify(m), 0, true};
        if (er.cls.kind != MatrixKind::Parabolic || m.trace() != 2) {
            rep.violations.push_back("entry " + std::to_string(i) +
                                     ": not parabolic with trace +2");
        } else {
            er.width = parabolic_width_class(m);
            if (er.width < 1)
                rep.violations.push_back("entry " + std::to_string(i) +
                                         ": width class not positive");
        }
        if (t.level) {
            er.member = is_member(*t.level, m);
            if (!er.member)
                rep.violations.push_back("entry " + std::to_string(i) +
                                         ": not a member at level " +
                                         std::to_string(t.level->n));
        }
        rep.widths.push_back(er.width);
        rep.entries.push_back(std::move(er));
    }
    rep.product_is_identity = prod == UniMat::identity();
    if (!rep.product_is_identity)
        rep.violations.push_back("cyclic product is not the identity");
    std::sort(rep.widths.begin(), rep.widths.end());
    return rep;
}

MonodromyTuple conjugate_tuple(const MonodromyTuple& t, const UniMat& g) {
    MonodromyTuple out = t;
    UniMat ginv = g.inverse();
    for (auto& m : out.entries) m = g * m * ginv;
    return out;
}

MonodromyTuple hurwitz_move(const MonodromyTuple& t, std::size_t i) {
    if (i + 1 >= t.entries.size())
        throw std::out_of_range("hurwitz move index out of range");
    MonodromyTuple out = t;
    UniMat mi = t.entries[i];
    out.entries[i] = mi * t.entries[i + 1] * mi.inverse();
    out.entries[i + 1] = mi;
    if (!out.anchors.empty()) std::swap(out.anchors[i], out.anchors[i + 1]);
    return out;
}

MonodromyTuple hurwitz_move_inverse(const MonodromyTuple& t, std::size_t i) {
    if (i + 1 >= t.entries.size())
        throw std::out_of_range("hurwitz move index out of range");
    MonodromyTuple out = t;
    UniMat mi1 = t.entries[i + 1];
    out.entries[i] = mi1;
    out.entries[i + 1] = mi1.inverse() * t.entries[i] * mi1;
    if (!out.anchors.empty()) std::swap(out.anchors[i], out.anchors[i + 1]);
    return out;
}

const MonodromyTuple& x16_tuple() {
    static const MonodromyTuple t = {
        Level(6),
        {UniMat(1, 1, 0, 1), UniMat(1, 0, -6, 1), UniMat(-5, 2, -18, 7),
         UniMat(-5, 3, -12, 7)},
        {P1Q(-8, 1), P1Q::infinity(), P1Q(1, 1), P1Q(0, 1)},
    };
    return t;
}

std::vector<UniMat> parabolic_family(long long width, long long entry_bound) {
    if (width < 1) throw std::invalid_argument("width must be positive");
    std::vector<UniMat> out;
    const Int k = width;
    // alpha >= 0; (alpha, gamma) ~ (-alpha, -gamma) give the same matrix,
    // so alpha = 0 only pairs with gamma = 1.
    long long amax = static_cast<long long>(std::sqrt(static_cast<double>(entry_bound) / width)) + 1;
    for (long long a = 0; a <= amax; ++a) {
        if (width * a * a > entry_bound) break;
        long long gmax = amax;
        for (long long g = -gmax; g <= gmax; ++g) {
            if (a == 0 && g != 1) continue;
            if (a > 0 && std::gcd(a, std::llabs(g)) != 1) continue;
            if (width * g * g > entry_bound) continue;
            Int ag = k * a * g;
            if (1 - ag > entry_bound || 1 - ag < -entry_bound) continue;
            if (1 + ag > entry_bound || 1 + ag < -entry_bound) continue;
            out.push_back(UniMat(1 - ag, k * a * a, -k * g * g, 1 + ag));
        }
    }
    return out;
}

namespace {

bool within_bound(const UniMat& m, const Int& bound) {
    auto ok = [&bound](const Int& v) { return v <= bound && v >= -bound; };
    return ok(m.a) && ok(m.b) && ok(m.c) && ok(m.d);
}

// Width of m if it is a positive-width trace +2 parabolic, else 0.
long long positive_width_or_zero(const UniMat& m, long long cap) {
    if (m.trace() != 2 || m == UniMat::identity()) return 0;
    Int w = parabolic_width_class(m);
    if (w < 1 || w > cap) return 0;
    return to_ll(w);
}

struct OrderedTripleJob {
    int partition;        // index into the partition list
    int wa, wb, wc, wd;
};

}  // namespace

BeauvilleSearchResult beauville_search(long long entry_bound, int workers) {
    if (entry_bound < 36)
        throw std::invalid_argument("entry bound below 36 misses known families");
    if (workers < 1) workers = 1;

    // Partitions of 12 into four positive parts, largest part last; cyclic
    // rotation lets every realization put a widest factor in position D.
    std::vector<WidthMultiset> partitions;
    for (int w1 = 1; w1 <= 9; ++w1)
        for (int w2 = w1; w2 <= 9; ++w2)
            for (int w3 = w2; w3 <= 9; ++w3) {
                int w4 = 12 - w1 - w2 - w3;
                if (w4 >= w3) partitions.push_back({w1, w2, w3, w4});
            }

    std::vector<std::vector<UniMat>> family(10);
    for (int w = 1; w <= 9; ++w) family[w] = parabolic_family(w, entry_bound);

    // One job per ordered (wa, wb, wc) permutation of a partition's first
    // three parts; a found-flag per partition prunes remaining jobs for it
    // without affecting the result set.
    std::vector<OrderedTripleJob> jobs;
    for (std::size_t p = 0; p < partitions.size(); ++p) {
        const auto& part = partitions[p];
        std::array<int, 3> rest{part[0], part[1], part[2]};
        std::sort(rest.begin(), rest.end());
        std::vector<std::array<int, 3>> perms;
        do {
            perms.push_back(rest);
        } while (std::next_permutation(rest.begin(), rest.end()));
        for (const auto& t : perms)
            jobs.push_back({static_cast<int>(p), t[0], t[1], t[2], part[3]});
    }

    std::vector<std::atomic<bool>> found(partitions.size());
    for (auto& f : found) f.store(false);
    std::atomic<std::size_t> next_job{0};
    const Int bound = entry_bound;

    auto run = [&]() {
        for (;;) {
            std::size_t j = next_job.fetch_add(1);
            if (j >= jobs.size()) return;
            const auto& job = jobs[j];
            auto& flag = found[job.partition];
            if (flag.load()) continue;
            const auto& fa = family[job.wa];
            const auto& fb = family[job.wb];
            const auto& fc = family[job.wc];
            for (const auto& A : fa) {
                if (flag.load()) break;
                for (const auto& B : fb) {
                    if (flag.load()) break;
                    UniMat AB = A * B;
                    for (const auto& C : fc) {
                        UniMat D = (AB * C).inverse();
                        if (!within_bound(D, bound)) continue;
                        if (positive_width_or_zero(D, 9) == job.wd) {
                            flag.store(true);
                            break;
                        }
                    }
                }
            }
        }
    };

    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }

    BeauvilleSearchResult result;
    result.entry_bound = entry_bound;
    result.workers = workers;
    for (std::size_t p = 0; p < partitions.size(); ++p)
        if (found[p].load()) result.multisets.push_back(partitions[p]);
    std::sort(result.multisets.begin(), result.multisets.end());
    return result;
}

}  // namespace conifold
