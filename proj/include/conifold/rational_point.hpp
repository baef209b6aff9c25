#pragma once

#include "conifold/integer.hpp"

#include <iosfwd>
#include <string>

namespace conifold {

/// A point of P^1(Q) in lowest terms: p/q with gcd(p,q) = 1 and q >= 0.
/// (1,0) is the point at infinity.
struct P1Q {
    Int p;
    Int q;

    P1Q() : p(1), q(0) {}
    P1Q(Int num, Int den);

    static P1Q infinity() { return P1Q(); }
    static P1Q integer(Int n) { return P1Q(std::move(n), 1); }

    bool is_infinity() const { return q == 0; }

    bool operator==(const P1Q& o) const { return p == o.p && q == o.q; }
    bool operator!=(const P1Q& o) const { return !(*this == o); }
    // Order by (q, p); gives a stable sort with infinity first.
    bool operator<(const P1Q& o) const { return q != o.q ? q < o.q : p < o.p; }

    std::string str() const;

    /// Accepts "inf", "n", or "n/d".
    static P1Q parse(const std::string& text);
};

std::ostream& operator<<(std::ostream& os, const P1Q& x);

}  // namespace conifold
