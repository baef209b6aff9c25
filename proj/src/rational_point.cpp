#include "conifold/rational_point.hpp"

#include <ostream>
#include <sstream>

namespace conifold {

P1Q::P1Q(Int num, Int den) : p(std::move(num)), q(std::move(den)) {
    if (p == 0 && q == 0) throw std::invalid_argument("(0:0) is not a point of P^1");
    Int g = gcd_int(p < 0 ? Int(-p) : p, q < 0 ? Int(-q) : q);
    if (g > 1) { p /= g; q /= g; }
    if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
}

std::string P1Q::str() const {
    if (is_infinity()) return "inf";
    std::ostringstream os;
    os << p;
    if (q != 1) os << "/" << q;
    return os.str();
}

P1Q P1Q::parse(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "infinity") return P1Q::infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return P1Q(Int(text), 1);
        return P1Q(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("cannot parse P^1(Q) point: '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const P1Q& x) { return os << x.str(); }

}  // namespace conifold
