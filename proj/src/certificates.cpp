#include "conifold/certificates.hpp"

#include "conifold/monodromy.hpp"

#include <limits>

namespace conifold {

const UniMat& local_monodromy(int width) {
    const auto& entries = x16_tuple().entries;
    switch (width) {
        case 1: return entries[0];
        case 2: return entries[2];
        case 3: return entries[3];
        case 6: return entries[1];
    }
    throw std::invalid_argument("local monodromy width must be one of 1, 2, 3, 6");
}

namespace {

const Level kLevel6{6};

void require_member(const UniMat& g, const char* role) {
    if (!is_member(kLevel6, g))
        throw MembershipError(std::string(role) +
                              " must lie in Gamma_1(6); the residue invariance "
                              "holds only for members");
}

}  // namespace

bool residue_invariance_check(int width, const UniMat& g, int modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    require_member(g, "conjugator");
    const UniMat& m = local_monodromy(width);
    Int before = mod_floor(lower_left(m), modulus);
    Int after = mod_floor(lower_left(g * m * g.inverse()), modulus);
    return before == after;
}

Int intersection_pairing(int b, int b_prime, const UniMat& g, const UniMat& h) {
    if (b == b_prime) throw std::invalid_argument("pairing requires b != b'");
    auto check_width = [](int w) {
        if (w != 2 && w != 3 && w != 6)
            throw std::invalid_argument("pairing widths must lie in {2, 3, 6}");
    };
    check_width(b);
    check_width(b_prime);
    require_member(g, "first conjugator");
    require_member(h, "second conjugator");
    const UniMat& mb = local_monodromy(b);
    const UniMat& mbp = local_monodromy(b_prime);
    return lower_left(g * mb * g.inverse()) +
           lower_left(h.inverse() * mbp.inverse() * h);
}

ConjugatorSampler::ConjugatorSampler(Level level, std::uint64_t seed)
    : level_(level), rng_(seed) {}

UniMat ConjugatorSampler::sample() {
    use_word_ = !use_word_;
    return use_word_ ? sample_word() : sample_column();
}

UniMat ConjugatorSampler::sample_word() {
    std::uniform_int_distribution<int> len_dist(1, 12);
    std::uniform_int_distribution<int> gen_dist(0, 3);
    const UniMat t = UniMat::translation(1);
    const UniMat l = UniMat::lower_translation(level_.n);
    UniMat g;
    int len = len_dist(rng_);
    for (int i = 0; i < len; ++i) {
        switch (gen_dist(rng_)) {
            case 0: g = g * t; break;
            case 1: g = g * t.inverse(); break;
            case 2: g = g * l; break;
            default: g = g * l.inverse(); break;
        }
    }
    return g;
}

UniMat ConjugatorSampler::sample_column() {
    // First column (a, c) = (1 + N u, N v) with gcd(a, c) = 1, completed to
    // det 1 and sheared by a random multiple of the column; d == 1 (mod N)
    // follows from the determinant.
    std::uniform_int_distribution<long long> coeff(-6, 6);
    for (;;) {
        Int a = 1 + Int(level_.n) * coeff(rng_);
        Int c = Int(level_.n) * coeff(rng_);
        Int s, t;
        if (ext_gcd(a, c, s, t) != 1) continue;
        Int d0 = s, b0 = -t;
        Int shear = coeff(rng_);
        UniMat g(a, b0 + shear * a, c, d0 + shear * c);
        if (!is_member(level_, g))
            throw std::logic_error("column sampler produced a non-member");
        return g;
    }
}

EssentialityCertificate essentiality_certificate(int b, int b_prime,
                                                 long long samples,
                                                 std::uint64_t seed) {
    EssentialityCertificate cert;
    cert.b = b;
    cert.b_prime = b_prime;
    cert.base_value = intersection_pairing(b, b_prime, UniMat::identity(),
                                           UniMat::identity());
    cert.residue_mod36 = static_cast<int>(mod_floor(cert.base_value, 36));

    Int expected = mod_floor(Int(-36 / b + 36 / b_prime), 36);
    if (cert.residue_mod36 != expected) {
        cert.violation = "base residue differs from -36/b + 36/b' mod 36";
        return cert;
    }
    cert.is_multiple_of_6 = cert.residue_mod36 % 6 == 0;
    cert.is_nonzero_mod36 = cert.residue_mod36 != 0;
    if (!cert.is_multiple_of_6) {
        cert.violation = "residue is not a multiple of 6";
        return cert;
    }
    if (!cert.is_nonzero_mod36) {
        cert.violation = "residue vanishes mod 36";
        return cert;
    }

    ConjugatorSampler sampler(kLevel6, seed);
    for (long long i = 0; i < samples; ++i) {
        UniMat g = sampler.sample();
        UniMat h = sampler.sample();
        Int r = mod_floor(intersection_pairing(b, b_prime, g, h), 36);
        ++cert.sampled_conjugators;
        if (r != cert.residue_mod36) {
            cert.violation = "sampled conjugator pair changed the residue at sample " +
                             std::to_string(i);
            return cert;
        }
    }
    cert.passed = true;
    return cert;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NodalDegenerationImpossible: return "NodalDegenerationImpossible";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

ObstructionReport nodal_obstruction(const EssentialityCertificate& cert) {
    ObstructionReport rep;
    rep.certificate = cert;
    rep.allowed_monodromy_order = degeneration_bound(automorphism_group(beauville_surface()));
    if (!cert.passed) return rep;

    // The pairing residue is nonzero, so the sphere class ell is nonzero in
    // the rank-2 middle homology and pairs nontrivially with some v.  The
    // twist displaces v by k <v, ell> ell, nonzero for every k != 0; sample a
    // range on top of the linear formula.
    LatticeVec ell(1, 0), v(0, 1);
    rep.twist_infinite_order = symplectic_product(v, ell) != 0;
    for (int k = -50; k <= 50 && rep.twist_infinite_order; ++k) {
        if (k == 0) continue;
        if (transvection_apply(ell, k, v) == v) rep.twist_infinite_order = false;
    }
    if (rep.twist_infinite_order && rep.allowed_monodromy_order < std::numeric_limits<int>::max())
        rep.verdict = Verdict::NodalDegenerationImpossible;
    return rep;
}

}  // namespace conifold
