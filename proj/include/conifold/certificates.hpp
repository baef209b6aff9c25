#pragma once

#include "conifold/congruence.hpp"
#include "conifold/schoen.hpp"
#include "conifold/sl2.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace conifold {

/// Conjugator outside Gamma_1(6) where the invariance claim requires
/// membership.
class MembershipError : public std::invalid_argument {
  public:
    explicit MembershipError(const std::string& what) : std::invalid_argument(what) {}
};

/// The local monodromy of the level-6 family at its width-b cusp, b in
/// {1, 2, 3, 6}.  For b in {2, 3, 6} the lower-left entry is -36/b.
const UniMat& local_monodromy(int width);

/// Lower-left entry c.  Under the standard symplectic pairing on Z^2,
/// e1 . (M e1) equals exactly this entry.
inline Int lower_left(const UniMat& m) { return m.c; }

/// True iff conjugating the width-b local monodromy by g in Gamma_1(6) leaves
/// the lower-left entry unchanged modulo `modulus`.  Non-members are rejected:
/// the invariance is specific to Gamma_1(6).
bool residue_invariance_check(int width, const UniMat& g, int modulus = 36);

/// lower_left(g M_b g^{-1}) + lower_left(h^{-1} M_{b'}^{-1} h): the
/// intersection number of the two Lagrangian spheres built from paths with
/// holonomy ambiguity g, h in Gamma_1(6).  b != b', both in {2, 3, 6}.
Int intersection_pairing(int b, int b_prime, const UniMat& g, const UniMat& h);

/// Deterministic sampler of Gamma_1(N) members, alternating random words in
/// {T^{+-1}, L^{+-1}} (L the lower translation by N) with random bounded
/// members assembled column-first.
class ConjugatorSampler {
  public:
    ConjugatorSampler(Level level, std::uint64_t seed);
    UniMat sample();

  private:
    UniMat sample_word();
    UniMat sample_column();

    Level level_;
    std::mt19937_64 rng_;
    bool use_word_ = true;
};

/// Machine form of the essentiality argument for the width pair (b, b'):
/// the pairing residue mod 36 is a nonzero multiple of 6 and is unchanged
/// across every sampled conjugator pair.
struct EssentialityCertificate {
    int b = 0;
    int b_prime = 0;
    Int base_value;           // pairing at g = h = identity
    int residue_mod36 = 0;
    bool is_multiple_of_6 = false;
    bool is_nonzero_mod36 = false;
    long long sampled_conjugators = 0;
    bool passed = false;
    std::string violation;    // names the failed clause, empty when passed
};

EssentialityCertificate essentiality_certificate(int b, int b_prime,
                                                 long long samples = 1000,
                                                 std::uint64_t seed = 0x5eed);

enum class Verdict { NodalDegenerationImpossible, Inconclusive };
const char* to_string(Verdict v);

/// A nodal degeneration would act on middle homology by a symplectic
/// transvection in a nonzero class, which has infinite order; isotrivial
/// monodromy of the rigid threefold has order at most 6.
struct ObstructionReport {
    EssentialityCertificate certificate;
    bool twist_infinite_order = false;
    int allowed_monodromy_order = 0;
    Verdict verdict = Verdict::Inconclusive;
};

ObstructionReport nodal_obstruction(const EssentialityCertificate& cert);

}  // namespace conifold
