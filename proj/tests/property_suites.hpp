#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conifold::testing {

/// Outcome of a randomized property sweep, shared between the unit tests and
/// the acceptance runner (which totals the case counts).
struct PropertyResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

PropertyResult prop_det_preservation(std::uint64_t seed, long long cases);
PropertyResult prop_width_conjugation_invariance(std::uint64_t seed, long long cases);
PropertyResult prop_classify_power_coherence(std::uint64_t seed, long long cases);
PropertyResult prop_transvection_infinite_order(std::uint64_t seed, long long cases);
PropertyResult prop_no_small_finite_order(int entry_bound);
PropertyResult prop_membership_conjugation_closure(std::uint64_t seed, long long cases);
PropertyResult prop_cusp_width_sums();  // levels 2..12
PropertyResult prop_moebius_functoriality(std::uint64_t seed, long long points_per_pair);
PropertyResult prop_hurwitz_invariants(std::uint64_t seed, long long sequences);
PropertyResult prop_transversal_stability(std::uint64_t seed, long long cases);
PropertyResult prop_residue_identity_exhaustive();
PropertyResult prop_stabilizer_contract();  // levels 1..12, all cusps

/// The full fixed-seed harness.
std::vector<PropertyResult> run_all_properties(std::uint64_t seed);

}  // namespace conifold::testing
