#pragma once

#include "conifold/certificates.hpp"
#include "conifold/monodromy.hpp"
#include "conifold/schoen.hpp"
#include "conifold/surfaces.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conifold {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus s);

/// Origin of an expected value: "reference" for a published catalog constant,
/// "derived" for a value recomputed by an independent route, "trivial" for a
/// definitional case.
enum class Provenance { Reference, Derived, Trivial };
const char* to_string(Provenance p);

struct Check {
    std::string id;
    std::string anchor;  // one-line statement of the claim being verified
    CheckStatus status = CheckStatus::Skipped;
    Json computed;
    Json expected;
    Provenance provenance = Provenance::Derived;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool overall_pass() const;
    int count(CheckStatus s) const;
};

struct VerifyOptions {
    std::uint64_t seed = 0x5eed;
    long long samples = 1000;
    bool with_beauville = false;
    long long entry_bound = 100;
    int workers = 1;
    std::optional<std::string> catalog_path;  // overrides the built-in surface
};

/// Runs the full pipeline: SL_2 relation, level-6 combinatorics, tuple
/// validation, the fiber-product calculus over all five permutations,
/// transition bookkeeping, essentiality certificates, the obstruction
/// verdict, and (behind the flag) the factorization search.  Module errors
/// become failed checks, never exceptions.
VerificationReport run_verification(const VerifyOptions& options);

/// Stable-order JSON form.  Timings are excluded by default so that reruns
/// with the same flags and seed are byte-identical.
Json emit_json(const VerificationReport& report, const VerifyOptions& options,
               bool include_timings = false);

/// Human-readable table, one line per check.
std::string format_table(const VerificationReport& report);

// JSON helpers shared with the command-line front end.
Json json_int(const Int& v);  // number when it fits, decimal string otherwise
Json to_json(const UniMat& m);
Json to_json(const TupleReport& rep);
Json to_json(const CuspClass& c);
Json to_json(const HodgeSummary& h);
Json to_json(const TransitionData& t);
Json to_json(const EssentialityCertificate& c);
Json to_json(const ObstructionReport& r);
Json to_json(const BeauvilleSearchResult& r);
Json catalog_to_json(const std::vector<SurfaceDesc>& catalog);
std::vector<SurfaceDesc> catalog_from_json(const Json& j);

}  // namespace conifold
