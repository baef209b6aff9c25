#include "conifold/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using conifold::Json;

int write_json(const Json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return 2;
    }
    out << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for elliptic-fibration monodromy "
                 "and conifold-transition invariants"};
    app.require_subcommand(1);

    // verify-paper
    conifold::VerifyOptions opt;
    std::string report_path;
    std::string catalog_path;
    bool timings = false;
    auto* verify = app.add_subcommand(
        "verify-paper", "Run the full verification pipeline and report per-check results");
    verify->add_option("--seed", opt.seed, "RNG seed for the conjugator sweeps");
    verify->add_option("--samples", opt.samples, "conjugator pairs per width pair")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--with-beauville", opt.with_beauville,
                     "include the factorization search (slow path)");
    verify->add_option("--bound", opt.entry_bound, "entry bound for the search")
        ->check(CLI::Range(36LL, 100000LL));
    verify->add_option("--workers", opt.workers, "search worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_option("--catalog", catalog_path, "surface catalog JSON overriding the built-in");
    verify->add_option("--json", report_path, "write the JSON report here ('-' for stdout)");
    verify->add_flag("--timings", timings,
                     "include per-check elapsed_ms in the JSON (breaks byte determinism)");

    // cosets
    int coset_level = 6;
    std::string cosets_json;
    auto* cosets = app.add_subcommand("cosets", "Coset transversal for a level");
    cosets->add_option("level", coset_level, "level N")->required()->check(CLI::Range(1, 2000));
    cosets->add_option("--json", cosets_json, "write JSON here ('-' for stdout)");

    // cusps
    int cusp_level = 6;
    std::string cusps_json;
    auto* cusps = app.add_subcommand("cusps", "Cusp classes and widths for a level");
    cusps->add_option("level", cusp_level, "level N")->required()->check(CLI::Range(1, 2000));
    cusps->add_option("--json", cusps_json, "write JSON here ('-' for stdout)");

    // schoen
    std::string phi_name;
    std::string schoen_json;
    auto* schoen = app.add_subcommand(
        "schoen", "Fiber-product invariants for one automorphism of P^1");
    schoen->add_option("--phi", phi_name, "swap01 | swap0inf | swap1inf | cycle | cycle2")
        ->required();
    schoen->add_option("--json", schoen_json, "write JSON here ('-' for stdout)");

    // intersect
    int cert_b = 2, cert_bp = 6;
    long long cert_samples = 1000;
    std::uint64_t cert_seed = 0x5eed;
    std::string cert_json;
    auto* intersect = app.add_subcommand(
        "intersect", "Essentiality certificate for a width pair");
    intersect->add_option("--b", cert_b, "first width (2, 3, or 6)")->required();
    intersect->add_option("--bprime", cert_bp, "second width (2, 3, or 6)")->required();
    intersect->add_option("--samples", cert_samples, "conjugator pairs to sweep")
        ->check(CLI::PositiveNumber);
    intersect->add_option("--seed", cert_seed, "RNG seed");
    intersect->add_option("--json", cert_json, "write JSON here ('-' for stdout)");

    // obstruction
    long long obs_samples = 1000;
    std::uint64_t obs_seed = 0x5eed;
    std::string obs_json;
    auto* obstruction = app.add_subcommand(
        "obstruction", "Degeneration obstruction report for the built-in threefolds");
    obstruction->add_option("--samples", obs_samples, "conjugator pairs to sweep")
        ->check(CLI::PositiveNumber);
    obstruction->add_option("--seed", obs_seed, "RNG seed");
    obstruction->add_option("--json", obs_json, "write JSON here ('-' for stdout)");

    // beauville-search
    long long search_bound = 100;
    int search_workers = 1;
    std::string search_json;
    auto* search = app.add_subcommand(
        "beauville-search",
        "Width multisets of bounded parabolic factorizations of the identity");
    search->add_option("--bound", search_bound, "max |matrix entry|")
        ->check(CLI::Range(36LL, 100000LL));
    search->add_option("--workers", search_workers, "worker threads")
        ->check(CLI::PositiveNumber);
    search->add_option("--json", search_json, "write JSON here ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
    }

    try {
        if (verify->parsed()) {
            if (!catalog_path.empty()) opt.catalog_path = catalog_path;
            auto report = conifold::run_verification(opt);
            std::cout << conifold::format_table(report);
            if (!report_path.empty()) {
                int rc = write_json(conifold::emit_json(report, opt, timings), report_path);
                if (rc != 0) return rc;
            }
            return report.overall_pass() ? 0 : 1;
        }

        if (cosets->parsed()) {
            auto table = conifold::make_coset_table(conifold::Level(coset_level));
            auto ver = conifold::verify_transversal(table);
            Json reps = Json::array();
            for (std::size_t i = 0; i < table.representatives.size(); ++i) {
                reps.push_back(Json{{"matrix", conifold::to_json(table.representatives[i])},
                                    {"label", table.labels[i].str()}});
            }
            Json j{{"level", coset_level},
                   {"index", conifold::psl_index(table.level)},
                   {"verified", ver.ok},
                   {"representatives", reps}};
            if (!cosets_json.empty()) return write_json(j, cosets_json);
            std::cout << "level " << coset_level << ": " << table.representatives.size()
                      << " cosets (verified: " << (ver.ok ? "yes" : "no") << ")\n";
            for (std::size_t i = 0; i < table.representatives.size(); ++i)
                std::cout << "  " << table.representatives[i].str() << "  label "
                          << table.labels[i].str() << "\n";
            return ver.ok ? 0 : 1;
        }

        if (cusps->parsed()) {
            auto classes = conifold::cusp_classes(conifold::Level(cusp_level));
            long long total = 0;
            Json arr = Json::array();
            for (const auto& c : classes) {
                arr.push_back(conifold::to_json(c));
                total += c.width;
            }
            Json j{{"level", cusp_level},
                   {"classes", arr},
                   {"width_sum", total},
                   {"index", conifold::psl_index(conifold::Level(cusp_level))}};
            if (!cusps_json.empty()) return write_json(j, cusps_json);
            std::cout << "level " << cusp_level << ": " << classes.size() << " cusps, widths sum "
                      << total << "\n";
            for (const auto& c : classes)
                std::cout << "  " << c.cusp.str() << "  width " << c.width << "\n";
            return 0;
        }

        if (schoen->parsed()) {
            auto perm = conifold::parse_permutation(phi_name);
            if (perm.is_identity()) {
                std::cerr << "identity is not admissible\n";
                return 2;
            }
            auto fp = conifold::build_fiber_product(
                conifold::beauville_surface(), conifold::moebius_from_permutation(perm));
            int n = conifold::conifold_count(fp);
            auto hodge = conifold::hodge_of_resolution(n);
            auto transition = conifold::transition_solve_r(
                conifold::schoen_smoothing_invariants().betti, hodge.betti, n);
            Json matched = Json::array();
            for (const auto& m : fp.matched)
                matched.push_back(Json{{"t", m.t.str()},
                                       {"b", m.b},
                                       {"b_prime", m.b_prime},
                                       {"conifolds", m.b * m.b_prime}});
            Json unmatched = Json::array();
            for (const auto& u : fp.unmatched_critical) unmatched.push_back(u.str());
            Json j{{"phi", phi_name},
                   {"matched", matched},
                   {"unmatched_critical", unmatched},
                   {"conifold_count", n},
                   {"resolution", conifold::to_json(hodge)},
                   {"smoothing", conifold::to_json(conifold::schoen_smoothing_invariants())},
                   {"transition", conifold::to_json(transition)}};
            return write_json(j, schoen_json.empty() ? "-" : schoen_json);
        }

        if (intersect->parsed()) {
            auto cert = conifold::essentiality_certificate(cert_b, cert_bp, cert_samples,
                                                           cert_seed);
            int rc = write_json(conifold::to_json(cert), cert_json.empty() ? "-" : cert_json);
            if (rc != 0) return rc;
            return cert.passed ? 0 : 1;
        }

        if (obstruction->parsed()) {
            auto cert = conifold::essentiality_certificate(2, 6, obs_samples, obs_seed);
            auto rep = conifold::nodal_obstruction(cert);
            int rc = write_json(conifold::to_json(rep), obs_json.empty() ? "-" : obs_json);
            if (rc != 0) return rc;
            return rep.verdict == conifold::Verdict::NodalDegenerationImpossible ? 0 : 1;
        }

        if (search->parsed()) {
            auto res = conifold::beauville_search(search_bound, search_workers);
            return write_json(conifold::to_json(res), search_json.empty() ? "-" : search_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
