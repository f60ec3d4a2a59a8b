#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "exclab/colored_perm.hpp"
#include "exclab/distribution.hpp"
#include "exclab/statistics.hpp"
#include "exclab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failure or resource refusal
constexpr int kExitUsage = 2;

exclab::Restriction restriction_from_string(const std::string& name) {
    if (name == "all") return exclab::Restriction::All;
    if (name == "dn") return exclab::Restriction::EvenColorSum;
    if (name == "derangements") return exclab::Restriction::Derangements;
    if (name == "dn-derangements") return exclab::Restriction::DerangementsEvenColorSum;
    throw CLI::ValidationError("--restriction", "unknown restriction: " + name);
}

exclab::Variant variant_from_string(const std::string& name) {
    if (name == "abs") return exclab::Variant::Abs;
    if (name == "clr") return exclab::Variant::Clr;
    throw CLI::ValidationError("--variant", "unknown variant: " + name);
}

std::uint64_t default_cap() {
    if (const char* env = std::getenv("EXCLAB_CAP")) {
        return std::stoull(env);
    }
    return exclab::kDefaultEnumerationCap;
}

void print_poly(const exclab::MultiPoly& poly, const std::string& format) {
    if (format == "human") {
        std::cout << poly.to_string() << "\n";
    } else if (format == "json") {
        if (poly.is_univariate_q())
            std::cout << poly.to_json_coeff_list() << "\n";
        else
            std::cout << poly.to_json_terms() << "\n";
    } else {  // csv
        if (poly.is_univariate_q()) {
            std::cout << "q,coeff\n";
            for (const auto& [e, c] : poly.terms()) std::cout << e[0] << ',' << c << "\n";
        } else {
            std::cout << "q,t,s,coeff\n";
            for (const auto& [e, c] : poly.terms())
                std::cout << e[0] << ',' << e[1] << ',' << e[2] << ',' << c << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored permutation group statistics and theorem verification"};
    app.require_subcommand(1);

    // stats
    std::string stats_window;
    int stats_r = 1;
    auto* stats_cmd = app.add_subcommand("stats", "Statistics of one window");
    stats_cmd->add_option("window", stats_window, "window notation, e.g. \"3 1^1 2^2\"")
        ->required();
    stats_cmd->add_option("--r", stats_r, "number of colors")->default_val(1);

    // enumerate
    int enum_r = 1, enum_n = 1;
    std::string enum_restriction = "all", enum_format = "json";
    bool with_stats = false;
    std::uint64_t enum_cap = default_cap();
    auto* enum_cmd = app.add_subcommand("enumerate", "List a group in canonical order");
    enum_cmd->add_option("--r", enum_r)->default_val(1);
    enum_cmd->add_option("--n", enum_n)->required();
    enum_cmd->add_option("--restriction", enum_restriction)
        ->check(CLI::IsMember({"all", "dn", "derangements", "dn-derangements"}));
    enum_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"json", "csv"}));
    enum_cmd->add_flag("--with-stats", with_stats, "include the statistics bundle per element");
    enum_cmd->add_option("--cap", enum_cap, "enumeration size cap");

    // poly
    int poly_r = 1, poly_n = 1;
    std::string poly_variant = "abs", poly_restriction = "all", poly_format = "human";
    std::optional<long long> poly_t, poly_s;
    std::uint64_t poly_cap = default_cap();
    auto* poly_cmd = app.add_subcommand("poly", "Brute-force distribution polynomial");
    poly_cmd->add_option("--r", poly_r)->default_val(1);
    poly_cmd->add_option("--n", poly_n)->required();
    poly_cmd->add_option("--variant", poly_variant)->check(CLI::IsMember({"abs", "clr"}));
    poly_cmd->add_option("--restriction", poly_restriction)
        ->check(CLI::IsMember({"all", "dn", "derangements", "dn-derangements"}));
    poly_cmd->add_option("--t", poly_t, "substitute an integer for t");
    poly_cmd->add_option("--s", poly_s, "substitute an integer for s");
    poly_cmd->add_option("--format", poly_format)->check(CLI::IsMember({"json", "csv", "human"}));
    poly_cmd->add_option("--cap", poly_cap, "enumeration size cap");

    // verify
    std::string verify_theorem = "all";
    int verify_max_r = 4, verify_max_n = 5, verify_max_dn = 8, verify_threads = 1;
    std::uint64_t verify_cap = default_cap();
    auto* verify_cmd = app.add_subcommand("verify", "Theorem and proof-structure sweeps");
    verify_cmd->add_option("--theorem", verify_theorem)
        ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "all", "proofs"}));
    verify_cmd->add_option("--max-r", verify_max_r);
    verify_cmd->add_option("--max-n", verify_max_n);
    verify_cmd->add_option("--max-dn", verify_max_dn, "n range for the type-D sweeps");
    verify_cmd->add_option("--cap", verify_cap, "skip cells above this size");
    verify_cmd->add_option("--threads", verify_threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats_cmd->parsed()) {
            exclab::ColoredPermutation sigma = exclab::parse_window(stats_window, stats_r);
            std::cout << exclab::to_json(exclab::stat_bundle(sigma)) << "\n";
            return kExitOk;
        }

        if (enum_cmd->parsed()) {
            const exclab::GroupSpec spec{enum_r, enum_n, restriction_from_string(enum_restriction)};
            if (exclab::group_size(enum_r, enum_n) > enum_cap) {
                std::cerr << "error: group size exceeds cap\n";
                return kExitFailure;
            }
            if (enum_format == "csv") {
                std::cout << (with_stats
                                  ? "window,excAbs,excClr,excA,excUnderlying,csum,cyc,fixAbs\n"
                                  : "window\n");
                exclab::for_each_element(spec, [&](const exclab::ColoredPermutation& sigma) {
                    std::cout << '"' << exclab::format_window(sigma) << '"';
                    if (with_stats) {
                        const auto st = exclab::stat_bundle(sigma);
                        std::cout << ',' << st.excAbs << ',' << st.excClr << ',' << st.excA << ','
                                  << st.excUnderlying << ',' << st.csum << ',' << st.cyc << ','
                                  << st.fixAbs;
                    }
                    std::cout << "\n";
                }, enum_cap);
            } else {
                nlohmann::ordered_json records = nlohmann::ordered_json::array();
                exclab::for_each_element(spec, [&](const exclab::ColoredPermutation& sigma) {
                    nlohmann::ordered_json rec;
                    rec["window"] = exclab::format_window(sigma);
                    if (with_stats)
                        rec["stats"] =
                            nlohmann::ordered_json::parse(exclab::to_json(exclab::stat_bundle(sigma)));
                    records.push_back(rec);
                }, enum_cap);
                std::cout << records.dump() << "\n";
            }
            return kExitOk;
        }

        if (poly_cmd->parsed()) {
            const exclab::GroupSpec spec{poly_r, poly_n, restriction_from_string(poly_restriction)};
            exclab::MultiPoly poly =
                exclab::distribution(spec, variant_from_string(poly_variant), poly_cap);
            if (poly_t) poly = poly.substitute_t(*poly_t);
            if (poly_s) poly = poly.substitute_s(*poly_s);
            print_poly(poly, poly_format);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            exclab::VerifyOptions options;
            options.maxR = verify_max_r;
            options.maxN = verify_max_n;
            options.maxDnN = verify_max_dn;
            options.cap = verify_cap;
            options.threads = verify_threads;
            exclab::VerifyReport report;
            if (verify_theorem == "all")
                report = exclab::verify_all_theorems(options);
            else if (verify_theorem == "proofs")
                report = exclab::verify_proofs(options);
            else
                report = exclab::verify_theorem(exclab::theorem_from_string(verify_theorem),
                                                options);
            std::cout << report.to_json() << "\n";
            return report.all_passed() ? kExitOk : kExitFailure;
        }
    } catch (const std::runtime_error& e) {
        // resource refusals land here
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
