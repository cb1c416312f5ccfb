#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "fhsforge/bounds.hpp"
#include "fhsforge/constructions.hpp"
#include "fhsforge/cyclic.hpp"
#include "fhsforge/error.hpp"
#include "fhsforge/fhs.hpp"
#include "fhsforge/io.hpp"
#include "fhsforge/parallel.hpp"

#ifndef FHSFORGE_VERSION
#define FHSFORGE_VERSION "0.0.0"
#endif

using namespace fhsforge;
namespace fs = std::filesystem;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitBudgetLimited = 3;
constexpr int kExitInputError = 4;

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

// --cap beats FHSFORGE_CAP beats the built-in default.
std::uint64_t resolve_cap(const std::optional<std::uint64_t>& flag)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("FHSFORGE_CAP"); env && *env) {
        const std::string text(env);
        if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19)
            throw Error(ErrorKind::ParseError, "FHSFORGE_CAP must be a positive integer, got \"" + text + "\"");
        const auto value = std::stoull(text);
        if (value == 0)
            throw Error(ErrorKind::ParseError, "FHSFORGE_CAP must be positive");
        return value;
    }
    return kDefaultEnumerationCap;
}

BigInt parse_big(const std::string& text, const char* what)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::ParseError, std::string(what) + " must be a nonnegative integer, got \"" + text + "\"");
    return BigInt(text);
}

struct Globals {
    unsigned threads = default_thread_count();
    std::optional<std::uint64_t> cap;
};

// Shared by code and mindist.
struct CodeArgs {
    unsigned n = 0;
    std::uint64_t q = 0;
    std::vector<unsigned> z;
    std::vector<unsigned> cosets;
    bool ding = false;
    unsigned m = 0;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--n", n, "Code length");
        cmd->add_option("--q", q, "Field order")->required();
        cmd->add_option("--z", z, "Defining set, comma separated")->delimiter(',');
        cmd->add_option("--cosets", cosets, "Union of the cosets containing these residues")->delimiter(',');
        cmd->add_flag("--ding", ding, "The [n, n-m, 3] code with defining set C_1");
        cmd->add_option("--m", m, "Extension degree for --ding");
    }

    CyclicCode build() const
    {
        if (ding) {
            if (m == 0)
                throw Error(ErrorKind::PreconditionViolated, "--ding needs --m");
            return ding_code(q, m);
        }
        if (n == 0)
            throw Error(ErrorKind::PreconditionViolated, "--n is required unless --ding is given");
        const auto factorization = factor_x_n_minus_1(n, FiniteField::of_order(q));
        std::vector<unsigned> defining = z;
        for (unsigned r : cosets) {
            if (r >= n)
                throw Error(ErrorKind::NotCosetClosed, "coset residue " + std::to_string(r) + " is not below n");
            const auto& members = factorization.cosets[factorization.coset_of[r]].members;
            defining.insert(defining.end(), members.begin(), members.end());
        }
        return build_code(factorization, defining);
    }
};

Json predicate_json(const CyclicCode& code)
{
    Json out;
    if (code.contains_constants())
        out["nonconstant_orbits_full"] = nonconstant_orbits_full(code);
    else
        out["nonconstant_orbits_full"] = nullptr;
    if (code.dimension() > 0)
        out["nonzero_orbits_full"] = nonzero_orbits_full(code);
    else
        out["nonzero_orbits_full"] = nullptr;
    return out;
}

std::string join(const std::vector<unsigned>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? ", " : "") + std::to_string(values[i]);
    return out;
}

int build_exit_code(const FamilyInstance& inst)
{
    if (inst.claim_mismatch())
        return kExitMismatch;
    if (inst.fully_verified()) {
        const auto& r = inst.report;
        return (r.meets_singleton || r.meets_peng_fan || r.meets_sphere) ? kExitVerified : kExitMismatch;
    }
    return kExitBudgetLimited;
}

struct Output {
    std::string name;
    std::string contents;
};

Json write_outputs(const fs::path& dir, const std::vector<Output>& files)
{
    fs::create_directories(dir);
    Json digests = Json::object();
    std::string combined;
    for (const auto& f : files) {
        write_file((dir / f.name).string(), f.contents);
        const auto h = sha256_hex(f.contents);
        digests[f.name] = h;
        combined += f.name + " " + h + "\n";
    }
    Json out;
    out["outputs"] = std::move(digests);
    out["result_digest"] = sha256_hex(combined);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    const auto started = std::chrono::steady_clock::now();
    CLI::App app{"Construct and verify optimal frequency-hopping sequence sets from cyclic codes"};
    app.set_version_flag("--version", std::string(FHSFORGE_VERSION));
    app.require_subcommand(1);

    Globals globals;
    app.add_option("--threads", globals.threads, "Worker threads (default: available parallelism)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--cap", globals.cap, "Enumeration cap on q^k (overrides FHSFORGE_CAP)");

    std::function<int()> action;

    // cosets
    unsigned cos_n = 0;
    std::uint64_t cos_q = 0;
    bool cos_json = false;
    auto* cmd_cosets = app.add_subcommand("cosets", "q-cyclotomic cosets modulo n");
    cmd_cosets->add_option("--n", cos_n)->required();
    cmd_cosets->add_option("--q", cos_q)->required();
    cmd_cosets->add_flag("--json", cos_json);
    cmd_cosets->callback([&] {
        action = [&] {
            const auto cosets = cyclotomic_cosets(cos_n, cos_q);
            if (cos_json) {
                Json out;
                out["n"] = cos_n;
                out["q"] = cos_q;
                out["cosets"] = to_json(cosets);
                std::cout << dump(out);
            } else {
                for (const auto& c : cosets)
                    std::cout << "C_" << c.representative << " = {" << join(c.members) << "}\n";
            }
            return kExitVerified;
        };
    });

    // factor
    unsigned fac_n = 0;
    std::uint64_t fac_q = 0;
    bool fac_json = false;
    auto* cmd_factor = app.add_subcommand("factor", "Factor x^n - 1 over GF(q), one factor per coset");
    cmd_factor->add_option("--n", fac_n)->required();
    cmd_factor->add_option("--q", fac_q)->required();
    cmd_factor->add_flag("--json", fac_json);
    cmd_factor->callback([&] {
        action = [&] {
            const auto fac = factor_x_n_minus_1(fac_n, FiniteField::of_order(fac_q));
            if (fac_json) {
                std::cout << dump(to_json(fac));
            } else {
                for (std::size_t i = 0; i < fac.cosets.size(); ++i) {
                    const auto& coeffs = fac.factors[i].coefficients();
                    std::cout << "M_" << fac.cosets[i].representative << " {" << join(fac.cosets[i].members)
                              << "}: [" << join(std::vector<unsigned>(coeffs.begin(), coeffs.end())) << "]\n";
                }
            }
            return kExitVerified;
        };
    });

    // code
    CodeArgs code_args;
    bool code_classes = false;
    auto* cmd_code = app.add_subcommand("code", "Build a cyclic code from its defining set and inspect it");
    code_args.attach(cmd_code);
    cmd_code->add_flag("--classes", code_classes, "Enumerate shift classes and tally their sizes");
    cmd_code->callback([&] {
        action = [&] {
            const auto code = code_args.build();
            Json out = to_json(code);
            out["predicates"] = predicate_json(code);
            if (code_classes) {
                EnumerationOptions opts{resolve_cap(globals.cap), globals.threads};
                const auto classes = enumerate_classes(code, Exclude::none, opts);
                std::map<unsigned, std::uint64_t> sizes;
                for (const auto& c : classes)
                    ++sizes[c.size];
                Json tally = Json::object();
                for (auto [size, count] : sizes)
                    tally[std::to_string(size)] = count;
                out["class_sizes"] = std::move(tally);
            }
            std::cout << dump(out);
            return kExitVerified;
        };
    });

    // mindist
    CodeArgs dist_args;
    auto* cmd_mindist = app.add_subcommand("mindist", "Exhaustive minimum distance of a cyclic code");
    dist_args.attach(cmd_mindist);
    cmd_mindist->callback([&] {
        action = [&] {
            const auto code = dist_args.build();
            EnumerationOptions opts{resolve_cap(globals.cap), globals.threads};
            const unsigned d = min_distance_exhaustive(code, opts);
            Json out;
            out["n"] = code.length();
            out["k"] = code.dimension();
            out["d"] = d;
            out["mds"] = d == code.length() - code.dimension() + 1;
            std::cout << dump(out);
            return kExitVerified;
        };
    });

    // build
    std::string b_family;
    unsigned b_m = 0, b_n = 0;
    std::optional<unsigned> b_k_opt;
    std::uint64_t b_q = 0;
    bool b_params_only = false, b_csv = false, b_early = false, b_no_mindist = false;
    double b_budget = kDefaultCorrelationBudget;
    std::optional<std::uint64_t> b_seed;
    std::uint64_t b_samples = 1'000'000;
    std::string b_out;
    auto* cmd_build = app.add_subcommand("build", "Construct a family instance and verify its parameters");
    cmd_build->add_option("--family", b_family, "A, B or C")->required()->check(CLI::IsMember({"A", "B", "C"}));
    cmd_build->add_option("--m", b_m, "A: q = 2^m");
    cmd_build->add_option("--k", b_k_opt, "A, C: k");
    cmd_build->add_option("--q", b_q, "B, C: field order");
    cmd_build->add_option("--n", b_n, "C: odd divisor of q + 1");
    cmd_build->add_flag("--params-only", b_params_only, "Skip enumeration; report claimed parameters and bounds");
    cmd_build->add_option("--budget", b_budget, "Pairwise comparison budget N^2 n^2");
    cmd_build->add_option("--seed", b_seed, "Enables sampled correlation above the budget");
    cmd_build->add_option("--samples", b_samples, "Sample count for sampled correlation");
    cmd_build->add_flag("--early-exit", b_early, "Stop the pairwise sweep at the distance-derived bound");
    cmd_build->add_flag("--no-mindist", b_no_mindist, "Skip the exhaustive minimum distance check");
    cmd_build->add_flag("--csv", b_csv, "Also write fhs.csv");
    cmd_build->add_option("--out", b_out, "Directory for exports and the run manifest");
    cmd_build->callback([&] {
        action = [&] {
            FamilyParams params;
            if (b_family == "A") {
                if (b_m == 0 || !b_k_opt)
                    throw Error(ErrorKind::PreconditionViolated, "family A needs --m and --k");
                params = family_a_params(b_m, *b_k_opt);
            } else if (b_family == "B") {
                if (b_q == 0)
                    throw Error(ErrorKind::PreconditionViolated, "family B needs --q");
                params = family_b_params(b_q);
            } else {
                if (b_q == 0 || b_n == 0)
                    throw Error(ErrorKind::PreconditionViolated, "family C needs --q and --n");
                params = family_c_params(b_q, b_n, b_k_opt.value_or(0));
            }
            VerificationPolicy policy;
            policy.enumeration_cap = resolve_cap(globals.cap);
            policy.correlation_budget = b_budget;
            policy.sample_seed = b_seed;
            policy.samples = b_samples;
            policy.threads = globals.threads;
            policy.params_only = b_params_only;
            policy.check_min_distance = !b_no_mindist;
            policy.early_exit = b_early;

            const auto inst = build_family(params, policy);
            Json summary = to_json(inst);
            summary["bounds"] = to_json(inst.report);
            const int code = build_exit_code(inst);
            summary["exit_code"] = code;

            if (!b_out.empty()) {
                std::vector<Output> files;
                files.push_back({"instance.json", dump(to_json(inst))});
                files.push_back({"bounds.json", dump(to_json(inst.report))});
                files.push_back({"code.json", dump(to_json(inst.code))});
                if (inst.set) {
                    files.push_back({"fhs.json", dump(to_json(*inst.set))});
                    if (b_csv)
                        files.push_back({"fhs.csv", to_csv(*inst.set)});
                }
                Json manifest;
                manifest["tool"] = "fhsforge";
                manifest["version"] = FHSFORGE_VERSION;
                manifest["command"] = "build";
                manifest["argv"] = std::vector<std::string>(argv, argv + argc);
                Json p;
                p["family"] = b_family;
                if (params.family == Family::A)
                    p["m"] = b_m;
                if (params.family != Family::A)
                    p["q"] = b_q;
                if (params.family == Family::C)
                    p["n"] = b_n;
                if (params.family != Family::B)
                    p["k"] = params.k;
                p["params_only"] = b_params_only;
                p["early_exit"] = b_early;
                p["min_distance_check"] = !b_no_mindist;
                manifest["parameters"] = std::move(p);
                manifest["caps"] = {{"enumeration_cap", policy.enumeration_cap}, {"correlation_budget", b_budget}};
                manifest["seed"] = b_seed ? Json(*b_seed) : Json(nullptr);
                manifest["samples"] = b_seed ? Json(b_samples) : Json(nullptr);
                manifest["threads"] = globals.threads;
                const auto written = write_outputs(b_out, files);
                manifest["outputs"] = written["outputs"];
                manifest["result_digest"] = written["result_digest"];
                manifest["exit_code"] = code;
                manifest["wall_clock_seconds"] =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
                write_file((fs::path(b_out) / "manifest.json").string(), dump(manifest));
            }
            std::cout << dump(summary);
            return code;
        };
    });

    // verify
    std::string v_path;
    double v_budget = kDefaultCorrelationBudget;
    std::optional<std::uint64_t> v_seed;
    std::uint64_t v_samples = 1'000'000;
    auto* cmd_verify = app.add_subcommand("verify", "Re-measure M(F) of an exported FHS set");
    cmd_verify->add_option("path", v_path, "FHS set JSON")->required();
    cmd_verify->add_option("--budget", v_budget, "Pairwise comparison budget N^2 n^2");
    cmd_verify->add_option("--seed", v_seed, "Enables sampled correlation above the budget");
    cmd_verify->add_option("--samples", v_samples);
    cmd_verify->callback([&] {
        action = [&] {
            std::optional<FhsSet> loaded;
            try {
                loaded.emplace(read_fhs_set(v_path));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::ParseError)
                    throw;
                // Well-formed file, but not a valid set (duplicates, stray symbols).
                Json out;
                out["valid"] = false;
                out["error"] = e.what();
                std::cout << dump(out);
                return kExitMismatch;
            }
            const FhsSet& set = *loaded;
            Json out;
            out["valid"] = true;
            out["n"] = set.length();
            out["ell"] = set.alphabet_size();
            out["N"] = set.size();
            out["stored_lambda"] = set.lambda() ? Json(*set.lambda()) : Json(nullptr);
            if (correlation_cost(set) <= v_budget) {
                CorrelationOptions opts;
                opts.budget = v_budget;
                opts.threads = globals.threads;
                const unsigned measured = max_nontrivial(set, opts);
                const bool match = !set.lambda() || *set.lambda() == measured;
                out["correlation"] = "exhaustive";
                out["measured_lambda"] = measured;
                out["match"] = match;
                if (set.length() * set.size() >= 2)
                    out["bounds"] = to_json(optimality_report(set, measured, true));
                std::cout << dump(out);
                return match ? kExitVerified : kExitMismatch;
            }
            if (!v_seed) {
                out["correlation"] = "none";
                out["reason"] = "pairwise sweep exceeds the budget; pass --seed for sampled verification";
                std::cout << dump(out);
                return kExitBudgetLimited;
            }
            const auto sampled = sample_max_nontrivial(set, v_samples, *v_seed);
            out["correlation"] = "sampled";
            out["sampled"] = {{"lower_bound", sampled.lower_bound}, {"samples", sampled.samples}, {"seed", sampled.seed}};
            const bool exceeded = set.lambda() && sampled.lower_bound > *set.lambda();
            out["match"] = exceeded ? Json(false) : Json(nullptr);
            std::cout << dump(out);
            return exceeded ? kExitMismatch : kExitBudgetLimited;
        };
    });

    // bounds
    std::uint64_t bd_n = 0, bd_ell = 0, bd_lambda = 0;
    std::string bd_big_n;
    auto* cmd_bounds = app.add_subcommand("bounds", "Bound report for raw (n, N, ell, lambda)");
    cmd_bounds->add_option("--n", bd_n)->required();
    cmd_bounds->add_option("--N", bd_big_n, "Set size (decimal, any size)")->required();
    cmd_bounds->add_option("--ell", bd_ell)->required();
    cmd_bounds->add_option("--lambda", bd_lambda)->required();
    cmd_bounds->callback([&] {
        action = [&] {
            const auto report = optimality_report(bd_n, parse_big(bd_big_n, "--N"), bd_ell, bd_lambda, false);
            std::cout << dump(to_json(report));
            return kExitVerified;
        };
    });

    // pf-identity
    std::uint64_t pf_n = 40, pf_big_n = 200, pf_ell = 60;
    auto* cmd_pf = app.add_subcommand("pf-identity", "Sweep the grid checking the two Peng-Fan bounds agree");
    cmd_pf->add_option("--n-max", pf_n);
    cmd_pf->add_option("--N-max", pf_big_n);
    cmd_pf->add_option("--l-max", pf_ell);
    cmd_pf->callback([&] {
        action = [&] {
            const auto report = peng_fan_identity_sweep(pf_n, pf_big_n, pf_ell, globals.threads);
            std::cout << dump(to_json(report));
            return report.ok() ? kExitVerified : kExitMismatch;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "fhsforge: " << e.what() << "\n";
        return e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::EnumerationTooLarge
                   ? kExitBudgetLimited
                   : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "fhsforge: " << e.what() << "\n";
        return kExitInputError;
    }
}
