// revdist: reversal-distance bounds, exact distances, fatgraph export and
// batch verification for signed permutations.
//
// Exit codes: 0 success, 1 verification/equality failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revperm/bounds.hpp"
#include "revperm/fatgraph.hpp"
#include "revperm/oracle.hpp"
#include "revperm/plane_permutation.hpp"
#include "revperm/signed_permutation.hpp"
#include "revperm/verify.hpp"

namespace {

using revperm::SignedPermutation;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<SignedPermutation> parse_lines(std::istream& in) {
    std::vector<SignedPermutation> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(SignedPermutation::parse(line));
    }
    if (out.empty()) throw UsageError("no permutations in input");
    return out;
}

// A permutation argument is a quoted literal, a filename, or "-" for stdin;
// existing paths win, --file forces the file interpretation.
std::vector<SignedPermutation> resolve_input(const std::string& arg, bool force_file) {
    if (arg == "-" && !force_file) return parse_lines(std::cin);
    if (force_file || std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open file '" + arg + "'");
        return parse_lines(in);
    }
    return {SignedPermutation::parse(arg)};
}

SignedPermutation single_input(const std::string& arg) {
    return SignedPermutation::parse(arg);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write file '" + out_path + "'");
    out << text;
}

int run_bound(const std::string& arg, bool force_file, const std::string& method,
              bool as_json) {
    const auto perms = resolve_input(arg, force_file);
    nlohmann::json docs = nlohmann::json::array();
    for (const auto& a : perms) {
        if (method == "all") {
            const revperm::BoundReport r = revperm::check_equivalence(a);
            if (as_json)
                docs.push_back(nlohmann::json::parse(r.to_json()));
            else
                std::cout << r.bound_plane << "\n";
        } else {
            int bound = 0;
            if (method == "plane")
                bound = revperm::bound_plane(a);
            else if (method == "bg")
                bound = revperm::bound_bg(a);
            else
                bound = revperm::genus(revperm::fatgraph_from_signed(a)).genus;
            if (as_json)
                docs.push_back({{"n", a.size()}, {"method", method}, {"bound", bound}});
            else
                std::cout << bound << "\n";
        }
    }
    if (as_json)
        std::cout << (docs.size() == 1 ? docs[0].dump() : docs.dump()) << "\n";
    return kExitOk;
}

int run_exact(const std::string& arg, int max_n, bool as_json) {
    const SignedPermutation a = single_input(arg);
    const int d = revperm::exact_distance(a, max_n);
    if (as_json)
        std::cout << nlohmann::json{{"n", a.size()}, {"distance", d}}.dump() << "\n";
    else
        std::cout << d << "\n";
    return kExitOk;
}

int run_sort(const std::string& arg, bool show_steps, bool as_json) {
    const SignedPermutation a = single_input(arg);
    const revperm::SortCertificate cert = revperm::greedy_sort(a);
    if (!revperm::validate(cert)) {
        std::cerr << "error: produced certificate failed validation\n";
        return kExitFailure;
    }
    if (as_json) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : cert.steps) steps.push_back({s.i, s.j});
        std::cout << nlohmann::json{{"start", a.format()},
                                    {"length", cert.steps.size()},
                                    {"steps", steps}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "length: " << cert.steps.size() << "\n";
        if (show_steps)
            for (const auto& s : cert.steps)
                std::cout << s.i << " " << s.j << "\n";
    }
    return kExitOk;
}

int run_fatgraph(const std::string& arg, const std::string& format,
                 const std::string& out_path) {
    const SignedPermutation a = single_input(arg);
    const revperm::Fatgraph fg = revperm::fatgraph_from_signed(a);
    const auto fmt = format == "json" ? revperm::FatgraphFormat::json
                                      : revperm::FatgraphFormat::dot;
    emit(revperm::export_fatgraph(fg, fmt), out_path);
    return kExitOk;
}

int run_verify(const revperm::VerifyOptions& opts, bool as_json) {
    const auto results = revperm::run_verification(opts);
    bool all_pass = true;
    if (as_json) {
        nlohmann::json docs = nlohmann::json::array();
        for (const auto& r : results) {
            docs.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        std::cout << docs.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            for (size_t pad = r.name.size(); pad < 24; ++pad) std::cout << ' ';
            std::cout << r.detail << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? kExitOk : kExitFailure;
}

int run_survey(int n, bool exhaustive, std::uint64_t samples, std::uint64_t seed,
               int max_n, const std::string& csv_path, bool as_json) {
    const revperm::SurveyReport report =
        exhaustive ? revperm::survey_exhaustive(n, max_n)
                   : revperm::survey_sampled(n, samples, seed, max_n);
    if (!csv_path.empty()) emit(report.to_csv(), csv_path);
    if (as_json) {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << "n=" << report.n << " total=" << report.total
                  << " tight=" << report.tight << "\n";
        for (const auto& [gap, count] : report.histogram)
            std::cout << "gap " << gap << ": " << count << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversal-distance bounds for signed permutations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of plain text");

    std::string perm_arg;
    bool force_file = false;
    std::string method = "all";
    int max_n = revperm::kDefaultBfsCap;
    bool show_steps = false;
    std::string format;
    std::string out_path;
    revperm::VerifyOptions vopts;
    int survey_n = 0;
    bool survey_exhaustive_flag = false;
    std::uint64_t survey_samples = 0;
    std::uint64_t survey_seed = 1;
    std::string csv_path;

    auto* bound = app.add_subcommand("bound", "lower bound(s) for the reversal distance");
    bound->add_option("perm", perm_arg, "permutation, file, or - for stdin")->required();
    bound->add_option("--method", method, "plane|bg|genus|all (default all)")
        ->check(CLI::IsMember({"plane", "bg", "genus", "all"}));
    bound->add_flag("--file", force_file, "treat the argument as a file path");

    auto* exact = app.add_subcommand("exact", "exact distance by breadth-first search");
    exact->add_option("perm", perm_arg)->required();
    exact->add_option("--max-n", max_n, "search cap (default 7)")->envname("REVDIST_MAX_N");

    auto* sort = app.add_subcommand("sort", "greedy sorting certificate");
    sort->add_option("perm", perm_arg)->required();
    sort->add_flag("--show-steps", show_steps, "print the reversal steps");

    auto* fatgraph = app.add_subcommand("fatgraph", "export the fatgraph of a permutation");
    fatgraph->add_option("perm", perm_arg)->required();
    fatgraph->add_option("--format", format, "json|dot")
        ->required()
        ->check(CLI::IsMember({"json", "dot"}));
    fatgraph->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the invariant battery");
    verify->add_option("--exhaustive-n", vopts.exhaustive_n, "exhaustive corpus cap (default 3)");
    verify->add_option("--samples", vopts.samples, "random permutations per n (default 1000)");
    verify->add_option("--seed", vopts.seed, "random seed (default 1)");
    verify->add_option("--max-n", vopts.max_n, "largest random n (default 10)");

    auto* survey = app.add_subcommand("survey", "bound tightness against the exact distance");
    survey->add_option("--n", survey_n, "permutation length")->required();
    survey->add_flag("--exhaustive", survey_exhaustive_flag, "survey every permutation");
    survey->add_option("--samples", survey_samples, "number of random permutations");
    survey->add_option("--seed", survey_seed, "random seed (default 1)");
    survey->add_option("--max-n", max_n, "search cap (default 7)")->envname("REVDIST_MAX_N");
    survey->add_option("--csv", csv_path, "write the gap histogram as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (bound->parsed()) return run_bound(perm_arg, force_file, method, as_json);
        if (exact->parsed()) return run_exact(perm_arg, max_n, as_json);
        if (sort->parsed()) return run_sort(perm_arg, show_steps, as_json);
        if (fatgraph->parsed()) return run_fatgraph(perm_arg, format, out_path);
        if (verify->parsed()) return run_verify(vopts, as_json);
        if (survey->parsed()) {
            if (survey_exhaustive_flag == (survey_samples > 0))
                throw UsageError("survey needs exactly one of --exhaustive or --samples");
            return run_survey(survey_n, survey_exhaustive_flag, survey_samples,
                              survey_seed, max_n, csv_path, as_json);
        }
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
