#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cubenerve/factorization.hpp"
#include "cubenerve/identities.hpp"
#include "cubenerve/nerve_fixture.hpp"
#include "cubenerve/pcs.hpp"

using namespace cubenerve;

namespace {

int run_factorize(int n, int k, const std::string& sign_str, bool as_json) {
    face_factorization ff(n, k, sign_from_char(sign_str[0]));
    if (as_json) {
        nlohmann::json j = factorization_to_json(ff);
        std::cout << j.dump(2) << "\n";
        return j["verified"] == true ? 0 : 1;
    }
    std::string out = format_factorization(ff);
    std::cout << out;
    return out.find("MISMATCH") == std::string::npos ? 0 : 1;
}

int run_verify(int max_dim, int samples, std::uint64_t seed, bool as_json) {
    suite_report r = run_identity_suite(max_dim, samples, seed);
    if (as_json)
        std::cout << suite_report_to_json(r).dump(2) << "\n";
    else
        std::cout << format_suite_report(r);
    return r.passed() ? 0 : 1;
}

int run_counterexample(bool as_json) {
    counterexample_result r = counterexample();
    if (as_json) {
        std::cout << counterexample_to_json(r).dump(2) << "\n";
    } else {
        for (const std::string& line : r.report) std::cout << line << "\n";
        std::cout << (r.all_expected ? "all facts as predicted"
                                     : "UNEXPECTED FACTS PRESENT")
                  << "\n";
    }
    return r.all_expected ? 0 : 1;
}

int run_check_pcs(const std::string& file, int max_dim, bool as_json) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << file << " is not JSON: " << e.what() << "\n";
        return 2;
    }
    finite_pcs X = pcs_from_json(j);
    std::vector<std::string> errors = validate_pcs(X);
    if (!errors.empty()) {
        for (const std::string& e : errors) std::cerr << "invalid: " << e << "\n";
        return 2;
    }
    completeness_report r = completeness_check(X, max_dim);
    if (as_json)
        std::cout << completeness_report_to_json(r).dump(2) << "\n";
    else
        std::cout << format_completeness_report(r);
    return r.complete() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in cubical nerves of omega-categories"};
    app.require_subcommand(1);

    int n = 3, k = 1;
    std::string sign_str = "+";
    bool fac_json = false;
    CLI::App* fac = app.add_subcommand(
        "factorize",
        "factor one face of a cube's atom through a chosen codimension-1 face");
    fac->add_option("--n", n, "cube dimension")->required()->check(CLI::Range(1, 8));
    fac->add_option("--k", k, "face slot, 1-based")->required();
    fac->add_option("--sign", sign_str, "face sign, - or +")
        ->required()
        ->check(CLI::IsMember({"-", "+"}));
    fac->add_flag("--json", fac_json, "emit machine-readable tree and chains");

    std::string suite = "abs-identities";
    int verify_dim = 2, samples = 200;
    std::uint64_t seed = 1;
    bool verify_json = false;
    CLI::App* ver = app.add_subcommand(
        "verify", "check the composition laws over the built-in nerves");
    ver->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"abs-identities"}));
    ver->add_option("--max-dim", verify_dim, "largest cube dimension")
        ->required()
        ->check(CLI::Range(0, 3));
    ver->add_option("--samples", samples, "instances per sampled law")
        ->check(CLI::PositiveNumber);
    ver->add_option("--seed", seed, "sampling seed");
    ver->add_flag("--json", verify_json, "emit the report as JSON");

    bool counter_json = false;
    CLI::App* counter = app.add_subcommand(
        "counterexample",
        "build the two-level category whose nerve has a thin filler with a "
        "non-thin face");
    counter->add_flag("--json", counter_json, "emit the facts as JSON");

    std::string file;
    int check_dim = 1;
    bool check_json = false;
    CLI::App* check = app.add_subcommand(
        "check-pcs", "test a stratified precubical set for completeness");
    check->add_option("file", file, "JSON description of the set")
        ->required()
        ->check(CLI::ExistingFile);
    check->add_option("--max-dim", check_dim, "truncation level")
        ->required()
        ->check(CLI::Range(0, 6));
    check->add_flag("--json", check_json, "emit the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fac->parsed()) return run_factorize(n, k, sign_str, fac_json);
        if (ver->parsed()) return run_verify(verify_dim, samples, seed, verify_json);
        if (counter->parsed()) return run_counterexample(counter_json);
        if (check->parsed()) return run_check_pcs(file, check_dim, check_json);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
