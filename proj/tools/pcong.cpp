#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcong/fivesquares.hpp"
#include "pcong/partitions.hpp"
#include "pcong/quadforms.hpp"
#include "pcong/report.hpp"
#include "pcong/verify.hpp"

namespace {

int run_verify(const pcong::RunConfig& config, const std::string& format,
               const std::string& out_path) {
    std::vector<pcong::CheckReport> reports = pcong::run_all(config);
    std::string body;
    if (format == "json")
        body = pcong::report_json(reports);
    else if (format == "csv")
        body = pcong::report_csv(reports);
    else
        body = pcong::report_text(reports);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path);
        if (!out) throw pcong::ConfigError("cannot open '" + out_path + "' for writing");
        out << body;
        if (!out.flush())
            throw pcong::ConfigError("write to '" + out_path + "' failed");
    }
    return pcong::exit_code_for(reports);
}

int run_list() {
    for (const pcong::CheckInfo& info : pcong::registered_checks()) {
        std::cout << info.name << "  (n_max " << info.default_n_max;
        if (info.default_alpha_max) std::cout << ", alpha_max " << *info.default_alpha_max;
        if (info.default_primes) {
            std::cout << ", primes ";
            for (std::size_t i = 0; i < info.default_primes->size(); i++)
                std::cout << (i ? "," : "") << (*info.default_primes)[i];
        }
        std::cout << ")\n    " << info.statement << "\n";
    }
    return 0;
}

int run_compute(const std::string& what, std::int64_t n, const std::string& form_text) {
    if (what == "r5") {
        if (n < 0 || n > 20000)
            throw pcong::ConfigError("r5 queries cover 0 <= n <= 20000");
        pcong::TruncatedSeries th5 =
            pcong::r5_series(static_cast<int>(n), pcong::CoefficientRing::exact());
        std::cout << "r5(" << n << ") = " << pcong::to_string(th5.coeff(static_cast<int>(n)))
                  << "\n";
        return 0;
    }
    if (what == "R") {
        pcong::DiagonalForm form(pcong::parse_int_list(form_text));
        if (n < 0) throw pcong::ConfigError("R queries need n >= 0");
        std::cout << "R(" << n << ", (" << form_text
                  << ")) = " << pcong::count_representations(n, form) << "\n";
        return 0;
    }
    pcong::PartitionKind kind = pcong::parse_partition_kind(what);
    if (n < 0 || n > 650)
        throw pcong::ConfigError(
            "exact partition values are available for 0 <= n <= 650");
    pcong::TruncatedSeries gf = pcong::partition_series(
        kind, static_cast<int>(n), pcong::CoefficientRing::exact());
    std::cout << pcong::partition_kind_name(kind) << "(" << n
              << ") = " << pcong::to_string(gf.coeff(static_cast<int>(n))) << "\n";
    return 0;
}

}  /* namespace */

int main(int argc, char** argv) {
    CLI::App app{"mod-3 congruence checks for four partition counting functions"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run or list the registered checks");
    verify->require_subcommand(1);
    auto* vrun = verify->add_subcommand("run", "run checks and print a report");
    auto* vlist = verify->add_subcommand("list", "print the check catalog");

    std::vector<std::string> check_names;
    std::int64_t n_max = 0;
    int alpha_max = 0;
    std::string primes_text, ring = "mod3", format = "text", out_path, perturb_text;
    vrun->add_option("--check", check_names,
                     "check name, repeatable (default: all)");
    auto* n_opt = vrun->add_option("--n-max", n_max, "sweep bound");
    auto* a_opt = vrun->add_option("--alpha-max", alpha_max,
                                   "family exponent bound");
    auto* p_opt = vrun->add_option("--primes", primes_text,
                                   "comma-separated primes, e.g. 3,5,7");
    vrun->add_option("--ring", ring, "coefficient ring (default mod3)")
        ->check(CLI::IsMember({"mod3", "exact"}));
    vrun->add_option("--format", format, "report format (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    vrun->add_option("--out", out_path, "write the report to a file");
    auto* x_opt = vrun->add_option(
        "--perturb", perturb_text,
        "test hook: add 1 to one series coefficient, KIND:INDEX");

    auto* compute = app.add_subcommand("compute", "single-value queries");
    std::string what;
    std::int64_t query_n = 0;
    std::string form_text = "1,6";
    compute->add_option("what", what, "pbar, pbar-odd, ped, pod, r5 or R")
        ->required()
        ->check(CLI::IsMember({"pbar", "pbar-odd", "ped", "pod", "r5", "R"}));
    compute->add_option("--n", query_n, "argument")->required();
    compute->add_option("--form", form_text,
                        "diagonal form coefficients for R (default 1,6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vlist->parsed()) return run_list();
        if (vrun->parsed()) {
            pcong::RunConfig config;
            config.checks = check_names;
            if (n_opt->count()) config.n_max = n_max;
            if (a_opt->count()) config.alpha_max = alpha_max;
            if (p_opt->count()) config.primes = pcong::parse_int_list(primes_text);
            config.exact_ring = ring == "exact";
            if (x_opt->count())
                config.perturb = pcong::parse_perturbation(perturb_text);
            return run_verify(config, format, out_path);
        }
        return run_compute(what, query_n, form_text);
    } catch (const pcong::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
