// Command-line front end: benchmark tables, convergence and decay studies,
// and coefficient sweeps, emitted as CSV or JSON.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "caputo/experiments.hpp"

namespace {

struct CommonOptions {
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--out", opt.out, "write the report to this path (default stdout)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

int emit(const caputo::ReportTable& table, const CommonOptions& opt) {
    const caputo::ReportFormat format =
        opt.format == "json" ? caputo::ReportFormat::json : caputo::ReportFormat::csv;
    if (opt.out.empty()) {
        caputo::write_report(table, format, std::cout);
        return 0;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << opt.out << "\n";
        return 2;
    }
    caputo::write_report(table, format, out);
    return 0;
}

std::vector<int> parse_step_list(const std::string& text) {
    std::vector<int> steps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) steps.push_back(std::stoi(item));
    return steps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver kit for Cauchy problems with the Caputo time derivative"};
    app.require_subcommand(1);
    app.set_config("--config");

    // table1 / table2 -------------------------------------------------------
    CommonOptions t1_opt, t2_opt;
    int t1_spatial = 2048, t2_spatial = 2048;
    double t1_factor = 2.0, t2_factor = 2.0;
    std::string t1_data, t2_data;

    CLI::App* table1 = app.add_subcommand(
        "table1", "heat-equation benchmark against the eigenfunction reference");
    table1->add_option("--spatial", t1_spatial, "spatial intervals")
        ->check(CLI::Range(2, 1 << 16))->capture_default_str();
    table1->add_option("--tolerance-factor", t1_factor, "acceptance factor")
        ->check(CLI::PositiveNumber)->capture_default_str();
    table1->add_option("--data-dir", t1_data, "directory with reference CSV files");
    add_common(table1, t1_opt);

    CLI::App* table2 = app.add_subcommand(
        "table2", "drift-reaction benchmark comparing the two schemes");
    table2->add_option("--spatial", t2_spatial, "spatial intervals")
        ->check(CLI::Range(2, 1 << 16))->capture_default_str();
    table2->add_option("--tolerance-factor", t2_factor, "acceptance factor")
        ->check(CLI::PositiveNumber)->capture_default_str();
    table2->add_option("--data-dir", t2_data, "directory with reference CSV files");
    add_common(table2, t2_opt);

    // scalar-convergence ----------------------------------------------------
    CommonOptions sc_opt;
    double sc_alpha = 0.5, sc_eps = 0.05, sc_lambda = -1.0, sc_horizon = 1.0;
    std::string sc_steps = "16,32,64,128,256";
    CLI::App* conv = app.add_subcommand("scalar-convergence",
                                        "error sweep of the scalar scheme");
    conv->add_option("--alpha", sc_alpha, "fractional order in (0,1)")
        ->capture_default_str();
    conv->add_option("--epsilon", sc_eps, "rate slack")->capture_default_str();
    conv->add_option("--lambda", sc_lambda, "spectral parameter (real)")
        ->capture_default_str();
    conv->add_option("--horizon", sc_horizon, "time horizon")->capture_default_str();
    conv->add_option("--steps-list", sc_steps, "comma-separated step counts")
        ->capture_default_str();
    add_common(conv, sc_opt);

    // decay ------------------------------------------------------------------
    CommonOptions dc_opt;
    double dc_alpha = 0.5, dc_eps = 0.05, dc_lambda = -1.0, dc_horizon = 1.0;
    int dc_steps = 1000;
    CLI::App* decay = app.add_subcommand("decay",
                                         "normalized decay profile of the scalar scheme");
    decay->add_option("--alpha", dc_alpha, "fractional order in (0,1)")
        ->capture_default_str();
    decay->add_option("--epsilon", dc_eps, "rate slack")->capture_default_str();
    decay->add_option("--lambda", dc_lambda, "spectral parameter (real, nonzero)")
        ->capture_default_str();
    decay->add_option("--horizon", dc_horizon, "time horizon")->capture_default_str();
    decay->add_option("--steps", dc_steps, "time steps")
        ->check(CLI::Range(1, 1000000))->capture_default_str();
    add_common(decay, dc_opt);

    // coeff-sweep -------------------------------------------------------------
    CommonOptions cs_opt;
    std::vector<double> cs_alphas;
    int cs_max_n = 1000;
    CLI::App* coeff = app.add_subcommand("coeff-sweep",
                                         "coefficient identity and bound sweep");
    coeff->add_option("--alpha", cs_alphas, "orders to sweep (repeatable)");
    coeff->add_option("--max-steps", cs_max_n, "largest row index")
        ->check(CLI::Range(1, 100000))->capture_default_str();
    add_common(coeff, cs_opt);

    // lemma41-sweep -------------------------------------------------------------
    CommonOptions ls_opt;
    std::vector<double> ls_alphas;
    int ls_max_n = 1000;
    double ls_eps = 0.0;
    CLI::App* lemma = app.add_subcommand(
        "lemma41-sweep", "dominance inequality sweep with minimal passing index");
    lemma->add_option("--alpha", ls_alphas, "orders to sweep (repeatable)");
    lemma->add_option("--max-steps", ls_max_n, "largest row index")
        ->check(CLI::Range(2, 100000))->capture_default_str();
    lemma->add_option("--epsilon", ls_eps,
                      "rate slack; 0 selects min(0.05, (1-alpha)/2) per alpha")
        ->capture_default_str();
    add_common(lemma, ls_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::vector<double> default_alphas = {0.1, 0.2, 0.3, 0.4, 0.5,
                                                0.6, 0.7, 0.8, 0.9};
    try {
        if (table1->parsed()) {
            const auto report = caputo::run_table1(t1_spatial, t1_factor, t1_data);
            const int rc = emit(caputo::to_table(report), t1_opt);
            if (rc != 0) return rc;
            std::cerr << (report.all_pass ? "table1: all rows pass\n"
                                          : "table1: FIXTURE FAILURE\n");
            return report.all_pass ? 0 : 1;
        }
        if (table2->parsed()) {
            const auto report = caputo::run_table2(t2_spatial, t2_factor, t2_data);
            const int rc = emit(caputo::to_table(report), t2_opt);
            if (rc != 0) return rc;
            if (!report.ordering_holds)
                std::cerr << "table2: matched-step ordering violated\n";
            std::cerr << (report.all_pass ? "table2: all rows pass\n"
                                          : "table2: FIXTURE FAILURE\n");
            return (report.all_pass && report.ordering_holds) ? 0 : 1;
        }
        if (conv->parsed()) {
            const auto report = caputo::run_scalar_convergence(
                sc_alpha, sc_eps, {sc_lambda, 0.0}, sc_horizon,
                parse_step_list(sc_steps));
            return emit(caputo::to_table(report), sc_opt);
        }
        if (decay->parsed()) {
            const auto report = caputo::run_decay(dc_alpha, dc_eps, {dc_lambda, 0.0},
                                                  dc_horizon, dc_steps);
            return emit(caputo::to_table(report), dc_opt);
        }
        if (coeff->parsed()) {
            const auto report = caputo::run_coeff_sweep(
                cs_alphas.empty() ? default_alphas : cs_alphas, cs_max_n);
            const int rc = emit(caputo::to_table(report), cs_opt);
            if (rc != 0) return rc;
            return report.all_pass ? 0 : 1;
        }
        if (lemma->parsed()) {
            const auto report = caputo::run_lemma_sweep(
                ls_alphas.empty() ? default_alphas : ls_alphas, ls_max_n, ls_eps);
            const int rc = emit(caputo::to_table(report), ls_opt);
            if (rc != 0) return rc;
            return report.all_pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
