#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "caputo/scalar_scheme.hpp"

namespace caputo {

enum class ReportFormat { csv, json };

/// A rendered report: one header row plus value rows. Doubles are emitted in
/// scientific notation with six significant digits in both formats, so a
/// written file parses back to exactly the emitted values.
struct ReportTable {
    std::vector<std::string> header;
    using Cell = std::variant<long long, double, bool, std::string>;
    std::vector<std::vector<Cell>> rows;
};

std::string format_cell(const ReportTable::Cell& cell);
void write_csv(const ReportTable& table, std::ostream& out);
void write_json(const ReportTable& table, std::ostream& out);
void write_report(const ReportTable& table, ReportFormat format, std::ostream& out);
ReportTable parse_csv(std::istream& in);

/// Benchmark rows for the heat-equation problem: both schemes against the
/// eigenfunction reference, with the published values alongside.
struct Table1Row {
    int no;
    std::string initial;
    double alpha;
    int steps;
    double err_main, rel_main, err_comp, rel_comp, dist;
    double ref_err_main, ref_rel_main, ref_err_comp, ref_rel_comp, ref_dist;
    double stability_main, stability_comp;  ///< max_n ||u_n|| / ||f||
    bool pass;
};

struct Table1Report {
    std::vector<Table1Row> rows;
    bool all_pass = false;
};

/// Benchmark rows for the drift-reaction problem: distance between the two
/// schemes' final fields.
struct Table2Row {
    int no;
    std::string initial;
    double alpha;
    int steps_main, steps_comp;
    double difference, ref_difference;
    double stability_main, stability_comp;
    bool pass;
};

struct Table2Report {
    std::vector<Table2Row> rows;
    bool all_pass = false;
    bool ordering_holds = false;  ///< matched-step distances shrink from 5 to 100
};

struct ScalarConvergenceReport {
    double alpha, epsilon, lambda_re, lambda_im, horizon;
    ConvergenceReport result;
};

struct DecayExperimentReport {
    double alpha, epsilon, lambda_re, lambda_im, horizon;
    int steps;
    DecayReport result;
};

struct CoeffSweepRow {
    double alpha;
    int max_n;
    double max_abs_weight_sum;   ///< max_n |sum_j a_jn|
    double max_beta_sum_error;   ///< max_n |sum_j b_jn - pi/sin(pi alpha)|
    bool signs_ok;
    bool bracketing_ok;
    bool edge_bounds_ok;  ///< bounds on |a_0n| and a_nn for n >= 2
    bool pass;
};

struct CoeffSweepReport {
    std::vector<CoeffSweepRow> rows;
    bool all_pass = false;
};

struct LemmaSweepRow {
    double alpha;
    double epsilon;
    int max_n;
    int min_passing_n;      ///< smallest n from which the inequality holds onward
    double min_margin;      ///< smallest signed slack over the range
    int min_margin_n;
    bool small_alpha_case;  ///< alpha < 1/2: the j^alpha-weighted variant applies
    int min_passing_n_small;
    double min_margin_small;
    bool pass;
};

struct LemmaSweepReport {
    std::vector<LemmaSweepRow> rows;
    bool all_pass = false;
};

/// Directory holding the reference CSV files; defaults to the build-time
/// data directory when empty.
std::string default_data_dir();

Table1Report run_table1(int spatial_intervals, double tolerance_factor,
                        const std::string& data_dir = "");
Table2Report run_table2(int spatial_intervals, double tolerance_factor,
                        const std::string& data_dir = "");
ScalarConvergenceReport run_scalar_convergence(double alpha, double epsilon,
                                               Complex lambda, double horizon,
                                               const std::vector<int>& step_counts);
DecayExperimentReport run_decay(double alpha, double epsilon, Complex lambda,
                                double horizon, int steps);
CoeffSweepReport run_coeff_sweep(const std::vector<double>& alphas, int max_n);
/// epsilon <= 0 selects the default policy min(0.05, (1-alpha)/2) per alpha.
LemmaSweepReport run_lemma_sweep(const std::vector<double>& alphas, int max_n,
                                 double epsilon = 0.0);

ReportTable to_table(const Table1Report& r);
ReportTable to_table(const Table2Report& r);
ReportTable to_table(const ScalarConvergenceReport& r);
ReportTable to_table(const DecayExperimentReport& r);
ReportTable to_table(const CoeffSweepReport& r);
ReportTable to_table(const LemmaSweepReport& r);

}  // namespace caputo
