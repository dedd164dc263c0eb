#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "unruhpm/optimize.hpp"
#include "unruhpm/protocol.hpp"

namespace unruhpm {

enum class SweepVariable { alpha, p, q, r };

/// How the reversal strength is chosen at each grid point.
enum class QMode { fixed, si, sd };

/// Quantities a sweep can tabulate per grid point.
enum class MeasureColumn { concurrence, scaled_discord, success_probability, n1, n2 };

const char* variable_name(SweepVariable v);
const char* q_mode_name(QMode m);
const char* measure_name(MeasureColumn m);
std::optional<SweepVariable> parse_variable(const std::string& s);
std::optional<QMode> parse_q_mode(const std::string& s);
std::optional<MeasureColumn> parse_measure(const std::string& s);

/**
 * One-variable sweep over a uniform grid of `steps` points from start to stop
 * inclusive. The non-swept parameters are held fixed. q is special: with
 * q_mode fixed it comes from `q` (default 0), with si / sd it is derived per
 * grid point and any explicit q is rejected.
 */
struct SweepSpec {
    SweepVariable variable = SweepVariable::r;
    double start = 0.0;
    double stop = 0.0;
    int steps = 50;
    double alpha = 0.7071067811865476;
    double p = 0.0;
    double r = 0.0;
    std::optional<double> q;
    QMode q_mode = QMode::fixed;
    MeasureKind sd_measure = MeasureKind::concurrence;
    std::vector<MeasureColumn> measures = {MeasureColumn::concurrence};
};

/// Column-labeled numeric table. First column is the swept variable, last is
/// the reversal strength actually used at each point.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

SweepTable run_sweep(const SweepSpec& spec);

/// "%.12g" with -0 normalized to 0. All file output goes through this.
std::string format_double(double v);

/// Comma-separated header plus one line per row, '\n' endings, no quoting.
/// Byte-identical across reruns of the same table.
std::string to_csv(const SweepTable& table);

/// {"meta": {...}, "rows": [{column: value, ...}, ...]} with values rounded
/// to the same 12 significant digits the CSV carries.
std::string to_json(const SweepSpec& spec, const SweepTable& table);

void write_text_file(const std::filesystem::path& path, const std::string& content);

const std::vector<std::string>& figure_names();

/// Writes <name>.csv into out_dir and returns its path. Every preset fixes
/// its own grid and parameter values; alpha_override replaces the curve set
/// of fig2a / fig2b and is rejected elsewhere.
std::filesystem::path figure_command(const std::string& name,
                                     const std::filesystem::path& out_dir,
                                     const std::vector<double>& alpha_override = {});

}  // namespace unruhpm
