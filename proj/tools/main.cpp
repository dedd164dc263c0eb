#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unruhpm/sweep.hpp"
#include "unruhpm/version.hpp"

namespace {

using namespace unruhpm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIo = 4;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
    } else {
        write_text_file(out_path, content);
    }
}

MeasureKind parse_sd_measure(const std::string& s) {
    return s == "scaled_discord" ? MeasureKind::scaled_discord : MeasureKind::concurrence;
}

struct PointArgs {
    double alpha = 0.7071067811865476;
    double p = 0.0;
    double r = 0.0;
    std::optional<double> q;
    std::string q_mode = "fixed";
    std::string sd_measure = "concurrence";
    std::string out;
    std::string format = "csv";
};

std::string point_report(const PointArgs& args) {
    const QMode mode = *parse_q_mode(args.q_mode);
    if (mode != QMode::fixed && args.q.has_value()) {
        throw ValidationError("point: a fixed q value is only legal with q-mode fixed");
    }
    double q_used = args.q.value_or(0.0);
    if (mode == QMode::si) {
        q_used = q_state_independent(args.p, args.r);
    } else if (mode == QMode::sd) {
        q_used = q_state_dependent(args.alpha, args.p, args.r, parse_sd_measure(args.sd_measure))
                     .q_opt;
    }
    const ProtocolParams params = ProtocolParams::from_alpha(args.alpha, args.p, q_used, args.r);
    const ProtocolOutcome outcome = closed_form_rho(params);
    const double conc = concurrence_pm(params);
    const double disc = geometric_discord(outcome.rho);

    if (args.format == "json") {
        const auto rounded = [](double v) {
            return std::strtod(format_double(v).c_str(), nullptr);
        };
        nlohmann::json doc;
        doc["meta"]["command"] = "point";
        doc["meta"]["version"] = kVersion;
        doc["meta"]["q_mode"] = args.q_mode;
        if (mode == QMode::sd) doc["meta"]["sd_measure"] = args.sd_measure;
        doc["alpha"] = rounded(params.alpha());
        doc["beta"] = rounded(params.beta());
        doc["p"] = rounded(params.p());
        doc["q_used"] = rounded(q_used);
        doc["r"] = rounded(params.r());
        doc["n1"] = rounded(outcome.n1);
        doc["n2"] = rounded(outcome.n2);
        doc["success_probability"] = rounded(outcome.success_probability);
        doc["concurrence"] = rounded(conc);
        doc["geometric_discord"] = rounded(disc);
        doc["scaled_discord"] = rounded(2.0 * disc);
        nlohmann::json re = nlohmann::json::array();
        nlohmann::json im = nlohmann::json::array();
        for (int i = 0; i < 4; ++i) {
            nlohmann::json re_row = nlohmann::json::array();
            nlohmann::json im_row = nlohmann::json::array();
            for (int j = 0; j < 4; ++j) {
                re_row.push_back(rounded(outcome.rho.at(i, j).real()));
                im_row.push_back(rounded(outcome.rho.at(i, j).imag()));
            }
            re.push_back(std::move(re_row));
            im.push_back(std::move(im_row));
        }
        doc["rho_re"] = std::move(re);
        doc["rho_im"] = std::move(im);
        return doc.dump(2) + "\n";
    }

    std::string header = "alpha,beta,p,q_used,r,n1,n2,success_probability,concurrence,"
                         "geometric_discord,scaled_discord";
    std::string row = format_double(params.alpha()) + "," + format_double(params.beta()) + "," +
                      format_double(params.p()) + "," + format_double(q_used) + "," +
                      format_double(params.r()) + "," + format_double(outcome.n1) + "," +
                      format_double(outcome.n2) + "," +
                      format_double(outcome.success_probability) + "," + format_double(conc) +
                      "," + format_double(disc) + "," + format_double(2.0 * disc);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            header += ",rho_" + std::to_string(i) + std::to_string(j) + "_re";
            header += ",rho_" + std::to_string(i) + std::to_string(j) + "_im";
            row += "," + format_double(outcome.rho.at(i, j).real());
            row += "," + format_double(outcome.rho.at(i, j).imag());
        }
    }
    return header + "\n" + row + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement retrieval from Unruh decoherence by partial measurement "
                 "and reversal: sweeps, preset figure data, single-point reports."};
    app.set_version_flag("--version", UNRUHPM_VERSION);
    app.require_subcommand(1);

    const std::vector<std::string> measure_choices = {
        "concurrence", "scaled_discord", "success_probability", "n1", "n2"};

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate measures along one parameter");
    std::string sw_variable;
    std::optional<double> sw_from, sw_to, sw_q;
    int sw_steps = 50;
    PointArgs sw;   // reuse the fixed-parameter bundle
    std::vector<std::string> sw_measures;
    sweep_cmd->add_option("variable", sw_variable, "Swept parameter")
        ->required()
        ->check(CLI::IsMember({"alpha", "p", "q", "r"}));
    sweep_cmd->add_option("--from", sw_from, "Grid start (default: domain lower edge)");
    sweep_cmd->add_option("--to", sw_to, "Grid stop (default: domain upper edge)");
    sweep_cmd->add_option("--steps", sw_steps, "Grid points, at least 2")
        ->capture_default_str();
    sweep_cmd->add_option("--alpha", sw.alpha, "Fixed input amplitude of |00>")
        ->capture_default_str();
    sweep_cmd->add_option("--p", sw.p, "Fixed strength of the first measurement")
        ->capture_default_str();
    sweep_cmd->add_option("--q", sw_q, "Fixed reversal strength (q-mode fixed only)");
    sweep_cmd->add_option("--r", sw.r, "Fixed acceleration parameter")->capture_default_str();
    sweep_cmd->add_option("--q-mode", sw.q_mode, "fixed | si | sd")
        ->capture_default_str()
        ->check(CLI::IsMember({"fixed", "si", "sd"}));
    sweep_cmd->add_option("--sd-measure", sw.sd_measure, "Objective for q-mode sd")
        ->capture_default_str()
        ->check(CLI::IsMember({"concurrence", "scaled_discord"}));
    sweep_cmd->add_option("--measure", sw_measures, "Columns to tabulate (repeatable)")
        ->check(CLI::IsMember(measure_choices));
    sweep_cmd->add_option("--out", sw.out, "Output file (default: stdout)");
    sweep_cmd->add_option("--format", sw.format, "csv | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));

    // figure
    auto* figure_cmd = app.add_subcommand("figure", "Write one preset figure dataset");
    std::string fig_name;
    std::string fig_out = ".";
    std::vector<double> fig_alphas;
    figure_cmd->add_option("name", fig_name, "fig2a | fig2b | fig3a | fig3b | fig4")->required();
    figure_cmd->add_option("--out", fig_out, "Output directory")->capture_default_str();
    figure_cmd->add_option("--alpha", fig_alphas,
                           "Curve amplitudes for fig2a / fig2b (repeatable)");

    // point
    auto* point_cmd = app.add_subcommand("point", "Report state and measures at one point");
    PointArgs pt;
    point_cmd->add_option("--alpha", pt.alpha, "Input amplitude of |00>")->capture_default_str();
    point_cmd->add_option("--p", pt.p, "Strength of the first measurement")
        ->capture_default_str();
    point_cmd->add_option("--q", pt.q, "Reversal strength (q-mode fixed only)");
    point_cmd->add_option("--r", pt.r, "Acceleration parameter")->capture_default_str();
    point_cmd->add_option("--q-mode", pt.q_mode, "fixed | si | sd")
        ->capture_default_str()
        ->check(CLI::IsMember({"fixed", "si", "sd"}));
    point_cmd->add_option("--sd-measure", pt.sd_measure, "Objective for q-mode sd")
        ->capture_default_str()
        ->check(CLI::IsMember({"concurrence", "scaled_discord"}));
    point_cmd->add_option("--out", pt.out, "Output file (default: stdout)");
    point_cmd->add_option("--format", pt.format, "csv | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(sweep_cmd)) {
            SweepSpec spec;
            spec.variable = *parse_variable(sw_variable);
            const double lo = 0.0;
            const double hi = [&] {
                switch (spec.variable) {
                    case SweepVariable::alpha: return 1.0;
                    case SweepVariable::p: return 1.0;
                    case SweepVariable::q: return 1.0 - kQUpperGuard;
                    case SweepVariable::r: return 0.7853981633974483;
                }
                return 1.0;
            }();
            spec.start = sw_from.value_or(lo);
            spec.stop = sw_to.value_or(hi);
            spec.steps = sw_steps;
            spec.alpha = sw.alpha;
            spec.p = sw.p;
            spec.r = sw.r;
            spec.q = sw_q;
            spec.q_mode = *parse_q_mode(sw.q_mode);
            spec.sd_measure = parse_sd_measure(sw.sd_measure);
            spec.measures.clear();
            for (const auto& m : sw_measures) spec.measures.push_back(*parse_measure(m));
            if (spec.measures.empty()) spec.measures.push_back(MeasureColumn::concurrence);

            const SweepTable table = run_sweep(spec);
            emit(sw.format == "json" ? to_json(spec, table) : to_csv(table), sw.out);
        } else if (app.got_subcommand(figure_cmd)) {
            figure_command(fig_name, fig_out, fig_alphas);
        } else {
            emit(point_report(pt), pt.out);
        }
    } catch (const ZeroSuccessProbabilityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return 1;
    }
    return kExitOk;
}
