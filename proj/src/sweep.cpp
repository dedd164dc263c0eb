#include "unruhpm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "unruhpm/version.hpp"

namespace unruhpm {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kInvSqrt2 = 0.7071067811865476;

struct Domain {
    double lo;
    double hi;
};

Domain variable_domain(SweepVariable v) {
    switch (v) {
        case SweepVariable::alpha: return {0.0, 1.0};
        case SweepVariable::p: return {0.0, 1.0};
        case SweepVariable::q: return {0.0, 1.0 - kQUpperGuard};
        case SweepVariable::r: return {0.0, kQuarterPi};
    }
    throw ValidationError("variable_domain: unknown variable");
}

std::vector<double> linspace(double start, double stop, int steps) {
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i) {
        grid[i] = start + (stop - start) * i / (steps - 1);
    }
    return grid;
}

void validate_spec(const SweepSpec& spec) {
    if (spec.steps < 2) {
        throw ValidationError("sweep: steps must be at least 2");
    }
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop) || spec.start >= spec.stop) {
        throw ValidationError("sweep: start must be strictly below stop");
    }
    const Domain dom = variable_domain(spec.variable);
    if (spec.start < dom.lo || spec.stop > dom.hi) {
        throw ValidationError(std::string("sweep: range for ") + variable_name(spec.variable) +
                              " must stay inside its domain");
    }
    if (spec.variable == SweepVariable::q && spec.q_mode != QMode::fixed) {
        throw ValidationError("sweep: sweeping q requires q-mode fixed");
    }
    if (spec.variable == SweepVariable::q && spec.q.has_value()) {
        throw ValidationError("sweep: a fixed q value conflicts with sweeping q");
    }
    if (spec.q_mode != QMode::fixed && spec.q.has_value()) {
        throw ValidationError("sweep: a fixed q value is only legal with q-mode fixed");
    }
    if (!std::isfinite(spec.alpha) || spec.alpha < 0.0 || spec.alpha > 1.0) {
        throw ValidationError("sweep: alpha must lie in [0, 1]");
    }
    if (!std::isfinite(spec.p) || spec.p < 0.0 || spec.p > 1.0) {
        throw ValidationError("sweep: p must lie in [0, 1]");
    }
    if (spec.q.has_value() && (!std::isfinite(*spec.q) || *spec.q < 0.0 || *spec.q >= 1.0)) {
        throw ValidationError("sweep: q must lie in [0, 1)");
    }
    if (!std::isfinite(spec.r) || spec.r < 0.0 || spec.r > kQuarterPi) {
        throw ValidationError("sweep: r must lie in [0, pi/4]");
    }
    if (spec.measures.empty()) {
        throw ValidationError("sweep: at least one measure required");
    }
}

std::vector<MeasureColumn> dedupe(const std::vector<MeasureColumn>& measures) {
    std::vector<MeasureColumn> out;
    for (MeasureColumn m : measures) {
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    return out;
}

}  // namespace

const char* variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::alpha: return "alpha";
        case SweepVariable::p: return "p";
        case SweepVariable::q: return "q";
        case SweepVariable::r: return "r";
    }
    return "?";
}

const char* q_mode_name(QMode m) {
    switch (m) {
        case QMode::fixed: return "fixed";
        case QMode::si: return "si";
        case QMode::sd: return "sd";
    }
    return "?";
}

const char* measure_name(MeasureColumn m) {
    switch (m) {
        case MeasureColumn::concurrence: return "concurrence";
        case MeasureColumn::scaled_discord: return "scaled_discord";
        case MeasureColumn::success_probability: return "success_probability";
        case MeasureColumn::n1: return "n1";
        case MeasureColumn::n2: return "n2";
    }
    return "?";
}

std::optional<SweepVariable> parse_variable(const std::string& s) {
    if (s == "alpha") return SweepVariable::alpha;
    if (s == "p") return SweepVariable::p;
    if (s == "q") return SweepVariable::q;
    if (s == "r") return SweepVariable::r;
    return std::nullopt;
}

std::optional<QMode> parse_q_mode(const std::string& s) {
    if (s == "fixed") return QMode::fixed;
    if (s == "si") return QMode::si;
    if (s == "sd") return QMode::sd;
    return std::nullopt;
}

std::optional<MeasureColumn> parse_measure(const std::string& s) {
    if (s == "concurrence") return MeasureColumn::concurrence;
    if (s == "scaled_discord") return MeasureColumn::scaled_discord;
    if (s == "success_probability") return MeasureColumn::success_probability;
    if (s == "n1") return MeasureColumn::n1;
    if (s == "n2") return MeasureColumn::n2;
    return std::nullopt;
}

SweepTable run_sweep(const SweepSpec& spec) {
    validate_spec(spec);
    const std::vector<MeasureColumn> measures = dedupe(spec.measures);

    SweepTable table;
    table.columns.push_back(variable_name(spec.variable));
    for (MeasureColumn m : measures) table.columns.emplace_back(measure_name(m));
    table.columns.emplace_back("q_used");

    for (double v : linspace(spec.start, spec.stop, spec.steps)) {
        double alpha = spec.alpha;
        double p = spec.p;
        double r = spec.r;
        double q_fixed = spec.q.value_or(0.0);
        switch (spec.variable) {
            case SweepVariable::alpha: alpha = v; break;
            case SweepVariable::p: p = v; break;
            case SweepVariable::q: q_fixed = v; break;
            case SweepVariable::r: r = v; break;
        }
        double q_used = q_fixed;
        if (spec.q_mode == QMode::si) {
            q_used = q_state_independent(p, r);
        } else if (spec.q_mode == QMode::sd) {
            q_used = q_state_dependent(alpha, p, r, spec.sd_measure).q_opt;
        }

        const ProtocolParams params = ProtocolParams::from_alpha(alpha, p, q_used, r);
        const ProtocolOutcome outcome = closed_form_rho(params);

        std::vector<double> row;
        row.reserve(table.columns.size());
        row.push_back(v);
        for (MeasureColumn m : measures) {
            switch (m) {
                case MeasureColumn::concurrence: row.push_back(concurrence_pm(params)); break;
                case MeasureColumn::scaled_discord: row.push_back(scaled_discord(outcome.rho)); break;
                case MeasureColumn::success_probability:
                    row.push_back(outcome.success_probability);
                    break;
                case MeasureColumn::n1: row.push_back(outcome.n1); break;
                case MeasureColumn::n2: row.push_back(outcome.n2); break;
            }
        }
        row.push_back(q_used);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;   // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const SweepTable& table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const SweepSpec& spec, const SweepTable& table) {
    const auto rounded = [](double v) { return std::strtod(format_double(v).c_str(), nullptr); };

    nlohmann::json meta;
    meta["command"] = "sweep";
    meta["version"] = kVersion;
    meta["variable"] = variable_name(spec.variable);
    meta["start"] = rounded(spec.start);
    meta["stop"] = rounded(spec.stop);
    meta["steps"] = spec.steps;
    meta["q_mode"] = q_mode_name(spec.q_mode);
    if (spec.q_mode == QMode::sd) {
        meta["sd_measure"] =
            spec.sd_measure == MeasureKind::concurrence ? "concurrence" : "scaled_discord";
    }
    if (spec.variable != SweepVariable::alpha) {
        meta["alpha"] = rounded(spec.alpha);
        meta["beta"] = rounded(std::sqrt(std::max(0.0, 1.0 - spec.alpha * spec.alpha)));
    }
    if (spec.variable != SweepVariable::p) meta["p"] = rounded(spec.p);
    if (spec.variable != SweepVariable::r) meta["r"] = rounded(spec.r);
    if (spec.q_mode == QMode::fixed && spec.variable != SweepVariable::q) {
        meta["q"] = rounded(spec.q.value_or(0.0));
    }
    nlohmann::json names = nlohmann::json::array();
    for (MeasureColumn m : dedupe(spec.measures)) names.push_back(measure_name(m));
    meta["measures"] = names;

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj;
        for (size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = rounded(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    nlohmann::json doc;
    doc["meta"] = std::move(meta);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    os << content;
    os.flush();
    if (!os) {
        throw IoError("write to " + path.string() + " failed");
    }
}

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"fig2a", "fig2b", "fig3a", "fig3b", "fig4"};
    return names;
}

namespace {

std::string curve_label(const std::string& stem, const char* param, double value) {
    return stem + "(" + param + "=" + format_double(value) + ")";
}

SweepTable make_fig2a(const std::vector<double>& alphas) {
    SweepTable t;
    t.columns.emplace_back("r");
    for (double a : alphas) t.columns.push_back(curve_label("C", "alpha", a));
    for (double r : linspace(0.0, kQuarterPi, 50)) {
        std::vector<double> row{r};
        for (double a : alphas) {
            row.push_back(concurrence_pm(ProtocolParams::from_alpha(a, 0.0, 0.0, r)));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable make_fig2b(const std::vector<double>& alphas) {
    const double r = 0.6;
    SweepTable t;
    t.columns.emplace_back("p");
    for (double a : alphas) t.columns.push_back(curve_label("C", "alpha", a));
    for (double p : linspace(0.0, 0.999, 50)) {
        const double q = q_state_independent(p, r);
        std::vector<double> row{p};
        for (double a : alphas) {
            row.push_back(concurrence_pm(ProtocolParams::from_alpha(a, p, q, r)));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable make_fig3a() {
    const double r = 0.6;
    const std::vector<double> ps = {0.0, 0.3, 0.6, 0.9};
    SweepTable t;
    t.columns.emplace_back("alpha");
    for (double p : ps) t.columns.push_back(curve_label("q_opt", "p", p));
    for (double a : linspace(0.02, 0.998, 50)) {
        std::vector<double> row{a};
        for (double p : ps) {
            row.push_back(q_state_dependent(a, p, r, MeasureKind::concurrence).q_opt);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable make_fig3b() {
    const double r = 0.6;
    const std::vector<double> alphas = {0.3, kInvSqrt2, 0.9};
    SweepTable t;
    t.columns.emplace_back("p");
    for (double a : alphas) {
        t.columns.push_back(curve_label("C_si", "alpha", a));
        t.columns.push_back(curve_label("C_sd", "alpha", a));
    }
    for (double p : linspace(0.0, 0.99, 50)) {
        std::vector<double> row{p};
        for (double a : alphas) {
            const double q_si = q_state_independent(p, r);
            row.push_back(concurrence_pm(ProtocolParams::from_alpha(a, p, q_si, r)));
            row.push_back(q_state_dependent(a, p, r, MeasureKind::concurrence).value);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable make_fig4() {
    const double a = kInvSqrt2;
    const std::vector<double> ps = {0.0, 0.3, 0.6, 0.99};
    SweepTable t;
    t.columns.emplace_back("r");
    t.columns.emplace_back("D2_ud");
    for (double p : ps) t.columns.push_back(curve_label("D2", "p", p));
    for (double r : linspace(0.0, kQuarterPi, 50)) {
        std::vector<double> row{r};
        row.push_back(
            scaled_discord(closed_form_rho(ProtocolParams::from_alpha(a, 0.0, 0.0, r)).rho));
        for (double p : ps) {
            const double q = q_state_independent(p, r);
            row.push_back(
                scaled_discord(closed_form_rho(ProtocolParams::from_alpha(a, p, q, r)).rho));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

std::filesystem::path figure_command(const std::string& name,
                                     const std::filesystem::path& out_dir,
                                     const std::vector<double>& alpha_override) {
    const auto& names = figure_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string list;
        for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
        throw ValidationError("figure: unknown name '" + name + "' (expected one of " + list + ")");
    }
    if (!alpha_override.empty()) {
        if (name != "fig2a" && name != "fig2b") {
            throw ValidationError("figure: alpha overrides apply to fig2a and fig2b only");
        }
        for (double a : alpha_override) {
            if (!std::isfinite(a) || a < 0.0 || a > 1.0) {
                throw ValidationError("figure: alpha must lie in [0, 1]");
            }
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        throw IoError("cannot create output directory " + out_dir.string());
    }

    const std::vector<double> default_alphas = {0.2, 0.4, kInvSqrt2};
    const std::vector<double>& alphas = alpha_override.empty() ? default_alphas : alpha_override;

    SweepTable table;
    if (name == "fig2a") {
        table = make_fig2a(alphas);
    } else if (name == "fig2b") {
        table = make_fig2b(alphas);
    } else if (name == "fig3a") {
        table = make_fig3a();
    } else if (name == "fig3b") {
        table = make_fig3b();
    } else {
        table = make_fig4();
    }

    const std::filesystem::path path = out_dir / (name + ".csv");
    write_text_file(path, to_csv(table));
    return path;
}

}  // namespace unruhpm
