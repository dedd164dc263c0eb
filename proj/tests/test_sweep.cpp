#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "unruhpm/sweep.hpp"
#include "unruhpm/version.hpp"

using namespace unruhpm;
namespace fs = std::filesystem;

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;
constexpr double kInvSqrt2 = 0.7071067811865476;

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) fields.push_back(cell);
        rows.push_back(std::move(fields));
    }
    return rows;
}

fs::path fresh_dir(const std::string& leaf) {
    const fs::path dir = fs::temp_directory_path() / leaf;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

SweepSpec basic_r_spec() {
    SweepSpec spec;
    spec.variable = SweepVariable::r;
    spec.start = 0.0;
    spec.stop = kPi4;
    spec.steps = 50;
    spec.alpha = kInvSqrt2;
    spec.p = 0.0;
    return spec;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("an acceleration sweep tabulates the degradation curve") {
    const SweepTable table = run_sweep(basic_r_spec());
    REQUIRE(table.columns == std::vector<std::string>{"r", "concurrence", "q_used"});
    REQUIRE(table.rows.size() == 50);
    CHECK(std::abs(table.rows.front()[1] - 1.0) <= 1e-14);
    CHECK(std::abs(table.rows.back()[0] - kPi4) <= 1e-15);
    CHECK(std::abs(table.rows.back()[1] - kInvSqrt2) <= 1e-12);
    for (const auto& row : table.rows) CHECK(row[2] == 0.0);
}

TEST_CASE("a matched-strength sweep shows monotone retrieval at monotone cost") {
    SweepSpec spec;
    spec.variable = SweepVariable::p;
    spec.start = 0.0;
    spec.stop = 0.999;
    spec.steps = 50;
    spec.alpha = kInvSqrt2;
    spec.r = 0.6;
    spec.q_mode = QMode::si;
    spec.measures = {MeasureColumn::concurrence, MeasureColumn::success_probability};
    const SweepTable table = run_sweep(spec);
    REQUIRE(table.columns ==
            std::vector<std::string>{"p", "concurrence", "success_probability", "q_used"});
    const double c = std::cos(0.6);
    for (size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        CHECK(std::abs(row[3] - (1.0 - (1.0 - row[0]) * c * c)) <= 1e-15);
        if (i > 0) {
            CHECK(row[1] > table.rows[i - 1][1]);
            CHECK(row[2] < table.rows[i - 1][2]);
        }
    }
    CHECK(table.rows.back()[1] > 0.999);
}

TEST_CASE("a state-dependent sweep dominates the matched strength row by row") {
    SweepSpec spec;
    spec.variable = SweepVariable::p;
    spec.start = 0.0;
    spec.stop = 0.9;
    spec.steps = 5;
    spec.alpha = 0.6;
    spec.r = 0.6;
    spec.q_mode = QMode::sd;
    const SweepTable table = run_sweep(spec);
    for (const auto& row : table.rows) {
        CHECK(row[1] >= concurrence_si_opt(0.6, row[0], 0.6) - 1e-9);
        CHECK(row[2] >= 0.0);
        CHECK(row[2] <= 1.0 - kQUpperGuard);
    }
}

TEST_CASE("sweeping the reversal strength echoes it in q_used") {
    SweepSpec spec;
    spec.variable = SweepVariable::q;
    spec.start = 0.0;
    spec.stop = 0.9;
    spec.steps = 10;
    spec.alpha = 0.6;
    spec.p = 0.3;
    spec.r = 0.5;
    const SweepTable table = run_sweep(spec);
    for (const auto& row : table.rows) {
        CHECK(row[2] == row[0]);
        const double direct =
            concurrence_pm(ProtocolParams::from_alpha(0.6, 0.3, row[0], 0.5));
        CHECK(std::abs(row[1] - direct) <= 1e-15);
    }
}

TEST_CASE("invalid sweep requests are rejected up front") {
    SweepSpec spec = basic_r_spec();
    spec.steps = 1;
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);

    spec = basic_r_spec();
    spec.stop = spec.start;
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);

    spec = basic_r_spec();
    spec.stop = 1.0;   // past pi/4
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);

    spec = basic_r_spec();
    spec.alpha = 1.2;
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);

    spec = basic_r_spec();
    spec.q_mode = QMode::si;
    spec.q = 0.5;
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);

    spec = basic_r_spec();
    spec.variable = SweepVariable::q;
    spec.start = 0.0;
    spec.stop = 0.9;
    spec.q_mode = QMode::sd;
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);

    spec = basic_r_spec();
    spec.variable = SweepVariable::q;
    spec.start = 0.0;
    spec.stop = 0.9;
    spec.q = 0.2;
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);

    spec = basic_r_spec();
    spec.measures.clear();
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);
}

TEST_CASE("numeric formatting is fixed at 12 significant digits") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(1e-9) == "1e-09");
    CHECK(format_double(kPi4) == "0.785398163397");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("csv output is stable, line-oriented, and unix-terminated") {
    const SweepTable table = run_sweep(basic_r_spec());
    const std::string csv_a = to_csv(table);
    const std::string csv_b = to_csv(run_sweep(basic_r_spec()));
    CHECK(csv_a == csv_b);
    CHECK(csv_a.find('\r') == std::string::npos);
    CHECK(csv_a.back() == '\n');
    const auto rows = parse_csv(csv_a);
    REQUIRE(rows.size() == 51);
    CHECK(rows[0] == std::vector<std::string>{"r", "concurrence", "q_used"});
    for (const auto& row : rows) CHECK(row.size() == 3);
    CHECK(rows[1][0] == "0");
    CHECK(rows[1][2] == "0");
}

TEST_CASE("json output carries metadata and the same rounded rows") {
    SweepSpec spec = basic_r_spec();
    spec.steps = 4;
    const SweepTable table = run_sweep(spec);
    const nlohmann::json doc = nlohmann::json::parse(to_json(spec, table));
    CHECK(doc["meta"]["version"] == UNRUHPM_VERSION);
    CHECK(doc["meta"]["variable"] == "r");
    CHECK(doc["meta"]["steps"] == 4);
    CHECK(doc["meta"]["q_mode"] == "fixed");
    CHECK(doc["meta"]["alpha"].get<double>() == doctest::Approx(kInvSqrt2).epsilon(1e-9));
    CHECK(doc["meta"].contains("p"));
    CHECK(doc["meta"].contains("q"));
    CHECK_FALSE(doc["meta"].contains("r"));
    REQUIRE(doc["rows"].size() == 4);
    for (const auto& row : doc["rows"]) {
        CHECK(row.contains("r"));
        CHECK(row.contains("concurrence"));
        CHECK(row.contains("q_used"));
    }
    CHECK(doc["rows"][0]["concurrence"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("figure presets write their datasets") {
    const fs::path dir = fresh_dir("unruhpm_test_figs");
    for (const std::string& name : figure_names()) {
        const fs::path written = figure_command(name, dir);
        CHECK(written == dir / (name + ".csv"));
        CHECK(fs::file_size(written) > 0);
    }
}

TEST_CASE("the degradation preset starts from the exact separable limits") {
    const fs::path dir = fresh_dir("unruhpm_test_fig2a");
    const auto rows = parse_csv(slurp(figure_command("fig2a", dir)));
    REQUIRE(rows.size() == 51);
    REQUIRE(rows[0].size() == 4);
    // first data row is r = 0: concurrence 2 a sqrt(1-a^2) per curve
    const std::vector<double> alphas = {0.2, 0.4, kInvSqrt2};
    for (size_t k = 0; k < alphas.size(); ++k) {
        const double expected = 2.0 * alphas[k] * std::sqrt(1.0 - alphas[k] * alphas[k]);
        CHECK(std::abs(std::stod(rows[1][k + 1]) - expected) <= 1e-12);
    }
}

TEST_CASE("the comparison preset keeps the optimized curve on top") {
    const fs::path dir = fresh_dir("unruhpm_test_fig3b");
    const auto rows = parse_csv(slurp(figure_command("fig3b", dir)));
    REQUIRE(rows.size() == 51);
    REQUIRE(rows[0].size() == 7);
    for (size_t i = 1; i < rows.size(); ++i) {
        for (int pair = 0; pair < 3; ++pair) {
            const double c_si = std::stod(rows[i][1 + 2 * pair]);
            const double c_sd = std::stod(rows[i][2 + 2 * pair]);
            CHECK(c_sd >= c_si - 1e-9);
        }
    }
}

TEST_CASE("the discord preset keeps the protected curve above the bare channel") {
    const fs::path dir = fresh_dir("unruhpm_test_fig4");
    const auto rows = parse_csv(slurp(figure_command("fig4", dir)));
    REQUIRE(rows.size() == 51);
    REQUIRE(rows[0].size() == 6);
    for (size_t i = 1; i < rows.size(); ++i) {
        const double ud = std::stod(rows[i][1]);
        const double protected_p0 = std::stod(rows[i][2]);
        CHECK(protected_p0 >= ud - 1e-9);
    }
}

TEST_CASE("figure output is byte-identical across reruns") {
    const fs::path dir_a = fresh_dir("unruhpm_test_rerun_a");
    const fs::path dir_b = fresh_dir("unruhpm_test_rerun_b");
    CHECK(slurp(figure_command("fig2a", dir_a)) == slurp(figure_command("fig2a", dir_b)));
    CHECK(slurp(figure_command("fig3b", dir_a)) == slurp(figure_command("fig3b", dir_b)));
}

TEST_CASE("figure requests are validated") {
    const fs::path dir = fresh_dir("unruhpm_test_figerr");
    CHECK_THROWS_AS(figure_command("fig9", dir), ValidationError);
    CHECK_THROWS_AS(figure_command("fig4", dir, {0.5}), ValidationError);
    CHECK_THROWS_AS(figure_command("fig2a", dir, {1.5}), ValidationError);
    CHECK_NOTHROW(figure_command("fig2a", dir, {0.5, 0.6}));
}

TEST_CASE("io failures surface as io errors") {
    const fs::path dir = fresh_dir("unruhpm_test_io");
    const fs::path file = dir / "blocker";
    write_text_file(file, "x");
    CHECK_THROWS_AS(write_text_file(file / "inner.csv", "y"), IoError);
    CHECK_THROWS_AS(figure_command("fig2a", file), IoError);
}

}  // TEST_SUITE
