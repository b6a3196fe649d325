#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "tsardl/pipeline/config.hpp"
#include "tsardl/pipeline/render.hpp"
#include "tsardl/pipeline/run.hpp"

using namespace tsardl;
using namespace tsardl::pipeline;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(const std::function<void()>& f, std::vector<std::string>* subjects = nullptr) {
    try {
        f();
    } catch (const Error& e) {
        if (subjects) *subjects = e.subjects();
        return e.kind();
    }
    FAIL("no tsardl::Error thrown");
    return ErrorKind::Io;
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    f << text;
}

void write_series(const fs::path& path, const std::vector<double>& v) {
    std::ostringstream out;
    out << "date,value\n";
    char buf[40];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", v[i]);
        out << format_date(testing::kStart + std::chrono::days{static_cast<int>(i)}) << ',' << buf << '\n';
    }
    write_text(path, out.str());
}

std::string model_block(const std::string& id, const std::string& y, const std::string& x) {
    return "[model " + id + "]\ndependent = " + y + "\ndynamic = " + x + "\n";
}

const std::string kDefaults = "[defaults]\ncase = constant\np_max = 2\nq_max = 2\ncriterion = bic\n\n";

/// Temp directory with five daily series: a cointegrated pair, two independent walks and an I(2) path.
struct Fixture {
    fs::path dir;
    fs::path manifest;

    Fixture() {
        dir = fs::temp_directory_path() / ("tsardl_pipeline_" + std::to_string(::getpid()));
        fs::remove_all(dir);
        const std::size_t T = 500;
        const auto pair = mc::draw(mc::Dgp{mc::CointegratedPair{2.0, 0.5}, T, 101});
        const auto walks = mc::draw(mc::Dgp{mc::IndependentWalks{}, T, 202});
        mc::Stream s(303, 0);
        const auto i2 = testing::cumsum(testing::cumsum(testing::normals(s, T)));
        write_series(dir / "series/coin_y.csv", pair.y);
        write_series(dir / "series/coin_x.csv", pair.x);
        write_series(dir / "series/walk_y.csv", walks.y);
        write_series(dir / "series/walk_x.csv", walks.x);
        write_series(dir / "series/i2_y.csv", i2);
        manifest = dir / "manifest.csv";
        write_text(manifest,
                   "name,path,frequency,transform\n"
                   "coin_y,series/coin_y.csv,daily,level\n"
                   "coin_x,series/coin_x.csv,daily,level\n"
                   "walk_y,series/walk_y.csv,daily,level\n"
                   "walk_x,series/walk_x.csv,daily,level\n"
                   "i2_y,series/i2_y.csv,daily,level\n");
    }
    ~Fixture() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }

    fs::path config(const std::string& name, const std::string& text) const {
        const auto path = dir / name;
        write_text(path, text);
        return path;
    }

    RunReport run(const fs::path& config_path, unsigned jobs = 1) const {
        const auto in = load_manifest_and_config(manifest, config_path);
        return run_all(in.config, load_series(in.manifest, in.config), in.manifest, jobs);
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

const std::string kFullConfig = kDefaults + model_block("M1.1", "coin_y", "coin_x") +
                                model_block("M1.2", "walk_y", "walk_x") + model_block("M1.3", "i2_y", "coin_x");

const ModelSection& section(const RunReport& r, const std::string& id) {
    for (const auto& s : r.sections) {
        if (s.model_id() == id) return s;
    }
    throw std::runtime_error("no section " + id);
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(TSARDL_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("minimal config yields one model with defaults applied") {
    std::istringstream in(kDefaults + model_block("M2.1", "coin_y", "coin_x"));
    const auto cfg = parse_config(in);
    REQUIRE(cfg.models.size() == 1);
    const auto& m = cfg.models[0];
    CHECK(m.model_id == "M2.1");
    CHECK(m.dependent == "coin_y");
    CHECK(m.dynamic_regressors == std::vector<std::string>{"coin_x"});
    CHECK(m.p_max == 2);
    CHECK(m.q_max == 2);
}

TEST_CASE("duplicate model id is a parse error naming it") {
    std::istringstream in(model_block("M2.1", "coin_y", "coin_x") + model_block("M2.1", "walk_y", "walk_x"));
    std::vector<std::string> subjects;
    CHECK(kind_of([&] { (void)parse_config(in, "dup.cfg"); }, &subjects) == ErrorKind::ParseError);
    CHECK(subjects == std::vector<std::string>{"M2.1"});

    std::istringstream bad("[model A]\ndependent = y\np_max = two\n");
    try {
        (void)parse_config(bad, "bad.cfg");
        FAIL("accepted p_max = two");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("bad.cfg:3") != std::string::npos);
    }
}

TEST_CASE("unknown series names the model and the variable") {
    const auto& f = fixture();
    const auto cfg = f.config("unknown.cfg", kDefaults + model_block("M2.3", "coin_y", "ghost"));
    std::vector<std::string> subjects;
    CHECK(kind_of([&] { (void)load_manifest_and_config(f.manifest, cfg); }, &subjects) == ErrorKind::UnknownVariable);
    CHECK(subjects == std::vector<std::string>{"M2.3", "ghost"});
}

TEST_CASE("table cells follow the sign and star grammar") {
    using linreg::CoefficientStat;
    CHECK(long_run_cell(CoefficientStat{"x", 2.1, 1.0, 2.1, 0.03, 2}) == "(+)**");
    CHECK(long_run_cell(CoefficientStat{"x", -0.4, 0.1, -4.0, 0.0001, 3}) == "(-)***");
    CHECK(long_run_cell(CoefficientStat{"x", 2.1, 2.0, 1.05, 0.3, 0}).empty());

    const std::vector<CoefficientStat> mixed{{"D.x", 0.5, 0.2, 2.5, 0.012, 2},
                                             {"D.x.L1", 0.1, 0.2, 0.5, 0.6, 0},
                                             {"D.x.L2", -0.8, 0.25, -3.2, 0.002, 3}};
    CHECK(short_run_cell(mixed) == "(±)2**");
    CHECK(short_run_cell({mixed[0], mixed[1]}) == "(+)1**");
    CHECK(short_run_cell({mixed[1]}).empty());
    CHECK(short_run_cell({}).empty());
}

TEST_CASE("end-to-end run over synthetic pairs") {
    const auto& f = fixture();
    const auto report = f.run(f.config("full.cfg", kFullConfig));
    REQUIRE(report.sections.size() == 3);
    CHECK(report.exit_code() == 2);
    CHECK(report.skipped() == 1);

    SECTION("cointegrated pair has a positive long-run row") {
        const auto& s = section(report, "M1.1");
        REQUIRE(s.ok());
        CHECK(s.cointegrated);
        REQUIRE_FALSE(s.long_run.empty());
        CHECK(s.long_run[0].label == "coin_x");
        CHECK(s.long_run[0].cell.rfind("(+)", 0) == 0);
        CHECK(s.long_run[0].terms[0].estimate == Catch::Approx(2.0).margin(0.1));
        CHECK(s.alpha->estimate == Catch::Approx(0.5).margin(0.1));
    }
    SECTION("independent walks have short-run rows only") {
        const auto& s = section(report, "M1.2");
        REQUIRE(s.ok());
        CHECK_FALSE(s.cointegrated);
        CHECK(s.long_run.empty());
        CHECK_FALSE(s.short_run.empty());
        const auto csv = render_csv(report);
        CHECK(csv.at("long_run.csv").find("M1.2") == std::string::npos);
        CHECK(csv.at("short_run.csv").find("M1.2") != std::string::npos);
    }
    SECTION("I(2) dependent is skipped without a bounds result") {
        const auto& s = section(report, "M1.3");
        CHECK_FALSE(s.ok());
        CHECK(s.error_kind == ErrorKind::I2VariableDetected);
        CHECK(s.reason.find("i2_y") != std::string::npos);
        CHECK_FALSE(s.bounds.has_value());
        CHECK(s.long_run.empty());
        const auto j = nlohmann::json::parse(render_json(report));
        for (const auto& m : j["models"]) {
            if (m["model"] == "M1.3") {
                CHECK(m["status"] != "ok");
                CHECK_FALSE(m.contains("bounds"));
                CHECK_FALSE(m.contains("long_run"));
            }
        }
        const auto md = render_markdown(report);
        CHECK(md.find("I2VariableDetected") != std::string::npos);
    }
    SECTION("every long-run block belongs to a cointegrated model") {
        for (const auto& s : report.sections) CHECK(s.long_run.empty() != s.cointegrated);
    }
}

TEST_CASE("removing a model leaves the other sections unchanged") {
    const auto& f = fixture();
    const auto full = f.run(f.config("full.cfg", kFullConfig));
    const auto reduced = f.run(f.config(
        "reduced.cfg", kDefaults + model_block("M1.1", "coin_y", "coin_x") + model_block("M1.3", "i2_y", "coin_x")));
    REQUIRE(reduced.sections.size() == 2);
    for (const auto& s : reduced.sections) {
        CHECK(section_json(s).dump() == section_json(section(full, s.model_id())).dump());
    }
    CHECK(reduced.exit_code() == 2);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    const auto& f = fixture();
    const auto cfg = f.config("full.cfg", kFullConfig);
    const auto a = f.run(cfg, 1);
    const auto b = f.run(cfg, 2);
    CHECK(render_markdown(a) == render_markdown(b));
    CHECK(render_csv(a) == render_csv(b));
    CHECK(render_json(a, 7) == render_json(b, 7));
    CHECK(render_json(a, 7) != render_json(a, 8));
}

TEST_CASE("command line exit codes") {
    const auto& f = fixture();
    const std::string manifest = " --manifest " + f.manifest.string();
    const std::string out = " --out " + (f.dir / "out").string();
    const auto ok = f.config("ok.cfg", kDefaults + model_block("M1.1", "coin_y", "coin_x"));
    CHECK(run_cli("run" + manifest + " --config " + ok.string() + out + " --format markdown,csv,json") == 0);
    CHECK(fs::exists(f.dir / "out" / "report.md"));
    CHECK(fs::exists(f.dir / "out" / "long_run.csv"));
    CHECK(fs::exists(f.dir / "out" / "report.json"));

    const auto full = f.config("full.cfg", kFullConfig);
    CHECK(run_cli("run" + manifest + " --config " + full.string() + out) == 2);

    const auto unknown = f.config("unknown.cfg", kDefaults + model_block("M2.3", "coin_y", "ghost"));
    CHECK(run_cli("run" + manifest + " --config " + unknown.string() + out) == 1);
    const auto broken = f.config("broken.cfg", "[model A\n");
    CHECK(run_cli("run" + manifest + " --config " + broken.string() + out) == 1);
    CHECK(run_cli("run --manifest " + (f.dir / "missing.csv").string() + " --config " + ok.string() + out) == 1);
}
