// tsardl command line: run, unitroot, simulate, critvals.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsardl/ardl.hpp"
#include "tsardl/csv.hpp"
#include "tsardl/error.hpp"
#include "tsardl/mc.hpp"
#include "tsardl/parallel.hpp"
#include "tsardl/pipeline/config.hpp"
#include "tsardl/pipeline/paper_shape.hpp"
#include "tsardl/pipeline/render.hpp"
#include "tsardl/pipeline/run.hpp"
#include "tsardl/series.hpp"
#include "tsardl/unitroot.hpp"

namespace {

using namespace tsardl;

struct RunArgs {
    std::string manifest;
    std::string config;
    std::string out;
    std::vector<std::string> formats{"markdown"};
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

int cmd_run(const RunArgs& a) {
    std::vector<pipeline::ReportFormat> formats;
    pipeline::LoadedInputs in;
    pipeline::SeriesStore store;
    try {
        for (const auto& f : a.formats) formats.push_back(pipeline::parse_report_format(f));
        in = pipeline::load_manifest_and_config(a.manifest, a.config);
        store = pipeline::load_series(in.manifest, in.config);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }
    const auto report = pipeline::run_all(in.config, store, in.manifest, a.jobs);
    for (const auto& s : report.sections) {
        std::cout << s.model_id() << "  ";
        if (!s.ok()) {
            std::cout << "skipped  " << s.reason << "\n";
            continue;
        }
        char line[160];
        std::snprintf(line, sizeof line, "ARDL(%d,%d)  F=%.4g  %s", s.p, s.q, s.bounds->f_statistic,
                      std::string(ardl::to_string(s.bounds->at(s.config.bounds_level))).c_str());
        std::cout << line << "\n";
    }
    try {
        for (const auto& p : pipeline::write_reports(report, a.out, formats, a.seed)) {
            std::cout << "wrote " << p.string() << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return report.exit_code();
}

struct UnitRootArgs {
    std::string series;
    std::string test = "adf";
    std::string deterministic = "constant";
    std::string lags = "aic";
    std::optional<int> max_lags;
    std::string transform = "level";
    std::string frequency = "daily";
    std::string break_model = "intercept";
    double trim = 0.15;
    bool classify = false;
    int level = 5;
};

void print_result(const char* label, const unitroot::UnitRootResult& r, const std::vector<Date>& dates,
                  std::size_t offset) {
    std::printf("%s: %s statistic %.4f, lags %d, nobs %ld\n", label, std::string(unitroot::to_string(r.test)).c_str(),
                r.statistic, r.lags_used, r.nobs);
    for (const auto& [level, cv] : r.critical_values) {
        std::printf("  %2d%%  critical %.4f  %s\n", level, cv,
                    r.reject_unit_root.at(level) ? "reject unit root" : "unit root not rejected");
    }
    if (r.break_index) {
        const auto i = *r.break_index + offset;
        std::printf("  break after %s (index %zu)\n", i < dates.size() ? format_date(dates[i]).c_str() : "?",
                    *r.break_index);
    }
}

int cmd_unitroot(const UnitRootArgs& a) {
    const auto series = csv::read_series_file(a.series, "y", parse_frequency(a.frequency));
    const auto values = apply_transform(series.values(), parse_transform(a.transform));
    const std::size_t offset = series.size() - values.size();
    unitroot::TestConfig cfg;
    cfg.test = unitroot::parse_test(a.test);
    cfg.deterministic = parse_case(a.deterministic);
    cfg.selection = unitroot::parse_lag_selection(a.lags);
    cfg.max_lags = a.max_lags;
    cfg.break_model = unitroot::parse_break_model(a.break_model);
    cfg.trim = a.trim;
    if (a.classify) {
        const auto io = unitroot::classify_integration(values, cfg, a.level);
        print_result("level", io.level, series.dates(), offset);
        print_result("difference", io.difference, series.dates(), offset + 1);
        std::printf("order %s at %d%%\n", std::string(unitroot::to_string(io.order)).c_str(), a.level);
    } else {
        print_result("level", unitroot::run_test(values, cfg), series.dates(), offset);
    }
    return 0;
}

struct SimulateArgs {
    std::string dgp;
    std::size_t T = 200;
    std::uint64_t seed = 1;
    std::string out;
    std::optional<std::string> test;
    std::string deterministic = "constant";
    std::string lags = "aic";
    int p = 1;
    int q = 1;
    std::size_t reps = 1000;
    unsigned jobs = 1;
};

int cmd_simulate(const SimulateArgs& a) {
    if (a.dgp == "paper-shape") {
        if (a.out.empty()) throw Error(ErrorKind::InvalidArgument, "--out is required for paper-shape");
        pipeline::paper_shape::write_dataset(a.out, a.seed);
        std::cout << "wrote " << (std::filesystem::path(a.out) / "manifest.csv").string() << " and "
                  << (std::filesystem::path(a.out) / "models.cfg").string() << "\n";
        return 0;
    }
    const auto kind = mc::parse_dgp(a.dgp);
    if (!a.test) {
        if (a.out.empty()) throw Error(ErrorKind::InvalidArgument, "--out or --test is required");
        mc::validate(kind, a.T);
        std::filesystem::create_directories(a.out);
        for (const auto& s : mc::generate(mc::Dgp{kind, a.T, a.seed})) {
            const auto path = std::filesystem::path(a.out) / (s.name() + ".csv");
            csv::write_series_file(path, s);
            std::cout << "wrote " << path.string() << "\n";
        }
        return 0;
    }
    mc::TestSpec spec;
    if (*a.test == "bounds") {
        mc::BoundsConfig b;
        b.p = a.p;
        b.q = a.q;
        b.bounds_case = ardl::default_bounds_case(parse_case(a.deterministic));
        spec = b;
    } else {
        unitroot::TestConfig cfg;
        cfg.test = unitroot::parse_test(*a.test);
        cfg.deterministic = parse_case(a.deterministic);
        cfg.selection = unitroot::parse_lag_selection(a.lags);
        spec = cfg;
    }
    const auto m = mc::run_experiment(spec, kind, a.T, a.reps, a.seed, a.jobs);
    std::printf("replications %zu, failures %zu\n", m.replications, m.failures);
    for (const auto& [level, rate] : m.rejection_rate) {
        std::printf("  %2d%%  rejection rate %.4f (se %.4f)\n", level, rate, m.rate_std_error(level));
    }
    for (const auto& [name, p] : m.parameters) {
        std::printf("  %s  mean %.6f  sd %.6f\n", name.c_str(), p.mean, p.stdev);
    }
    return 0;
}

struct CritvalArgs {
    std::string test;
    std::string deterministic = "constant";
    std::string lags = "aic";
    std::string break_model = "intercept";
    std::size_t T = 200;
    std::size_t reps = 20000;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    int k = 1;
    int p = 1;
    int q = 1;
    std::optional<std::string> bounds_case;
};

int cmd_critvals(const CritvalArgs& a) {
    if (a.test == "bounds") {
        mc::BoundsConfig b;
        b.p = a.p;
        b.q = a.q;
        b.bounds_case = a.bounds_case ? parse_bounds_case(*a.bounds_case)
                                      : ardl::default_bounds_case(parse_case(a.deterministic));
        const auto q = mc::simulate_bounds_critical_values(b, a.k, a.T, a.reps, a.seed, a.jobs);
        std::cout << "case,k,level,I0_bound,I1_bound\n" << mc::bounds_table_rows(b.bounds_case, a.k, q);
        return 0;
    }
    unitroot::TestConfig cfg;
    cfg.test = unitroot::parse_test(a.test);
    cfg.deterministic = parse_case(a.deterministic);
    cfg.selection = unitroot::parse_lag_selection(a.lags);
    cfg.break_model = unitroot::parse_break_model(a.break_model);
    const auto q = mc::simulate_unitroot_critical_values(cfg, a.T, a.reps, a.seed, a.jobs);
    const std::string model = cfg.test == unitroot::TestKind::Za ? std::string(unitroot::to_string(cfg.break_model))
                                                                 : std::string(to_string(cfg.deterministic));
    const TRange range{static_cast<long>(a.T), static_cast<long>(a.T)};
    std::cout << "test,case,level,T_range,value\n" << mc::unitroot_table_rows(unitroot::to_string(cfg.test), model, q, range);
    std::fprintf(stderr, "replications %zu, failures %zu\n", q.replications, q.failures);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ARDL bounds testing, unit-root tests and error-correction models"};
    app.require_subcommand(1);

    RunArgs run;
    auto* r = app.add_subcommand("run", "Run every model of a config over a series manifest");
    r->add_option("--manifest", run.manifest, "Series manifest CSV")->required();
    r->add_option("--config", run.config, "Model config")->required();
    r->add_option("--out", run.out, "Output directory")->required();
    r->add_option("--format", run.formats, "markdown, csv or json (repeatable)")->delimiter(',');
    r->add_option("--seed", run.seed, "Recorded in json output; the pipeline itself draws no random numbers");
    r->add_option("--jobs", run.jobs, "Worker threads")->check(CLI::PositiveNumber);

    UnitRootArgs ur;
    auto* u = app.add_subcommand("unitroot", "Unit-root test on one series");
    u->add_option("--series", ur.series, "CSV with date,value")->required();
    u->add_option("--test", ur.test, "adf, dfgls or za");
    u->add_option("--case", ur.deterministic, "none, constant or constant_trend");
    u->add_option("--lags", ur.lags, "aic, bic, maic or fixed(k)");
    u->add_option("--max-lags", ur.max_lags, "Largest lag considered");
    u->add_option("--transform", ur.transform, "level, log, diff");
    u->add_option("--frequency", ur.frequency, "daily or weekly");
    u->add_option("--break-model", ur.break_model, "za: intercept, trend or both");
    u->add_option("--trim", ur.trim, "za: trimming fraction");
    u->add_flag("--classify", ur.classify, "Also test the first difference and report the integration order");
    u->add_option("--level", ur.level, "Significance level for --classify");

    SimulateArgs sim;
    auto* s = app.add_subcommand("simulate", "Write a simulated dataset or run a rejection-rate experiment");
    s->add_option("--dgp", sim.dgp, "Process, e.g. ar1(0.95), cointegrated_pair(2,0.5), paper-shape")->required();
    s->add_option("--T", sim.T, "Sample length");
    s->add_option("--seed", sim.seed, "Seed");
    s->add_option("--out", sim.out, "Output directory");
    s->add_option("--test", sim.test, "adf, dfgls, za or bounds: report rejection rates instead of writing data");
    s->add_option("--case", sim.deterministic, "Deterministic case");
    s->add_option("--lags", sim.lags, "Unit-root lag selection");
    s->add_option("--p", sim.p, "bounds: ARDL p");
    s->add_option("--q", sim.q, "bounds: ARDL q");
    s->add_option("--reps", sim.reps, "Replications");
    s->add_option("--jobs", sim.jobs, "Worker threads")->check(CLI::PositiveNumber);

    CritvalArgs cv;
    auto* c = app.add_subcommand("critvals", "Simulate critical values");
    c->add_option("--test", cv.test, "adf, dfgls, za or bounds")->required();
    c->add_option("--case", cv.deterministic, "Deterministic case");
    c->add_option("--lags", cv.lags, "Unit-root lag selection");
    c->add_option("--break-model", cv.break_model, "za: intercept, trend or both");
    c->add_option("--T", cv.T, "Sample length");
    c->add_option("--reps", cv.reps, "Replications");
    c->add_option("--seed", cv.seed, "Seed");
    c->add_option("--jobs", cv.jobs, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--k", cv.k, "bounds: number of long-run regressors");
    c->add_option("--p", cv.p, "bounds: ARDL p");
    c->add_option("--q", cv.q, "bounds: ARDL q");
    c->add_option("--bounds-case", cv.bounds_case, "bounds: I to V");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*r) return cmd_run(run);
        if (*u) return cmd_unitroot(ur);
        if (*s) return cmd_simulate(sim);
        if (*c) return cmd_critvals(cv);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }
    return 1;
}
