#pragma once

// Per-model workflow: align and transform the model's series, classify their
// integration order (refusing I(2) inputs), optionally date a structural break
// by Zivot-Andrews, select lags, run the bounds test and estimate the
// error-correction form, then reduce the estimates to sign/star table cells.

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsardl/ardl.hpp"
#include "tsardl/csv.hpp"
#include "tsardl/error.hpp"
#include "tsardl/linreg.hpp"
#include "tsardl/parallel.hpp"
#include "tsardl/pipeline/config.hpp"
#include "tsardl/series.hpp"
#include "tsardl/unitroot.hpp"

namespace tsardl::pipeline {

/// Significance threshold for a term to count in a table cell.
inline constexpr double kCellLevel = 0.10;

/// "(+)**" for a significant coefficient, empty otherwise.
inline std::string long_run_cell(const linreg::CoefficientStat& s) {
    if (!(s.p_value < kCellLevel)) return "";
    return std::string("(") + (s.estimate > 0 ? "+" : "-") + ")" + linreg::star_string(s.stars);
}

/**
 * @brief "(sign)count stars" over the terms significant at 10%: sign is + or -
 * when they agree and ± when they do not, stars are the weakest among them.
 */
inline std::string short_run_cell(const std::vector<linreg::CoefficientStat>& terms) {
    int count = 0;
    int stars = 3;
    bool pos = false;
    bool neg = false;
    for (const auto& t : terms) {
        if (!(t.p_value < kCellLevel)) continue;
        ++count;
        stars = std::min(stars, t.stars);
        (t.estimate > 0 ? pos : neg) = true;
    }
    if (count == 0) return "";
    const char* sign = pos && neg ? "±" : (pos ? "+" : "-");
    return std::string("(") + sign + ")" + std::to_string(count) + linreg::star_string(stars);
}

enum class RowKind { Dynamic, OwnLags, Exogenous, Dummy, Trend, Constant };

struct SymbolicRow {
    std::string label;
    RowKind kind = RowKind::Dynamic;
    std::vector<linreg::CoefficientStat> terms;
    std::vector<int> lags;  ///< lag of each term
    std::string cell;
};

struct IntegrationRow {
    std::string variable;
    unitroot::Order order = unitroot::Order::I1;
    double level_statistic = 0.0;
    double difference_statistic = 0.0;
    int level_lags = 0;
    int difference_lags = 0;
};

struct BreakInfo {
    std::string name;
    Date date;
    std::optional<double> za_statistic;
};

struct ModelSection {
    ModelConfig config;
    enum class Status { Ok, Skipped };
    Status status = Status::Ok;
    std::optional<ErrorKind> error_kind;
    std::string reason;

    std::optional<Date> sample_start;
    std::optional<Date> sample_end;
    long nobs = 0;
    std::vector<IntegrationRow> integration;
    std::vector<BreakInfo> breaks;
    int p = 0;
    int q = 0;
    std::optional<ardl::BoundsResult> bounds;
    bool cointegrated = false;
    std::optional<linreg::CoefficientStat> alpha;
    std::vector<SymbolicRow> long_run;   ///< empty unless cointegrated
    std::vector<SymbolicRow> short_run;

    [[nodiscard]] const std::string& model_id() const { return config.model_id; }
    [[nodiscard]] bool ok() const { return status == Status::Ok; }
};

struct RunReport {
    std::vector<ModelSection> sections;

    [[nodiscard]] std::size_t skipped() const {
        return static_cast<std::size_t>(
            std::count_if(sections.begin(), sections.end(), [](const ModelSection& s) { return !s.ok(); }));
    }
    /// 0 when every model ran, 2 when at least one was skipped.
    [[nodiscard]] int exit_code() const { return skipped() == 0 ? 0 : 2; }
};

/// Raw series by manifest name.
using SeriesStore = std::map<std::string, TimeSeries>;

/// Reads every manifest series the configured models touch.
inline SeriesStore load_series(const Manifest& manifest, const RunConfig& cfg) {
    std::set<std::string> needed;
    for (const auto& m : cfg.models) {
        const auto vars = m.variables();
        needed.insert(vars.begin(), vars.end());
        for (const auto& [v, other] : m.conversions) {
            if (std::find(vars.begin(), vars.end(), v) != vars.end()) needed.insert(other);
        }
    }
    SeriesStore store;
    for (const auto& name : needed) {
        const auto* e = manifest.find(name);
        if (!e) throw Error(ErrorKind::UnknownVariable, "unknown series '" + name + "'", {name});
        store.emplace(name, csv::read_series_file(e->path, name, e->frequency));
    }
    return store;
}

/**
 * @brief Aligned, converted and transformed panel for one model, with roles.
 *
 * Conversions multiply a series by another before any transform. Transforms
 * that shorten a column (first difference) drop the leading rows of every
 * column so the panel stays rectangular.
 */
inline Panel build_model_panel(const ModelConfig& m, const SeriesStore& store, const Manifest& manifest) {
    std::vector<std::string> names = m.variables();
    std::vector<std::string> all = names;
    for (const auto& [v, other] : m.conversions) {
        if (std::find(names.begin(), names.end(), v) == names.end()) continue;
        if (std::find(all.begin(), all.end(), other) == all.end()) all.push_back(other);
    }
    std::vector<TimeSeries> series;
    Date lo = Date::max();
    Date hi = Date::min();
    for (const auto& name : all) {
        const auto& s = store.at(name);
        series.push_back(s);
        if (!s.empty()) {
            lo = std::min(lo, s.dates().front());
            hi = std::max(hi, s.dates().back() + std::chrono::days{6});
        }
    }
    const DateRange range = m.sample.value_or(DateRange{lo, hi});
    const Panel aligned = align_panel(series, range);

    std::vector<std::vector<double>> columns;
    for (const auto& name : names) {
        std::vector<double> v = aligned.column(name);
        if (auto c = m.conversions.find(name); c != m.conversions.end()) {
            const auto& other = aligned.column(c->second);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] *= other[i];
        }
        std::string text = manifest.find(name)->transform_text;
        if (auto t = m.transforms.find(name); t != m.transforms.end()) text = t->second;
        try {
            columns.push_back(apply_transform(v, parse_pipeline_transform(text)));
        } catch (const Error& e) {
            throw Error(e.kind(), "series '" + name + "': " + e.what(), {name});
        }
    }
    std::size_t n = aligned.size();
    for (const auto& c : columns) n = std::min(n, c.size());
    const std::size_t offset = aligned.size() - n;
    std::vector<Date> dates(aligned.dates().begin() + static_cast<std::ptrdiff_t>(offset), aligned.dates().end());
    std::vector<Column> cols;
    std::map<std::string, Role> roles;
    for (std::size_t j = 0; j < names.size(); ++j) {
        const auto& c = columns[j];
        cols.push_back({names[j], std::vector<double>(c.end() - static_cast<std::ptrdiff_t>(n), c.end())});
    }
    roles[m.dependent] = Role::Dependent;
    for (const auto& x : m.dynamic_regressors) roles[x] = Role::DynamicRegressor;
    for (const auto& w : m.exogenous) roles[w] = Role::ExogenousRegressor;
    return Panel(std::move(dates), std::move(cols), std::move(roles));
}

inline std::string dummy_name(const std::string& dependent) { return "DU_" + dependent; }

namespace detail {

inline std::vector<SymbolicRow> short_run_rows(const ardl::EcmFit& ecm, const ModelConfig& m) {
    std::vector<SymbolicRow> rows;
    auto add = [&](std::string label, RowKind kind, ardl::TermKind tk, const std::string& variable) {
        SymbolicRow r{std::move(label), kind, {}, {}, {}};
        for (const auto* t : ecm.terms_of(tk, variable)) {
            r.terms.push_back(t->stat);
            r.lags.push_back(t->lag);
        }
        r.cell = short_run_cell(r.terms);
        rows.push_back(std::move(r));
    };
    for (const auto& x : m.dynamic_regressors) add(x, RowKind::Dynamic, ardl::TermKind::Regressor, x);
    add("own lags", RowKind::OwnLags, ardl::TermKind::OwnLag, m.dependent);
    for (const auto& w : m.exogenous) add(w, RowKind::Exogenous, ardl::TermKind::Exogenous, w);
    for (const auto& d : ecm.levels.spec.dummies) add(d.name, RowKind::Dummy, ardl::TermKind::Dummy, d.name);
    if (has_trend(m.deterministic)) add("trend", RowKind::Trend, ardl::TermKind::Trend, kTrendName);
    if (has_constant(m.deterministic)) add("constant", RowKind::Constant, ardl::TermKind::Constant, kConstName);
    return rows;
}

inline std::vector<SymbolicRow> long_run_rows(const ardl::EcmFit& ecm, const ModelConfig& m) {
    std::vector<SymbolicRow> rows;
    auto add = [&](std::string label, RowKind kind, ardl::TermKind tk, const std::string& variable) {
        for (const auto* t : ecm.terms_of(tk, variable)) {
            rows.push_back({label, kind, {t->stat}, {0}, long_run_cell(t->stat)});
        }
    };
    for (const auto& x : m.dynamic_regressors) add(x, RowKind::Dynamic, ardl::TermKind::LongRun, x);
    for (const auto& d : ecm.levels.spec.dummies) add(d.name, RowKind::Dummy, ardl::TermKind::LongRunDummy, d.name);
    if (has_trend(m.deterministic)) add("trend", RowKind::Trend, ardl::TermKind::LongRunTrend, kTrendName);
    if (has_constant(m.deterministic)) add("constant", RowKind::Constant, ardl::TermKind::LongRunConstant, kConstName);
    return rows;
}

inline void run_steps(ModelSection& s, const Panel& panel) {
    const auto& m = s.config;
    s.sample_start = panel.dates().front();
    s.sample_end = panel.dates().back();

    std::vector<std::string> i2;
    for (const auto& v : m.variables()) {
        const auto io = unitroot::classify_integration(panel.column(v), m.unitroot, m.unitroot_level);
        s.integration.push_back({v, io.order, io.level.statistic, io.difference.statistic, io.level.lags_used,
                                 io.difference.lags_used});
        if (io.order == unitroot::Order::I2OrHigher) i2.push_back(v);
    }
    if (!i2.empty()) {
        std::string names;
        for (const auto& v : i2) names += (names.empty() ? "" : ", ") + v;
        throw Error(ErrorKind::I2VariableDetected, "integrated of order two or higher: " + names, i2);
    }

    ardl::ArdlSpec spec;
    spec.dependent = m.dependent;
    spec.dynamic_regressors = m.dynamic_regressors;
    spec.exogenous = m.exogenous;
    spec.deterministic = m.deterministic;
    if (m.dummies.kind == DummyPolicy::Kind::AutoZa) {
        const auto za = unitroot::za_test(panel.column(m.dependent), m.dummies.za_model, std::nullopt, m.dummies.trim,
                                          m.unitroot.selection);
        const Date tau = panel.dates()[*za.break_index];
        spec.dummies.push_back({dummy_name(m.dependent), tau});
        s.breaks.push_back({spec.dummies.back().name, tau, za.statistic});
    } else if (m.dummies.kind == DummyPolicy::Kind::Explicit) {
        for (const auto& d : m.dummies.dates) {
            spec.dummies.push_back({"DU_" + format_date(d), d});
            s.breaks.push_back({spec.dummies.back().name, d, std::nullopt});
        }
    }

    const auto lags = ardl::select_lags(panel, spec, m.p_max, m.q_max, m.criterion);
    spec.p = lags.p;
    spec.q = lags.q;
    s.p = lags.p;
    s.q = lags.q;

    s.bounds = ardl::bounds_test(panel, spec, m.effective_bounds_case());
    s.cointegrated = s.bounds->at(m.bounds_level) == ardl::Conclusion::Cointegrated;

    const auto ecm = ardl::fit_ecm_with_dummies(panel, spec);
    s.nobs = static_cast<long>(ecm.levels.fit.nobs);
    s.alpha = ecm.term("alpha").stat;
    s.short_run = short_run_rows(ecm, m);
    if (s.cointegrated) s.long_run = long_run_rows(ecm, m);
}

}  // namespace detail

/**
 * @brief Runs one model on an already built panel. Library errors are caught
 * and recorded as a skipped section with the error kind and message.
 */
inline ModelSection run_model(const Panel& panel, const ModelConfig& config) {
    ModelSection s;
    s.config = config;
    try {
        detail::run_steps(s, panel);
    } catch (const Error& e) {
        s.status = ModelSection::Status::Skipped;
        s.error_kind = e.kind();
        s.reason = e.what();
        s.bounds.reset();
        s.cointegrated = false;
        s.long_run.clear();
        s.short_run.clear();
        s.alpha.reset();
    }
    return s;
}

/// Builds the model's panel from the store, then runs it; panel errors skip the model.
inline ModelSection run_model(const ModelConfig& config, const SeriesStore& store, const Manifest& manifest) {
    try {
        return run_model(build_model_panel(config, store, manifest), config);
    } catch (const Error& e) {
        ModelSection s;
        s.config = config;
        s.status = ModelSection::Status::Skipped;
        s.error_kind = e.kind();
        s.reason = e.what();
        return s;
    }
}

/// Runs every model, in parallel when jobs > 1; sections are ordered by model id.
inline RunReport run_all(const RunConfig& cfg, const SeriesStore& store, const Manifest& manifest,
                         unsigned jobs = 1) {
    RunReport report;
    report.sections = parallel_map(cfg.models.size(), jobs,
                                   [&](std::size_t i) { return run_model(cfg.models[i], store, manifest); });
    std::sort(report.sections.begin(), report.sections.end(),
              [](const ModelSection& a, const ModelSection& b) { return a.model_id() < b.model_id(); });
    return report;
}

}  // namespace tsardl::pipeline
