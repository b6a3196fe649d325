#pragma once

// Unit-root battery: augmented Dickey-Fuller, DF-GLS (GLS-detrended ADF) and
// Zivot-Andrews with one endogenous break, plus the integration-order
// classifier used to guard the bounds test against I(2) inputs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tsardl/critical_values.hpp"
#include "tsardl/deterministic.hpp"
#include "tsardl/error.hpp"
#include "tsardl/linreg.hpp"
#include "tsardl/series.hpp"

namespace tsardl::unitroot {

enum class TestKind { Adf, Dfgls, Za };

inline std::string_view to_string(TestKind t) {
    switch (t) {
        case TestKind::Adf: return "adf";
        case TestKind::Dfgls: return "dfgls";
        case TestKind::Za: return "za";
    }
    return "adf";
}

inline TestKind parse_test(std::string_view text) {
    if (text == "adf") return TestKind::Adf;
    if (text == "dfgls") return TestKind::Dfgls;
    if (text == "za") return TestKind::Za;
    throw Error(ErrorKind::ParseError, "unknown unit-root test '" + std::string(text) + "'");
}

enum class BreakModel { Intercept, Trend, Both };

inline std::string_view to_string(BreakModel m) {
    switch (m) {
        case BreakModel::Intercept: return "intercept";
        case BreakModel::Trend: return "trend";
        case BreakModel::Both: return "both";
    }
    return "intercept";
}

inline BreakModel parse_break_model(std::string_view text) {
    if (text == "intercept") return BreakModel::Intercept;
    if (text == "trend") return BreakModel::Trend;
    if (text == "both") return BreakModel::Both;
    throw Error(ErrorKind::ParseError, "unknown break model '" + std::string(text) + "'");
}

struct LagSelection {
    enum class Rule { Fixed, Aic, Bic, Maic };
    Rule rule = Rule::Aic;
    int lags = 0;  ///< used when rule == Fixed

    static LagSelection fixed(int k) { return {Rule::Fixed, k}; }
    static LagSelection aic() { return {Rule::Aic, 0}; }
    static LagSelection bic() { return {Rule::Bic, 0}; }
    static LagSelection maic() { return {Rule::Maic, 0}; }

    [[nodiscard]] std::string to_string() const {
        switch (rule) {
            case Rule::Fixed: return "fixed(" + std::to_string(lags) + ")";
            case Rule::Aic: return "aic";
            case Rule::Bic: return "bic";
            case Rule::Maic: return "maic";
        }
        return "aic";
    }
};

inline LagSelection parse_lag_selection(std::string_view text) {
    if (text == "aic") return LagSelection::aic();
    if (text == "bic") return LagSelection::bic();
    if (text == "maic") return LagSelection::maic();
    if (text.starts_with("fixed(") && text.ends_with(")")) {
        double k = 0.0;
        if (csv::parse_double(text.substr(6, text.size() - 7), k) && k >= 0) {
            return LagSelection::fixed(static_cast<int>(k));
        }
    }
    throw Error(ErrorKind::ParseError, "unknown lag selection '" + std::string(text) + "'");
}

/// floor(12 * (T/100)^(1/4)).
inline int default_max_lags(std::size_t T) {
    return static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(T) / 100.0, 0.25)));
}

struct UnitRootResult {
    TestKind test = TestKind::Adf;
    double statistic = 0.0;
    int lags_used = 0;
    DeterministicCase deterministic = DeterministicCase::Constant;
    long nobs = 0;  ///< observations in the final test regression
    std::map<int, double> critical_values;  ///< level (%) -> value
    std::map<int, bool> reject_unit_root;   ///< statistic < critical value
    std::optional<std::size_t> break_index;  ///< za only: last pre-break observation
    std::optional<BreakModel> break_model;    ///< za only
    int skipped_candidates = 0;              ///< za only: rank-deficient break dates

    [[nodiscard]] bool rejects(int level) const {
        auto it = reject_unit_root.find(level);
        if (it == reject_unit_root.end()) {
            throw Error(ErrorKind::MissingCriticalValue, "no decision at " + std::to_string(level) + "%");
        }
        return it->second;
    }
};

namespace detail {

inline bool is_constant(std::span<const double> y) {
    return std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); });
}

/// Extra regressor columns, evaluated at 0-based time index t.
struct ExtraColumn {
    std::string name;
    std::function<double(std::size_t)> value;
};

/**
 * Dickey-Fuller regression of dy_t on deterministics, extra columns, y_{t-1}
 * and k lagged differences, over 0-based rows t = first .. T-1.
 */
inline linreg::RegressionFit df_regression(std::span<const double> y, DeterministicCase deterministic,
                                           int k, std::size_t first,
                                           const std::vector<ExtraColumn>& extra = {}) {
    const std::size_t T = y.size();
    const auto n = static_cast<Eigen::Index>(T - first);
    const Eigen::Index ncol = (has_constant(deterministic) ? 1 : 0) + (has_trend(deterministic) ? 1 : 0) +
                              static_cast<Eigen::Index>(extra.size()) + 1 + k;
    Eigen::MatrixXd X(n, ncol);
    Eigen::VectorXd dy(n);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(ncol));
    if (has_constant(deterministic)) names.emplace_back("const");
    if (has_trend(deterministic)) names.emplace_back("trend");
    for (const auto& e : extra) names.push_back(e.name);
    names.emplace_back("y.L1");
    for (int i = 1; i <= k; ++i) names.push_back("D.y.L" + std::to_string(i));

    for (Eigen::Index r = 0; r < n; ++r) {
        const std::size_t t = first + static_cast<std::size_t>(r);
        Eigen::Index c = 0;
        if (has_constant(deterministic)) X(r, c++) = 1.0;
        if (has_trend(deterministic)) X(r, c++) = static_cast<double>(t + 1);
        for (const auto& e : extra) X(r, c++) = e.value(t);
        X(r, c++) = y[t - 1];
        for (int i = 1; i <= k; ++i) {
            X(r, c++) = y[t - static_cast<std::size_t>(i)] - y[t - static_cast<std::size_t>(i) - 1];
        }
        dy[r] = y[t] - y[t - 1];
    }
    return linreg::ols_fit(linreg::DesignMatrix(std::move(names), std::move(X)), std::move(dy));
}

inline double tstat(const linreg::RegressionFit& fit, const std::string& name = "y.L1") {
    const auto j = fit.index_of(name);
    return fit.coefficients[j] / std::sqrt(fit.covariance(j, j));
}

/**
 * Modified AIC penalty term tau(k) = b0^2 * sum(ytilde_{t-1}^2) / sigma2, with
 * ytilde the lagged level purged of the deterministic columns.
 */
inline double maic_tau(const linreg::RegressionFit& fit) {
    const auto& X = fit.design->rows();
    const auto j = fit.index_of("y.L1");
    std::vector<Eigen::Index> det;
    for (const char* name : {"const", "trend"}) {
        if (const auto c = fit.index_of(name); c >= 0) det.push_back(c);
    }
    Eigen::VectorXd ylag = X.col(j);
    if (!det.empty()) {
        Eigen::MatrixXd D(X.rows(), static_cast<Eigen::Index>(det.size()));
        for (std::size_t c = 0; c < det.size(); ++c) D.col(static_cast<Eigen::Index>(c)) = X.col(det[c]);
        ylag -= D * D.colPivHouseholderQr().solve(ylag);
    }
    const double sigma2 = fit.rss / static_cast<double>(fit.nobs);
    const double b0 = fit.coefficients[j];
    return b0 * b0 * ylag.squaredNorm() / sigma2;
}

/// Lag order by the selection rule, every candidate on the sample implied by max_lags.
inline int select_df_lags(std::span<const double> y, DeterministicCase deterministic, int max_lags,
                          LagSelection selection, const std::vector<ExtraColumn>& extra = {}) {
    if (selection.rule == LagSelection::Rule::Fixed) return selection.lags;
    const std::size_t first = static_cast<std::size_t>(max_lags) + 1;
    int best_k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= max_lags; ++k) {
        const auto fit = df_regression(y, deterministic, k, first, extra);
        double v = 0.0;
        if (selection.rule == LagSelection::Rule::Maic) {
            const double n = static_cast<double>(fit.nobs);
            v = std::log(fit.rss / n) + 2.0 * (maic_tau(fit) + k) / n;
        } else {
            const auto ic = linreg::information_criteria(fit);
            v = selection.rule == LagSelection::Rule::Aic ? ic.aic : ic.bic;
        }
        if (v < best) {
            best = v;
            best_k = k;
        }
    }
    return best_k;
}

inline void fill_decisions(UnitRootResult& r, std::string_view test, std::string_view model,
                           const UnitRootTable& table) {
    for (int level : kLevels) {
        const double cv = table.lookup(test, model, level, r.nobs);
        r.critical_values[level] = cv;
        r.reject_unit_root[level] = r.statistic < cv;
    }
}

inline int required_lags(int max_lags, LagSelection selection) {
    return selection.rule == LagSelection::Rule::Fixed ? selection.lags : max_lags;
}

inline void check_length(std::span<const double> y, int max_lags, std::size_t minimum = 0) {
    if (max_lags < 0) throw Error(ErrorKind::InvalidArgument, "max_lags must be >= 0");
    const std::size_t need = std::max<std::size_t>(static_cast<std::size_t>(max_lags) + 15, minimum);
    if (y.size() < need) {
        throw Error(ErrorKind::TooShort,
                    "series of length " + std::to_string(y.size()) + " needs at least " + std::to_string(need));
    }
}

}  // namespace detail

/**
 * @brief Augmented Dickey-Fuller test.
 *
 * Regresses dy_t on the deterministic terms, y_{t-1} and dy_{t-1..k}; the
 * statistic is the t ratio on y_{t-1}. With an information-criterion rule the
 * lag order is chosen over 0..max_lags on a common sample, then the chosen
 * regression is re-estimated on its full sample. Critical values are looked up
 * by the number of observations in that final regression.
 */
inline UnitRootResult adf_test(std::span<const double> y,
                               DeterministicCase deterministic = DeterministicCase::Constant,
                               std::optional<int> max_lags = std::nullopt,
                               LagSelection selection = LagSelection::aic(),
                               const UnitRootTable& table = default_unitroot_table()) {
    const int kmax = max_lags.value_or(default_max_lags(y.size()));
    detail::check_length(y, detail::required_lags(kmax, selection));
    if (detail::is_constant(y)) {
        throw Error(ErrorKind::RankDeficient, "constant series", {"y.L1"});
    }
    const int k = detail::select_df_lags(y, deterministic, kmax, selection);
    const auto fit = detail::df_regression(y, deterministic, k, static_cast<std::size_t>(k) + 1);

    UnitRootResult r;
    r.test = TestKind::Adf;
    r.statistic = detail::tstat(fit);
    r.lags_used = k;
    r.deterministic = deterministic;
    r.nobs = static_cast<long>(fit.nobs);
    detail::fill_decisions(r, "adf", to_string(deterministic), table);
    return r;
}

/// Local-to-unity constant used for GLS quasi-differencing.
inline double dfgls_cbar(DeterministicCase deterministic) {
    return deterministic == DeterministicCase::ConstantTrend ? -13.5 : -7.0;
}

/**
 * @brief GLS detrending: quasi-difference y and the deterministic terms with
 * a = 1 + cbar/T, regress, and return y minus the fitted deterministic part.
 */
inline std::vector<double> gls_detrend(std::span<const double> y, DeterministicCase deterministic) {
    if (deterministic == DeterministicCase::None) {
        throw Error(ErrorKind::InvalidArgument, "DF-GLS needs a constant or constant_trend case");
    }
    const std::size_t T = y.size();
    const double a = 1.0 + dfgls_cbar(deterministic) / static_cast<double>(T);
    const bool trend = has_trend(deterministic);
    const Eigen::Index kz = trend ? 2 : 1;
    Eigen::MatrixXd Zq(static_cast<Eigen::Index>(T), kz);
    Eigen::VectorXd yq(static_cast<Eigen::Index>(T));
    for (std::size_t t = 0; t < T; ++t) {
        const auto r = static_cast<Eigen::Index>(t);
        const double lag_factor = t == 0 ? 0.0 : a;
        Zq(r, 0) = 1.0 - lag_factor;
        if (trend) Zq(r, 1) = static_cast<double>(t + 1) - lag_factor * static_cast<double>(t);
        yq[r] = y[t] - (t == 0 ? 0.0 : a * y[t - 1]);
    }
    std::vector<std::string> names{"const"};
    if (trend) names.emplace_back("trend");
    const auto fit = linreg::ols_fit(linreg::DesignMatrix(std::move(names), std::move(Zq)), std::move(yq));
    std::vector<double> detrended(T);
    for (std::size_t t = 0; t < T; ++t) {
        double fitted = fit.coefficients[0];
        if (trend) fitted += fit.coefficients[1] * static_cast<double>(t + 1);
        detrended[t] = y[t] - fitted;
    }
    return detrended;
}

/**
 * @brief DF-GLS test: ADF regression without deterministic terms on the
 * GLS-detrended series.
 *
 * @throws Error(DegenerateAfterDetrend) when the detrended series is
 *         numerically zero (e.g. an exact linear trend)
 */
inline UnitRootResult dfgls_test(std::span<const double> y,
                                 DeterministicCase deterministic = DeterministicCase::Constant,
                                 std::optional<int> max_lags = std::nullopt,
                                 LagSelection selection = LagSelection::aic(),
                                 const UnitRootTable& table = default_unitroot_table()) {
    if (deterministic == DeterministicCase::None) {
        throw Error(ErrorKind::InvalidArgument, "DF-GLS is defined for constant or constant_trend");
    }
    const int kmax = max_lags.value_or(default_max_lags(y.size()));
    detail::check_length(y, detail::required_lags(kmax, selection));
    if (detail::is_constant(y)) {
        throw Error(ErrorKind::RankDeficient, "constant series", {"y.L1"});
    }
    const auto yd = gls_detrend(y, deterministic);
    double scale = 0.0;
    double resid = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) {
        scale = std::max(scale, std::abs(y[t]));
        resid = std::max(resid, std::abs(yd[t]));
    }
    if (resid <= 1e-9 * std::max(scale, 1.0)) {
        throw Error(ErrorKind::DegenerateAfterDetrend, "series is fully explained by its deterministic terms");
    }
    const int k = detail::select_df_lags(yd, DeterministicCase::None, kmax, selection);
    const auto fit = detail::df_regression(yd, DeterministicCase::None, k, static_cast<std::size_t>(k) + 1);

    UnitRootResult r;
    r.test = TestKind::Dfgls;
    r.statistic = detail::tstat(fit);
    r.lags_used = k;
    r.deterministic = deterministic;
    r.nobs = static_cast<long>(fit.nobs);
    detail::fill_decisions(r, "dfgls", to_string(deterministic), table);
    return r;
}

/// Candidate break indices [first, last] (0-based last pre-break observation).
struct BreakRange {
    std::size_t first = 0;
    std::size_t last = 0;
};

inline BreakRange za_candidate_range(std::size_t T, double trim) {
    const auto Td = static_cast<double>(T);
    return {static_cast<std::size_t>(std::floor(trim * Td)),
            static_cast<std::size_t>(std::ceil((1.0 - trim) * Td)) - 1};
}

/// Break regressors for candidate b: DU_t = 1{t > b}, DT_t = (t - b) 1{t > b}.
inline std::vector<detail::ExtraColumn> za_break_columns(BreakModel model, std::size_t b) {
    std::vector<detail::ExtraColumn> cols;
    if (model == BreakModel::Intercept || model == BreakModel::Both) {
        cols.push_back({"DU", [b](std::size_t t) { return t > b ? 1.0 : 0.0; }});
    }
    if (model == BreakModel::Trend || model == BreakModel::Both) {
        cols.push_back({"DT", [b](std::size_t t) { return t > b ? static_cast<double>(t - b) : 0.0; }});
    }
    return cols;
}

/**
 * @brief Zivot-Andrews test with one endogenous break.
 *
 * The lag order is chosen once, on the no-break constant+trend ADF regression,
 * and held fixed across break candidates. For each candidate in the trimmed
 * range the ADF regression with constant, trend and the model's break
 * regressors is fitted; the statistic is the minimum t ratio on y_{t-1} and
 * the break is its argmin (earliest on ties). Rank-deficient candidates are
 * skipped and counted.
 */
inline UnitRootResult za_test(std::span<const double> y, BreakModel model = BreakModel::Intercept,
                              std::optional<int> max_lags = std::nullopt, double trim = 0.15,
                              LagSelection selection = LagSelection::aic(),
                              const UnitRootTable& table = default_unitroot_table()) {
    if (!(trim > 0.0 && trim < 0.5)) throw Error(ErrorKind::InvalidArgument, "trim must be in (0, 0.5)");
    const int kmax = max_lags.value_or(default_max_lags(y.size()));
    detail::check_length(y, detail::required_lags(kmax, selection), 50);
    if (detail::is_constant(y)) {
        throw Error(ErrorKind::RankDeficient, "constant series", {"y.L1"});
    }
    const int k = detail::select_df_lags(y, DeterministicCase::ConstantTrend, kmax, selection);
    const auto first = static_cast<std::size_t>(k) + 1;
    const auto range = za_candidate_range(y.size(), trim);

    UnitRootResult r;
    r.test = TestKind::Za;
    r.lags_used = k;
    r.deterministic = DeterministicCase::ConstantTrend;
    r.break_model = model;
    r.statistic = std::numeric_limits<double>::infinity();
    for (std::size_t b = range.first; b <= range.last; ++b) {
        try {
            const auto fit = detail::df_regression(y, DeterministicCase::ConstantTrend, k, first,
                                                   za_break_columns(model, b));
            const double t = detail::tstat(fit);
            if (t < r.statistic) {
                r.statistic = t;
                r.break_index = b;
                r.nobs = static_cast<long>(fit.nobs);
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::RankDeficient) throw;
            ++r.skipped_candidates;
        }
    }
    if (!r.break_index) {
        throw Error(ErrorKind::RankDeficient, "every break candidate was rank deficient");
    }
    detail::fill_decisions(r, "za", to_string(model), table);
    return r;
}

/// Test configuration shared by the classifier, the CLI and the Monte Carlo harness.
struct TestConfig {
    TestKind test = TestKind::Adf;
    DeterministicCase deterministic = DeterministicCase::Constant;
    std::optional<int> max_lags;
    LagSelection selection = LagSelection::aic();
    BreakModel break_model = BreakModel::Intercept;
    double trim = 0.15;
};

inline UnitRootResult run_test(std::span<const double> y, const TestConfig& config,
                               const UnitRootTable& table = default_unitroot_table()) {
    switch (config.test) {
        case TestKind::Adf: return adf_test(y, config.deterministic, config.max_lags, config.selection, table);
        case TestKind::Dfgls: return dfgls_test(y, config.deterministic, config.max_lags, config.selection, table);
        case TestKind::Za: return za_test(y, config.break_model, config.max_lags, config.trim, config.selection, table);
    }
    return {};
}

enum class Order { I0, I1, I2OrHigher };

inline std::string_view to_string(Order o) {
    switch (o) {
        case Order::I0: return "I(0)";
        case Order::I1: return "I(1)";
        case Order::I2OrHigher: return "I(2)+";
    }
    return "I(0)";
}

struct IntegrationOrder {
    Order order = Order::I0;
    UnitRootResult level;
    UnitRootResult difference;
};

/**
 * @brief Integration order from the configured test on the level and on the
 * first difference: level rejects -> I(0); level fails and difference rejects
 * -> I(1); both fail -> I(2) or higher.
 */
inline IntegrationOrder classify_integration(std::span<const double> y, const TestConfig& config = {},
                                             int level = 5,
                                             const UnitRootTable& table = default_unitroot_table()) {
    IntegrationOrder out;
    out.level = run_test(y, config, table);
    const auto dy = difference(y);
    out.difference = run_test(dy, config, table);
    if (out.level.rejects(level)) {
        out.order = Order::I0;
    } else if (out.difference.rejects(level)) {
        out.order = Order::I1;
    } else {
        out.order = Order::I2OrHigher;
    }
    return out;
}

}  // namespace tsardl::unitroot
