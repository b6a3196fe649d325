#pragma once

// ARDL(p, q, ..., q) estimation in levels, lag-order selection, the bounds
// F test on the conditional error-correction form, and the exact
// reparameterization of a levels fit into error-correction form (speed of
// adjustment, long-run coefficients, short-run dynamics) with step dummies.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tsardl/critical_values.hpp"
#include "tsardl/deterministic.hpp"
#include "tsardl/error.hpp"
#include "tsardl/lag_design.hpp"
#include "tsardl/linreg.hpp"
#include "tsardl/series.hpp"

namespace tsardl::ardl {

/// Step dummy DU = 1 for dates strictly after break_date, 0 elsewhere.
struct StepDummy {
    std::string name;
    Date break_date;
};

struct ArdlSpec {
    std::string dependent;
    std::vector<std::string> dynamic_regressors;  ///< x_t, share lag order q
    std::vector<std::string> exogenous;           ///< w_t, short-run only
    DeterministicCase deterministic = DeterministicCase::Constant;
    int p = 1;
    int q = 0;
    std::vector<StepDummy> dummies;
};

/// Minimum of usable rows minus estimated columns for fit_ardl.
inline constexpr long kMinSpareRows = 10;

/// Minimum observations on each side of a dummy's break inside the sample.
inline constexpr long kMinDummySide = 10;

inline void validate_spec(const ArdlSpec& spec) {
    if (spec.p < 1) throw Error(ErrorKind::InvalidArgument, "p must be >= 1");
    if (spec.q < 0) throw Error(ErrorKind::InvalidArgument, "q must be >= 0");
    std::set<std::string> seen{spec.dependent};
    for (const auto* group : {&spec.dynamic_regressors, &spec.exogenous}) {
        for (const auto& name : *group) {
            if (!seen.insert(name).second) {
                throw Error(ErrorKind::InvalidArgument,
                            "variable '" + name + "' appears twice (or is the dependent)", {name});
            }
        }
    }
    for (const auto& d : spec.dummies) {
        if (!seen.insert(d.name).second) {
            throw Error(ErrorKind::InvalidArgument, "dummy name '" + d.name + "' clashes", {d.name});
        }
    }
}

/**
 * @brief Panel restricted to the spec's variables, with roles assigned and
 * one 0/1 column per step dummy.
 */
inline Panel prepare_panel(const Panel& panel, const ArdlSpec& spec) {
    validate_spec(spec);
    std::vector<Column> cols;
    std::map<std::string, Role> roles;
    cols.push_back({spec.dependent, panel.column(spec.dependent)});
    roles[spec.dependent] = Role::Dependent;
    for (const auto& x : spec.dynamic_regressors) {
        cols.push_back({x, panel.column(x)});
        roles[x] = Role::DynamicRegressor;
    }
    for (const auto& w : spec.exogenous) {
        cols.push_back({w, panel.column(w)});
        roles[w] = Role::ExogenousRegressor;
    }
    for (const auto& d : spec.dummies) {
        std::vector<double> v(panel.size());
        for (std::size_t t = 0; t < panel.size(); ++t) v[t] = panel.dates()[t] > d.break_date ? 1.0 : 0.0;
        cols.push_back({d.name, std::move(v)});
        roles[d.name] = Role::Dummy;
    }
    return Panel(panel.dates(), std::move(cols), std::move(roles));
}

/// Checks each dummy splits rows [first_row, T) with at least min_side on each side.
inline void check_dummies(const Panel& prepared, const ArdlSpec& spec, std::size_t first_row, long min_side) {
    const auto& dates = prepared.dates();
    for (const auto& d : spec.dummies) {
        long before = 0;
        long after = 0;
        for (std::size_t t = first_row; t < dates.size(); ++t) (dates[t] > d.break_date ? after : before)++;
        if (before < min_side || after < min_side) {
            throw Error(ErrorKind::DummyOutsideSample,
                        "dummy '" + d.name + "' at " + format_date(d.break_date) + " leaves " +
                            std::to_string(before) + " observations before and " + std::to_string(after) +
                            " after within the estimation sample",
                        {d.name});
        }
    }
}

/// Levels fit with the coefficient map onto design columns.
struct ArdlFit {
    ArdlSpec spec;
    linreg::RegressionFit fit;
    std::size_t first_row = 0;
    std::vector<Date> dates;

    std::optional<Eigen::Index> const_idx;
    std::optional<Eigen::Index> trend_idx;
    std::vector<Eigen::Index> phi_idx;                ///< y lags 1..p
    std::vector<std::vector<Eigen::Index>> beta_idx;  ///< per x, lags 0..q
    std::vector<Eigen::Index> delta_idx;              ///< per w
    std::vector<Eigen::Index> dummy_idx;              ///< per dummy

    [[nodiscard]] double phi(int i) const { return fit.coefficients[phi_idx.at(static_cast<std::size_t>(i - 1))]; }
    [[nodiscard]] double beta(std::size_t x, int lag) const {
        return fit.coefficients[beta_idx.at(x).at(static_cast<std::size_t>(lag))];
    }
};

namespace detail {

inline Eigen::Index require_index(const linreg::RegressionFit& fit, const std::string& name) {
    const auto j = fit.index_of(name);
    if (j < 0) throw Error(ErrorKind::InvalidArgument, "design lacks column '" + name + "'", {name});
    return j;
}

inline ArdlFit map_levels_fit(const ArdlSpec& spec, linreg::RegressionFit fit, std::size_t first_row,
                              std::vector<Date> dates) {
    ArdlFit out;
    out.spec = spec;
    if (has_constant(spec.deterministic)) out.const_idx = require_index(fit, kConstName);
    if (has_trend(spec.deterministic)) out.trend_idx = require_index(fit, kTrendName);
    for (int i = 1; i <= spec.p; ++i) out.phi_idx.push_back(require_index(fit, lag_name(spec.dependent, i)));
    for (const auto& x : spec.dynamic_regressors) {
        std::vector<Eigen::Index> lags;
        for (int i = 0; i <= spec.q; ++i) lags.push_back(require_index(fit, lag_name(x, i)));
        out.beta_idx.push_back(std::move(lags));
    }
    for (const auto& w : spec.exogenous) out.delta_idx.push_back(require_index(fit, diff_name(w)));
    for (const auto& d : spec.dummies) out.dummy_idx.push_back(require_index(fit, d.name));
    out.fit = std::move(fit);
    out.first_row = first_row;
    out.dates = std::move(dates);
    return out;
}

}  // namespace detail

/**
 * @brief OLS estimate of the levels ARDL(p, q, ..., q).
 *
 * y_t on its lags 1..p, each x at lags 0..q, the first difference of each
 * exogenous w, the deterministic terms of the spec case and the step dummies.
 *
 * @throws Error(TooFewObservations) when usable rows < columns + 10
 * @throws Error(RankDeficient) naming the collinear columns
 * @throws Error(DummyOutsideSample) when a dummy does not split the sample
 */
inline ArdlFit fit_ardl(const Panel& panel, const ArdlSpec& spec) {
    const Panel prepared = prepare_panel(panel, spec);
    auto lag = build_lag_design(prepared, spec.p, spec.q, spec.deterministic);
    if (lag.design.nobs() < lag.design.ncols() + kMinSpareRows) {
        throw Error(ErrorKind::TooFewObservations,
                    std::to_string(lag.design.nobs()) + " usable rows for " +
                        std::to_string(lag.design.ncols()) + " columns (need columns + 10)");
    }
    check_dummies(prepared, spec, lag.first_row, 1);
    auto fit = linreg::ols_fit(std::move(lag.design), std::move(lag.response));
    return detail::map_levels_fit(spec, std::move(fit), lag.first_row, std::move(lag.dates));
}

enum class Criterion { Aic, Bic };

inline Criterion parse_criterion(std::string_view text) {
    if (text == "aic") return Criterion::Aic;
    if (text == "bic") return Criterion::Bic;
    throw Error(ErrorKind::ParseError, "unknown criterion '" + std::string(text) + "'");
}

inline std::string_view to_string(Criterion c) { return c == Criterion::Aic ? "aic" : "bic"; }

struct LagCandidate {
    int p = 1;
    int q = 0;
    double score = std::numeric_limits<double>::infinity();
};

/// Lowest score; ties go to smaller p, then smaller q.
inline LagCandidate pick_lag_pair(const std::vector<LagCandidate>& candidates) {
    if (candidates.empty()) throw Error(ErrorKind::InvalidArgument, "no lag candidates");
    LagCandidate best = candidates.front();
    for (const auto& c : candidates) {
        const bool better = c.score < best.score ||
                            (c.score == best.score && (c.p < best.p || (c.p == best.p && c.q < best.q)));
        if (better) best = c;
    }
    return best;
}

struct LagChoice {
    int p = 1;
    int q = 0;
    std::vector<LagCandidate> scored;  ///< candidates that could be estimated
};

/**
 * @brief Exhaustive (p, q) scan over [1..p_max] x [0..q_max] on the common
 * sample implied by max(p_max, q_max).
 */
inline LagChoice select_lags(const Panel& panel, const ArdlSpec& spec_template, int p_max, int q_max,
                             Criterion criterion = Criterion::Bic) {
    if (p_max < 1 || q_max < 0) throw Error(ErrorKind::InvalidArgument, "need p_max >= 1 and q_max >= 0");
    const int m = std::max(p_max, q_max);
    LagChoice choice;
    std::optional<Error> last_error;
    for (int p = 1; p <= p_max; ++p) {
        for (int q = 0; q <= q_max; ++q) {
            ArdlSpec spec = spec_template;
            spec.p = p;
            spec.q = q;
            try {
                const auto offset = static_cast<std::size_t>(m - std::max(p, q));
                const Panel sub = panel.slice(offset, panel.size());
                const auto fit = fit_ardl(sub, spec);
                const auto ic = linreg::information_criteria(fit.fit);
                choice.scored.push_back({p, q, criterion == Criterion::Aic ? ic.aic : ic.bic});
            } catch (const Error& e) {
                last_error = e;
            }
        }
    }
    if (choice.scored.empty()) {
        if (last_error) throw *last_error;
        throw Error(ErrorKind::InvalidArgument, "no lag candidate could be estimated");
    }
    const auto best = pick_lag_pair(choice.scored);
    choice.p = best.p;
    choice.q = best.q;
    return choice;
}

/// Level-term column for regressor x in the error-correction design: x_{t-1}
/// when q >= 1, x_t when q = 0 (the exact reparameterization of ARDL(p, 0)).
inline std::string ecm_level_name(const std::string& x, int q) { return lag_name(x, q >= 1 ? 1 : 0); }

/// Conditional error-correction regression.
struct EcmDesign {
    linreg::DesignMatrix design;
    Eigen::VectorXd response;
    std::size_t first_row = 0;
    std::vector<std::string> level_columns;  ///< y.L1 then each x level term
};

/**
 * @brief Error-correction design on the same rows as build_lag_design:
 * dy_t on deterministics, y_{t-1}, each x level term, dy_{t-1..p-1},
 * dx_{t..t-q+1} per x, dw_t per w, then dummies.
 */
inline EcmDesign build_ecm_design(const Panel& prepared, int p, int q, DeterministicCase deterministic) {
    const std::string y_name = prepared.dependent();
    const auto xs = prepared.names_with(Role::DynamicRegressor);
    const auto ws = prepared.names_with(Role::ExogenousRegressor);
    const auto dummies = prepared.names_with(Role::Dummy);
    const auto T = static_cast<Eigen::Index>(prepared.size());
    const Eigen::Index start = std::max(p, q);
    const Eigen::Index n = T - start;

    std::vector<std::string> names;
    EcmDesign out;
    if (has_constant(deterministic)) names.push_back(kConstName);
    if (has_trend(deterministic)) names.push_back(kTrendName);
    names.push_back(lag_name(y_name, 1));
    out.level_columns.push_back(names.back());
    for (const auto& x : xs) {
        names.push_back(ecm_level_name(x, q));
        out.level_columns.push_back(names.back());
    }
    for (int i = 1; i <= p - 1; ++i) names.push_back(diff_lag_name(y_name, i));
    for (const auto& x : xs) {
        if (q >= 1) names.push_back(diff_name(x));
        for (int i = 1; i <= q - 1; ++i) names.push_back(diff_lag_name(x, i));
    }
    for (const auto& w : ws) names.push_back(diff_name(w));
    for (const auto& d : dummies) names.push_back(d);
    const auto k = static_cast<Eigen::Index>(names.size());
    if (n <= k) throw Error(ErrorKind::TooFewObservations, "too few rows for the error-correction design");

    const auto& y = prepared.column(y_name);
    auto at = [](const std::vector<double>& v, Eigen::Index t) { return v[static_cast<std::size_t>(t)]; };
    auto d_at = [&](const std::vector<double>& v, Eigen::Index t) { return at(v, t) - at(v, t - 1); };
    Eigen::MatrixXd X(n, k);
    Eigen::VectorXd dy(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const Eigen::Index t = start + r;
        Eigen::Index c = 0;
        if (has_constant(deterministic)) X(r, c++) = 1.0;
        if (has_trend(deterministic)) X(r, c++) = static_cast<double>(t + 1);
        X(r, c++) = at(y, t - 1);
        for (const auto& x : xs) X(r, c++) = at(prepared.column(x), q >= 1 ? t - 1 : t);
        for (int i = 1; i <= p - 1; ++i) X(r, c++) = d_at(y, t - i);
        for (const auto& x : xs) {
            const auto& xv = prepared.column(x);
            if (q >= 1) X(r, c++) = d_at(xv, t);
            for (int i = 1; i <= q - 1; ++i) X(r, c++) = d_at(xv, t - i);
        }
        for (const auto& w : ws) X(r, c++) = d_at(prepared.column(w), t);
        for (const auto& d : dummies) X(r, c++) = at(prepared.column(d), t);
        dy[r] = d_at(y, t);
    }
    out.design = linreg::DesignMatrix(std::move(names), std::move(X));
    out.response = std::move(dy);
    out.first_row = static_cast<std::size_t>(start);
    return out;
}

enum class Conclusion { Cointegrated, NotCointegrated, Inconclusive };

inline std::string_view to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Cointegrated: return "cointegrated";
        case Conclusion::NotCointegrated: return "not_cointegrated";
        case Conclusion::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

/// F above the upper bound: cointegrated; below the lower: not; otherwise inconclusive.
inline Conclusion conclude(double f, const BoundsPair& bounds) {
    if (f > bounds.upper) return Conclusion::Cointegrated;
    if (f < bounds.lower) return Conclusion::NotCointegrated;
    return Conclusion::Inconclusive;
}

inline BoundsCase default_bounds_case(DeterministicCase c) {
    switch (c) {
        case DeterministicCase::None: return BoundsCase::I;
        case DeterministicCase::Constant: return BoundsCase::III;
        case DeterministicCase::ConstantTrend: return BoundsCase::V;
    }
    return BoundsCase::III;
}

/// Deterministic case the bounds case requires in the regression.
inline DeterministicCase required_case(BoundsCase c) {
    switch (c) {
        case BoundsCase::I: return DeterministicCase::None;
        case BoundsCase::II:
        case BoundsCase::III: return DeterministicCase::Constant;
        case BoundsCase::IV:
        case BoundsCase::V: return DeterministicCase::ConstantTrend;
    }
    return DeterministicCase::Constant;
}

struct BoundsResult {
    double f_statistic = 0.0;
    int df1 = 0;
    int df2 = 0;
    int k = 0;
    BoundsCase bounds_case = BoundsCase::III;
    std::map<int, BoundsPair> bounds;           ///< level (%) -> (I0, I1)
    std::map<int, Conclusion> conclusion;       ///< level (%) -> decision
    std::set<std::string> restricted_columns;

    [[nodiscard]] Conclusion at(int level) const {
        auto it = conclusion.find(level);
        if (it == conclusion.end()) {
            throw Error(ErrorKind::MissingBoundsEntry, "no bounds at " + std::to_string(level) + "%");
        }
        return it->second;
    }
};

/// Bounds F statistic only, for simulation loops that do not need the table.
inline linreg::WaldResult bounds_f_statistic(const Panel& panel, const ArdlSpec& spec, BoundsCase bounds_case) {
    if (required_case(bounds_case) != spec.deterministic) {
        throw Error(ErrorKind::InvalidArgument, "bounds case " + to_string(bounds_case) +
                                                    " needs deterministic case " +
                                                    std::string(tsardl::to_string(required_case(bounds_case))));
    }
    const Panel prepared = prepare_panel(panel, spec);
    auto design = build_ecm_design(prepared, spec.p, spec.q, spec.deterministic);
    check_dummies(prepared, spec, design.first_row, 1);
    std::set<std::string> restricted(design.level_columns.begin(), design.level_columns.end());
    if (bounds_case == BoundsCase::II) restricted.insert(kConstName);
    if (bounds_case == BoundsCase::IV) restricted.insert(kTrendName);
    const auto fit = linreg::ols_fit(std::move(design.design), std::move(design.response));
    return linreg::wald_f_test(fit, restricted);
}

/**
 * @brief Bounds test for a levels relationship.
 *
 * Estimates the conditional error-correction regression and tests the joint
 * nullity of the lagged level terms (plus the intercept in case II or the
 * trend in case IV) with an F test, then compares against the tabulated I(0)
 * and I(1) bounds for k dynamic regressors.
 */
inline BoundsResult bounds_test(const Panel& panel, const ArdlSpec& spec,
                                std::optional<BoundsCase> bounds_case = std::nullopt,
                                const BoundsTable& table = default_bounds_table()) {
    BoundsResult r;
    r.bounds_case = bounds_case.value_or(default_bounds_case(spec.deterministic));
    r.k = static_cast<int>(spec.dynamic_regressors.size());
    for (int level : kLevels) r.bounds[level] = table.lookup(r.bounds_case, r.k, level);
    const auto w = bounds_f_statistic(panel, spec, r.bounds_case);
    r.f_statistic = w.f_statistic;
    r.df1 = w.df1;
    r.df2 = w.df2;
    for (int level : kLevels) r.conclusion[level] = conclude(r.f_statistic, r.bounds[level]);
    return r;
}

enum class TermKind {
    Adjustment,        ///< alpha
    LongRun,           ///< theta for a dynamic regressor
    LongRunConstant,   ///< c0 / alpha
    LongRunTrend,      ///< c1 / alpha
    LongRunDummy,      ///< cD / alpha
    OwnLag,            ///< coefficient on dy_{t-i}
    Regressor,         ///< coefficient on dx_{t-i}, lag 0 included
    Exogenous,         ///< coefficient on dw_t
    Constant,
    Trend,
    Dummy,
};

struct EcmTerm {
    std::string name;
    TermKind kind = TermKind::Regressor;
    std::string variable;
    int lag = 0;
    linreg::CoefficientStat stat;
};

/// Error-correction representation of a levels fit.
struct EcmFit {
    ArdlFit levels;
    double alpha = 0.0;
    std::map<std::string, double> theta;
    std::vector<EcmTerm> terms;
    Eigen::VectorXd residuals;

    [[nodiscard]] const EcmTerm& term(const std::string& name) const {
        for (const auto& t : terms) {
            if (t.name == name) return t;
        }
        throw Error(ErrorKind::InvalidArgument, "no ECM term '" + name + "'", {name});
    }

    [[nodiscard]] std::vector<const EcmTerm*> terms_of(TermKind kind, const std::string& variable = {}) const {
        std::vector<const EcmTerm*> out;
        for (const auto& t : terms) {
            if (t.kind == kind && (variable.empty() || t.variable == variable)) out.push_back(&t);
        }
        return out;
    }
};

/// |alpha| at or below this is treated as no error-correction representation.
inline constexpr double kAlphaFloor = 1e-6;

/**
 * @brief Exact reparameterization of a levels ARDL fit into error-correction
 * form.
 *
 *   alpha       = 1 - sum(phi)
 *   theta_j     = sum_i beta_{j,i} / alpha
 *   phi_y,i     = -sum_{l>i} phi_l               (i = 1..p-1)
 *   omega_j     = beta_{j,0}
 *   phi_x,j,i   = -sum_{l>i} beta_{j,l}          (i = 1..q-1)
 *   delta, c0, c1, cD carried over unchanged
 *
 * Standard errors of linear terms come from the levels covariance exactly;
 * those of the ratios (theta and the long-run deterministic terms) by the
 * delta method.
 *
 * @throws Error(NearSingularAdjustment) when |alpha| <= 1e-6
 */
inline EcmFit to_ecm(const ArdlFit& ardl) {
    const auto& spec = ardl.spec;
    const auto& b = ardl.fit.coefficients;
    const auto& V = ardl.fit.covariance;
    const auto kb = b.size();
    const double df = static_cast<double>(ardl.fit.df_resid);

    Eigen::VectorXd phi_mask = Eigen::VectorXd::Zero(kb);
    for (auto j : ardl.phi_idx) phi_mask[j] = 1.0;
    const double alpha = 1.0 - phi_mask.dot(b);
    if (std::abs(alpha) <= kAlphaFloor) {
        throw Error(ErrorKind::NearSingularAdjustment,
                    "speed of adjustment " + std::to_string(alpha) + " is numerically zero");
    }

    EcmFit out;
    out.levels = ardl;
    out.alpha = alpha;
    out.residuals = ardl.fit.residuals;

    auto linear = [&](std::string name, TermKind kind, std::string variable, int lag, const Eigen::VectorXd& a,
                      double offset = 0.0) {
        const double est = offset + a.dot(b);
        const double se = std::sqrt(std::max(0.0, a.dot(V * a)));
        out.terms.push_back({name, kind, std::move(variable), lag, linreg::make_stat(std::move(name), est, se, df)});
    };
    // f(b) = a'b / alpha(b); grad = a / alpha + (a'b / alpha^2) * phi_mask.
    auto ratio = [&](std::string name, TermKind kind, std::string variable, const Eigen::VectorXd& a) {
        const double num = a.dot(b);
        const double est = num / alpha;
        const Eigen::VectorXd g = a / alpha + (num / (alpha * alpha)) * phi_mask;
        const double se = std::sqrt(std::max(0.0, g.dot(V * g)));
        out.terms.push_back({name, kind, std::move(variable), 0, linreg::make_stat(std::move(name), est, se, df)});
        return est;
    };
    auto unit = [&](Eigen::Index j) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(kb);
        a[j] = 1.0;
        return a;
    };

    linear("alpha", TermKind::Adjustment, spec.dependent, 0, -phi_mask, 1.0);

    for (std::size_t j = 0; j < spec.dynamic_regressors.size(); ++j) {
        const auto& x = spec.dynamic_regressors[j];
        Eigen::VectorXd a = Eigen::VectorXd::Zero(kb);
        for (auto idx : ardl.beta_idx[j]) a[idx] = 1.0;
        out.theta[x] = ratio("LR." + x, TermKind::LongRun, x, a);
    }
    if (ardl.const_idx) ratio("LR." + kConstName, TermKind::LongRunConstant, kConstName, unit(*ardl.const_idx));
    if (ardl.trend_idx) ratio("LR." + kTrendName, TermKind::LongRunTrend, kTrendName, unit(*ardl.trend_idx));
    for (std::size_t d = 0; d < spec.dummies.size(); ++d) {
        ratio("LR." + spec.dummies[d].name, TermKind::LongRunDummy, spec.dummies[d].name, unit(ardl.dummy_idx[d]));
    }

    for (int i = 1; i <= spec.p - 1; ++i) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(kb);
        for (int l = i + 1; l <= spec.p; ++l) a[ardl.phi_idx[static_cast<std::size_t>(l - 1)]] = -1.0;
        linear(diff_lag_name(spec.dependent, i), TermKind::OwnLag, spec.dependent, i, a);
    }
    for (std::size_t j = 0; j < spec.dynamic_regressors.size(); ++j) {
        const auto& x = spec.dynamic_regressors[j];
        linear(diff_name(x), TermKind::Regressor, x, 0, unit(ardl.beta_idx[j][0]));
        for (int i = 1; i <= spec.q - 1; ++i) {
            Eigen::VectorXd a = Eigen::VectorXd::Zero(kb);
            for (int l = i + 1; l <= spec.q; ++l) a[ardl.beta_idx[j][static_cast<std::size_t>(l)]] = -1.0;
            linear(diff_lag_name(x, i), TermKind::Regressor, x, i, a);
        }
    }
    for (std::size_t j = 0; j < spec.exogenous.size(); ++j) {
        linear(diff_name(spec.exogenous[j]), TermKind::Exogenous, spec.exogenous[j], 0, unit(ardl.delta_idx[j]));
    }
    if (ardl.const_idx) linear(kConstName, TermKind::Constant, kConstName, 0, unit(*ardl.const_idx));
    if (ardl.trend_idx) linear(kTrendName, TermKind::Trend, kTrendName, 0, unit(*ardl.trend_idx));
    for (std::size_t d = 0; d < spec.dummies.size(); ++d) {
        linear(spec.dummies[d].name, TermKind::Dummy, spec.dummies[d].name, 0, unit(ardl.dummy_idx[d]));
    }
    return out;
}

/**
 * @brief Levels fit plus error-correction form with step dummies, each break
 * leaving at least 10 observations on either side inside the sample.
 */
inline EcmFit fit_ecm_with_dummies(const Panel& panel, const ArdlSpec& spec) {
    const Panel prepared = prepare_panel(panel, spec);
    const auto first_row = static_cast<std::size_t>(std::max(spec.p, spec.q));
    check_dummies(prepared, spec, first_row, kMinDummySide);
    return to_ecm(fit_ardl(panel, spec));
}

}  // namespace tsardl::ardl
