#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tsardl/deterministic.hpp"
#include "tsardl/error.hpp"
#include "tsardl/linreg.hpp"
#include "tsardl/series.hpp"

namespace tsardl {

inline std::string lag_name(const std::string& variable, int lag) {
    return variable + ".L" + std::to_string(lag);
}
inline std::string diff_name(const std::string& variable) { return "D." + variable; }
inline std::string diff_lag_name(const std::string& variable, int lag) {
    return "D." + variable + ".L" + std::to_string(lag);
}
inline const std::string kConstName = "const";
inline const std::string kTrendName = "trend";

/// Levels ARDL regression: design, response and the panel rows they cover.
struct LagDesign {
    linreg::DesignMatrix design;
    Eigen::VectorXd response;
    std::size_t first_row = 0;  ///< 0-based panel row of the first observation
    std::vector<Date> dates;
};

/**
 * @brief Levels ARDL(p, q) design from a role-annotated panel.
 *
 * Rows are t = max(p, q) + 1 .. T (1-based), i.e. T - max(p, q) rows. Column
 * order: const, trend (per case), y.L1..y.Lp, for each dynamic regressor
 * x.L0..x.Lq, D.w for each exogenous regressor, then dummy columns. The trend
 * is the 1-based panel row index. Exogenous regressors enter as first
 * differences so they carry short-run effects only.
 */
inline LagDesign build_lag_design(const Panel& panel, int p, int q,
                                  DeterministicCase deterministic = DeterministicCase::ConstantTrend) {
    if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be >= 1");
    if (q < 0) throw Error(ErrorKind::InvalidArgument, "q must be >= 0");
    const std::string y_name = panel.dependent();
    const auto xs = panel.names_with(Role::DynamicRegressor);
    const auto ws = panel.names_with(Role::ExogenousRegressor);
    const auto dummies = panel.names_with(Role::Dummy);

    const auto T = static_cast<Eigen::Index>(panel.size());
    const Eigen::Index start = std::max(p, q);  // 0-based first usable row
    const Eigen::Index n = T - start;
    std::vector<std::string> names;
    if (has_constant(deterministic)) names.push_back(kConstName);
    if (has_trend(deterministic)) names.push_back(kTrendName);
    for (int i = 1; i <= p; ++i) names.push_back(lag_name(y_name, i));
    for (const auto& x : xs) {
        for (int i = 0; i <= q; ++i) names.push_back(lag_name(x, i));
    }
    for (const auto& w : ws) names.push_back(diff_name(w));
    for (const auto& d : dummies) names.push_back(d);
    const auto k = static_cast<Eigen::Index>(names.size());
    if (n <= k) {
        throw Error(ErrorKind::TooFewObservations,
                    std::to_string(n) + " usable rows for " + std::to_string(k) + " columns");
    }

    Eigen::MatrixXd X(n, k);
    Eigen::VectorXd yv(n);
    const auto& y = panel.column(y_name);
    for (Eigen::Index r = 0; r < n; ++r) {
        const Eigen::Index t = start + r;
        Eigen::Index c = 0;
        if (has_constant(deterministic)) X(r, c++) = 1.0;
        if (has_trend(deterministic)) X(r, c++) = static_cast<double>(t + 1);
        for (int i = 1; i <= p; ++i) X(r, c++) = y[static_cast<std::size_t>(t - i)];
        for (const auto& x : xs) {
            const auto& xv = panel.column(x);
            for (int i = 0; i <= q; ++i) X(r, c++) = xv[static_cast<std::size_t>(t - i)];
        }
        for (const auto& w : ws) {
            const auto& wv = panel.column(w);
            X(r, c++) = wv[static_cast<std::size_t>(t)] - wv[static_cast<std::size_t>(t - 1)];
        }
        for (const auto& d : dummies) X(r, c++) = panel.column(d)[static_cast<std::size_t>(t)];
        yv[r] = y[static_cast<std::size_t>(t)];
    }
    LagDesign out{linreg::DesignMatrix(std::move(names), std::move(X)), std::move(yv),
                  static_cast<std::size_t>(start), {}};
    out.dates.assign(panel.dates().begin() + start, panel.dates().end());
    return out;
}

}  // namespace tsardl
