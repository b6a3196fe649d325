#pragma once

// Test-only helpers: seeded draws, a normal-equations oracle in long double,
// panel builders and tolerance checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tsardl/ardl.hpp"
#include "tsardl/mc.hpp"
#include "tsardl/series.hpp"

namespace tsardl::testing {

inline std::vector<double> normals(mc::Stream& s, std::size_t n, double sd = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = sd * s.normal();
    return v;
}

inline std::vector<double> cumsum(const std::vector<double>& e, double start = 0.0) {
    std::vector<double> v(e.size());
    double acc = start;
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = acc += e[i];
    return v;
}

inline std::vector<double> random_walk(mc::Stream& s, std::size_t n) { return cumsum(normals(s, n)); }

/// (X'X)^-1 X'y by Gauss-Jordan elimination with partial pivoting in long double.
inline Eigen::VectorXd normal_equations(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    const auto k = static_cast<std::size_t>(X.cols());
    std::vector<std::vector<long double>> a(k, std::vector<long double>(k + 1, 0.0L));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            long double s = 0.0L;
            for (Eigen::Index r = 0; r < X.rows(); ++r) {
                s += static_cast<long double>(X(r, static_cast<Eigen::Index>(i))) * X(r, static_cast<Eigen::Index>(j));
            }
            a[i][j] = s;
        }
        long double s = 0.0L;
        for (Eigen::Index r = 0; r < X.rows(); ++r) s += static_cast<long double>(X(r, static_cast<Eigen::Index>(i))) * y[r];
        a[i][k] = s;
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < k; ++r) {
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        }
        std::swap(a[c], a[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c) continue;
            const long double f = a[r][c] / a[c][c];
            for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    Eigen::VectorXd b(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) b[static_cast<Eigen::Index>(i)] = static_cast<double>(a[i][k] / a[i][i]);
    return b;
}

/// |a - b| <= tol * max(1, |a|, |b|).
inline bool rel_close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline bool all_rel_close(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
    if (a.size() != b.size()) return false;
    const double scale = std::max(1.0, std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()));
    return (a - b).cwiseAbs().maxCoeff() <= tol * scale;
}

inline const Date kStart = parse_date("2014-01-01");

/// Panel with roles: y dependent, xs dynamic, ws exogenous.
inline Panel make_panel(const std::vector<double>& y, const std::map<std::string, std::vector<double>>& xs,
                        const std::map<std::string, std::vector<double>>& ws = {}) {
    std::vector<Date> dates(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) dates[i] = kStart + std::chrono::days{static_cast<int>(i)};
    std::vector<Column> cols{{"y", y}};
    std::map<std::string, Role> roles{{"y", Role::Dependent}};
    for (const auto& [n, v] : xs) {
        cols.push_back({n, v});
        roles[n] = Role::DynamicRegressor;
    }
    for (const auto& [n, v] : ws) {
        cols.push_back({n, v});
        roles[n] = Role::ExogenousRegressor;
    }
    return Panel(std::move(dates), std::move(cols), std::move(roles));
}

/// Inputs of the error-correction regression, assembled without the library's design builders.
struct EcmInputs {
    std::vector<double> y;
    std::vector<std::vector<double>> xs;
    std::vector<std::vector<double>> ws;
    std::vector<std::vector<double>> dummies;  ///< 0/1 step columns
    int p = 1;
    int q = 0;
    bool constant = true;
    bool trend = false;
};

/// Direct error-correction regression and its coefficients keyed by role.
struct DirectEcm {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd residuals;
    std::map<std::string, Eigen::Index> column;  ///< role key -> column
};

/**
 * dy_t on [1] [t] y_{t-1}, x_{t-1} (x_t when q = 0), dy_{t-1..p-1},
 * dx_t and dx_{t-1..q-1} (q >= 1), dw_t, DU, over t = max(p,q) .. T-1
 * (0-based). Keys: const, trend, y.level, xJ.level, dy.I, dxJ.I, dwJ, duJ.
 */
inline DirectEcm direct_ecm(const EcmInputs& in) {
    const std::size_t T = in.y.size();
    const std::size_t start = static_cast<std::size_t>(std::max(in.p, in.q));
    std::vector<std::pair<std::string, std::function<double(std::size_t)>>> cols;
    auto d = [](const std::vector<double>& v, std::size_t t) { return v[t] - v[t - 1]; };
    if (in.constant) cols.emplace_back("const", [](std::size_t) { return 1.0; });
    if (in.trend) cols.emplace_back("trend", [](std::size_t t) { return static_cast<double>(t + 1); });
    cols.emplace_back("y.level", [&](std::size_t t) { return in.y[t - 1]; });
    for (std::size_t j = 0; j < in.xs.size(); ++j) {
        const auto& x = in.xs[j];
        const bool q0 = in.q == 0;
        cols.emplace_back("x" + std::to_string(j) + ".level", [&x, q0](std::size_t t) { return q0 ? x[t] : x[t - 1]; });
    }
    for (int i = 1; i <= in.p - 1; ++i) {
        cols.emplace_back("dy." + std::to_string(i), [&, i](std::size_t t) { return d(in.y, t - i); });
    }
    for (std::size_t j = 0; j < in.xs.size(); ++j) {
        const auto& x = in.xs[j];
        for (int i = 0; i <= in.q - 1; ++i) {
            cols.emplace_back("dx" + std::to_string(j) + "." + std::to_string(i),
                              [&x, d, i](std::size_t t) { return d(x, t - i); });
        }
    }
    for (std::size_t j = 0; j < in.ws.size(); ++j) {
        const auto& w = in.ws[j];
        cols.emplace_back("dw" + std::to_string(j), [&w, d](std::size_t t) { return d(w, t); });
    }
    for (std::size_t j = 0; j < in.dummies.size(); ++j) {
        const auto& u = in.dummies[j];
        cols.emplace_back("du" + std::to_string(j), [&u](std::size_t t) { return u[t]; });
    }
    const auto n = static_cast<Eigen::Index>(T - start);
    Eigen::MatrixXd X(n, static_cast<Eigen::Index>(cols.size()));
    Eigen::VectorXd dy(n);
    DirectEcm out;
    for (std::size_t c = 0; c < cols.size(); ++c) out.column[cols[c].first] = static_cast<Eigen::Index>(c);
    for (Eigen::Index r = 0; r < n; ++r) {
        const std::size_t t = start + static_cast<std::size_t>(r);
        for (std::size_t c = 0; c < cols.size(); ++c) X(r, static_cast<Eigen::Index>(c)) = cols[c].second(t);
        dy[r] = d(in.y, t);
    }
    out.coefficients = X.colPivHouseholderQr().solve(dy);
    out.residuals = dy - X * out.coefficients;
    return out;
}

/**
 * Largest scaled discrepancy |a - b| / max(1, |a|, |b|) between an error-correction
 * fit mapped from levels and the direct regression: alpha, every theta, every
 * short-run term, deterministics, dummies and the residual vector.
 */
inline double duality_gap(const ardl::EcmFit& ecm, const DirectEcm& direct, const ardl::ArdlSpec& spec) {
    double gap = 0.0;
    auto cmp = [&](double a, double b) {
        gap = std::max(gap, std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)}));
    };
    auto coef = [&](const std::string& key) { return direct.coefficients[direct.column.at(key)]; };
    const double alpha = -coef("y.level");
    cmp(ecm.alpha, alpha);
    cmp(ecm.term("alpha").stat.estimate, alpha);
    for (std::size_t j = 0; j < spec.dynamic_regressors.size(); ++j) {
        const auto& x = spec.dynamic_regressors[j];
        const std::string tag = "x" + std::to_string(j);
        cmp(ecm.theta.at(x), coef(tag + ".level") / alpha);
        cmp(ecm.term("LR." + x).stat.estimate, coef(tag + ".level") / alpha);
        cmp(ecm.term("D." + x).stat.estimate, spec.q >= 1 ? coef("d" + tag + ".0") : coef(tag + ".level"));
        for (int i = 1; i <= spec.q - 1; ++i) {
            cmp(ecm.term("D." + x + ".L" + std::to_string(i)).stat.estimate, coef("d" + tag + "." + std::to_string(i)));
        }
    }
    for (int i = 1; i <= spec.p - 1; ++i) {
        cmp(ecm.term("D." + spec.dependent + ".L" + std::to_string(i)).stat.estimate, coef("dy." + std::to_string(i)));
    }
    for (std::size_t j = 0; j < spec.exogenous.size(); ++j) {
        cmp(ecm.term("D." + spec.exogenous[j]).stat.estimate, coef("dw" + std::to_string(j)));
    }
    if (direct.column.count("const")) cmp(ecm.term("const").stat.estimate, coef("const"));
    if (direct.column.count("trend")) cmp(ecm.term("trend").stat.estimate, coef("trend"));
    for (std::size_t j = 0; j < spec.dummies.size(); ++j) {
        cmp(ecm.term(spec.dummies[j].name).stat.estimate, coef("du" + std::to_string(j)));
    }
    if (ecm.residuals.size() != direct.residuals.size()) return std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < ecm.residuals.size(); ++i) cmp(ecm.residuals[i], direct.residuals[i]);
    return gap;
}

}  // namespace tsardl::testing
