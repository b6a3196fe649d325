#pragma once

// Ordinary least squares with coefficient inference, information criteria and
// exclusion-restriction F tests. Every estimator in the library funnels through
// ols_fit.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>

#include "tsardl/error.hpp"

namespace tsardl::linreg {

/// Relative tolerance on |R_jj| / ||X_j|| below which column j is treated as
/// lying in the span of the columns before it.
inline constexpr double kRankTolerance = 1e-10;

/**
 * @brief Named regressor matrix (n observations by k columns).
 *
 * Column names are unique and every entry is finite. The n > k requirement is
 * checked at estimation time so that designs can be assembled incrementally.
 */
class DesignMatrix {
public:
    DesignMatrix() = default;

    DesignMatrix(std::vector<std::string> column_names, Eigen::MatrixXd rows)
        : names_(std::move(column_names)), rows_(std::move(rows)) {
        if (static_cast<Eigen::Index>(names_.size()) != rows_.cols()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "design has " + std::to_string(rows_.cols()) + " columns but " +
                            std::to_string(names_.size()) + " names");
        }
        std::unordered_set<std::string> seen;
        for (const auto& name : names_) {
            if (!seen.insert(name).second) {
                throw Error(ErrorKind::InvalidArgument, "duplicate design column '" + name + "'",
                            {name});
            }
        }
        if (!rows_.allFinite()) {
            throw Error(ErrorKind::InvalidArgument, "design contains non-finite entries");
        }
    }

    [[nodiscard]] const std::vector<std::string>& column_names() const noexcept { return names_; }
    [[nodiscard]] const Eigen::MatrixXd& rows() const noexcept { return rows_; }
    [[nodiscard]] Eigen::Index nobs() const noexcept { return rows_.rows(); }
    [[nodiscard]] Eigen::Index ncols() const noexcept { return rows_.cols(); }

    /// Index of a named column, or -1.
    [[nodiscard]] Eigen::Index index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return it == names_.end() ? -1 : static_cast<Eigen::Index>(it - names_.begin());
    }

    /// Copy of this design without the named columns.
    [[nodiscard]] DesignMatrix without(const std::set<std::string>& drop) const {
        std::vector<std::string> keep_names;
        std::vector<Eigen::Index> keep;
        for (Eigen::Index j = 0; j < ncols(); ++j) {
            if (!drop.contains(names_[j])) {
                keep.push_back(j);
                keep_names.push_back(names_[j]);
            }
        }
        Eigen::MatrixXd sub(nobs(), static_cast<Eigen::Index>(keep.size()));
        for (Eigen::Index j = 0; j < sub.cols(); ++j) sub.col(j) = rows_.col(keep[j]);
        return DesignMatrix(std::move(keep_names), std::move(sub));
    }

private:
    std::vector<std::string> names_;
    Eigen::MatrixXd rows_;
};

/// Result of one least-squares estimation. Holds the design and response it
/// was computed from so restriction tests can refit.
struct RegressionFit {
    std::vector<std::string> column_names;
    Eigen::VectorXd coefficients;
    Eigen::MatrixXd covariance;
    Eigen::VectorXd residuals;
    double rss = 0.0;
    double sigma2 = 0.0;
    double loglik = 0.0;
    Eigen::Index nobs = 0;
    Eigen::Index df_resid = 0;

    std::shared_ptr<const DesignMatrix> design;
    std::shared_ptr<const Eigen::VectorXd> response;

    [[nodiscard]] Eigen::Index ncoef() const noexcept { return coefficients.size(); }

    [[nodiscard]] Eigen::Index index_of(const std::string& name) const {
        auto it = std::find(column_names.begin(), column_names.end(), name);
        return it == column_names.end() ? -1 : static_cast<Eigen::Index>(it - column_names.begin());
    }

    [[nodiscard]] double coefficient(const std::string& name) const {
        auto j = index_of(name);
        if (j < 0) throw Error(ErrorKind::InvalidArgument, "no coefficient '" + name + "'", {name});
        return coefficients[j];
    }

    [[nodiscard]] double std_error(const std::string& name) const {
        auto j = index_of(name);
        if (j < 0) throw Error(ErrorKind::InvalidArgument, "no coefficient '" + name + "'", {name});
        return std::sqrt(covariance(j, j));
    }
};

/// Gaussian profile log-likelihood at the ML variance RSS/n.
inline double gaussian_loglik(double rss, double n) {
    return -0.5 * n * (std::log(2.0 * std::numbers::pi) + std::log(rss / n) + 1.0);
}

/**
 * @brief Least squares via Householder QR.
 *
 * The solve never forms X'X. Covariance is sigma2 * R^-1 R^-T with
 * sigma2 = RSS / (n - k).
 *
 * @throws Error(DimensionMismatch) when response length differs from design rows
 * @throws Error(TooFewObservations) when n <= k
 * @throws Error(RankDeficient) naming each column that lies in the span of the
 *         columns before it
 */
inline RegressionFit ols_fit(DesignMatrix design, Eigen::VectorXd response) {
    const Eigen::Index n = design.nobs();
    const Eigen::Index k = design.ncols();
    if (response.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "response has " + std::to_string(response.size()) +
                                                      " rows, design has " + std::to_string(n));
    }
    if (!response.allFinite()) {
        throw Error(ErrorKind::InvalidArgument, "response contains non-finite entries");
    }
    if (n <= k) {
        throw Error(ErrorKind::TooFewObservations,
                    std::to_string(n) + " observations for " + std::to_string(k) + " coefficients");
    }

    const Eigen::MatrixXd& X = design.rows();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
    const auto& qrm = qr.matrixQR();

    std::vector<std::string> offending;
    for (Eigen::Index j = 0; j < k; ++j) {
        const double col_norm = X.col(j).norm();
        if (col_norm == 0.0 || std::abs(qrm(j, j)) <= kRankTolerance * col_norm) {
            offending.push_back(design.column_names()[j]);
        }
    }
    if (!offending.empty()) {
        std::string list;
        for (const auto& name : offending) list += (list.empty() ? "" : ", ") + name;
        throw Error(ErrorKind::RankDeficient, "collinear design columns: " + list, offending);
    }

    RegressionFit fit;
    fit.column_names = design.column_names();
    fit.coefficients = qr.solve(response);
    fit.residuals = response - X * fit.coefficients;
    fit.rss = fit.residuals.squaredNorm();
    fit.nobs = n;
    fit.df_resid = n - k;
    fit.sigma2 = fit.rss / static_cast<double>(fit.df_resid);
    fit.loglik = gaussian_loglik(fit.rss, static_cast<double>(n));

    const Eigen::MatrixXd R = qrm.topLeftCorner(k, k).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    fit.covariance = fit.sigma2 * (r_inv * r_inv.transpose());

    fit.design = std::make_shared<const DesignMatrix>(std::move(design));
    fit.response = std::make_shared<const Eigen::VectorXd>(std::move(response));
    return fit;
}

/// Significance band used for the table cells: 3 = 1%, 2 = 5%, 1 = 10%, 0 = none.
inline int stars_for(double p_value) {
    if (p_value < 0.01) return 3;
    if (p_value < 0.05) return 2;
    if (p_value < 0.10) return 1;
    return 0;
}

inline std::string star_string(int stars) { return std::string(static_cast<std::size_t>(stars), '*'); }

/// Two-sided Student-t p-value.
inline double t_pvalue(double t_value, double df) {
    if (!std::isfinite(t_value)) return 0.0;
    boost::math::students_t dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t_value)));
}

struct CoefficientStat {
    std::string name;
    double estimate = 0.0;
    double std_error = 0.0;
    double t_value = 0.0;
    double p_value = 1.0;
    int stars = 0;
};

/// Inference line for an arbitrary estimate with a known standard error.
inline CoefficientStat make_stat(std::string name, double estimate, double std_error, double df) {
    CoefficientStat s;
    s.name = std::move(name);
    s.estimate = estimate;
    s.std_error = std_error;
    s.t_value = std_error > 0.0 ? estimate / std_error : 0.0;
    s.p_value = std_error > 0.0 ? t_pvalue(s.t_value, df) : 1.0;
    s.stars = stars_for(s.p_value);
    return s;
}

/// Per-coefficient estimate, standard error, t ratio and two-sided t p-value
/// with df_resid degrees of freedom.
inline std::vector<CoefficientStat> t_statistics(const RegressionFit& fit) {
    if (fit.df_resid < 1) {
        throw Error(ErrorKind::TooFewObservations, "t statistics need df_resid >= 1");
    }
    std::vector<CoefficientStat> out;
    out.reserve(static_cast<std::size_t>(fit.ncoef()));
    const double df = static_cast<double>(fit.df_resid);
    for (Eigen::Index j = 0; j < fit.ncoef(); ++j) {
        out.push_back(make_stat(fit.column_names[j], fit.coefficients[j],
                                std::sqrt(std::max(0.0, fit.covariance(j, j))), df));
    }
    return out;
}

struct InformationCriteria {
    double aic = 0.0;
    double bic = 0.0;
};

inline InformationCriteria information_criteria(double loglik, double ncoef, double nobs) {
    return {-2.0 * loglik + 2.0 * ncoef, -2.0 * loglik + ncoef * std::log(nobs)};
}

inline InformationCriteria information_criteria(const RegressionFit& fit) {
    return information_criteria(fit.loglik, static_cast<double>(fit.ncoef()),
                                static_cast<double>(fit.nobs));
}

struct WaldResult {
    double f_statistic = 0.0;
    int df1 = 0;
    int df2 = 0;
    double rss_restricted = 0.0;
    double rss_unrestricted = 0.0;
};

/**
 * @brief F test that the named coefficients are jointly zero.
 *
 * Refits the regression without the restricted columns and compares residual
 * sums of squares. When every column is restricted the restricted RSS is y'y.
 */
inline WaldResult wald_f_test(const RegressionFit& fit, const std::set<std::string>& restricted) {
    if (restricted.empty()) {
        throw Error(ErrorKind::InvalidArgument, "restricted set is empty");
    }
    for (const auto& name : restricted) {
        if (fit.index_of(name) < 0) {
            throw Error(ErrorKind::InvalidArgument, "restricted column '" + name + "' not in fit",
                        {name});
        }
    }
    if (!fit.design || !fit.response) {
        throw Error(ErrorKind::InvalidArgument, "fit does not carry its design");
    }
    WaldResult w;
    w.rss_unrestricted = fit.rss;
    w.df1 = static_cast<int>(restricted.size());
    w.df2 = static_cast<int>(fit.df_resid);
    if (restricted.size() == fit.column_names.size()) {
        w.rss_restricted = fit.response->squaredNorm();
    } else {
        auto refit = ols_fit(fit.design->without(restricted), *fit.response);
        w.rss_restricted = refit.rss;
    }
    // Rounding can leave the difference a few ulps below zero.
    const double gain = std::max(0.0, w.rss_restricted - w.rss_unrestricted);
    w.f_statistic = (gain / w.df1) /
                    (w.rss_unrestricted / static_cast<double>(w.df2));
    return w;
}

}  // namespace tsardl::linreg
