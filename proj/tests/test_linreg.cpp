#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/fisher_f.hpp>

#include "support.hpp"
#include "tsardl/linreg.hpp"

using namespace tsardl;
using namespace tsardl::linreg;

namespace {

DesignMatrix random_design(mc::Stream& s, Eigen::Index n, Eigen::Index k, bool constant = true) {
    Eigen::MatrixXd X(n, k);
    std::vector<std::string> names;
    for (Eigen::Index j = 0; j < k; ++j) {
        names.push_back("x" + std::to_string(j));
        for (Eigen::Index i = 0; i < n; ++i) X(i, j) = (constant && j == 0) ? 1.0 : s.normal();
    }
    return DesignMatrix(names, X);
}

Eigen::VectorXd noise(mc::Stream& s, Eigen::Index n) {
    Eigen::VectorXd e(n);
    for (Eigen::Index i = 0; i < n; ++i) e[i] = s.normal();
    return e;
}

/// RSS of y on the columns of X via the explicit projection I - X(X'X)^-1X'.
double projection_rss(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    if (X.cols() == 0) return y.squaredNorm();
    const Eigen::MatrixXd P = X * (X.transpose() * X).inverse() * X.transpose();
    const Eigen::VectorXd r = y - P * y;
    return r.squaredNorm();
}

}  // namespace

TEST_CASE("exact line is fitted with zero residuals") {
    Eigen::MatrixXd X(3, 2);
    X << 1, 0, 1, 1, 1, 2;
    Eigen::VectorXd y(3);
    y << 1, 3, 5;
    const auto fit = ols_fit(DesignMatrix({"const", "slope"}, X), y);
    CHECK(fit.coefficients[0] == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(fit.coefficients[1] == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(fit.residuals.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(fit.df_resid == 1);
}

TEST_CASE("a response orthogonal to every column gives zero coefficients") {
    Eigen::MatrixXd X(4, 2);
    X << 1, 1, 1, -1, 1, 1, 1, -1;
    Eigen::VectorXd y(4);
    y << 1, 1, -1, -1;
    const auto fit = ols_fit(DesignMatrix({"a", "b"}, X), y);
    CHECK(fit.coefficients.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("coefficients match the extended-precision normal equations") {
    mc::Stream s(101, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const auto d = random_design(s, 50, 4);
        const Eigen::VectorXd y = d.rows() * Eigen::Vector4d(0.5, -1.0, 2.0, 0.25) + noise(s, 50);
        const auto fit = ols_fit(d, y);
        CHECK(testing::all_rel_close(fit.coefficients, testing::normal_equations(d.rows(), y), 1e-8));
        // Residual identity and covariance shape.
        CHECK(testing::all_rel_close(fit.residuals, y - d.rows() * fit.coefficients, 1e-10));
        CHECK((fit.covariance - fit.covariance.transpose()).cwiseAbs().maxCoeff() < 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(fit.covariance);
        CHECK(eig.eigenvalues().minCoeff() >= 0.0);
        const Eigen::MatrixXd xtx_inv = (d.rows().transpose() * d.rows()).inverse();
        CHECK(testing::all_rel_close(Eigen::Map<const Eigen::VectorXd>(fit.covariance.data(), 16),
                                     Eigen::Map<const Eigen::VectorXd>(Eigen::MatrixXd(fit.sigma2 * xtx_inv).data(), 16),
                                     1e-8));
    }
}

TEST_CASE("shape errors") {
    Eigen::MatrixXd X(3, 2);
    X << 1, 0, 1, 1, 1, 2;
    CHECK_THROWS_AS(DesignMatrix({"a"}, X), Error);
    CHECK_THROWS_AS(DesignMatrix({"a", "a"}, X), Error);
    try {
        ols_fit(DesignMatrix({"a", "b"}, X), Eigen::VectorXd::Zero(4));
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
    try {
        ols_fit(DesignMatrix({"a", "b"}, X.topRows(2)), Eigen::VectorXd::Zero(2));
        FAIL("expected TooFewObservations");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooFewObservations);
    }
}

TEST_CASE("t statistics at fixed points") {
    CHECK(t_pvalue(0.0, 10) == Catch::Approx(1.0));
    CHECK(std::fabs(t_pvalue(1.96, 1e6) - 0.05) < 0.003);
    const auto st = make_stat("b", 0.0, 0.3, 20);
    CHECK(st.t_value == 0.0);
    CHECK(st.p_value == Catch::Approx(1.0));
    CHECK(st.stars == 0);
    CHECK(stars_for(0.009) == 3);
    CHECK(stars_for(0.049) == 2);
    CHECK(stars_for(0.099) == 1);
    CHECK(stars_for(0.10) == 0);
    CHECK(star_string(2) == "**");
}

TEST_CASE("t test size under a zero coefficient") {
    mc::Stream s(202, 0);
    int rejections = 0;
    const int reps = 5000;
    for (int rep = 0; rep < reps; ++rep) {
        const auto d = random_design(s, 30, 3);
        const Eigen::VectorXd y = 1.0 + d.rows().col(1).array() * 0.5 + noise(s, 30).array();
        const auto stats = t_statistics(ols_fit(d, y));
        if (stats[2].p_value < 0.05) ++rejections;
    }
    const double rate = static_cast<double>(rejections) / reps;
    CHECK(rate >= 0.038);
    CHECK(rate <= 0.062);
}

TEST_CASE("information criteria formulas") {
    const auto a = information_criteria(-100.0, 2, 50);
    const auto b = information_criteria(-100.0, 3, 50);
    CHECK(b.aic - a.aic == Catch::Approx(2.0).epsilon(1e-15));
    const auto c = information_criteria(0.0, 3, std::exp(2.0));
    CHECK(c.bic == Catch::Approx(6.0).epsilon(1e-12));
    // Profile Gaussian log-likelihood.
    mc::Stream s(303, 0);
    const auto d = random_design(s, 40, 2);
    const auto fit = ols_fit(d, noise(s, 40));
    const double n = 40.0;
    CHECK(fit.loglik == Catch::Approx(-0.5 * n * (std::log(2.0 * std::numbers::pi * fit.rss / n) + 1.0)));
}

TEST_CASE("criteria prefer the true AR order over an overfit one") {
    mc::Stream s(404, 0);
    int aic_ok = 0;
    int bic_ok = 0;
    const int reps = 500;
    for (int rep = 0; rep < reps; ++rep) {
        const int T = 200;
        std::vector<double> y(T);
        y[0] = s.normal();
        for (int t = 1; t < T; ++t) y[t] = 0.6 * y[t - 1] + s.normal();
        // Common sample t = 3..T-1 for both AR(1) and AR(3).
        const Eigen::Index n = T - 3;
        Eigen::MatrixXd X1(n, 2), X3(n, 4);
        Eigen::VectorXd r(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto t = static_cast<std::size_t>(i + 3);
            r[i] = y[t];
            X1(i, 0) = X3(i, 0) = 1.0;
            X1(i, 1) = X3(i, 1) = y[t - 1];
            X3(i, 2) = y[t - 2];
            X3(i, 3) = y[t - 3];
        }
        const auto c1 = information_criteria(ols_fit(DesignMatrix({"c", "l1"}, X1), r));
        const auto c3 = information_criteria(ols_fit(DesignMatrix({"c", "l1", "l2", "l3"}, X3), r));
        if (c1.aic <= c3.aic) ++aic_ok;
        if (c1.bic <= c3.bic) ++bic_ok;
    }
    CHECK(aic_ok >= 0.70 * reps);
    CHECK(bic_ok >= 0.70 * reps);
}

TEST_CASE("Wald F is zero for an orthogonal column with zero coefficient") {
    Eigen::MatrixXd X(4, 2);
    X << 1, 1, 1, -1, 1, 1, 1, -1;
    Eigen::VectorXd y(4);
    y << 2, 2, 3, 3;
    const auto fit = ols_fit(DesignMatrix({"const", "z"}, X), y);
    CHECK(std::fabs(fit.coefficient("z")) < 1e-14);
    const auto w = wald_f_test(fit, {"z"});
    CHECK(w.f_statistic == Catch::Approx(0.0).margin(1e-12));
    CHECK(w.df1 == 1);
    CHECK(w.df2 == 2);
}

TEST_CASE("Wald F matches RSS computed by explicit projection") {
    mc::Stream s(505, 0);
    for (int rep = 0; rep < 10; ++rep) {
        const auto d = random_design(s, 60, 5);
        const Eigen::VectorXd y = d.rows() * Eigen::VectorXd::LinSpaced(5, -1.0, 1.0) + 0.01 * noise(s, 60);
        const auto fit = ols_fit(d, y);
        const auto w = wald_f_test(fit, {"x2", "x3", "x4"});
        Eigen::MatrixXd Xr = d.rows().leftCols(2);
        const double rss_r = projection_rss(Xr, y);
        const double rss_u = projection_rss(d.rows(), y);
        CHECK(testing::rel_close(w.rss_restricted, rss_r, 1e-8));
        CHECK(testing::rel_close(w.rss_unrestricted, rss_u, 1e-8));
        CHECK(testing::rel_close(w.f_statistic, ((rss_r - rss_u) / 3.0) / (rss_u / 55.0), 1e-6));
        const auto all = wald_f_test(fit, {"x0", "x1", "x2", "x3", "x4"});
        CHECK(testing::rel_close(all.rss_restricted, y.squaredNorm(), 1e-12));
    }
    const auto d = random_design(s, 20, 2);
    const auto fit = ols_fit(d, noise(s, 20));
    CHECK_THROWS_AS(wald_f_test(fit, {}), Error);
    CHECK_THROWS_AS(wald_f_test(fit, {"nope"}), Error);
}

TEST_CASE("Wald F null distribution matches the F quantile") {
    mc::Stream s(606, 0);
    const int reps = 2000;
    std::vector<double> fs;
    fs.reserve(reps);
    for (int rep = 0; rep < reps; ++rep) {
        const auto d = random_design(s, 40, 4);
        const auto fit = ols_fit(d, noise(s, 40));
        fs.push_back(wald_f_test(fit, {"x2", "x3"}).f_statistic);
    }
    std::sort(fs.begin(), fs.end());
    const double q95 = fs[static_cast<std::size_t>(0.95 * reps) - 1];
    const double truth = boost::math::quantile(boost::math::fisher_f(2, 36), 0.95);
    CHECK(std::fabs(q95 / truth - 1.0) <= 0.08);
}

TEST_CASE("projection idempotence") {
    mc::Stream s(707, 0);
    const auto d = random_design(s, 50, 4);
    const auto fit = ols_fit(d, noise(s, 50));
    const Eigen::VectorXd fitted = d.rows() * fit.coefficients;
    const auto again = ols_fit(d, fitted);
    CHECK(testing::all_rel_close(again.coefficients, fit.coefficients, 1e-10));
}

TEST_CASE("scale equivariance") {
    mc::Stream s(808, 0);
    for (double scale : {1e-3, 0.5, 7.0, 1e4}) {
        const auto d = random_design(s, 50, 4);
        const Eigen::VectorXd y = noise(s, 50) + d.rows().col(1);
        const auto a = ols_fit(d, y);
        const auto b = ols_fit(d, scale * y);
        CHECK(testing::all_rel_close(b.coefficients, scale * a.coefficients, 1e-9));
        CHECK(testing::all_rel_close(b.residuals, scale * a.residuals, 1e-9));
        const auto ta = t_statistics(a);
        const auto tb = t_statistics(b);
        for (std::size_t j = 0; j < ta.size(); ++j) CHECK(testing::rel_close(ta[j].t_value, tb[j].t_value, 1e-9));
        CHECK(testing::rel_close(wald_f_test(a, {"x2", "x3"}).f_statistic,
                                 wald_f_test(b, {"x2", "x3"}).f_statistic, 1e-9));
    }
}

TEST_CASE("a zero column is rejected as rank deficient") {
    mc::Stream s(909, 0);
    Eigen::MatrixXd X = random_design(s, 30, 3).rows();
    X.col(2).setZero();
    try {
        ols_fit(DesignMatrix({"const", "a", "zero"}, X), noise(s, 30));
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RankDeficient);
        CHECK(e.subjects() == std::vector<std::string>{"zero"});
    }
    X.col(2) = 2.0 * X.col(1);
    try {
        ols_fit(DesignMatrix({"const", "a", "twice"}, X), noise(s, 30));
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RankDeficient);
    }
}
