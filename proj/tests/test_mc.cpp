#include <catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"
#include "tsardl/mc.hpp"

using namespace tsardl;
using namespace tsardl::mc;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no tsardl::Error thrown");
    return ErrorKind::Io;
}

unitroot::TestConfig adf_fixed(int k) {
    unitroot::TestConfig c;
    c.test = unitroot::TestKind::Adf;
    c.deterministic = DeterministicCase::Constant;
    c.max_lags = k;
    c.selection = unitroot::LagSelection::fixed(k);
    return c;
}

}  // namespace

TEST_CASE("white noise sample mean at a fixed seed") {
    const auto series = generate({WhiteNoise{}, 100, 20161012});
    REQUIRE(series.size() == 1);
    double mean = 0.0;
    for (double v : series[0].values()) mean += v / 100.0;
    CHECK(std::fabs(mean) <= 4.0 / std::sqrt(100.0));
}

TEST_CASE("generator is deterministic and replayable") {
    const Dgp dgp{CointegratedPair{2.0, 0.5}, 200, 99};
    const auto a = generate(dgp);
    const auto b = generate(dgp);
    REQUIRE(a.size() == 2);
    CHECK(a[0].values() == b[0].values());
    CHECK(a[1].values() == b[1].values());
    CHECK(generate({CointegratedPair{2.0, 0.5}, 200, 100})[0].values() != a[0].values());

    // Draw i of a stream does not depend on which other streams were used.
    Stream s1(7, 3);
    Stream other(7, 4);
    (void)other.next_u64();
    Stream s2(7, 3);
    for (int i = 0; i < 10; ++i) CHECK(s1.next_u64() == s2.next_u64());
    Stream u(1, 1);
    for (int i = 0; i < 1000; ++i) {
        const double v = u.uniform();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("normal draws have unit variance") {
    Stream s(5, 0);
    const int n = 200000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = s.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::fabs(sum / n) < 4.0 / std::sqrt(n));
    CHECK(std::fabs(sq / n - 1.0) < 0.02);
}

TEST_CASE("cointegrated pair slope is recovered at T=2000") {
    const auto s = draw(Dgp{CointegratedPair{2.0, 0.5}, 2000, 31});
    Eigen::MatrixXd X(2000, 2);
    Eigen::VectorXd y(2000);
    for (Eigen::Index i = 0; i < 2000; ++i) {
        X(i, 0) = 1.0;
        X(i, 1) = s.x[static_cast<std::size_t>(i)];
        y[i] = s.y[static_cast<std::size_t>(i)];
    }
    const auto b = testing::normal_equations(X, y);
    CHECK(std::fabs(b[1] - 2.0) <= 0.1);
}

TEST_CASE("process validation and parsing") {
    CHECK(kind_of([] { (void)draw(Dgp{WhiteNoise{}, 29, 1}); }) == ErrorKind::InvalidDgp);
    CHECK(kind_of([] { (void)draw(Dgp{Ar1{1.5}, 100, 1}); }) == ErrorKind::InvalidDgp);
    CHECK(kind_of([] { (void)draw(Dgp{CointegratedPair{2.0, 0.0}, 100, 1}); }) == ErrorKind::InvalidDgp);
    CHECK(kind_of([] { (void)draw(Dgp{CointegratedPair{2.0, 1.5}, 100, 1}); }) == ErrorKind::InvalidDgp);
    CHECK(kind_of([] { (void)draw(Dgp{LevelShift{100, 1.0, 0.0}, 100, 1}); }) == ErrorKind::InvalidDgp);
    CHECK(draw(Dgp{Ar1{1.0}, 50, 1}).y.size() == 50);

    CHECK(std::get<Ar1>(parse_dgp("ar1(0.9)")).rho == 0.9);
    const auto c = std::get<CointegratedPair>(parse_dgp("cointegrated_pair(2,0.5)"));
    CHECK(c.theta == 2.0);
    CHECK(c.alpha == 0.5);
    const auto a = std::get<ArdlProcess>(parse_dgp("ardl_process(1,1,0.5,0.5,1.0,0.25)"));
    CHECK(a.phi == std::vector<double>{0.5});
    CHECK(a.beta == std::vector<double>{1.0, 0.25});
    CHECK(std::holds_alternative<IndependentWalks>(parse_dgp("independent_walks")));
    CHECK(kind_of([] { (void)parse_dgp("ar1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { (void)parse_dgp("garch(1,1)"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { (void)parse_dgp("ardl_process(1,1,0,0.5)"); }) == ErrorKind::ParseError);
}

TEST_CASE("level shift and ARDL processes have the documented shape") {
    const auto s = draw(Dgp{LevelShift{60, 50.0, 0.0}, 120, 3});
    double before = 0.0;
    double after = 0.0;
    for (std::size_t t = 0; t <= 60; ++t) before += s.y[t] / 61.0;
    for (std::size_t t = 61; t < 120; ++t) after += s.y[t] / 59.0;
    CHECK(after - before == Catch::Approx(50.0).margin(1.0));

    const auto p = draw(Dgp{ArdlProcess{{0.5}, {1.0, 0.25}, 0.0}, 3000, 4});
    const auto fit = ardl::fit_ardl(sample_panel(p), ardl::ArdlSpec{"y", {"x"}, {}, DeterministicCase::Constant, 1, 1, {}});
    CHECK(fit.phi(1) == Catch::Approx(0.5).margin(0.02));
    CHECK(fit.beta(0, 0) == Catch::Approx(1.0).margin(0.08));
    CHECK(fit.beta(0, 1) == Catch::Approx(0.25).margin(0.08));
}

TEST_CASE("smoke run returns monotone quantiles with standard errors") {
    const auto m = run_experiment(TestSpec{adf_fixed(1)}, RandomWalk{}, 100, 100, 11);
    CHECK(m.replications == 100);
    const auto& q = m.quantiles.at_level;
    CHECK(q.at(1).value <= q.at(5).value);
    CHECK(q.at(5).value <= q.at(10).value);
    for (const auto& [level, est] : q) CHECK(est.std_error > 0.0);
    for (const auto& [level, rate] : m.rejection_rate) {
        CHECK(rate >= 0.0);
        CHECK(rate <= 1.0);
    }
    const auto b = simulate_bounds_critical_values(BoundsConfig{}, 1, 100, 100, 12);
    CHECK(b.upper.at_level.at(1).value >= b.upper.at_level.at(5).value);
    CHECK(b.upper.at_level.at(5).value >= b.upper.at_level.at(10).value);
    CHECK(b.upper.upper_tail);
}

TEST_CASE("identical null and alternative give matching rates") {
    const auto sp = size_power_experiment(TestSpec{adf_fixed(1)}, RandomWalk{}, RandomWalk{}, 100, 2000, 21);
    for (int level : kLevels) {
        const double diff = sp.null.rejection_rate.at(level) - sp.alternative.rejection_rate.at(level);
        const double se = std::hypot(sp.null.rate_std_error(level), sp.alternative.rate_std_error(level));
        INFO("level " << level << " diff " << diff << " se " << se);
        CHECK(std::fabs(diff) <= 2.0 * se);
    }
}

TEST_CASE("doubling replications shrinks the standard error by about 1/sqrt(2)") {
    const auto small = simulate_unitroot_critical_values(adf_fixed(0), 100, 4000, 41);
    const auto large = simulate_unitroot_critical_values(adf_fixed(0), 100, 8000, 41);
    for (int level : {5, 10}) {
        const double ratio = large.at_level.at(level).std_error / small.at_level.at(level).std_error;
        INFO("level " << level << " ratio " << ratio);
        CHECK(ratio >= 0.8 / std::sqrt(2.0));
        CHECK(ratio <= 1.2 / std::sqrt(2.0));
    }
}

TEST_CASE("results do not depend on the number of workers") {
    const auto one = run_experiment(TestSpec{adf_fixed(2)}, Ar1{0.9}, 120, 300, 51, 1);
    const auto three = run_experiment(TestSpec{adf_fixed(2)}, Ar1{0.9}, 120, 300, 51, 3);
    REQUIRE(one.outcomes.size() == three.outcomes.size());
    for (std::size_t i = 0; i < one.outcomes.size(); ++i) {
        CHECK(one.outcomes[i].statistic == three.outcomes[i].statistic);
    }
    CHECK(one.rejection_rate == three.rejection_rate);
    CHECK(one.quantiles.at_level.at(5).value == three.quantiles.at_level.at(5).value);

    const auto b1 = run_experiment(TestSpec{BoundsConfig{}}, CointegratedPair{1.0, 0.3}, 150, 100, 52, 1);
    const auto b4 = run_experiment(TestSpec{BoundsConfig{}}, CointegratedPair{1.0, 0.3}, 150, 100, 52, 4);
    CHECK(b1.parameters.at("theta").mean == b4.parameters.at("theta").mean);
}

TEST_CASE("simulated tables use the data-file format") {
    const auto q = simulate_unitroot_critical_values(adf_fixed(0), 100, 200, 61);
    const std::string text =
        "test,case,level,T_range,value\n" + unitroot_table_rows("adf", "constant", q, TRange{90, 124});
    const auto table = UnitRootTable::parse(text);
    CHECK(table.entries().size() == 3);
    CHECK(table.lookup("adf", "constant", 5, 100) == Catch::Approx(q.at_level.at(5).value).margin(1e-4));

    const auto b = simulate_bounds_critical_values(BoundsConfig{}, 1, 100, 200, 62);
    const auto bt = BoundsTable::parse("case,k,level,I0_bound,I1_bound\n" + bounds_table_rows(BoundsCase::III, 1, b));
    CHECK(bt.lookup(BoundsCase::III, 1, 5).upper == Catch::Approx(b.upper.at_level.at(5).value).margin(1e-4));
}
