#pragma once

// Seeded Monte Carlo harness: counter-based innovation streams, synthetic
// data-generating processes with known answers, size/power experiments and
// simulated critical values in the data-file formats the tests consume.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tsardl/ardl.hpp"
#include "tsardl/critical_values.hpp"
#include "tsardl/csv.hpp"
#include "tsardl/error.hpp"
#include "tsardl/parallel.hpp"
#include "tsardl/series.hpp"
#include "tsardl/unitroot.hpp"

namespace tsardl::mc {

/// Identifies the innovation algorithm; bump when any output bit changes.
inline constexpr std::string_view kGeneratorName = "splitmix64-counter+box-muller";
inline constexpr int kGeneratorVersion = 1;

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/**
 * @brief Counter-based stream: draw i of stream s under seed k is
 * mix64(key(k, s) + (i + 1) * golden), so any replication can be replayed
 * without generating the ones before it.
 */
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream)
        : key_(mix64(seed + kGolden) ^ mix64(stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL)) {}

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

    /// Uniform on the open interval (0, 1).
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    /// Standard normal by Box-Muller, both variates used in order.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    [[nodiscard]] std::uint64_t draws() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline constexpr std::size_t kBurnIn = 100;
inline constexpr std::size_t kMinLength = 30;

struct WhiteNoise {};
struct Ar1 {
    double rho = 0.0;
};
struct RandomWalk {};
struct RandomWalkDrift {
    double mu = 0.0;
};
/// y and x independent driftless random walks.
struct IndependentWalks {};
/// x random walk; dy_t = -alpha (y_{t-1} - theta x_{t-1}) + e_t.
struct CointegratedPair {
    double theta = 1.0;
    double alpha = 0.5;
};
/// Stationary AR(1) noise plus `size` added to every index after `tau`.
struct LevelShift {
    std::size_t tau = 0;
    double size = 0.0;
    double rho = 0.0;
};
/// y_t = c + sum phi_i y_{t-i} + sum beta_i x_{t-i} + e_t with x a random walk.
struct ArdlProcess {
    std::vector<double> phi;
    std::vector<double> beta;
    double intercept = 0.0;
};

using DgpKind = std::variant<WhiteNoise, Ar1, RandomWalk, RandomWalkDrift, IndependentWalks, CointegratedPair, LevelShift,
                             ArdlProcess>;

struct Dgp {
    DgpKind kind;
    std::size_t T = 100;
    std::uint64_t seed = 0;
};

/// One draw: y always, x for the two-variable processes.
struct Sample {
    std::vector<double> y;
    std::vector<double> x;

    [[nodiscard]] bool has_x() const noexcept { return !x.empty(); }
};

inline bool is_bivariate(const DgpKind& kind) {
    return std::holds_alternative<IndependentWalks>(kind) || std::holds_alternative<CointegratedPair>(kind) ||
           std::holds_alternative<ArdlProcess>(kind);
}

inline void validate(const DgpKind& kind, std::size_t T) {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidDgp, what); };
    if (T < kMinLength) fail("T must be >= 30");
    if (const auto* a = std::get_if<Ar1>(&kind); a && !(std::abs(a->rho) <= 1.0)) fail("|rho| must be <= 1");
    if (const auto* c = std::get_if<CointegratedPair>(&kind)) {
        if (!(std::abs(c->alpha) > 0.0 && std::abs(c->alpha) <= 1.0)) fail("|alpha| must be in (0, 1]");
        if (!std::isfinite(c->theta)) fail("theta must be finite");
    }
    if (const auto* s = std::get_if<LevelShift>(&kind)) {
        if (s->tau + 1 >= T) fail("level shift index must lie inside the sample");
        if (!(std::abs(s->rho) < 1.0)) fail("level shift noise needs |rho| < 1");
    }
    if (const auto* p = std::get_if<ArdlProcess>(&kind)) {
        if (p->phi.empty()) fail("ardl process needs p >= 1");
        if (p->beta.empty()) fail("ardl process needs beta_0");
    }
}

/**
 * @brief Draws one sample of length T from a stream. Stationary processes
 * discard a burn-in of 100 observations; integrated ones start at zero.
 */
inline Sample draw(const DgpKind& kind, std::size_t T, Stream& rng) {
    validate(kind, T);
    Sample s;
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, WhiteNoise>) {
                s.y.resize(T);
                for (auto& v : s.y) v = rng.normal();
            } else if constexpr (std::is_same_v<K, Ar1>) {
                double v = 0.0;
                const bool stationary = std::abs(k.rho) < 1.0;
                if (stationary) {
                    for (std::size_t t = 0; t < kBurnIn; ++t) v = k.rho * v + rng.normal();
                }
                s.y.resize(T);
                for (auto& out : s.y) out = v = k.rho * v + rng.normal();
            } else if constexpr (std::is_same_v<K, RandomWalk> || std::is_same_v<K, RandomWalkDrift>) {
                double mu = 0.0;
                if constexpr (std::is_same_v<K, RandomWalkDrift>) mu = k.mu;
                double v = 0.0;
                s.y.resize(T);
                for (auto& out : s.y) out = v = v + mu + rng.normal();
            } else if constexpr (std::is_same_v<K, IndependentWalks>) {
                s.y.resize(T);
                s.x.resize(T);
                double y = 0.0;
                double x = 0.0;
                for (std::size_t t = 0; t < T; ++t) {
                    s.y[t] = y += rng.normal();
                    s.x[t] = x += rng.normal();
                }
            } else if constexpr (std::is_same_v<K, CointegratedPair>) {
                s.y.resize(T);
                s.x.resize(T);
                double x = 0.0;
                double y = 0.0;
                for (std::size_t t = 0; t < T; ++t) {
                    const double ey = rng.normal();
                    const double ex = rng.normal();
                    const double y_new = y - k.alpha * (y - k.theta * x) + ey;
                    x += ex;
                    y = y_new;
                    s.y[t] = y;
                    s.x[t] = x;
                }
            } else if constexpr (std::is_same_v<K, LevelShift>) {
                double v = 0.0;
                for (std::size_t t = 0; t < kBurnIn; ++t) v = k.rho * v + rng.normal();
                s.y.resize(T);
                for (std::size_t t = 0; t < T; ++t) {
                    v = k.rho * v + rng.normal();
                    s.y[t] = v + (t > k.tau ? k.size : 0.0);
                }
            } else if constexpr (std::is_same_v<K, ArdlProcess>) {
                const std::size_t p = k.phi.size();
                const std::size_t q = k.beta.size() - 1;
                const std::size_t total = T + kBurnIn;
                std::vector<double> y(total, 0.0);
                std::vector<double> x(total, 0.0);
                for (std::size_t t = 0; t < total; ++t) {
                    const double e = rng.normal();
                    x[t] = (t > 0 ? x[t - 1] : 0.0) + rng.normal();
                    double v = k.intercept + e;
                    for (std::size_t i = 1; i <= p && i <= t; ++i) v += k.phi[i - 1] * y[t - i];
                    for (std::size_t i = 0; i <= q && i <= t; ++i) v += k.beta[i] * x[t - i];
                    y[t] = v;
                }
                s.y.assign(y.begin() + static_cast<std::ptrdiff_t>(kBurnIn), y.end());
                s.x.assign(x.begin() + static_cast<std::ptrdiff_t>(kBurnIn), x.end());
            }
        },
        kind);
    return s;
}

/// Replication r of a Dgp seed reads stream r.
inline Sample draw(const Dgp& dgp, std::uint64_t replication = 0) {
    Stream rng(dgp.seed, replication);
    return draw(dgp.kind, dgp.T, rng);
}

/// Deterministic series named y (and x) on consecutive days from `start`.
inline std::vector<TimeSeries> generate(const Dgp& dgp, Date start = parse_date("2013-01-01")) {
    auto s = draw(dgp);
    std::vector<TimeSeries> out;
    out.push_back(make_daily_series("y", start, std::move(s.y)));
    if (!s.x.empty()) out.push_back(make_daily_series("x", start, std::move(s.x)));
    return out;
}

/// Panel with y dependent and x (if any) as dynamic regressor.
inline Panel sample_panel(const Sample& s, Date start = parse_date("2013-01-01")) {
    std::vector<Date> dates(s.y.size());
    for (std::size_t i = 0; i < dates.size(); ++i) dates[i] = start + std::chrono::days{static_cast<int>(i)};
    std::vector<Column> cols{{"y", s.y}};
    std::map<std::string, Role> roles{{"y", Role::Dependent}};
    if (s.has_x()) {
        cols.push_back({"x", s.x});
        roles["x"] = Role::DynamicRegressor;
    }
    return Panel(std::move(dates), std::move(cols), std::move(roles));
}

/**
 * @brief Parses a process description such as `ar1(0.9)`,
 * `cointegrated_pair(2,0.5)`, `level_shift(150,10)` or
 * `ardl_process(p,q,c,phi_1..phi_p,beta_0..beta_q)`.
 */
inline DgpKind parse_dgp(std::string_view text) {
    auto fail = [&] { throw Error(ErrorKind::ParseError, "bad process '" + std::string(text) + "'"); };
    const auto open = text.find('(');
    const std::string_view name = csv::trim(text.substr(0, open));
    std::vector<double> args;
    if (open != std::string_view::npos) {
        if (text.back() != ')') fail();
        const auto inner = text.substr(open + 1, text.size() - open - 2);
        if (!csv::trim(inner).empty()) {
            for (const auto& field : csv::split(inner)) {
                double v = 0.0;
                if (!csv::parse_double(field, v)) fail();
                args.push_back(v);
            }
        }
    }
    auto need = [&](std::size_t n) {
        if (args.size() != n) fail();
    };
    if (name == "white_noise") return need(0), WhiteNoise{};
    if (name == "random_walk") return need(0), RandomWalk{};
    if (name == "independent_walks") return need(0), IndependentWalks{};
    if (name == "ar1") return need(1), Ar1{args[0]};
    if (name == "random_walk_drift") return need(1), RandomWalkDrift{args[0]};
    if (name == "cointegrated_pair") return need(2), CointegratedPair{args[0], args[1]};
    if (name == "level_shift") {
        if (args.size() != 2 && args.size() != 3) fail();
        if (args[0] < 0) fail();
        return LevelShift{static_cast<std::size_t>(args[0]), args[1], args.size() == 3 ? args[2] : 0.0};
    }
    if (name == "ardl_process") {
        if (args.size() < 3) fail();
        const int p = static_cast<int>(args[0]);
        const int q = static_cast<int>(args[1]);
        if (p < 1 || q < 0 || args.size() != static_cast<std::size_t>(3 + p + q + 1)) fail();
        ArdlProcess a;
        a.intercept = args[2];
        a.phi.assign(args.begin() + 3, args.begin() + 3 + p);
        a.beta.assign(args.begin() + 3 + p, args.end());
        return a;
    }
    fail();
    return WhiteNoise{};
}

/// Linear-interpolation sample quantile of sorted data.
inline double sorted_quantile(const std::vector<double>& sorted, double prob) {
    if (sorted.empty()) throw Error(ErrorKind::InvalidArgument, "quantile of empty sample");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

/**
 * @brief Standard error of a sample quantile,
 * sqrt(p(1-p)/n) times the difference-quotient sparsity estimate with
 * bandwidth h = min(p/2, (1-p)/2, 0.5 n^(-1/3)).
 */
inline double quantile_standard_error(const std::vector<double>& sorted, double prob) {
    const double n = static_cast<double>(sorted.size());
    const double h = std::min({prob / 2.0, (1.0 - prob) / 2.0, 0.5 * std::cbrt(1.0 / n)});
    const double sparsity = (sorted_quantile(sorted, prob + h) - sorted_quantile(sorted, prob - h)) / (2.0 * h);
    return std::sqrt(prob * (1.0 - prob) / n) * sparsity;
}

struct QuantileEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Test-level (%) -> quantile; left tail for t statistics, right tail for F.
struct QuantileTable {
    std::size_t replications = 0;
    std::size_t failures = 0;
    bool upper_tail = false;
    std::map<int, QuantileEstimate> at_level;
};

inline QuantileTable quantile_table(std::vector<double> stats, bool upper_tail, std::size_t failures = 0) {
    std::sort(stats.begin(), stats.end());
    QuantileTable t;
    t.replications = stats.size();
    t.failures = failures;
    t.upper_tail = upper_tail;
    for (int level : kLevels) {
        const double a = level / 100.0;
        const double prob = upper_tail ? 1.0 - a : a;
        t.at_level[level] = {sorted_quantile(stats, prob), quantile_standard_error(stats, prob)};
    }
    return t;
}

/// Bounds test experiment: ARDL(p, q) on y and k regressors.
struct BoundsConfig {
    int p = 1;
    int q = 1;
    BoundsCase bounds_case = BoundsCase::III;
    int level = 5;  ///< decision level for rejection counting
};

using TestSpec = std::variant<unitroot::TestConfig, BoundsConfig>;

/// Outcome of one replication.
struct Outcome {
    double statistic = 0.0;
    long nobs = 0;
    std::map<int, bool> reject;           ///< level -> rejects the null
    std::optional<std::size_t> break_index;
    std::map<std::string, double> recovered;  ///< named parameter estimates
};

inline std::vector<std::string> regressor_names(std::size_t k) {
    if (k == 1) return {"x"};
    std::vector<std::string> out;
    for (std::size_t j = 1; j <= k; ++j) out.push_back("x" + std::to_string(j));
    return out;
}

inline ardl::ArdlSpec bounds_spec(const BoundsConfig& cfg, std::size_t k) {
    ardl::ArdlSpec spec;
    spec.dependent = "y";
    spec.dynamic_regressors = regressor_names(k);
    spec.deterministic = ardl::required_case(cfg.bounds_case);
    spec.p = cfg.p;
    spec.q = cfg.q;
    return spec;
}

inline Panel multi_panel(const std::vector<double>& y, const std::vector<std::vector<double>>& xs) {
    std::vector<Date> dates(y.size());
    const Date start = parse_date("2013-01-01");
    for (std::size_t i = 0; i < dates.size(); ++i) dates[i] = start + std::chrono::days{static_cast<int>(i)};
    std::vector<Column> cols{{"y", y}};
    std::map<std::string, Role> roles{{"y", Role::Dependent}};
    const auto names = regressor_names(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        cols.push_back({names[j], xs[j]});
        roles[names[j]] = Role::DynamicRegressor;
    }
    return Panel(std::move(dates), std::move(cols), std::move(roles));
}

/// Applies a test to one sample. Unit-root tests use y; bounds tests need x.
inline Outcome evaluate(const TestSpec& test, const Sample& s, const UnitRootTable& ur_table = default_unitroot_table(),
                        const BoundsTable& b_table = default_bounds_table()) {
    Outcome o;
    if (const auto* ur = std::get_if<unitroot::TestConfig>(&test)) {
        const auto r = unitroot::run_test(s.y, *ur, ur_table);
        o.statistic = r.statistic;
        o.nobs = r.nobs;
        o.reject = r.reject_unit_root;
        o.break_index = r.break_index;
        return o;
    }
    const auto& cfg = std::get<BoundsConfig>(test);
    if (!s.has_x()) throw Error(ErrorKind::InvalidDgp, "bounds experiment needs a bivariate process");
    const Panel panel = sample_panel(s);
    const auto spec = bounds_spec(cfg, 1);
    const auto r = ardl::bounds_test(panel, spec, cfg.bounds_case, b_table);
    o.statistic = r.f_statistic;
    o.nobs = r.df1 + r.df2;
    for (const auto& [level, c] : r.conclusion) o.reject[level] = c == ardl::Conclusion::Cointegrated;
    try {
        const auto ecm = ardl::to_ecm(ardl::fit_ardl(panel, spec));
        const auto& lr = ecm.term("LR.x");
        o.recovered["theta"] = lr.stat.estimate;
        o.recovered["theta_se"] = lr.stat.std_error;
        o.recovered["alpha"] = ecm.alpha;
    } catch (const Error&) {
    }
    return o;
}

struct ParameterSummary {
    double mean = 0.0;
    double stdev = 0.0;
};

struct McSummary {
    std::size_t replications = 0;
    std::size_t failures = 0;
    QuantileTable quantiles;
    std::map<int, double> rejection_rate;
    std::map<std::string, ParameterSummary> parameters;
    std::vector<Outcome> outcomes;  ///< in replication order, failures omitted

    /// Monte Carlo standard error of a rejection rate.
    [[nodiscard]] double rate_std_error(int level) const {
        const double r = rejection_rate.at(level);
        return std::sqrt(r * (1.0 - r) / static_cast<double>(replications - failures));
    }
};

inline McSummary summarize(std::vector<std::optional<Outcome>> results, bool upper_tail) {
    McSummary m;
    m.replications = results.size();
    std::vector<double> stats;
    std::map<int, std::size_t> rejects;
    std::map<std::string, std::vector<double>> params;
    for (auto& r : results) {
        if (!r) {
            ++m.failures;
            continue;
        }
        stats.push_back(r->statistic);
        for (const auto& [level, rej] : r->reject) rejects[level] += rej ? 1 : 0;
        for (const auto& [name, v] : r->recovered) params[name].push_back(v);
        m.outcomes.push_back(std::move(*r));
    }
    if (stats.empty()) throw Error(ErrorKind::InvalidArgument, "every replication failed");
    m.quantiles = quantile_table(stats, upper_tail, m.failures);
    for (const auto& [level, count] : rejects) {
        m.rejection_rate[level] = static_cast<double>(count) / static_cast<double>(stats.size());
    }
    for (const auto& [name, v] : params) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        m.parameters[name] = {mean, v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0};
    }
    return m;
}

/// Stream offsets that keep null and alternative draws independent.
inline constexpr std::uint64_t kNullStreams = 0;
inline constexpr std::uint64_t kAlternativeStreams = 1ULL << 40;

/**
 * @brief Replicates `test` on draws of `kind`. Replication r reads stream
 * `stream_offset + r`; errors raised by the test count as failures.
 */
inline McSummary run_experiment(const TestSpec& test, const DgpKind& kind, std::size_t T, std::size_t replications,
                                std::uint64_t seed, unsigned jobs = 1, std::uint64_t stream_offset = kNullStreams) {
    validate(kind, T);
    auto results = tsardl::parallel_map(replications, jobs, [&](std::size_t r) -> std::optional<Outcome> {
        Stream rng(seed, stream_offset + r);
        const auto s = draw(kind, T, rng);
        try {
            return evaluate(test, s);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InvalidDgp || e.kind() == ErrorKind::MissingCriticalValue ||
                e.kind() == ErrorKind::MissingBoundsEntry) {
                throw;
            }
            return std::nullopt;
        }
    });
    return summarize(std::move(results), std::holds_alternative<BoundsConfig>(test));
}

struct SizePower {
    McSummary null;
    McSummary alternative;
};

/// Paired rejection rates under a null and an alternative process.
inline SizePower size_power_experiment(const TestSpec& test, const DgpKind& null_kind, const DgpKind& alt_kind,
                                       std::size_t T, std::size_t replications, std::uint64_t seed,
                                       unsigned jobs = 1) {
    return {run_experiment(test, null_kind, T, replications, seed, jobs, kNullStreams),
            run_experiment(test, alt_kind, T, replications, seed, jobs, kAlternativeStreams)};
}

/**
 * @brief Simulated null quantiles of a unit-root statistic: driftless
 * random walks of length T.
 */
inline QuantileTable simulate_unitroot_critical_values(const unitroot::TestConfig& config, std::size_t T,
                                                       std::size_t replications, std::uint64_t seed,
                                                       unsigned jobs = 1) {
    return run_experiment(TestSpec{config}, RandomWalk{}, T, replications, seed, jobs).quantiles;
}

/// Simulated I(0) and I(1) bounds.
struct BoundsQuantiles {
    QuantileTable lower;  ///< regressors white noise
    QuantileTable upper;  ///< regressors independent random walks
};

/**
 * @brief Simulated bounds F quantiles: y a driftless random walk independent
 * of k regressors that are white noise (lower bound) or random walks (upper).
 */
inline BoundsQuantiles simulate_bounds_critical_values(const BoundsConfig& config, int k, std::size_t T,
                                                       std::size_t replications, std::uint64_t seed,
                                                       unsigned jobs = 1) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be >= 0");
    const auto kz = static_cast<std::size_t>(k);
    auto one = [&](bool integrated, std::uint64_t offset) {
        auto stats = tsardl::parallel_map(replications, jobs, [&](std::size_t r) -> std::optional<double> {
            Stream rng(seed, offset + r);
            std::vector<double> y(T);
            std::vector<std::vector<double>> xs(kz, std::vector<double>(T));
            double yv = 0.0;
            std::vector<double> xv(kz, 0.0);
            for (std::size_t t = 0; t < T; ++t) {
                yv += rng.normal();
                y[t] = yv;
                for (std::size_t j = 0; j < kz; ++j) {
                    const double e = rng.normal();
                    xv[j] = integrated ? xv[j] + e : e;
                    xs[j][t] = xv[j];
                }
            }
            try {
                return ardl::bounds_f_statistic(multi_panel(y, xs), bounds_spec(config, kz), config.bounds_case)
                    .f_statistic;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::RankDeficient) throw;
                return std::nullopt;
            }
        });
        std::vector<double> ok;
        std::size_t failures = 0;
        for (const auto& s : stats) {
            if (s) {
                ok.push_back(*s);
            } else {
                ++failures;
            }
        }
        return quantile_table(std::move(ok), true, failures);
    };
    return {one(false, kNullStreams), one(true, kAlternativeStreams)};
}

inline std::string format_number(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

/// Rows `test,case,level,T_range,value` for a simulated unit-root table.
inline std::string unitroot_table_rows(std::string_view test, std::string_view model, const QuantileTable& q,
                                       const TRange& range) {
    std::string out;
    for (const auto& [level, est] : q.at_level) {
        out += std::string(test) + "," + std::string(model) + "," + std::to_string(level) + "," +
               range.to_string() + "," + format_number(est.value) + "\n";
    }
    return out;
}

/// Rows `case,k,level,I0_bound,I1_bound` for simulated bounds.
inline std::string bounds_table_rows(BoundsCase c, int k, const BoundsQuantiles& q) {
    std::string out;
    for (int level : {10, 5, 1}) {
        out += to_string(c) + "," + std::to_string(k) + "," + std::to_string(level) + "," +
               format_number(q.lower.at_level.at(level).value) + "," +
               format_number(q.upper.at_level.at(level).value) + "\n";
    }
    return out;
}

}  // namespace tsardl::mc
