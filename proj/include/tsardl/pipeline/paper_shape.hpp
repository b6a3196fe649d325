#pragma once

// Synthetic dataset with the layout of the cryptocurrency study: BitCoin, 16
// altcoins and two altcoin indices, coin supplies (weekly), Wikipedia views
// and six macro-financial series (weekdays only). Half of the altcoins share
// a stationary log-price spread with BitCoin; the rest follow their own random
// walks. The bundled config crosses the 19 dependents with the four model
// templates of each block (M1.x for BitCoin, M2.x for the others).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tsardl/error.hpp"
#include "tsardl/mc.hpp"
#include "tsardl/series.hpp"

namespace tsardl::pipeline::paper_shape {

inline constexpr std::uint64_t kDefaultSeed = 20161012;
inline const Date kCalendarStart = parse_date("2014-01-01");
inline const Date kCalendarEnd = parse_date("2016-10-12");
inline constexpr const char* kSample = "2015-01-01..2016-10-12";

struct Coin {
    std::string name;   ///< series stem, e.g. "ethereum"
    std::string label;  ///< model id suffix, e.g. "ETH"
    std::string start;  ///< first price date
    bool cointegrated;  ///< log price shares a stationary spread with BitCoin
    bool has_wiki;
};

inline const std::vector<Coin>& altcoins() {
    static const std::vector<Coin> coins = {
        {"ethereum", "ETH", "2015-08-30", true, true},     {"ripple", "XRP", "2014-01-04", false, true},
        {"litecoin", "LTC", "2014-01-01", true, true},     {"monero", "XMR", "2015-03-10", false, true},
        {"dash", "DASH", "2015-03-25", true, true},        {"nem", "NEM", "2015-04-13", false, true},
        {"dogecoin", "DOGE", "2014-03-22", true, true},    {"peercoin", "PPC", "2014-04-01", false, true},
        {"namecoin", "NMC", "2014-04-01", true, true},     {"novacoin", "NVC", "2014-04-01", false, false},
        {"nxt", "NXT", "2014-04-14", true, false},         {"counterparty", "XCP", "2014-04-14", false, false},
        {"mintcoin", "MINT", "2014-04-14", true, false},   {"qora", "QORA", "2014-06-27", false, false},
        {"supernet", "UNITY", "2014-09-24", true, false},  {"bitshares", "BTS", "2014-11-13", false, false},
    };
    return coins;
}

inline const std::vector<std::string>& macro_names() {
    static const std::vector<std::string> names = {"gold_price", "nasdaq",     "treasury_rate10y",
                                                   "e_usd_eur",  "e_yuan_usd", "oil_price"};
    return names;
}

struct GeneratedSeries {
    TimeSeries series;
    std::string transform;  ///< manifest default
};

namespace detail {

inline std::vector<Date> calendar(Date start, Date end, int step_days, bool weekdays_only) {
    std::vector<Date> out;
    for (Date d = start; d <= end; d += std::chrono::days{step_days}) {
        if (weekdays_only) {
            const auto wd = std::chrono::weekday(d).c_encoding();
            if (wd == 0 || wd == 6) continue;
        }
        out.push_back(d);
    }
    return out;
}

/// Index of date d on the daily calendar.
inline std::size_t day_index(Date d) { return static_cast<std::size_t>((d - kCalendarStart).count()); }

/// Gaussian random walk on the daily calendar.
inline std::vector<double> walk(mc::Stream& s, std::size_t n, double start, double drift, double sd) {
    std::vector<double> v(n);
    double x = start;
    for (std::size_t t = 0; t < n; ++t) {
        x += drift + sd * s.normal();
        v[t] = x;
    }
    return v;
}

/// AR(1) noise started from its stationary distribution.
inline std::vector<double> ar1(mc::Stream& s, std::size_t n, double rho, double sd) {
    std::vector<double> v(n);
    double u = sd / std::sqrt(1.0 - rho * rho) * s.normal();
    for (std::size_t t = 0; t < n; ++t) {
        u = rho * u + sd * s.normal();
        v[t] = u;
    }
    return v;
}

/// Samples a daily path on the given dates, exponentiating when log is set.
inline TimeSeries sample(const std::string& name, const std::vector<double>& daily, const std::vector<Date>& dates,
                         bool exponentiate, Frequency f = Frequency::Daily) {
    std::vector<double> v;
    v.reserve(dates.size());
    for (Date d : dates) {
        const double x = daily[day_index(d)];
        v.push_back(exponentiate ? std::exp(x) : x);
    }
    return TimeSeries(name, dates, std::move(v), f);
}

}  // namespace detail

/// Every series of the dataset; stream ids are fixed per series so adding one leaves the others unchanged.
inline std::vector<GeneratedSeries> generate(std::uint64_t seed = kDefaultSeed) {
    using detail::calendar;
    const auto n = detail::day_index(kCalendarEnd) + 1;
    const auto daily = calendar(kCalendarStart, kCalendarEnd, 1, false);
    const auto weekdays = calendar(kCalendarStart, kCalendarEnd, 1, true);
    std::uint64_t stream_id = 0;
    auto next = [&] { return mc::Stream(seed, ++stream_id); };
    std::vector<GeneratedSeries> out;

    // BitCoin: log random walk with a crash in August 2015.
    auto s_btc = next();
    auto btc = detail::walk(s_btc, n, std::log(800.0), 0.0005, 0.035);
    for (std::size_t t = detail::day_index(parse_date("2015-08-18")); t < n; ++t) btc[t] -= 0.4;
    out.push_back({detail::sample("bitcoin_usd", btc, daily, true), "log"});

    // Altcoin index in BTC: its USD value is cointegrated with BitCoin.
    auto s_a19 = next();
    const auto a19_spread = detail::ar1(s_a19, n, 0.9, 0.04);
    std::vector<double> alt19_btc(n);
    for (std::size_t t = 0; t < n; ++t) alt19_btc[t] = std::log(0.05) + 0.2 * (btc[t] - btc[0]) + a19_spread[t];
    out.push_back({detail::sample("alt19", alt19_btc, calendar(parse_date("2014-01-01"), kCalendarEnd, 1, false), true),
                   "log"});

    auto s_a100 = next();
    const auto alt100 = detail::walk(s_a100, n, std::log(1000.0), 0.0, 0.03);
    out.push_back({detail::sample("alt100usd", alt100, calendar(parse_date("2014-01-07"), kCalendarEnd, 1, false), true),
                   "log"});

    for (const auto& c : altcoins()) {
        auto s = next();
        std::vector<double> lp;
        if (c.cointegrated) {
            const double theta = 0.8 + 0.6 * s.uniform();
            const double level = std::log(0.5 + 10.0 * s.uniform());
            const auto spread = detail::ar1(s, n, 0.9, 0.05);
            lp.resize(n);
            for (std::size_t t = 0; t < n; ++t) lp[t] = level + theta * (btc[t] - btc[0]) + spread[t];
        } else {
            lp = detail::walk(s, n, std::log(0.5 + 10.0 * s.uniform()), 0.0, 0.05);
        }
        out.push_back({detail::sample(c.name + "_usd", lp, calendar(parse_date(c.start), kCalendarEnd, 1, false), true),
                       "log"});
    }

    // Supplies: weekly log random walks with positive drift.
    auto supply = [&](const std::string& name, double start, double growth) {
        auto s = next();
        const auto weekly = calendar(kCalendarStart, kCalendarEnd, 7, false);
        std::vector<double> v;
        double x = std::log(start);
        for (std::size_t i = 0; i < weekly.size(); ++i) {
            x += growth + 0.002 * s.normal();
            v.push_back(std::exp(x));
        }
        out.push_back({TimeSeries(name, weekly, std::move(v), Frequency::Weekly), "log"});
    };
    supply("supply_bitcoin", 12.0e6, 0.0015);
    for (const auto& c : altcoins()) supply("supply_" + c.name, 1.0e8, 0.003);
    supply("supply_altcoins", 5.0e10, 0.002);

    // Page views: daily log random walks.
    auto wiki = [&](const std::string& name, double start) {
        auto s = next();
        const auto v = detail::walk(s, n, std::log(start), 0.0, 0.08);
        out.push_back({detail::sample(name, v, daily, true), "log"});
    };
    wiki("wiki_bitcoin", 20000.0);
    for (const auto& c : altcoins()) {
        if (c.has_wiki) wiki("wiki_" + c.name, 500.0);
    }
    wiki("wiki_altcoins", 8000.0);

    // Macro-financial series, weekdays only.
    struct Macro {
        double start;
        double sd;
        bool log;
    };
    const std::map<std::string, Macro> macro = {
        {"gold_price", {1200.0, 0.01, true}}, {"nasdaq", {4500.0, 0.012, true}},
        {"treasury_rate10y", {2.5, 0.04, false}}, {"e_usd_eur", {1.2, 0.005, true}},
        {"e_yuan_usd", {6.2, 0.002, true}},   {"oil_price", {80.0, 0.02, true}},
    };
    for (const auto& name : macro_names()) {
        const auto& m = macro.at(name);
        auto s = next();
        const auto v = detail::walk(s, n, m.log ? std::log(m.start) : m.start, 0.0, m.sd);
        out.push_back({detail::sample(name, v, weekdays, m.log), m.log ? "log" : "level"});
    }
    return out;
}

/// Ten significant digits keep the files small and platform independent.
inline void write_series_csv(std::ostream& out, const TimeSeries& s) {
    out << "date,value\n";
    char buf[32];
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g", s.values()[i]);
        out << format_date(s.dates()[i]) << ',' << buf << '\n';
    }
}

inline std::string manifest_text(const std::vector<GeneratedSeries>& series) {
    std::string out = "name,path,frequency,transform\n";
    for (const auto& g : series) {
        out += g.series.name() + ",series/" + g.series.name() + ".csv," +
               std::string(to_string(g.series.frequency())) + "," + g.transform + "\n";
    }
    return out;
}

namespace detail {

inline std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
    return out;
}

inline std::string block(const std::string& id, const std::string& dependent, std::vector<std::string> dynamic,
                         const std::vector<std::string>& exogenous) {
    dynamic.insert(dynamic.end(), macro_names().begin(), macro_names().end());
    std::string out = "[model " + id + "]\n";
    out += "dependent = " + dependent + "\n";
    out += "dynamic = " + join(dynamic) + "\n";
    if (!exogenous.empty()) out += "exogenous = " + join(exogenous) + "\n";
    return out + "\n";
}

}  // namespace detail

/**
 * @brief Model configuration over the generated dataset: 4 BitCoin models and
 * 4 models for each altcoin and index. Prices, page views and macro series
 * enter the long run; supplies enter the short run only.
 */
inline std::string config_text() {
    std::string out =
        "# Model templates over the synthetic cryptocurrency dataset.\n"
        "# M1.x: BitCoin price. M2.x: altcoin prices and the two altcoin indices.\n"
        "# Supplies are exogenous; prices, page views and macro series are long-run regressors.\n\n"
        "[defaults]\n"
        "case = constant\n"
        "p_max = 4\n"
        "q_max = 4\n"
        "criterion = bic\n"
        "bounds_level = 5\n"
        "dummies = auto_za(intercept, 0.15)\n"
        "sample = " + std::string(kSample) + "\n"
        "unitroot_test = adf\n"
        "unitroot_case = constant\n"
        "unitroot_lags = aic\n"
        "unitroot_level = 5\n"
        "convert.alt19 = times(bitcoin_usd)\n\n";

    using detail::block;
    out += block("M1.1-BTC", "bitcoin_usd", {"alt100usd", "wiki_bitcoin", "wiki_altcoins"},
                 {"supply_bitcoin", "supply_altcoins"});
    out += block("M1.2-BTC", "bitcoin_usd", {"alt19", "wiki_bitcoin", "wiki_altcoins"},
                 {"supply_bitcoin", "supply_altcoins"});
    out += block("M1.3-BTC", "bitcoin_usd", {"alt100usd", "wiki_altcoins"}, {"supply_bitcoin", "supply_altcoins"});
    out += block("M1.4-BTC", "bitcoin_usd", {"alt19", "wiki_altcoins"}, {"supply_altcoins"});

    struct Dep {
        std::string series;
        std::string label;
        std::string own_supply;  ///< empty when the dependent has none
        std::string own_wiki;
        std::string index;       ///< altcoin index regressor of M2.3 and M2.4
    };
    std::vector<Dep> deps;
    for (const auto& c : altcoins()) {
        deps.push_back({c.name + "_usd", c.label, "supply_" + c.name, c.has_wiki ? "wiki_" + c.name : "", "alt19"});
    }
    deps.push_back({"alt19", "ALT19", "", "", "alt100usd"});
    deps.push_back({"alt100usd", "ALT100", "", "", "alt19"});

    auto with = [](std::vector<std::string> v, const std::string& extra) {
        if (!extra.empty()) v.push_back(extra);
        return v;
    };
    for (const auto& d : deps) {
        out += block("M2.1-" + d.label, d.series, with({"bitcoin_usd", "wiki_bitcoin"}, d.own_wiki),
                     with({"supply_bitcoin"}, d.own_supply));
        out += block("M2.2-" + d.label, d.series, {"bitcoin_usd", "wiki_bitcoin"}, {"supply_bitcoin"});
        out += block("M2.3-" + d.label, d.series, {d.index, "wiki_altcoins"}, {"supply_altcoins"});
        auto m24_dynamic = with({d.index}, d.own_wiki);
        m24_dynamic.push_back("wiki_altcoins");
        auto m24_exogenous = with({}, d.own_supply);
        m24_exogenous.push_back("supply_altcoins");
        out += block("M2.4-" + d.label, d.series, m24_dynamic, m24_exogenous);
    }
    return out;
}

/// Writes series/*.csv, manifest.csv and models.cfg under dir.
inline void write_dataset(const std::filesystem::path& dir, std::uint64_t seed = kDefaultSeed) {
    const auto series = generate(seed);
    std::filesystem::create_directories(dir / "series");
    auto put = [](const std::filesystem::path& p, const std::string& text) {
        std::ofstream f(p, std::ios::binary);
        f << text;
        if (!f) throw Error(ErrorKind::Io, "cannot write '" + p.string() + "'", {p.string()});
    };
    for (const auto& g : series) {
        std::ostringstream text;
        write_series_csv(text, g.series);
        put(dir / "series" / (g.series.name() + ".csv"), text.str());
    }
    put(dir / "manifest.csv", manifest_text(series));
    put(dir / "models.cfg", config_text());
}

}  // namespace tsardl::pipeline::paper_shape
