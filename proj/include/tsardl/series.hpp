#pragma once

// Date-indexed series, panel alignment across mixed frequencies, and the
// elementwise transforms consumed by the estimators.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsardl/error.hpp"

namespace tsardl {

using Date = std::chrono::sys_days;

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD).
inline std::optional<Date> try_parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    int y = 0;
    unsigned m = 0;
    unsigned d = 0;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
    }
    y = (text[0] - '0') * 1000 + (text[1] - '0') * 100 + (text[2] - '0') * 10 + (text[3] - '0');
    m = static_cast<unsigned>((text[5] - '0') * 10 + (text[6] - '0'));
    d = static_cast<unsigned>((text[8] - '0') * 10 + (text[9] - '0'));
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!ymd.ok()) return std::nullopt;
    return Date{ymd};
}

inline Date parse_date(std::string_view text) {
    auto d = try_parse_date(text);
    if (!d) throw Error(ErrorKind::ParseError, "not an ISO date: '" + std::string(text) + "'");
    return *d;
}

inline std::string format_date(Date date) {
    std::chrono::year_month_day ymd{date};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

enum class Frequency { Daily, Weekly };

inline std::string_view to_string(Frequency f) { return f == Frequency::Daily ? "daily" : "weekly"; }

inline Frequency parse_frequency(std::string_view text) {
    if (text == "daily") return Frequency::Daily;
    if (text == "weekly") return Frequency::Weekly;
    throw Error(ErrorKind::ParseError, "unknown frequency '" + std::string(text) + "'");
}

/**
 * @brief Named, date-indexed sequence of finite observations.
 *
 * Dates are strictly increasing and values has the same length as dates.
 */
class TimeSeries {
public:
    TimeSeries(std::string name, std::vector<Date> dates, std::vector<double> values,
               Frequency frequency = Frequency::Daily)
        : name_(std::move(name)), dates_(std::move(dates)), values_(std::move(values)),
          frequency_(frequency) {
        if (dates_.size() != values_.size()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "series '" + name_ + "' has " + std::to_string(dates_.size()) + " dates and " +
                            std::to_string(values_.size()) + " values",
                        {name_});
        }
        for (std::size_t i = 1; i < dates_.size(); ++i) {
            if (dates_[i] <= dates_[i - 1]) {
                throw Error(ErrorKind::InvalidArgument,
                            "series '" + name_ + "' dates not strictly increasing at " +
                                format_date(dates_[i]),
                            {name_});
            }
        }
        for (double v : values_) {
            if (!std::isfinite(v)) {
                throw Error(ErrorKind::InvalidArgument, "series '" + name_ + "' has non-finite value",
                            {name_});
            }
        }
    }

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<Date>& dates() const noexcept { return dates_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    [[nodiscard]] Frequency frequency() const noexcept { return frequency_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }

private:
    std::string name_;
    std::vector<Date> dates_;
    std::vector<double> values_;
    Frequency frequency_;
};

/// Builds a daily series from consecutive calendar days starting at `start`.
inline TimeSeries make_daily_series(std::string name, Date start, std::vector<double> values) {
    std::vector<Date> dates(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) dates[i] = start + std::chrono::days{static_cast<int>(i)};
    return TimeSeries(std::move(name), std::move(dates), std::move(values), Frequency::Daily);
}

enum class Role { Dependent, DynamicRegressor, ExogenousRegressor, Dummy };

struct Column {
    std::string name;
    std::vector<double> values;
};

/**
 * @brief Aligned observation matrix with variable roles.
 *
 * All columns share the date index. Roles are optional until the panel is
 * handed to an estimator, at which point validate_roles() enforces exactly one
 * dependent and 0/1 dummies.
 */
class Panel {
public:
    Panel() = default;

    Panel(std::vector<Date> dates, std::vector<Column> columns, std::map<std::string, Role> roles = {})
        : dates_(std::move(dates)), columns_(std::move(columns)), roles_(std::move(roles)) {
        for (const auto& c : columns_) {
            if (c.values.size() != dates_.size()) {
                throw Error(ErrorKind::DimensionMismatch,
                            "column '" + c.name + "' does not match the panel index", {c.name});
            }
        }
        for (const auto& [name, role] : roles_) {
            if (!has(name)) {
                throw Error(ErrorKind::UnknownVariable, "role assigned to missing column '" + name + "'",
                            {name});
            }
            if (role == Role::Dummy) {
                for (double v : column(name)) {
                    if (v != 0.0 && v != 1.0) {
                        throw Error(ErrorKind::InvalidArgument, "dummy '" + name + "' is not 0/1", {name});
                    }
                }
            }
        }
    }

    [[nodiscard]] const std::vector<Date>& dates() const noexcept { return dates_; }
    [[nodiscard]] const std::vector<Column>& columns() const noexcept { return columns_; }
    [[nodiscard]] const std::map<std::string, Role>& roles() const noexcept { return roles_; }
    [[nodiscard]] std::size_t size() const noexcept { return dates_.size(); }

    [[nodiscard]] bool has(const std::string& name) const {
        return std::any_of(columns_.begin(), columns_.end(),
                           [&](const Column& c) { return c.name == name; });
    }

    [[nodiscard]] const std::vector<double>& column(const std::string& name) const {
        for (const auto& c : columns_) {
            if (c.name == name) return c.values;
        }
        throw Error(ErrorKind::UnknownVariable, "panel has no column '" + name + "'", {name});
    }

    /// Same data with a new role map.
    [[nodiscard]] Panel with_roles(std::map<std::string, Role> roles) const {
        Panel p(dates_, columns_, std::move(roles));
        p.validate_roles();
        return p;
    }

    /// Columns with the given role, in column order.
    [[nodiscard]] std::vector<std::string> names_with(Role role) const {
        std::vector<std::string> out;
        for (const auto& c : columns_) {
            auto it = roles_.find(c.name);
            if (it != roles_.end() && it->second == role) out.push_back(c.name);
        }
        return out;
    }

    [[nodiscard]] std::string dependent() const {
        auto deps = names_with(Role::Dependent);
        if (deps.size() != 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "panel needs exactly one dependent column, has " + std::to_string(deps.size()));
        }
        return deps.front();
    }

    void validate_roles() const { (void)dependent(); }

    /// Rows [begin, end) as a new panel with the same roles.
    [[nodiscard]] Panel slice(std::size_t begin, std::size_t end) const {
        std::vector<Date> d(dates_.begin() + static_cast<std::ptrdiff_t>(begin),
                            dates_.begin() + static_cast<std::ptrdiff_t>(end));
        std::vector<Column> cols;
        for (const auto& c : columns_) {
            cols.push_back({c.name, std::vector<double>(c.values.begin() + static_cast<std::ptrdiff_t>(begin),
                                                        c.values.begin() + static_cast<std::ptrdiff_t>(end))});
        }
        return Panel(std::move(d), std::move(cols), roles_);
    }

private:
    std::vector<Date> dates_;
    std::vector<Column> columns_;
    std::map<std::string, Role> roles_;
};

enum class FillPolicy { ForwardFill, DropRow };

struct DateRange {
    Date start;
    Date end;
};

struct AlignOptions {
    FillPolicy fill = FillPolicy::ForwardFill;
    /// When true the panel shrinks to the common coverage inside the range;
    /// when false a series starting after range.start raises LeadingGap.
    bool clip_to_common_coverage = true;
};

/**
 * @brief Aligns series onto a daily calendar index.
 *
 * Weekly series are always forward-filled from each observation (a weekly
 * value covers its day and the following six). Gaps in daily series are
 * forward-filled or cause the row to be dropped, per the fill policy.
 */
inline Panel align_panel(std::span<const TimeSeries> series, DateRange range, AlignOptions options = {}) {
    if (series.empty()) throw Error(ErrorKind::InvalidArgument, "no series to align");
    if (range.end < range.start) throw Error(ErrorKind::InvalidArgument, "empty date range");

    Date start = range.start;
    Date end = range.end;
    for (const auto& s : series) {
        if (s.empty()) throw Error(ErrorKind::EmptyOverlap, "series '" + s.name() + "' is empty", {s.name()});
        const Date first = s.dates().front();
        Date last = s.dates().back();
        if (s.frequency() == Frequency::Weekly) last += std::chrono::days{6};
        if (first > range.start && !options.clip_to_common_coverage) {
            throw Error(ErrorKind::LeadingGap,
                        "series '" + s.name() + "' starts " + format_date(first) + ", after range start " +
                            format_date(range.start),
                        {s.name()});
        }
        start = std::max(start, first);
        end = std::min(end, last);
    }
    if (end < start) throw Error(ErrorKind::EmptyOverlap, "series have no common coverage in range");

    std::vector<Date> dates;
    std::vector<Column> columns(series.size());
    std::vector<std::size_t> cursor(series.size(), 0);
    for (std::size_t j = 0; j < series.size(); ++j) columns[j].name = series[j].name();

    for (Date day = start; day <= end; day += std::chrono::days{1}) {
        bool keep = true;
        std::vector<double> row(series.size());
        for (std::size_t j = 0; j < series.size(); ++j) {
            const auto& s = series[j];
            auto& c = cursor[j];
            while (c + 1 < s.size() && s.dates()[c + 1] <= day) ++c;
            // start >= first date of every series, so dates()[c] <= day holds.
            const bool exact = s.dates()[c] == day;
            if (!exact && s.frequency() == Frequency::Daily && options.fill == FillPolicy::DropRow) {
                keep = false;
            }
            row[j] = s.values()[c];
        }
        if (!keep) continue;
        dates.push_back(day);
        for (std::size_t j = 0; j < series.size(); ++j) columns[j].values.push_back(row[j]);
    }
    if (dates.empty()) throw Error(ErrorKind::EmptyOverlap, "no rows survive alignment");
    return Panel(std::move(dates), std::move(columns));
}

inline Panel align_panel(const std::vector<TimeSeries>& series, DateRange range, AlignOptions options = {}) {
    return align_panel(std::span<const TimeSeries>(series), range, options);
}

struct Transform {
    enum class Kind { Level, Log, FirstDifference, Lag };
    Kind kind = Kind::Level;
    int order = 0;

    static Transform level() { return {Kind::Level, 0}; }
    static Transform log() { return {Kind::Log, 0}; }
    static Transform first_difference() { return {Kind::FirstDifference, 1}; }
    static Transform lag(int k) {
        if (k < 1) throw Error(ErrorKind::InvalidArgument, "lag order must be >= 1");
        return {Kind::Lag, k};
    }
};

inline Transform parse_transform(std::string_view text) {
    if (text == "level") return Transform::level();
    if (text == "log") return Transform::log();
    if (text == "diff" || text == "first_difference") return Transform::first_difference();
    if (text.starts_with("lag")) {
        int k = 0;
        if (std::sscanf(std::string(text.substr(3)).c_str(), "%d", &k) == 1) return Transform::lag(k);
    }
    throw Error(ErrorKind::ParseError, "unknown transform '" + std::string(text) + "'");
}

/**
 * @brief Applies one transform to a column.
 *
 * Output lengths: level and log keep n; first_difference gives n-1; lag(k)
 * gives n-k where element i is v[i], aligned to position i+k.
 */
inline std::vector<double> apply_transform(std::span<const double> values, Transform t) {
    switch (t.kind) {
        case Transform::Kind::Level:
            return {values.begin(), values.end()};
        case Transform::Kind::Log: {
            std::vector<double> out(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (!(values[i] > 0.0)) {
                    throw Error(ErrorKind::NonPositiveLog,
                                "log of non-positive value at position " + std::to_string(i));
                }
                out[i] = std::log(values[i]);
            }
            return out;
        }
        case Transform::Kind::FirstDifference: {
            if (values.size() <= 1) throw Error(ErrorKind::InsufficientLength, "difference needs n > 1");
            std::vector<double> out(values.size() - 1);
            for (std::size_t i = 1; i < values.size(); ++i) out[i - 1] = values[i] - values[i - 1];
            return out;
        }
        case Transform::Kind::Lag: {
            if (t.order < 1) throw Error(ErrorKind::InvalidArgument, "lag order must be >= 1");
            const auto k = static_cast<std::size_t>(t.order);
            if (values.size() <= k) throw Error(ErrorKind::InsufficientLength, "lag needs n > k");
            return {values.begin(), values.end() - static_cast<std::ptrdiff_t>(k)};
        }
    }
    return {};
}

inline std::vector<double> difference(std::span<const double> values) {
    return apply_transform(values, Transform::first_difference());
}

}  // namespace tsardl
