#pragma once

// Critical-value tables for the unit-root and bounds tests, in the plain-text
// formats
//   test,case,level,T_range,value            (unit-root, left-tailed)
//   case,k,level,I0_bound,I1_bound           (bounds F test)
// Lines starting with '#' are comments.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "tsardl/csv.hpp"
#include "tsardl/embedded_tables.hpp"
#include "tsardl/error.hpp"

namespace tsardl {

inline constexpr int kLevels[] = {1, 5, 10};

struct TRange {
    long lo = 0;
    long hi = std::numeric_limits<long>::max();

    [[nodiscard]] bool contains(long t) const { return t >= lo && t <= hi; }

    [[nodiscard]] std::string to_string() const {
        return std::to_string(lo) + "-" +
               (hi == std::numeric_limits<long>::max() ? std::string("inf") : std::to_string(hi));
    }

    static TRange parse(std::string_view text) {
        auto dash = text.find('-');
        if (dash == std::string_view::npos) {
            throw Error(ErrorKind::ParseError, "bad T range '" + std::string(text) + "'");
        }
        TRange r;
        double lo = 0.0;
        if (!csv::parse_double(text.substr(0, dash), lo)) {
            throw Error(ErrorKind::ParseError, "bad T range '" + std::string(text) + "'");
        }
        r.lo = static_cast<long>(lo);
        auto hi_text = text.substr(dash + 1);
        if (hi_text != "inf") {
            double hi = 0.0;
            if (!csv::parse_double(hi_text, hi)) {
                throw Error(ErrorKind::ParseError, "bad T range '" + std::string(text) + "'");
            }
            r.hi = static_cast<long>(hi);
        }
        return r;
    }
};

struct UnitRootTableEntry {
    std::string test;   ///< adf | dfgls | za
    std::string model;  ///< deterministic case, or za break model
    int level = 5;      ///< percent
    TRange range;
    double value = 0.0;
};

class UnitRootTable {
public:
    UnitRootTable() = default;
    explicit UnitRootTable(std::vector<UnitRootTableEntry> entries) : entries_(std::move(entries)) {}

    static UnitRootTable parse(std::string_view text) {
        std::vector<UnitRootTableEntry> entries;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t line_no = 0;
        bool header = false;
        while (std::getline(in, line)) {
            ++line_no;
            auto view = csv::trim(line);
            if (view.empty() || view.front() == '#') continue;
            auto f = csv::split(view);
            if (!header) {
                if (f != std::vector<std::string>{"test", "case", "level", "T_range", "value"}) {
                    throw Error(ErrorKind::ParseError, "unit-root table: bad header");
                }
                header = true;
                continue;
            }
            if (f.size() != 5) {
                throw Error(ErrorKind::ParseError,
                            "unit-root table line " + std::to_string(line_no) + ": expected 5 fields");
            }
            UnitRootTableEntry e;
            e.test = f[0];
            e.model = f[1];
            double level = 0.0;
            if (!csv::parse_double(f[2], level) || !csv::parse_double(f[4], e.value)) {
                throw Error(ErrorKind::ParseError,
                            "unit-root table line " + std::to_string(line_no) + ": bad number");
            }
            e.level = static_cast<int>(level);
            e.range = TRange::parse(f[3]);
            entries.push_back(std::move(e));
        }
        return UnitRootTable(std::move(entries));
    }

    [[nodiscard]] const std::vector<UnitRootTableEntry>& entries() const noexcept { return entries_; }

    [[nodiscard]] std::optional<double> find(std::string_view test, std::string_view model, int level,
                                             long nobs) const {
        for (const auto& e : entries_) {
            if (e.test == test && e.model == model && e.level == level && e.range.contains(nobs)) {
                return e.value;
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] double lookup(std::string_view test, std::string_view model, int level, long nobs) const {
        if (auto v = find(test, model, level, nobs)) return *v;
        throw Error(ErrorKind::MissingCriticalValue, "no " + std::string(test) + "/" + std::string(model) +
                                                         " critical value at " + std::to_string(level) +
                                                         "% for T=" + std::to_string(nobs));
    }

private:
    std::vector<UnitRootTableEntry> entries_;
};

/// Pesaran-Shin-Smith deterministic cases.
enum class BoundsCase { I = 1, II, III, IV, V };

inline std::string to_string(BoundsCase c) {
    static constexpr const char* names[] = {"I", "II", "III", "IV", "V"};
    return names[static_cast<int>(c) - 1];
}

inline BoundsCase parse_bounds_case(std::string_view text) {
    if (text == "I" || text == "1") return BoundsCase::I;
    if (text == "II" || text == "2") return BoundsCase::II;
    if (text == "III" || text == "3") return BoundsCase::III;
    if (text == "IV" || text == "4") return BoundsCase::IV;
    if (text == "V" || text == "5") return BoundsCase::V;
    throw Error(ErrorKind::ParseError, "unknown bounds case '" + std::string(text) + "'");
}

struct BoundsPair {
    double lower = 0.0;  ///< all regressors I(0)
    double upper = 0.0;  ///< all regressors I(1)
};

class BoundsTable {
public:
    BoundsTable() = default;

    static BoundsTable parse(std::string_view text) {
        BoundsTable t;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t line_no = 0;
        bool header = false;
        while (std::getline(in, line)) {
            ++line_no;
            auto view = csv::trim(line);
            if (view.empty() || view.front() == '#') continue;
            auto f = csv::split(view);
            if (!header) {
                if (f != std::vector<std::string>{"case", "k", "level", "I0_bound", "I1_bound"}) {
                    throw Error(ErrorKind::ParseError, "bounds table: bad header");
                }
                header = true;
                continue;
            }
            double k = 0.0;
            double level = 0.0;
            BoundsPair b;
            if (f.size() != 5 || !csv::parse_double(f[1], k) || !csv::parse_double(f[2], level) ||
                !csv::parse_double(f[3], b.lower) || !csv::parse_double(f[4], b.upper)) {
                throw Error(ErrorKind::ParseError, "bounds table line " + std::to_string(line_no));
            }
            t.entries_[{parse_bounds_case(f[0]), static_cast<int>(k), static_cast<int>(level)}] = b;
        }
        return t;
    }

    [[nodiscard]] std::optional<BoundsPair> find(BoundsCase c, int k, int level) const {
        auto it = entries_.find({c, k, level});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] BoundsPair lookup(BoundsCase c, int k, int level) const {
        if (auto b = find(c, k, level)) return *b;
        throw Error(ErrorKind::MissingBoundsEntry, "no bounds for case " + to_string(c) + ", k=" +
                                                       std::to_string(k) + ", level " +
                                                       std::to_string(level) + "%");
    }

    [[nodiscard]] const std::map<std::tuple<BoundsCase, int, int>, BoundsPair>& entries() const noexcept {
        return entries_;
    }

private:
    std::map<std::tuple<BoundsCase, int, int>, BoundsPair> entries_;
};

inline const UnitRootTable& default_unitroot_table() {
    static const UnitRootTable table = UnitRootTable::parse(tables::kUnitRootCriticalValuesCsv);
    return table;
}

inline const BoundsTable& default_bounds_table() {
    static const BoundsTable table = BoundsTable::parse(tables::kBoundsCriticalValuesCsv);
    return table;
}

}  // namespace tsardl
