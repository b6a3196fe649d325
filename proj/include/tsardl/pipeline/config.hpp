#pragma once

// Series manifest and model configuration.
//
// Manifest: CSV with header `name,path,frequency,transform`; paths are
// relative to the manifest file.
//
// Config: `key = value` lines grouped in `[defaults]` and `[model <id>]`
// blocks; `#` starts a comment. Model blocks inherit every default.
//
//   dependent     = <series>
//   dynamic       = <series>, <series>, ...     long-run regressors
//   exogenous     = <series>, ...               short-run only
//   transform.<v> = level | log | diff
//   convert.<v>   = times(<series>)             product taken before transforms
//   case          = none | constant | constant_trend
//   p_max, q_max  = integers
//   criterion     = aic | bic
//   bounds_case   = I | II | III | IV | V
//   bounds_level  = 1 | 5 | 10
//   dummies       = none | auto_za(<intercept|trend|both>, <trim>) | explicit(<date>, ...)
//   sample        = <date>..<date>
//   unitroot_test = adf | dfgls | za
//   unitroot_case = none | constant | constant_trend
//   unitroot_lags = aic | bic | maic | fixed(k)
//   unitroot_level = 1 | 5 | 10

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tsardl/ardl.hpp"
#include "tsardl/critical_values.hpp"
#include "tsardl/csv.hpp"
#include "tsardl/deterministic.hpp"
#include "tsardl/error.hpp"
#include "tsardl/series.hpp"
#include "tsardl/unitroot.hpp"

namespace tsardl::pipeline {

struct ManifestEntry {
    std::string name;
    std::filesystem::path path;  ///< resolved against the manifest directory
    Frequency frequency = Frequency::Daily;
    Transform transform = Transform::level();
    std::string transform_text = "level";
};

struct Manifest {
    std::vector<ManifestEntry> entries;

    [[nodiscard]] const ManifestEntry* find(const std::string& name) const {
        for (const auto& e : entries) {
            if (e.name == name) return &e;
        }
        return nullptr;
    }
};

inline Transform parse_pipeline_transform(std::string_view text) {
    const auto t = parse_transform(text);
    if (t.kind == Transform::Kind::Lag) {
        throw Error(ErrorKind::ParseError, "lag transforms are not allowed on model variables");
    }
    return t;
}

inline Manifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir,
                               const std::string& origin = "<manifest>") {
    Manifest m;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        const auto view = csv::trim(line);
        if (view.empty() || view.front() == '#') continue;
        const auto f = csv::split(view);
        const std::string where = origin + ":" + std::to_string(line_no);
        if (!header) {
            if (f != std::vector<std::string>{"name", "path", "frequency", "transform"}) {
                throw Error(ErrorKind::ParseError, where + ": expected header name,path,frequency,transform");
            }
            header = true;
            continue;
        }
        if (f.size() != 4) throw Error(ErrorKind::ParseError, where + ": expected 4 fields");
        ManifestEntry e;
        e.name = f[0];
        if (e.name.empty()) throw Error(ErrorKind::ParseError, where + ": empty series name");
        if (!seen.insert(e.name).second) {
            throw Error(ErrorKind::ParseError, where + ": duplicate series '" + e.name + "'", {e.name});
        }
        e.path = base_dir / f[1];
        try {
            e.frequency = parse_frequency(f[2]);
            e.transform_text = f[3].empty() ? "level" : f[3];
            e.transform = parse_pipeline_transform(e.transform_text);
        } catch (const Error& err) {
            throw Error(ErrorKind::ParseError, where + ": " + err.what());
        }
        m.entries.push_back(std::move(e));
    }
    if (!header) throw Error(ErrorKind::ParseError, origin + ": empty manifest");
    return m;
}

inline Manifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    return parse_manifest(in, path.parent_path(), path.string());
}

struct DummyPolicy {
    enum class Kind { None, AutoZa, Explicit };
    Kind kind = Kind::None;
    unitroot::BreakModel za_model = unitroot::BreakModel::Intercept;
    double trim = 0.15;
    std::vector<Date> dates;

    [[nodiscard]] std::string to_string() const {
        switch (kind) {
            case Kind::None: return "none";
            case Kind::AutoZa: {
                char buf[64];
                std::snprintf(buf, sizeof buf, "auto_za(%s, %g)", std::string(unitroot::to_string(za_model)).c_str(),
                              trim);
                return buf;
            }
            case Kind::Explicit: {
                std::string out = "explicit(";
                for (std::size_t i = 0; i < dates.size(); ++i) out += (i ? ", " : "") + format_date(dates[i]);
                return out + ")";
            }
        }
        return "none";
    }
};

struct ModelConfig {
    std::string model_id;
    std::string dependent;
    std::vector<std::string> dynamic_regressors;
    std::vector<std::string> exogenous;
    std::map<std::string, std::string> transforms;   ///< per-variable override
    std::map<std::string, std::string> conversions;  ///< variable -> multiplier series
    DeterministicCase deterministic = DeterministicCase::Constant;
    int p_max = 4;
    int q_max = 4;
    ardl::Criterion criterion = ardl::Criterion::Bic;
    std::optional<BoundsCase> bounds_case;
    int bounds_level = 5;
    DummyPolicy dummies;
    std::optional<DateRange> sample;
    unitroot::TestConfig unitroot;
    int unitroot_level = 5;

    /// dependent, dynamic regressors, exogenous, in that order.
    [[nodiscard]] std::vector<std::string> variables() const {
        std::vector<std::string> out{dependent};
        out.insert(out.end(), dynamic_regressors.begin(), dynamic_regressors.end());
        out.insert(out.end(), exogenous.begin(), exogenous.end());
        return out;
    }

    [[nodiscard]] BoundsCase effective_bounds_case() const {
        return bounds_case.value_or(ardl::default_bounds_case(deterministic));
    }
};

struct RunConfig {
    std::vector<ModelConfig> models;
};

namespace detail {

inline std::vector<std::string> parse_list(std::string_view text) {
    std::vector<std::string> out;
    if (csv::trim(text).empty()) return out;
    for (auto& f : csv::split(text)) {
        if (f.empty()) throw Error(ErrorKind::ParseError, "empty list element");
        out.push_back(std::move(f));
    }
    return out;
}

inline int parse_int(std::string_view text) {
    double v = 0.0;
    if (!csv::parse_double(text, v) || v != std::floor(v)) {
        throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(text) + "'");
    }
    return static_cast<int>(v);
}

inline int parse_level(std::string_view text) {
    const int level = parse_int(text);
    if (level != 1 && level != 5 && level != 10) {
        throw Error(ErrorKind::ParseError, "level must be 1, 5 or 10");
    }
    return level;
}

/// `name(args)` -> (name, args); no parentheses -> (text, "").
inline std::pair<std::string, std::string> split_call(std::string_view text) {
    text = csv::trim(text);
    const auto open = text.find('(');
    if (open == std::string_view::npos) return {std::string(text), ""};
    if (text.back() != ')') throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
    return {std::string(csv::trim(text.substr(0, open))), std::string(text.substr(open + 1, text.size() - open - 2))};
}

inline DummyPolicy parse_dummies(std::string_view text) {
    const auto [name, args] = split_call(text);
    DummyPolicy d;
    if (name == "none" && args.empty()) return d;
    if (name == "auto_za") {
        d.kind = DummyPolicy::Kind::AutoZa;
        const auto a = parse_list(args);
        if (a.size() > 2) throw Error(ErrorKind::ParseError, "auto_za takes (model, trim)");
        if (!a.empty()) d.za_model = unitroot::parse_break_model(a[0]);
        if (a.size() == 2 && (!csv::parse_double(a[1], d.trim) || !(d.trim > 0.0 && d.trim < 0.5))) {
            throw Error(ErrorKind::ParseError, "auto_za trim must be in (0, 0.5)");
        }
        return d;
    }
    if (name == "explicit") {
        d.kind = DummyPolicy::Kind::Explicit;
        for (const auto& s : parse_list(args)) d.dates.push_back(parse_date(s));
        if (d.dates.empty()) throw Error(ErrorKind::ParseError, "explicit() needs at least one date");
        return d;
    }
    throw Error(ErrorKind::ParseError, "unknown dummy policy '" + std::string(text) + "'");
}

inline DateRange parse_sample(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) throw Error(ErrorKind::ParseError, "sample must be <date>..<date>");
    DateRange r{parse_date(csv::trim(text.substr(0, dots))), parse_date(csv::trim(text.substr(dots + 2)))};
    if (r.end < r.start) throw Error(ErrorKind::ParseError, "sample ends before it starts");
    return r;
}

inline void apply_key(ModelConfig& m, const std::string& key, const std::string& value) {
    if (key == "dependent") {
        m.dependent = value;
    } else if (key == "dynamic") {
        m.dynamic_regressors = parse_list(value);
    } else if (key == "exogenous") {
        m.exogenous = parse_list(value);
    } else if (key.starts_with("transform.")) {
        parse_pipeline_transform(value);
        m.transforms[key.substr(10)] = value;
    } else if (key.starts_with("convert.")) {
        const auto [name, args] = split_call(value);
        if (name != "times" || args.empty() || args.find(',') != std::string::npos) {
            throw Error(ErrorKind::ParseError, "conversion must be times(<series>)");
        }
        m.conversions[key.substr(8)] = std::string(csv::trim(args));
    } else if (key == "case") {
        m.deterministic = parse_case(value);
    } else if (key == "p_max") {
        m.p_max = parse_int(value);
    } else if (key == "q_max") {
        m.q_max = parse_int(value);
    } else if (key == "criterion") {
        m.criterion = ardl::parse_criterion(value);
    } else if (key == "bounds_case") {
        m.bounds_case = parse_bounds_case(value);
    } else if (key == "bounds_level") {
        m.bounds_level = parse_level(value);
    } else if (key == "dummies") {
        m.dummies = parse_dummies(value);
    } else if (key == "sample") {
        m.sample = parse_sample(value);
    } else if (key == "unitroot_test") {
        m.unitroot.test = unitroot::parse_test(value);
    } else if (key == "unitroot_case") {
        m.unitroot.deterministic = parse_case(value);
    } else if (key == "unitroot_lags") {
        m.unitroot.selection = unitroot::parse_lag_selection(value);
    } else if (key == "unitroot_level") {
        m.unitroot_level = parse_level(value);
    } else {
        throw Error(ErrorKind::ParseError, "unknown key '" + key + "'");
    }
}

inline void validate_model(const ModelConfig& m) {
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::ParseError, "model " + m.model_id + ": " + what, {m.model_id});
    };
    if (m.dependent.empty()) fail("missing dependent");
    if (m.dynamic_regressors.empty()) fail("needs at least one dynamic regressor");
    if (m.p_max < 1) fail("p_max must be >= 1");
    if (m.q_max < 0) fail("q_max must be >= 0");
    std::set<std::string> seen;
    for (const auto& v : m.variables()) {
        if (!seen.insert(v).second) fail("variable '" + v + "' listed twice");
    }
    if (ardl::required_case(m.effective_bounds_case()) != m.deterministic) {
        fail("bounds case " + to_string(m.effective_bounds_case()) + " does not match case " +
             std::string(to_string(m.deterministic)));
    }
    if (m.unitroot.test == unitroot::TestKind::Dfgls && m.unitroot.deterministic == DeterministicCase::None) {
        fail("dfgls needs unitroot_case constant or constant_trend");
    }
}

}  // namespace detail

/**
 * @brief Parses a run configuration.
 *
 * @throws Error(ParseError) with origin:line for syntax errors, duplicate
 *         model ids and invalid values
 */
inline RunConfig parse_config(std::istream& in, const std::string& origin = "<config>") {
    RunConfig cfg;
    ModelConfig defaults;
    ModelConfig* current = nullptr;
    bool in_defaults = false;
    std::set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = origin + ":" + std::to_string(line_no);
        auto view = line.find('#') == std::string::npos ? std::string_view(line)
                                                       : std::string_view(line).substr(0, line.find('#'));
        view = csv::trim(view);
        if (view.empty()) continue;
        try {
            if (view.front() == '[') {
                if (view.back() != ']') throw Error(ErrorKind::ParseError, "unterminated section header");
                const auto inner = csv::trim(view.substr(1, view.size() - 2));
                if (inner == "defaults") {
                    if (!cfg.models.empty()) throw Error(ErrorKind::ParseError, "[defaults] must precede models");
                    in_defaults = true;
                    current = nullptr;
                    continue;
                }
                if (!inner.starts_with("model ")) {
                    throw Error(ErrorKind::ParseError, "unknown section '" + std::string(inner) + "'");
                }
                const std::string id(csv::trim(inner.substr(6)));
                if (id.empty()) throw Error(ErrorKind::ParseError, "model id missing");
                if (!ids.insert(id).second) {
                    throw Error(ErrorKind::ParseError, "duplicate model id '" + id + "'", {id});
                }
                cfg.models.push_back(defaults);
                current = &cfg.models.back();
                current->model_id = id;
                in_defaults = false;
                continue;
            }
            const auto eq = view.find('=');
            if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected key = value");
            const std::string key(csv::trim(view.substr(0, eq)));
            const std::string value(csv::trim(view.substr(eq + 1)));
            if (in_defaults) {
                if (key == "dependent") throw Error(ErrorKind::ParseError, "dependent cannot be a default");
                detail::apply_key(defaults, key, value);
            } else if (current) {
                detail::apply_key(*current, key, value);
            } else {
                throw Error(ErrorKind::ParseError, "key outside of a section");
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ParseError) throw;
            throw Error(ErrorKind::ParseError, where + ": " + e.what(), e.subjects());
        }
    }
    for (const auto& m : cfg.models) detail::validate_model(m);
    return cfg;
}

inline RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    return parse_config(in, path.string());
}

/**
 * @brief Checks every variable a model touches against the manifest.
 *
 * @throws Error(UnknownVariable) with subjects {model_id, name}
 */
inline void resolve_variables(const RunConfig& cfg, const Manifest& manifest) {
    for (const auto& m : cfg.models) {
        auto check = [&](const std::string& name) {
            if (!manifest.find(name)) {
                throw Error(ErrorKind::UnknownVariable,
                            "model " + m.model_id + " references unknown series '" + name + "'", {m.model_id, name});
            }
        };
        for (const auto& v : m.variables()) check(v);
        for (const auto& [v, other] : m.conversions) check(other);
    }
}

struct LoadedInputs {
    Manifest manifest;
    RunConfig config;
};

inline LoadedInputs load_manifest_and_config(const std::filesystem::path& manifest_path,
                                             const std::filesystem::path& config_path) {
    LoadedInputs in{load_manifest(manifest_path), load_config(config_path)};
    resolve_variables(in.config, in.manifest);
    return in;
}

}  // namespace tsardl::pipeline
