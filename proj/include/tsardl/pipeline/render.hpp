#pragma once

// Report writers. Markdown carries the long-run and short-run sign/star tables
// plus integration and model summaries; csv and json carry the same cells with
// every numeric estimate. Numbers use %.6g so output is byte-stable.

#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsardl/error.hpp"
#include "tsardl/pipeline/run.hpp"

namespace tsardl::pipeline {

enum class ReportFormat { Markdown, Csv, Json };

inline ReportFormat parse_report_format(std::string_view text) {
    if (text == "markdown" || text == "md") return ReportFormat::Markdown;
    if (text == "csv") return ReportFormat::Csv;
    if (text == "json") return ReportFormat::Json;
    throw Error(ErrorKind::ParseError, "unknown report format '" + std::string(text) + "'", {std::string(text)});
}

inline std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace detail {

inline int kind_rank(RowKind k, bool long_run) {
    if (long_run) {
        switch (k) {
            case RowKind::Dynamic: return 0;
            case RowKind::Dummy: return 1;
            case RowKind::Constant: return 2;
            case RowKind::Trend: return 3;
            default: return 4;
        }
    }
    return static_cast<int>(k);
}

struct RowKey {
    int rank;
    std::string label;
};

/**
 * @brief Union of row labels across sections, grouped by kind. A label first
 * seen in some section goes right after the label preceding it there, or to
 * the front of its group, so each model's own row order is kept.
 */
inline std::vector<std::string> row_labels(const std::vector<const ModelSection*>& sections, bool long_run) {
    std::vector<RowKey> keys;
    auto find = [&](const std::string& label) {
        return std::find_if(keys.begin(), keys.end(), [&](const RowKey& k) { return k.label == label; });
    };
    for (const auto* s : sections) {
        int prev_rank = -1;
        std::string prev_label;
        for (const auto& r : long_run ? s->long_run : s->short_run) {
            const int rank = kind_rank(r.kind, long_run);
            if (find(r.label) == keys.end()) {
                auto pos = prev_rank == rank
                               ? find(prev_label) + 1
                               : std::find_if(keys.begin(), keys.end(), [&](const RowKey& k) { return k.rank >= rank; });
                keys.insert(pos, {rank, r.label});
            }
            prev_label = r.label;
            prev_rank = rank;
        }
    }
    std::stable_sort(keys.begin(), keys.end(), [](const RowKey& a, const RowKey& b) { return a.rank < b.rank; });
    std::vector<std::string> out;
    for (const auto& k : keys) out.push_back(k.label);
    return out;
}

inline std::string cell_of(const ModelSection& s, const std::string& label, bool long_run) {
    for (const auto& r : long_run ? s.long_run : s.short_run) {
        if (r.label == label) return r.cell;
    }
    return "";
}

inline std::vector<const ModelSection*> select(const RunReport& report, bool cointegrated_only) {
    std::vector<const ModelSection*> out;
    for (const auto& s : report.sections) {
        if (!s.ok()) continue;
        if (cointegrated_only && !s.cointegrated) continue;
        out.push_back(&s);
    }
    return out;
}

inline std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

inline std::string md_row(const std::vector<std::string>& fields) {
    std::string out = "|";
    for (const auto& f : fields) out += " " + f + " |";
    return out + "\n";
}

inline std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::string out = md_row(header);
    out += "|";
    for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& r : rows) out += md_row(r);
    return out;
}

/// variables x models grid of symbolic cells.
inline std::vector<std::vector<std::string>> cell_grid(const std::vector<const ModelSection*>& cols, bool long_run) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& label : row_labels(cols, long_run)) {
        std::vector<std::string> r{label};
        for (const auto* s : cols) r.push_back(cell_of(*s, label, long_run));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::vector<std::string> grid_header(const std::vector<const ModelSection*>& cols) {
    std::vector<std::string> h{"variable"};
    for (const auto* s : cols) h.push_back(s->model_id());
    return h;
}

inline std::string breaks_text(const ModelSection& s) {
    std::string out;
    for (const auto& b : s.breaks) {
        if (!out.empty()) out += "; ";
        out += b.name + "@" + format_date(b.date);
    }
    return out;
}

inline std::string status_text(const ModelSection& s) { return s.ok() ? "ok" : "skipped"; }

struct SummaryFields {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline SummaryFields model_summary(const RunReport& report) {
    SummaryFields out;
    out.header = {"model", "dependent", "status", "reason", "sample_start", "sample_end", "nobs", "p", "q",
                  "deterministic", "bounds_case", "k", "F", "level", "I0_bound", "I1_bound", "conclusion",
                  "alpha", "alpha_se", "breaks"};
    for (const auto& s : report.sections) {
        const auto& m = s.config;
        std::vector<std::string> r{m.model_id, m.dependent, status_text(s), s.reason};
        r.push_back(s.sample_start ? format_date(*s.sample_start) : "");
        r.push_back(s.sample_end ? format_date(*s.sample_end) : "");
        if (s.ok()) {
            const auto& b = *s.bounds;
            const auto pair = b.bounds.at(m.bounds_level);
            r.insert(r.end(), {std::to_string(s.nobs), std::to_string(s.p), std::to_string(s.q),
                               std::string(tsardl::to_string(m.deterministic)), to_string(b.bounds_case),
                               std::to_string(b.k), fmt_num(b.f_statistic), std::to_string(m.bounds_level),
                               fmt_num(pair.lower), fmt_num(pair.upper),
                               std::string(ardl::to_string(b.at(m.bounds_level))), fmt_num(s.alpha->estimate),
                               fmt_num(s.alpha->std_error)});
        } else {
            r.insert(r.end(), {"", "", "", std::string(tsardl::to_string(m.deterministic)),
                               to_string(m.effective_bounds_case()), "", "", std::to_string(m.bounds_level), "",
                               "", "", "", ""});
        }
        r.push_back(breaks_text(s));
        out.rows.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

inline std::string render_markdown(const RunReport& report) {
    const auto ok = detail::select(report, false);
    const auto coint = detail::select(report, true);
    std::ostringstream out;
    out << "# ARDL bounds-testing report\n\n";
    out << "Models: " << report.sections.size() << " (" << ok.size() << " estimated, " << report.skipped()
        << " skipped, " << coint.size() << " cointegrated)\n\n";

    out << "## Long-run coefficients\n\n";
    out << "Sign of the long-run coefficient followed by its significance: *** 1%, ** 5%, * 10%. "
           "Only models whose bounds test concludes cointegration have a column. "
           "An empty cell means the variable is absent or not significant.\n\n";
    if (coint.empty()) {
        out << "No model is cointegrated at its bounds level.\n\n";
    } else {
        out << detail::md_table(detail::grid_header(coint), detail::cell_grid(coint, true)) << "\n";
    }

    out << "## Short-run coefficients\n\n";
    out << "Sign of the significant coefficients (+, - or ± when they disagree), the number of significant "
           "lags including the contemporaneous one, and the weakest significance among them. "
           "An empty cell means the variable is absent or not significant.\n\n";
    if (ok.empty()) {
        out << "No model was estimated.\n\n";
    } else {
        out << detail::md_table(detail::grid_header(ok), detail::cell_grid(ok, false)) << "\n";
    }

    out << "## Integration order\n\n";
    std::vector<std::vector<std::string>> integ;
    for (const auto& s : report.sections) {
        for (const auto& r : s.integration) {
            integ.push_back({s.model_id(), r.variable, std::string(unitroot::to_string(r.order)),
                             fmt_num(r.level_statistic), std::to_string(r.level_lags),
                             fmt_num(r.difference_statistic), std::to_string(r.difference_lags)});
        }
    }
    out << detail::md_table({"model", "variable", "order", "level stat", "level lags", "diff stat", "diff lags"},
                            integ)
        << "\n";

    out << "## Models\n\n";
    const auto summary = detail::model_summary(report);
    out << detail::md_table(summary.header, summary.rows);
    return out.str();
}

/// File name -> contents.
inline std::map<std::string, std::string> render_csv(const RunReport& report) {
    std::map<std::string, std::string> files;
    const auto ok = detail::select(report, false);
    const auto coint = detail::select(report, true);
    auto grid = [](const std::vector<const ModelSection*>& cols, bool long_run) {
        std::string text = detail::csv_row(detail::grid_header(cols));
        for (const auto& r : detail::cell_grid(cols, long_run)) text += detail::csv_row(r);
        return text;
    };
    files["long_run.csv"] = grid(coint, true);
    files["short_run.csv"] = grid(ok, false);

    std::string est = detail::csv_row(
        {"model", "block", "row", "term", "lag", "estimate", "std_error", "t_value", "p_value", "stars", "cell"});
    for (const auto* s : ok) {
        est += detail::csv_row({s->model_id(), "adjustment", "alpha", s->alpha->name, "0", fmt_num(s->alpha->estimate),
                                fmt_num(s->alpha->std_error), fmt_num(s->alpha->t_value),
                                fmt_num(s->alpha->p_value), linreg::star_string(s->alpha->stars), ""});
        for (const auto& [block, rows] :
             {std::pair<const char*, const std::vector<SymbolicRow>*>{"long_run", &s->long_run},
              {"short_run", &s->short_run}}) {
            for (const auto& r : *rows) {
                for (std::size_t i = 0; i < r.terms.size(); ++i) {
                    const auto& t = r.terms[i];
                    est += detail::csv_row({s->model_id(), block, r.label, t.name, std::to_string(r.lags[i]),
                                            fmt_num(t.estimate), fmt_num(t.std_error), fmt_num(t.t_value),
                                            fmt_num(t.p_value), linreg::star_string(t.stars), r.cell});
                }
            }
        }
    }
    files["estimates.csv"] = est;

    std::string integ = detail::csv_row(
        {"model", "variable", "order", "level_statistic", "level_lags", "difference_statistic", "difference_lags"});
    for (const auto& s : report.sections) {
        for (const auto& r : s.integration) {
            integ += detail::csv_row({s.model_id(), r.variable, std::string(unitroot::to_string(r.order)),
                                      fmt_num(r.level_statistic), std::to_string(r.level_lags),
                                      fmt_num(r.difference_statistic), std::to_string(r.difference_lags)});
        }
    }
    files["integration.csv"] = integ;

    const auto summary = detail::model_summary(report);
    std::string models = detail::csv_row(summary.header);
    for (const auto& r : summary.rows) models += detail::csv_row(r);
    files["models.csv"] = models;
    return files;
}

inline nlohmann::ordered_json stat_json(const linreg::CoefficientStat& s) {
    return {{"name", s.name},       {"estimate", s.estimate}, {"std_error", s.std_error},
            {"t_value", s.t_value}, {"p_value", s.p_value},   {"stars", s.stars}};
}

inline nlohmann::ordered_json section_json(const ModelSection& s) {
    using nlohmann::ordered_json;
    const auto& m = s.config;
    ordered_json j;
    j["model"] = m.model_id;
    j["dependent"] = m.dependent;
    j["dynamic_regressors"] = m.dynamic_regressors;
    j["exogenous"] = m.exogenous;
    j["deterministic"] = std::string(tsardl::to_string(m.deterministic));
    j["status"] = detail::status_text(s);
    if (!s.ok()) {
        j["error"] = std::string(to_string(*s.error_kind));
        j["reason"] = s.reason;
    }
    if (s.sample_start) j["sample"] = {format_date(*s.sample_start), format_date(*s.sample_end)};
    ordered_json integ = ordered_json::array();
    for (const auto& r : s.integration) {
        integ.push_back({{"variable", r.variable},
                         {"order", std::string(unitroot::to_string(r.order))},
                         {"level_statistic", r.level_statistic},
                         {"level_lags", r.level_lags},
                         {"difference_statistic", r.difference_statistic},
                         {"difference_lags", r.difference_lags}});
    }
    j["integration"] = integ;
    ordered_json breaks = ordered_json::array();
    for (const auto& b : s.breaks) {
        ordered_json e{{"name", b.name}, {"date", format_date(b.date)}};
        if (b.za_statistic) e["za_statistic"] = *b.za_statistic;
        breaks.push_back(e);
    }
    j["breaks"] = breaks;
    if (!s.ok()) return j;

    j["nobs"] = s.nobs;
    j["p"] = s.p;
    j["q"] = s.q;
    const auto& b = *s.bounds;
    ordered_json bj{{"case", to_string(b.bounds_case)}, {"k", b.k}, {"f_statistic", b.f_statistic},
                    {"df1", b.df1},                     {"df2", b.df2}};
    ordered_json levels = ordered_json::object();
    for (const auto& [level, pair] : b.bounds) {
        levels[std::to_string(level)] = {{"I0", pair.lower},
                                         {"I1", pair.upper},
                                         {"conclusion", std::string(ardl::to_string(b.conclusion.at(level)))}};
    }
    bj["levels"] = levels;
    j["bounds"] = bj;
    j["cointegrated"] = s.cointegrated;
    j["alpha"] = stat_json(*s.alpha);
    auto rows_json = [](const std::vector<SymbolicRow>& rows) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json terms = ordered_json::array();
            for (std::size_t i = 0; i < r.terms.size(); ++i) {
                auto t = stat_json(r.terms[i]);
                t["lag"] = r.lags[i];
                terms.push_back(t);
            }
            arr.push_back({{"row", r.label}, {"cell", r.cell}, {"terms", terms}});
        }
        return arr;
    };
    if (s.cointegrated) j["long_run"] = rows_json(s.long_run);
    j["short_run"] = rows_json(s.short_run);
    return j;
}

inline std::string render_json(const RunReport& report, std::optional<std::uint64_t> seed = std::nullopt) {
    nlohmann::ordered_json j;
    if (seed) j["seed"] = *seed;
    j["models"] = nlohmann::ordered_json::array();
    for (const auto& s : report.sections) j["models"].push_back(section_json(s));
    return j.dump(2) + "\n";
}

/// Writes the requested formats into dir; returns the written paths.
inline std::vector<std::filesystem::path> write_reports(const RunReport& report, const std::filesystem::path& dir,
                                                        const std::vector<ReportFormat>& formats,
                                                        std::optional<std::uint64_t> seed = std::nullopt) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create '" + dir.string() + "': " + ec.message(), {dir.string()});
    std::vector<std::filesystem::path> written;
    auto put = [&](const std::string& name, const std::string& text) {
        const auto path = dir / name;
        std::ofstream f(path, std::ios::binary);
        f << text;
        if (!f) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'", {path.string()});
        written.push_back(path);
    };
    for (auto fmt : formats) {
        switch (fmt) {
            case ReportFormat::Markdown: put("report.md", render_markdown(report)); break;
            case ReportFormat::Csv:
                for (const auto& [name, text] : render_csv(report)) put(name, text);
                break;
            case ReportFormat::Json: put("report.json", render_json(report, seed)); break;
        }
    }
    return written;
}

}  // namespace tsardl::pipeline
