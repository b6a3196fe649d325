#pragma once

#include <string>
#include <string_view>

#include "tsardl/error.hpp"

namespace tsardl {

/// Deterministic terms in a test or model regression.
enum class DeterministicCase { None, Constant, ConstantTrend };

inline std::string_view to_string(DeterministicCase c) {
    switch (c) {
        case DeterministicCase::None: return "none";
        case DeterministicCase::Constant: return "constant";
        case DeterministicCase::ConstantTrend: return "constant_trend";
    }
    return "none";
}

inline DeterministicCase parse_case(std::string_view text) {
    if (text == "none" || text == "n" || text == "nc") return DeterministicCase::None;
    if (text == "constant" || text == "c") return DeterministicCase::Constant;
    if (text == "constant_trend" || text == "ct") return DeterministicCase::ConstantTrend;
    throw Error(ErrorKind::ParseError, "unknown deterministic case '" + std::string(text) + "'");
}

inline bool has_constant(DeterministicCase c) { return c != DeterministicCase::None; }
inline bool has_trend(DeterministicCase c) { return c == DeterministicCase::ConstantTrend; }

}  // namespace tsardl
