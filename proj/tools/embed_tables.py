#!/usr/bin/env python3
"""Writes include/tsardl/embedded_tables.hpp from the CSV files in data/."""

import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent

TEMPLATE = """#pragma once

// Embedded copies of data/unitroot_critical_values.csv and
// data/bounds_critical_values.csv. tests/test_series.cpp checks that
// the two stay byte-identical. Regenerate with tools/embed_tables.py.

#include <string_view>

namespace tsardl::tables {{

inline constexpr std::string_view kUnitRootCriticalValuesCsv = R"CSV({unitroot})CSV";

inline constexpr std::string_view kBoundsCriticalValuesCsv = R"CSV({bounds})CSV";

}}  // namespace tsardl::tables
"""


def main():
    data = ROOT / "data"
    text = TEMPLATE.format(
        unitroot=(data / "unitroot_critical_values.csv").read_text(),
        bounds=(data / "bounds_critical_values.csv").read_text(),
    )
    (ROOT / "include" / "tsardl" / "embedded_tables.hpp").write_text(text)


if __name__ == "__main__":
    main()
