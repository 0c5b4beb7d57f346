#pragma once

#include "ainf/document.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ainf {

struct CommandOptions {
    std::optional<int> length, max_r, max_rs;  // fall back to the document options
    std::string module = "diagonal";
    std::optional<std::pair<long, long>> degrees;
    std::vector<std::string> names;  // cochain names for cup
    std::uint64_t seed = 0;
    bool timing = false;
};

struct ReportRow {
    std::string object;
    long degree = 0;
    int free_rank = 0;
    std::string torsion;
    std::string verdict;
};

struct Report {
    std::vector<std::string> lines;
    std::vector<ReportRow> rows;
    int exit_code = 0;

    std::string text() const;
    std::string csv() const;
};

std::pair<long, long> parse_degree_range(const std::string& s);  // "A..B"

// validate, hh, cohomology, cup, spectral, verify
Report run_command(const std::string& name, const Structure& s, const CommandOptions& o);

}  // namespace ainf
