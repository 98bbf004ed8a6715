// Verification sweeps over family parameter ranges, with deterministic
// parallel evaluation and CSV/JSON/text report rendering. Row order is the
// enumeration order, independent of the worker count, so reports are
// byte-identical across parallelism degrees.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rescoal/indices.hpp"

namespace rescoal {

struct SweepOptions {
    // Inclusive per-parameter overrides of the family's default ranges.
    std::map<std::string, std::pair<int, int>> ranges;
    double tol = 1e-9;
    int jobs = 1;
    // Random inner graphs for joincoal/starcoal sweeps; generated up front
    // from the seed so --jobs cannot influence them.
    int graph_count = 20;
    int graph_max_n = 8;
    std::uint64_t seed = 11139;
};

struct ReportRow {
    std::string family;
    std::string params;
    std::string index; // an index name, or "resistance" for matrix rows
    double formula_value = 0.0;
    double oracle_value = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    bool match = false;
};

struct SweepResult {
    std::vector<ReportRow> rows;
    int matches = 0;
    int mismatches = 0;
    int skipped_undefined = 0; // printed formula divides by zero there
    std::vector<std::string> notes;
};

// All valid parameter tuples of the family within the (default or
// overridden) ranges, in a fixed deterministic order.
std::vector<FamilySpec> enumerate_specs(const std::string& family,
                                        const SweepOptions& opt);

// Comparisons available for a family: always "resistance" (closed form vs
// oracle, scalarized at the max-deviation entry), plus any index with a
// printed closed form.
std::vector<std::string> verifiable_indices(const std::string& family);

// index_or_all: one name from verifiable_indices, or "all".
SweepResult run_verify(const std::string& family,
                       const std::string& index_or_all,
                       const SweepOptions& opt);

std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);
std::string report_text(const std::vector<ReportRow>& rows);

} // namespace rescoal
