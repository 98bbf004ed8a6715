// The published resistance-energy table for K_{p1} o_k K_{p2}, carried
// verbatim as program data, next to values recomputed by eigensolve of the
// closed-form resistance matrix. The published column is a comparison
// column only; several of its entries are not reproducible from the
// closed forms (see run output), so re_computed is authoritative here.
#pragma once

#include <string>
#include <vector>

namespace rescoal {

struct RetableRow {
    int no = 0;
    int p1 = 0, p2 = 0, k = 0;
    double re_published = 0.0;
    double re_computed = 0.0;
    double diff = 0.0; // re_computed - re_published
};

// All 46 rows, recomputed deterministically.
std::vector<RetableRow> compute_retable();

std::string retable_csv(const std::vector<RetableRow>& rows);
std::string retable_json(const std::vector<RetableRow>& rows);
std::string retable_text(const std::vector<RetableRow>& rows);

} // namespace rescoal
