// Deterministic number formatting shared by every emitter. Reports are
// required to be byte-identical across runs and thread counts, so all float
// printing funnels through here.
#pragma once

#include <cstdio>
#include <string>

namespace rescoal {

// %.*g with negative-zero normalized away. 12 significant digits for
// CSV/JSON report fields, 17 for lossless matrix dumps.
inline std::string fmt_g(double v, int digits) {
    if (v == 0.0) v = 0.0; // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

inline std::string fmt_report(double v) { return fmt_g(v, 12); }
inline std::string fmt_dump(double v) { return fmt_g(v, 17); }

} // namespace rescoal
