#include "rescoal/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "rescoal/errors.hpp"
#include "rescoal/format.hpp"

namespace rescoal {

namespace {

using Range = std::pair<int, int>;

Range pick(const SweepOptions& opt, const std::string& name, Range dflt) {
    auto it = opt.ranges.find(name);
    if (it == opt.ranges.end()) return dflt;
    if (it->second.first > it->second.second)
        throw invalid_parameter_error("empty range for '" + name + "'");
    return it->second;
}

void reject_unknown_ranges(const SweepOptions& opt,
                           const std::vector<std::string>& known,
                           const std::string& family) {
    for (const auto& [name, r] : opt.ranges)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw invalid_parameter_error("family '" + family +
                                          "' has no sweep parameter '" + name +
                                          "'");
}

// Deterministic regardless of library distribution implementations:
// raw engine output only.
std::vector<std::pair<Graph, std::string>> random_inner_graphs(
    const SweepOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<Graph, std::string>> out;
    const int max_n = std::max(1, opt.graph_max_n);
    for (int g = 0; g < opt.graph_count; ++g) {
        const int n = 1 + static_cast<int>(rng() % max_n);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) e.emplace_back(i, j);
        out.emplace_back(Graph(n, std::move(e)), "rand" + std::to_string(g));
    }
    return out;
}

} // namespace

std::vector<FamilySpec> enumerate_specs(const std::string& family,
                                        const SweepOptions& opt) {
    std::vector<FamilySpec> specs;
    auto keep_if_valid = [&specs](FamilySpec s) {
        try {
            validate(s);
        } catch (const invalid_parameter_error&) {
            return;
        }
        specs.push_back(std::move(s));
    };

    if (family == "kcoal") {
        reject_unknown_ranges(opt, {"p1", "p2", "k"}, family);
        auto [p1lo, p1hi] = pick(opt, "p1", {1, 8});
        auto [p2lo, p2hi] = pick(opt, "p2", {1, 8});
        auto [klo, khi] = pick(opt, "k", {1, 8});
        for (int p1 = p1lo; p1 <= p1hi; ++p1)
            for (int p2 = p2lo; p2 <= p2hi; ++p2)
                for (int k = klo; k <= khi; ++k)
                    keep_if_valid(KCoalComplete{p1, p2, k});
    } else if (family == "windmill") {
        reject_unknown_ranges(opt, {"n", "t"}, family);
        auto [nlo, nhi] = pick(opt, "n", {2, 5});
        auto [tlo, thi] = pick(opt, "t", {2, 4});
        for (int n = nlo; n <= nhi; ++n)
            for (int t = tlo; t <= thi; ++t) keep_if_valid(Windmill{n, t});
    } else if (family == "rose3") {
        reject_unknown_ranges(opt, {}, family);
        specs.push_back(Rose3{});
    } else if (family == "pineapple") {
        reject_unknown_ranges(opt, {"p", "q"}, family);
        auto [plo, phi] = pick(opt, "p", {2, 6});
        auto [qlo, qhi] = pick(opt, "q", {1, 5});
        for (int p = plo; p <= phi; ++p)
            for (int q = qlo; q <= qhi; ++q) keep_if_valid(Pineapple{p, q});
    } else if (family == "kite") {
        reject_unknown_ranges(opt, {"p"}, family);
        auto [plo, phi] = pick(opt, "p", {2, 8});
        for (int p = plo; p <= phi; ++p) keep_if_valid(Kite{p});
    } else if (family == "dandelion") {
        reject_unknown_ranges(opt, {"n", "l"}, family);
        auto [nlo, nhi] = pick(opt, "n", {3, 10});
        auto [llo, lhi] = pick(opt, "l", {2, 1 << 20});
        for (int n = nlo; n <= nhi; ++n)
            for (int l = llo; l <= std::min(lhi, n - 1); ++l)
                keep_if_valid(Dandelion{n, l});
    } else if (family == "bipartite_star") {
        reject_unknown_ranges(opt, {"p", "q", "n"}, family);
        auto [plo, phi] = pick(opt, "p", {1, 4});
        auto [qlo, qhi] = pick(opt, "q", {1, 4});
        auto [nlo, nhi] = pick(opt, "n", {1, 4});
        for (int p = plo; p <= phi; ++p)
            for (int q = qlo; q <= qhi; ++q)
                for (int n = nlo; n <= nhi; ++n)
                    keep_if_valid(BipartiteStar{p, q, n});
    } else if (family == "bipartite_complete") {
        reject_unknown_ranges(opt, {"p", "q", "n"}, family);
        auto [plo, phi] = pick(opt, "p", {1, 4});
        auto [qlo, qhi] = pick(opt, "q", {1, 4});
        auto [nlo, nhi] = pick(opt, "n", {2, 4});
        for (int p = plo; p <= phi; ++p)
            for (int q = qlo; q <= qhi; ++q)
                for (int n = std::max(2, nlo); n <= nhi; ++n)
                    keep_if_valid(BipartiteComplete{p, q, n});
    } else if (family == "joincoal") {
        reject_unknown_ranges(opt, {"p", "k"}, family);
        auto [plo, phi] = pick(opt, "p", {1, 4});
        auto [klo, khi] = pick(opt, "k", {1, 3});
        const auto graphs = random_inner_graphs(opt);
        for (int p = plo; p <= phi; ++p)
            for (int k = klo; k <= khi; ++k) {
                if (k > p) continue;
                for (const auto& [g, desc] : graphs)
                    keep_if_valid(JoinCoal{p, k, g, desc});
            }
    } else if (family == "starcoal") {
        reject_unknown_ranges(opt, {"p"}, family);
        auto [plo, phi] = pick(opt, "p", {2, 5});
        const auto graphs = random_inner_graphs(opt);
        for (int p = plo; p <= phi; ++p)
            for (const auto& [g, desc] : graphs)
                keep_if_valid(StarJoinCoal{p, g, desc});
    } else {
        throw parse_error("unknown family '" + family + "'");
    }
    return specs;
}

std::vector<std::string> verifiable_indices(const std::string& family) {
    std::vector<std::string> out{"resistance"};
    if (family == "kcoal" || family == "kite") {
        out.insert(out.end(), {"kirchhoff", "kemeny", "additive_dk",
                               "multiplicative_dk", "mixed_dk"});
    } else if (family == "windmill" || family == "rose3" ||
               family == "pineapple" || family == "dandelion") {
        out.insert(out.end(), {"kirchhoff", "kemeny"});
    }
    return out;
}

namespace {

struct Job {
    FamilySpec spec;
    std::string index; // "resistance" or an index name
};

// One row, or nothing when the printed formula is undefined at the tuple.
std::optional<ReportRow> eval_job(const Job& job, double tol,
                                  std::vector<std::string>& notes) {
    ReportRow row;
    row.family = family_name(job.spec);
    row.params = params_string(job.spec);
    row.index = job.index;
    if (job.index == "resistance") {
        const ResistanceMatrix closed = closed_form(job.spec);
        const ResistanceMatrix oracle = resistance_oracle(build_family(job.spec));
        const Deviation dev = max_deviation(closed, oracle);
        row.formula_value = closed(dev.i, dev.j);
        row.oracle_value = oracle(dev.i, dev.j);
        row.abs_diff = dev.value;
    } else {
        try {
            const VerificationReport rep =
                verify(parse_index(job.index), job.spec, tol);
            row.formula_value = rep.formula_value;
            row.oracle_value = rep.oracle_value;
            row.abs_diff = rep.abs_diff;
        } catch (const formula_undefined_error&) {
            notes.push_back("skipped " + row.family + "[" + row.params + "] " +
                            row.index + ": printed formula undefined");
            return std::nullopt;
        }
    }
    row.rel_diff = row.abs_diff / std::max(1.0, std::abs(row.oracle_value));
    row.match = row.abs_diff <= tol * std::max(1.0, std::abs(row.oracle_value));
    return row;
}

} // namespace

SweepResult run_verify(const std::string& family,
                       const std::string& index_or_all,
                       const SweepOptions& opt) {
    const auto supported = verifiable_indices(family);
    std::vector<std::string> indices;
    if (index_or_all == "all") {
        indices = supported;
    } else {
        if (std::find(supported.begin(), supported.end(), index_or_all) ==
            supported.end())
            throw unsupported_pair_error("no printed formula for (" +
                                         index_or_all + ", " + family + ")");
        indices.push_back(index_or_all);
    }

    std::vector<Job> jobs;
    for (const auto& spec : enumerate_specs(family, opt))
        for (const auto& idx : indices) jobs.push_back({spec, idx});

    // Each slot is written by exactly one worker; order is the job order.
    std::vector<std::optional<ReportRow>> slots(jobs.size());
    std::vector<std::vector<std::string>> notes(jobs.size());
    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                slots[i] = eval_job(jobs[i], opt.tol, notes[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int nthreads =
        std::max(1, std::min<int>(opt.jobs, static_cast<int>(jobs.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    SweepResult result;
    for (size_t i = 0; i < jobs.size(); ++i) {
        for (auto& n : notes[i]) result.notes.push_back(std::move(n));
        if (!slots[i]) {
            ++result.skipped_undefined;
            continue;
        }
        (slots[i]->match ? result.matches : result.mismatches) += 1;
        result.rows.push_back(std::move(*slots[i]));
    }
    return result;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

} // namespace

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "family,params,index,formula_value,oracle_value,abs_diff,rel_diff,"
          "verdict\n";
    for (const auto& r : rows)
        os << r.family << ',' << r.params << ',' << r.index << ','
           << fmt_report(r.formula_value) << ',' << fmt_report(r.oracle_value)
           << ',' << fmt_report(r.abs_diff) << ',' << fmt_report(r.rel_diff)
           << ',' << (r.match ? "match" : "mismatch") << '\n';
    return os.str();
}

std::string report_json(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << "  {\"family\": \"" << json_escape(r.family)
           << "\", \"params\": \"" << json_escape(r.params)
           << "\", \"index\": \"" << json_escape(r.index)
           << "\", \"formula_value\": " << fmt_report(r.formula_value)
           << ", \"oracle_value\": " << fmt_report(r.oracle_value)
           << ", \"abs_diff\": " << fmt_report(r.abs_diff)
           << ", \"rel_diff\": " << fmt_report(r.rel_diff) << ", \"verdict\": \""
           << (r.match ? "match" : "mismatch") << "\"}"
           << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

std::string report_text(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << std::left << std::setw(19) << r.family << ' ' << std::setw(34)
           << r.params << ' ' << std::setw(18) << r.index << ' '
           << std::setw(18) << fmt_report(r.formula_value) << ' '
           << std::setw(18) << fmt_report(r.oracle_value) << ' '
           << std::setw(13) << fmt_report(r.abs_diff) << ' '
           << (r.match ? "match" : "mismatch") << '\n';
    }
    return os.str();
}

} // namespace rescoal
