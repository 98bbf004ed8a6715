#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "rescoal/errors.hpp"
#include "rescoal/family.hpp"
#include "rescoal/retable.hpp"
#include "rescoal/sweep.hpp"

using namespace rescoal;

TEST_CASE("enumerate_specs defaults and overrides") {
    SweepOptions opt;
    // windmill defaults: n in [2,5], t in [2,4] -> 12 tuples
    CHECK(enumerate_specs("windmill", opt).size() == 12);
    CHECK(enumerate_specs("rose3", opt).size() == 1);

    // dandelion defaults: n in [3,10], l in [2, n-1] -> sum over n of (n-2)
    std::size_t expect = 0;
    for (int n = 3; n <= 10; ++n) expect += std::size_t(n - 2);
    CHECK(enumerate_specs("dandelion", opt).size() == expect);

    // kcoal defaults: p1,p2,k in [1,8] filtered by validity
    std::size_t kc = 0;
    for (int p1 = 1; p1 <= 8; ++p1)
        for (int p2 = 1; p2 <= 8; ++p2)
            for (int k = 1; k <= 8; ++k)
                if (k <= std::min(p1, p2) && p1 + p2 - k >= 2) ++kc;
    CHECK(enumerate_specs("kcoal", opt).size() == kc);

    SweepOptions narrow;
    narrow.ranges["p1"] = {3, 3};
    narrow.ranges["p2"] = {2, 3};
    narrow.ranges["k"] = {1, 1};
    auto specs = enumerate_specs("kcoal", narrow);
    CHECK(specs.size() == 2);
    CHECK(params_string(specs[0]) == "p1=3;p2=2;k=1");
    CHECK(params_string(specs[1]) == "p1=3;p2=3;k=1");

    SweepOptions graphs;
    graphs.graph_count = 5;
    graphs.ranges["p"] = {2, 3};
    // joincoal: k in [1,3] clipped to k <= p, times 5 graphs
    std::size_t jc = enumerate_specs("joincoal", graphs).size();
    CHECK(jc == (2 + 3) * 5);
    CHECK(enumerate_specs("starcoal", graphs).size() == 2 * 5);

    SweepOptions bad;
    bad.ranges["zap"] = {1, 2};
    CHECK_THROWS_AS(enumerate_specs("windmill", bad), invalid_parameter_error);
    CHECK_THROWS_AS(enumerate_specs("nope", opt), parse_error);

    SweepOptions empty;
    empty.ranges["n"] = {5, 2};
    CHECK_THROWS_AS(enumerate_specs("windmill", empty),
                    invalid_parameter_error);
}

TEST_CASE("verifiable_indices") {
    auto kc = verifiable_indices("kcoal");
    CHECK(kc.size() == 6); // resistance + five indices
    CHECK(kc[0] == "resistance");
    CHECK(std::count(kc.begin(), kc.end(), "mixed_dk") == 1);

    auto wm = verifiable_indices("windmill");
    CHECK(wm == std::vector<std::string>{"resistance", "kirchhoff", "kemeny"});

    CHECK(verifiable_indices("bipartite_star") ==
          std::vector<std::string>{"resistance"});
    CHECK(verifiable_indices("joincoal") ==
          std::vector<std::string>{"resistance"});
}

TEST_CASE("run_verify outcomes") {
    SweepOptions opt;

    SweepResult wm = run_verify("windmill", "kirchhoff", opt);
    CHECK(wm.rows.size() == 12);
    CHECK(wm.matches == 12);
    CHECK(wm.mismatches == 0);
    for (const auto& row : wm.rows) {
        CHECK(row.family == "windmill");
        CHECK(row.index == "kirchhoff");
        CHECK(row.match);
    }

    // the pineapple index statements do not describe its resistance matrix
    SweepOptions small;
    small.ranges["p"] = {2, 4};
    small.ranges["q"] = {1, 3};
    SweepResult pa = run_verify("pineapple", "kirchhoff", small);
    CHECK(pa.rows.size() == 9);
    CHECK(pa.matches == 0);
    CHECK(pa.mismatches == 9);

    SweepOptions kcr;
    kcr.ranges["p1"] = {1, 5};
    kcr.ranges["p2"] = {1, 5};
    kcr.ranges["k"] = {1, 5};
    SweepResult kc = run_verify("kcoal", "resistance", kcr);
    CHECK(kc.mismatches == 0);
    CHECK(kc.matches == int(kc.rows.size()));

    SweepOptions jopt;
    jopt.graph_count = 4;
    jopt.graph_max_n = 5;
    jopt.ranges["p"] = {1, 3};
    jopt.ranges["k"] = {1, 2};
    SweepResult jc = run_verify("joincoal", "resistance", jopt);
    CHECK(jc.mismatches == 0);
    CHECK(jc.rows.size() > 0);
    bool saw_gconn = false;
    for (const auto& row : jc.rows)
        if (row.params.find("gconn=") != std::string::npos) saw_gconn = true;
    CHECK(saw_gconn);

    // kcoal kirchhoff formula divides by zero whenever p2 == k
    SweepResult kk = run_verify("kcoal", "kirchhoff", kcr);
    CHECK(kk.skipped_undefined > 0);
    CHECK(!kk.notes.empty());
    CHECK(kk.notes.front().find("undefined") != std::string::npos);
    CHECK(int(kk.rows.size()) == kk.matches + kk.mismatches);

    CHECK_THROWS_AS(run_verify("windmill", "mixed_dk", opt),
                    unsupported_pair_error);
}

TEST_CASE("reports are deterministic across parallelism") {
    SweepOptions seq;
    seq.ranges["p1"] = {1, 6};
    seq.ranges["p2"] = {1, 6};
    seq.ranges["k"] = {1, 6};
    SweepOptions par = seq;
    par.jobs = 4;

    std::string a = report_csv(run_verify("kcoal", "all", seq).rows);
    std::string b = report_csv(run_verify("kcoal", "all", par).rows);
    CHECK(a == b);

    SweepOptions jseq;
    jseq.graph_count = 6;
    jseq.ranges["p"] = {1, 2};
    jseq.ranges["k"] = {1, 2};
    SweepOptions jpar = jseq;
    jpar.jobs = 3;
    CHECK(report_csv(run_verify("joincoal", "resistance", jseq).rows) ==
          report_csv(run_verify("joincoal", "resistance", jpar).rows));
}

TEST_CASE("report rendering") {
    SweepOptions opt;
    opt.ranges["n"] = {2, 3};
    opt.ranges["t"] = {2, 2};
    SweepResult res = run_verify("windmill", "kirchhoff", opt);

    std::string csv = report_csv(res.rows);
    CHECK(csv.rfind("family,params,index,formula_value,oracle_value,abs_diff,"
                    "rel_diff,verdict\n",
                    0) == 0);
    CHECK(csv.find("windmill,n=2;t=2,kirchhoff,") != std::string::npos);
    CHECK(csv.find(",match\n") != std::string::npos);

    auto parsed = nlohmann::json::parse(report_json(res.rows));
    CHECK(parsed.is_array());
    CHECK(parsed.size() == res.rows.size());
    CHECK(parsed[0]["family"] == "windmill");
    CHECK(parsed[0]["index"] == "kirchhoff");
    CHECK(parsed[0]["verdict"] == "match");
    CHECK(parsed[0]["formula_value"].is_number());

    std::string text = report_text(res.rows);
    CHECK(text.find("windmill") != std::string::npos);
    CHECK(text.find("match") != std::string::npos);
}

TEST_CASE("resistance energy table") {
    auto rows = compute_retable();
    REQUIRE(rows.size() == 46);

    CHECK(rows[0].no == 1);
    CHECK(rows[0].p1 == 3);
    CHECK(rows[0].p2 == 2);
    CHECK(rows[0].k == 1);
    CHECK(rows[0].re_published == doctest::Approx(6.21).epsilon(1e-12));
    CHECK(rows[0].re_computed == doctest::Approx(6.567833775330682).epsilon(1e-9));
    CHECK(rows[0].diff ==
          doctest::Approx(rows[0].re_computed - rows[0].re_published)
              .epsilon(1e-12));

    CHECK(rows[14].p1 == 5);
    CHECK(rows[14].p2 == 5);
    CHECK(rows[14].k == 1);
    CHECK(rows[14].re_computed ==
          doctest::Approx(9.347726750741192).epsilon(1e-9));

    CHECK(rows[17].p1 == 2);
    CHECK(rows[17].p2 == 2);
    CHECK(rows[17].k == 2);
    CHECK(rows[17].re_published == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rows[17].re_computed == doctest::Approx(2.0).epsilon(1e-9));

    std::string csv = retable_csv(rows);
    CHECK(csv.rfind("no,p1,p2,k,re_published,re_computed,diff\n", 0) == 0);

    auto parsed = nlohmann::json::parse(retable_json(rows));
    CHECK(parsed.is_array());
    CHECK(parsed.size() == 46);
    CHECK(parsed[0]["no"] == 1);
    CHECK(parsed[17]["re_published"] == doctest::Approx(4.0));
}
