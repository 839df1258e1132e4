#include <rankmw/cli.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace rankmw;

namespace {

Json c1_job(const std::string& command) {
    Json j;
    j["command"] = command;
    j["field"] = Json{{"p", 2}, {"s", 1}, {"m", 2}};
    j["generator"] = Json::array({Json::array({"1", "a", "1"}), Json::array({"1", "a", "0"})});
    return j;
}

struct RunResult {
    int code;
    Json report;
    std::string err;
};

RunResult run(const Json& job) {
    std::ostringstream out, err;
    int code = run_job(job_from_json(job), out, err);
    RunResult r{code, Json(), err.str()};
    if (!out.str().empty()) r.report = Json::parse(out.str());
    return r;
}

}  // namespace

TEST(FieldJson, RoundTripAndDeterministicSelection) {
    Json j{{"p", 2}, {"s", 1}, {"m", 4}};
    TowerPtr t = tower_from_json(j);
    Json resolved = field_to_json(*t);
    EXPECT_EQ(resolved["modulus_qm"], Json::array({1, 1, 0, 0, 1}));  // z^4 + z + 1
    EXPECT_EQ(resolved["primitive_qm"], 2);
    // the resolved description reconstructs the identical tower
    TowerPtr t2 = tower_from_json(resolved);
    EXPECT_EQ(t2->modulus_qm(), t->modulus_qm());
    EXPECT_EQ(t2->primitive_qm(), t->primitive_qm());

    Json withmod{{"p", 2}, {"s", 1}, {"m", 4}, {"modulus_qm", Json::array({1, 1, 0, 0, 1})}};
    EXPECT_EQ(tower_from_json(withmod)->modulus_qm(), t->modulus_qm());
    Json badmod{{"p", 2}, {"s", 1}, {"m", 2}, {"modulus_qm", Json::array({1, 0, 1})}};
    EXPECT_THROW(tower_from_json(badmod), std::invalid_argument);
}

TEST(GeneratorJson, EntryForms) {
    TowerPtr t = tower_from_json(Json{{"p", 2}, {"s", 1}, {"m", 2}});
    EXPECT_EQ(parse_entry(*t, Json("0")), 0u);
    EXPECT_EQ(parse_entry(*t, Json("1")), 1u);
    EXPECT_EQ(parse_entry(*t, Json("a")), t->primitive_qm());
    EXPECT_EQ(parse_entry(*t, Json("a^2")), t->ext_pow(t->primitive_qm(), 2));
    EXPECT_EQ(parse_entry(*t, Json("-a")), t->neg(t->primitive_qm()));
    EXPECT_EQ(parse_entry(*t, Json(3)), 3u);
    EXPECT_EQ(parse_entry(*t, Json::array({1, 1})), t->from_ext_coords(std::vector<std::uint32_t>{1, 1}));
    EXPECT_THROW(parse_entry(*t, Json("b^2")), std::invalid_argument);
    EXPECT_THROW(parse_entry(*t, Json(7)), std::invalid_argument);  // code out of range

    Matrix g = generator_from_json(*t, Json::array({Json::array({"1", "a", "1"})}));
    EXPECT_EQ(g.rows(), 1u);
    EXPECT_EQ(g(0, 1), t->primitive_qm());
    // round trip through the coordinate-list form
    Matrix g2 = generator_from_json(*t, generator_to_json(*t, g));
    EXPECT_TRUE(g == g2);
}

TEST(HomPolyJson, DecimalStringRoundTrip) {
    HomPoly p(std::vector<BigInt>{1, 0, 105, 7350, 58080, 0, 0, 0});
    Json j = hompoly_to_json(p);
    EXPECT_EQ(j["degree"], 7);
    EXPECT_EQ(j["coeffs"][2], "105");
    EXPECT_EQ(hompoly_from_json(j), p);
    // negative and huge coefficients survive the round trip
    HomPoly big(std::vector<BigInt>{BigInt("123456789012345678901234567890"), BigInt(-5)});
    EXPECT_EQ(hompoly_from_json(hompoly_to_json(big)), big);
}

TEST(RunJob, EnumerateC1) {
    Json job = c1_job("enumerate");
    job["metric"] = "both";
    RunResult r = run(job);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["enumerators"]["rank"]["coeffs"],
              Json::array({"1", "3", "12", "0"}));
    EXPECT_EQ(r.report["enumerators"]["hamming"]["coeffs"],
              Json::array({"1", "3", "3", "9"}));
}

TEST(RunJob, EnumerateZeroCode) {
    Json job;
    job["command"] = "enumerate";
    job["field"] = Json{{"p", 2}, {"s", 1}, {"m", 2}};
    job["generator"] = Json::array();
    RunResult r = run(job);
    // an empty generator has no columns; n = 0 and the enumerator is x^0
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["enumerators"]["rank"]["coeffs"], Json::array({"1"}));
}

TEST(RunJob, MacWilliamsC1ReportsKernelCrossCheck) {
    RunResult r = run(c1_job("macwilliams"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["input_enumerator"]["coeffs"], Json::array({"1", "3", "12", "0"}));
    EXPECT_EQ(r.report["output_enumerator"]["coeffs"], Json::array({"1", "0", "3", "0"}));
    EXPECT_EQ(r.report["kernel_form_matches"], true);
    EXPECT_EQ(r.report["params"]["k"], 2);
}

TEST(RunJob, MacWilliamsHammingMetric) {
    Json job = c1_job("macwilliams");
    job["metric"] = "hamming";
    RunResult r = run(job);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["input_enumerator"]["coeffs"], Json::array({"1", "3", "3", "9"}));
    EXPECT_EQ(r.report["output_enumerator"]["coeffs"], Json::array({"1", "0", "3", "0"}));
    EXPECT_FALSE(r.report.contains("kernel_form_matches"));
}

TEST(RunJob, DualReportsGeneratorAndEnumerator) {
    RunResult r = run(c1_job("dual"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["dual"]["k"], 1);
    EXPECT_EQ(r.report["dual_enumerators"]["rank"]["coeffs"], Json::array({"1", "0", "3", "0"}));
}

TEST(RunJob, MomentsTable) {
    RunResult r = run(c1_job("moments"));
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(r.report["moments"].size(), 4u);
    EXPECT_EQ(r.report["moments"][0]["lhs"], "16");
    EXPECT_EQ(r.report["moments"][3]["lhs"], "1");
    EXPECT_EQ(r.report["all_equal"], true);
    Json job = c1_job("moments");
    job["options"] = Json{{"nu", 1}};
    RunResult single = run(job);
    ASSERT_EQ(single.code, 0);
    ASSERT_EQ(single.report["moments"].size(), 1u);
    EXPECT_EQ(single.report["moments"][0]["lhs"], "28");
}

TEST(RunJob, MrdFromParameters) {
    Json job;
    job["command"] = "mrd";
    job["field"] = Json{{"p", 2}, {"s", 1}, {"m", 4}};
    job["options"] = Json{{"n", 4}, {"k", 2}};
    RunResult r = run(job);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["enumerator"]["coeffs"], Json::array({"1", "0", "0", "225", "30"}));
}

TEST(RunJob, VerifyC1PassesAllChecks) {
    RunResult r = run(c1_job("verify"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["pass"], true);
    for (const auto& check : r.report["checks"]) EXPECT_NE(check["status"], "fail");
}

TEST(RunJob, ExitCodes) {
    // parse error: generator with dependent rows
    Json bad = c1_job("enumerate");
    bad["generator"] = Json::array({Json::array({"1", "0"}), Json::array({"1", "0"})});
    EXPECT_EQ(run(bad).code, 2);
    // unknown command
    Json unk = c1_job("frobnicate");
    EXPECT_EQ(run(unk).code, 2);
    // guard exceeded
    Json guarded = c1_job("enumerate");
    guarded["options"] = Json{{"guard", 3}};
    EXPECT_EQ(run(guarded).code, 3);
    // missing field
    Json nofield;
    nofield["command"] = "enumerate";
    EXPECT_EQ(run(nofield).code, 2);
}

TEST(RunJob, DeterministicByteIdenticalReports) {
    Json job = c1_job("verify");
    std::ostringstream out1, out2, err;
    run_job(job_from_json(job), out1, err);
    run_job(job_from_json(job), out2, err);
    EXPECT_EQ(out1.str(), out2.str());
    EXPECT_FALSE(out1.str().empty());
}

TEST(RunJob, WorkersOptionKeepsResultsIdentical) {
    Json job1 = c1_job("enumerate");
    Json job4 = c1_job("enumerate");
    job4["options"] = Json{{"workers", 4}};
    EXPECT_EQ(run(job1).report, run(job4).report);
}

TEST(RunJob, TextFormatIsLineOriented) {
    Json job = c1_job("enumerate");
    job["options"] = Json{{"format", "text"}};
    std::ostringstream out, err;
    ASSERT_EQ(run_job(job_from_json(job), out, err), 0);
    EXPECT_NE(out.str().find("enumerators.rank.coeffs"), std::string::npos);
}
