#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "dualmod/report_json.hpp"

using namespace dualmod;
using namespace dualmod::cli;
using json = nlohmann::json;

namespace {

struct Invocation {
    int code = 0;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "dualmod");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Invocation r;
    r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json invoke_json(std::vector<std::string> args) {
    args.push_back("--json");
    const Invocation r = invoke(std::move(args));
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, PartitionsExamples) {
    const auto r = cmd_partitions(13, "benson");
    EXPECT_EQ(r.status, ReportStatus::Ok);
    const auto& rows = r.payload["rows"];
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(partition_from_json(rows[0]["lambda"]), Partition({7, 6}));
    EXPECT_EQ(rows[0]["verdict"], "self-dual-pair");
    EXPECT_EQ(rows[1]["verdict"], "dual-pair");
    EXPECT_EQ(rows[2]["verdict"], "dual-pair");
    EXPECT_EQ(partition_from_json(rows[2]["lambda"]), Partition({5, 4, 3, 1}));

    const auto zero = cmd_partitions(0, "strict");
    ASSERT_EQ(zero.payload["rows"].size(), 1u);
    EXPECT_EQ(partition_from_json(zero.payload["rows"][0]["lambda"]), Partition());

    const auto five = cmd_partitions(5, "strict-odd");
    ASSERT_EQ(five.payload["rows"].size(), 1u);
    EXPECT_EQ(partition_from_json(five.payload["rows"][0]["lambda"]), Partition({5}));
}

TEST(Cli, PartitionsBadFilterIsErrorWithUsage) {
    const auto r = cmd_partitions(5, "fancy");
    EXPECT_EQ(r.status, ReportStatus::Error);
    EXPECT_NE(r.text.find("usage:"), std::string::npos);
    EXPECT_NE(exit_code(r), 0);
    const Invocation bad_run = invoke({"partitions", "5", "--filter", "fancy"});
    EXPECT_NE(bad_run.code, 0);
}

TEST(Cli, BressoudExamples) {
    const auto fwd = cmd_bressoud("9,3,1", false);
    EXPECT_EQ(fwd.status, ReportStatus::Ok);
    EXPECT_EQ(partition_from_json(fwd.payload["chain"]["lambda"]), Partition({5, 4, 3, 1}));
    const auto inv = cmd_bressoud("7,6", true);
    EXPECT_EQ(partition_from_json(inv.payload["chain"]["mu"]), Partition({13}));
    const auto one = cmd_bressoud("1", false);
    EXPECT_EQ(partition_from_json(one.payload["chain"]["lambda"]), Partition({1}));
    const auto bad = cmd_bressoud("4,1", false);
    EXPECT_EQ(bad.status, ReportStatus::Error);
    EXPECT_NE(bad.text.find("even part"), std::string::npos);
    const auto repeated = cmd_bressoud("3,3", false);
    EXPECT_EQ(repeated.status, ReportStatus::Error);
    EXPECT_NE(repeated.text.find("not strict"), std::string::npos);
    EXPECT_EQ(cmd_bressoud("x", false).status, ReportStatus::Error);
}

TEST(Cli, BensonAndClasses) {
    const auto b = cmd_benson(13);
    EXPECT_EQ(b.payload["count"], 3);
    EXPECT_EQ(partition_from_json(b.payload["rows"][2]["mu"]), Partition({9, 3, 1}));
    const auto c = cmd_classes(13);
    EXPECT_EQ(c.status, ReportStatus::Ok);
    EXPECT_NE(c.text.find("census ok"), std::string::npos);
}

TEST(Cli, DimAndSplit) {
    Settings s;
    const auto d = cmd_dim("4,3,2", s);
    EXPECT_EQ(d.payload["dim"], 160);
    EXPECT_EQ(d.payload["standard_tableaux"], 168);
    EXPECT_EQ(d.payload["tabloids"], 1260);
    s.max_tabloids = 100;
    EXPECT_EQ(cmd_dim("4,3,2", s).status, ReportStatus::Skipped);
    EXPECT_EQ(cmd_split("4,3,2", s).status, ReportStatus::Skipped);
    EXPECT_EQ(exit_code(cmd_split("4,3,2", s)), 0);
    s.max_tabloids = specht::kDefaultMaxTabloids;
    const auto sp = cmd_split("3,2", s);
    EXPECT_EQ(split_report_from_json(sp.payload), splitter::self_duality_profile(Partition({3, 2})));
    EXPECT_EQ(cmd_split("2,2", s).status, ReportStatus::Error);
}

TEST(Cli, VerifyExamples) {
    Settings s;
    const auto three = cmd_verify(3, false, s);
    EXPECT_EQ(three.status, ReportStatus::Ok);
    EXPECT_EQ(three.payload["module_max"], 3);
    const auto nine = cmd_verify(9, false, s);
    EXPECT_EQ(nine.status, ReportStatus::Ok);
    std::size_t modules = 0;
    for (const auto& row : nine.payload["rows"])
        if (row.contains("modules"))
            for (const auto& m : row["modules"]) {
                EXPECT_EQ(m["status"], "OK");
                ++modules;
            }
    EXPECT_GT(modules, 20u);
    const auto forty = cmd_verify(40, false, s);
    EXPECT_EQ(forty.status, ReportStatus::Ok);
    EXPECT_EQ(forty.payload["rows"].size(), 41u);
    EXPECT_EQ(forty.payload["module_max"], 9);
    EXPECT_EQ(cmd_verify(2, false, s).status, ReportStatus::Error);
}

TEST(Cli, StatusCombineAndExitCodes) {
    EXPECT_EQ(combine(ReportStatus::Ok, ReportStatus::Skipped), ReportStatus::Skipped);
    EXPECT_EQ(combine(ReportStatus::Mismatch, ReportStatus::Skipped), ReportStatus::Mismatch);
    EXPECT_EQ(combine(ReportStatus::Mismatch, ReportStatus::Error), ReportStatus::Error);
    CommandResult r;
    for (auto [s, nonzero] : {std::pair{ReportStatus::Ok, false}, {ReportStatus::Skipped, false},
                              {ReportStatus::Mismatch, true}, {ReportStatus::Error, true}}) {
        r.status = s;
        EXPECT_EQ(exit_code(r) != 0, nonzero);
    }
}

TEST(Cli, RunExitCodesAndErrors) {
    EXPECT_EQ(invoke({"partitions", "5"}).code, 0);
    EXPECT_NE(invoke({}).code, 0);
    EXPECT_NE(invoke({"frobnicate"}).code, 0);
    EXPECT_NE(invoke({"bressoud", "4,1"}).code, 0);
    EXPECT_NE(invoke({"--max-tabloids", "0", "dim", "3,2"}).code, 0);
    const Invocation skipped = invoke({"--max-tabloids", "5", "split", "3,2"});
    EXPECT_EQ(skipped.code, 0);
    EXPECT_NE(skipped.out.find("status: SKIPPED"), std::string::npos);
}

TEST(Cli, TextAndJsonRendering) {
    const Invocation text = invoke({"partitions", "5", "--filter", "strict"});
    EXPECT_NE(text.out.find("status: OK"), std::string::npos);
    EXPECT_EQ(text.out.find("time:"), std::string::npos);
    EXPECT_NE(invoke({"--timing", "partitions", "5"}).out.find("time:"), std::string::npos);
    const json j = invoke_json({"partitions", "5", "--filter", "strict"});
    EXPECT_EQ(j["command"], "partitions");
    EXPECT_EQ(j["status"], "OK");
    EXPECT_FALSE(j.contains("seconds"));
    EXPECT_EQ(j["payload"]["count"], 3);
}

TEST(Cli, JsonRoundTripsTheReport) {
    const json j = invoke_json({"split", "7,5,1"});
    const auto report = split_report_from_json(j["payload"]);
    EXPECT_EQ(report.observed_duality, DualityVerdict::DualPair);
    EXPECT_EQ(report.summand_dims, (std::vector<std::size_t>{144, 144}));
    EXPECT_EQ(to_json_value(report), j["payload"]);
    const json v = invoke_json({"verify", "6"});
    for (const auto& row : v["payload"]["rows"])
        if (row.contains("modules"))
            for (const auto& m : row["modules"]) EXPECT_EQ(to_json_value(split_report_from_json(m)), m);
}

TEST(Cli, ByteIdenticalAcrossInvocations) {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"verify", "9"}, {"verify", "9", "--json"}, {"split", "4,3,2", "--json"},
          {"partitions", "20", "--filter", "benson"}, {"bressoud", "11,7,5"}, {"classes", "21", "--json"}}) {
        const Invocation a = invoke(args), b = invoke(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, b.code);
    }
}
