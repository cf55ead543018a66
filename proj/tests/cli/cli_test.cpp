/*
   Copyright 2026 The wstack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/report.hpp"

namespace wstack::cli {
namespace {

using nlohmann::json;

struct Outcome {
    int status;
    std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

TEST(CliTest, MotiveOfStableWeierstrassModuli) {
    const Outcome r = run({"motive", "--lambda", "4,6", "--n", "1"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out, "L^8\n");
}

TEST(CliTest, MotiveSpecializationIsAnExactFraction) {
    const Outcome r = run({"motive", "--lambda", "4,6", "--n", "1", "--of", "ambient", "--q", "5", "--format", "json"});
    ASSERT_EQ(r.status, kExitOk);
    EXPECT_EQ(json::parse(r.out).at("value"), "5086263/10");
}

TEST(CliTest, NonPrimeFieldIsRejected) {
    const Outcome r = run({"count", "--lambda", "4,6", "--n", "1", "--q", "4", "--stratum", "sf"});
    EXPECT_EQ(r.status, kExitError);
    EXPECT_NE(r.err.find("NOT_PRIME"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, CharacteristicThreeIsRejected) {
    const Outcome r = run({"classify", "--q", "3", "--n", "1", "--A", "0,0,0,0,1", "--B", "1,0,0,0,0,0,0"});
    EXPECT_EQ(r.status, kExitError);
    EXPECT_NE(r.err.find("UNSUPPORTED_CHARACTERISTIC"), std::string::npos) << r.err;
}

TEST(CliTest, InconsistentDegreesAreRejected) {
    const Outcome r = run({"classify", "--q", "13", "--n", "1", "--A", "0,0,0,1", "--B", "1,0,0,0,0,0,0"});
    EXPECT_EQ(r.status, kExitError);
    EXPECT_NE(r.err.find("DEGREE_MISMATCH"), std::string::npos) << r.err;
}

TEST(CliTest, UnknownCommandFails) {
    EXPECT_NE(run({"frobnicate"}).status, kExitOk);
    EXPECT_NE(run({}).status, kExitOk);
}

TEST(CliTest, ClassifyX4Y6) {
    const Outcome r = run({"classify", "--q", "13", "--n", "1", "--A", "0,0,0,0,1", "--B", "1,0,0,0,0,0,0"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("stratum"), "SF");
    EXPECT_EQ(j.at("git_class"), "STABLE");
    unsigned total = 0;
    for (const auto& f : j.at("fibers")) {
        EXPECT_EQ(f.at("fiber"), "I1");
        total += f.at("degree").get<unsigned>() * f.at("ord_delta").get<unsigned>();
    }
    EXPECT_EQ(total, 12u);
}

TEST(CliTest, ClassifyFiberTableAsCsv) {
    const Outcome r = run({"classify", "--q", "13", "--n", "1", "--A", "0,0,0,0,1", "--B", "1,0,0,0,0,0,0", "--format",
                       "csv"});
    ASSERT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "point,degree,ord_a,ord_b,ord_delta,fiber");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(CliTest, ClassifyGeneralTuple) {
    const Outcome r = run({"classify", "--q", "7", "--lambda", "1,1", "--n", "1", "--forms", "0,1;1,0"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("git_class"), "STABLE");
    EXPECT_EQ(j.at("base_point_free"), true);
}

TEST(CliTest, StabilizerOfMuFixture) {
    const Outcome r = run({"stab", "--q", "13", "--n", "1", "--A", "0,0,0,0,1", "--B", "1,0,0,0,0,0,0"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("stabilizer_order"), 12u);
    EXPECT_EQ(j.at("elements").size(), 12u);
}

TEST(CliTest, CountReportMatchesPrediction) {
    const Outcome r = run({"count", "--lambda", "4,6", "--n", "1", "--q", "5", "--stratum", "sf", "--method", "sieve"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("weighted_count"), "390625/1");
    EXPECT_EQ(j.at("match"), true);
    EXPECT_FALSE(j.contains("wall_time"));
}

TEST(CliTest, CountOutputIsByteStable) {
    const std::vector<std::string> args = {"count", "--lambda", "4,6", "--n", "1", "--q", "5,7",
                                           "--stratum", "min", "--workers", "1"};
    const Outcome a = run(args);
    std::vector<std::string> more = args;
    more.back() = "3";
    const Outcome b = run(more);
    EXPECT_EQ(a.status, kExitOk);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, BatchIsAnArrayAndRoundTrips) {
    const Outcome r = run({"count", "--lambda", "1,3", "--n", "1", "--q", "5,7", "--stratum", "bpf", "--method", "brute"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const json j = json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 2u);
    for (const auto& item : j) {
        const CountReport rep = report_from_json(item);
        EXPECT_EQ(report_to_json(rep), item);
        EXPECT_EQ(rep.weighted_count, mpq_class(rep.q * rep.q));
    }
}

TEST(CliTest, ReportRoundTripsThroughJson) {
    for (Stratum s : {Stratum::USf, Stratum::UMin, Stratum::AllNonzero}) {
        const CountReport rep = verify_report(CountModel::hom(WeightVector({4, 6}), 1, s), make_field(5), Method::Sieve);
        const CountReport back = report_from_json(json::parse(dump_json(report_to_json(rep, true))));
        EXPECT_TRUE(back == rep) << stratum_name(s);
    }
    const CountReport even = verify_report(CountModel::hom(WeightVector({1, 1}), 2, Stratum::BasepointFree),
                                           make_field(5), Method::Brute);
    EXPECT_TRUE(report_from_json(report_to_json(even)) == even);
}

TEST(CliTest, MalformedReportJsonIsAParseError) {
    try {
        report_from_json(json::parse(R"({"model": 3})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
    }
}

TEST(CliTest, EmptyBatchIsValid) {
    EXPECT_EQ(emit_reports({}, Format::Json), "[]\n");
    const std::string csv = emit_reports({}, Format::Csv);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
    EXPECT_EQ(csv.rfind("model,", 0), 0u);
}

TEST(CliTest, SelfMapCount) {
    const Outcome r = run({"selfmaps", "count", "--q", "5", "--n", "2", "--method", "brute"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    EXPECT_EQ(json::parse(r.out).at("weighted_count"), "25/1");
}

TEST(CliTest, SelfMapClassify) {
    // z -> z^2 + 1 over F_7: F = X^2 + Y^2, G = Y^2.
    const Outcome r = run({"selfmaps", "classify", "--q", "7", "--n", "2", "--F", "1,0,1", "--G", "1,0,0"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("morphism"), true);
    EXPECT_EQ(j.at("tameness"), "TAME_FINITE");
}

TEST(CliTest, OutFileReceivesTheReport) {
    const std::string path = ::testing::TempDir() + "wstack_cli_out.json";
    const Outcome r = run({"--out", path, "motive", "--lambda", "1,2,3", "--n", "1"});
    ASSERT_EQ(r.status, kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream is(path);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "L^5 + L^4 + L^3");
    std::remove(path.c_str());
}

TEST(CliTest, VerifySuiteSingleCriterion) {
    const Outcome r = run({"verify-suite", "--criteria", "10"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("criterion 10 PASS"), std::string::npos) << r.out;
    EXPECT_NE(run({"verify-suite", "--criteria", "12"}).status, kExitOk);
}

TEST(CliTest, WorkersFromEnvironment) {
    ::setenv("WSTACK_WORKERS", "2", 1);
    EXPECT_EQ(run({"selfmaps", "count", "--q", "5", "--n", "2"}).status, kExitOk);
    ::setenv("WSTACK_WORKERS", "many", 1);
    EXPECT_EQ(run({"selfmaps", "count", "--q", "5", "--n", "2"}).status, kExitError);
    ::unsetenv("WSTACK_WORKERS");
}

}  // namespace
}  // namespace wstack::cli
