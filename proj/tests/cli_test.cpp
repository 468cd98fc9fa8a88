#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gwcount::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
protected:
    std::filesystem::path dir;

    void SetUp() override {
        dir = std::filesystem::temp_directory_path() /
              ("gwcount_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) {
        const auto path = dir / name;
        std::ofstream(path) << text;
        return path.string();
    }
};

TEST(CliNd, CsvRows) {
    const auto r = invoke({"nd", "--max", "3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "d,N_d\n1,1\n2,1\n3,12\n");
}

TEST(CliNd, JsonCountsAreStrings) {
    const auto r = invoke({"nd", "--max", "12", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["counts"].size(), 12u);
    EXPECT_TRUE(doc["counts"][11]["N"].is_string());
    EXPECT_EQ(doc["counts"][11]["N"], "482113680618029292368686080");
}

TEST(CliNd, PlainIsAligned) {
    const auto r = invoke({"nd", "--max", "4"});
    EXPECT_EQ(r.out, "d  N_d\n1    1\n2    1\n3   12\n4  620\n");
}

TEST(CliNd, BadArguments) {
    EXPECT_EQ(invoke({"nd", "--max", "0"}).code, 2);
    EXPECT_EQ(invoke({"nd", "--max", "201"}).code, 2);
    EXPECT_EQ(invoke({"nd"}).code, 2);
    EXPECT_EQ(invoke({"nd", "--max", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(CliNd, HelpExitsZero) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("strata"), std::string::npos);
}

TEST_F(TempDir, NdCacheIsIdempotent) {
    const std::string cache = (dir / "t.txt").string();
    const auto first = invoke({"nd", "--max", "5", "--cache", cache});
    ASSERT_EQ(first.code, 0);
    EXPECT_TRUE(std::filesystem::exists(cache));
    const auto second = invoke({"nd", "--max", "5", "--cache", cache});
    ASSERT_EQ(second.code, 0);
    EXPECT_EQ(first.out, second.out);
    EXPECT_NE(second.err.find("loaded 5 cached entries"), std::string::npos) << second.err;

    std::ifstream in(cache);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), "1 1\n2 1\n3 12\n4 620\n5 87304\n");

    // Extending rewrites the cache.
    ASSERT_EQ(invoke({"nd", "--max", "7", "--cache", cache}).code, 0);
    const auto third = invoke({"nd", "--max", "3", "--cache", cache});
    EXPECT_NE(third.err.find("loaded 7 cached entries"), std::string::npos);
}

TEST_F(TempDir, NdCorruptCacheExitsThree) {
    const std::string cache = write("bad.txt", "1 1\n2 1\n4 620\n");
    const auto r = invoke({"nd", "--max", "5", "--cache", cache});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliEd, AllClasses) {
    const auto r = invoke({"ed", "--d", "3", "--j", "all", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "d,j,E,ZT\n3,generic,12,12\n3,0,4,12\n3,1728,6,12\n");
}

TEST(CliEd, SingleClassJson) {
    const auto r = invoke({"ed", "--d", "4", "--j", "generic", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"d\":4,\"j\":\"generic\",\"E\":\"1860\",\"ZT\":\"1860\"}\n");
}

TEST(CliEd, AllClassesJson) {
    const auto r = invoke({"ed", "--d", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["E"]["generic"], "12");
    EXPECT_EQ(doc["E"]["0"], "4");
    EXPECT_EQ(doc["E"]["1728"], "6");
    EXPECT_EQ(doc["ZT"], "12");
}

TEST(CliEd, PlainListsZt) {
    const auto r = invoke({"ed", "--d", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Z.T"), std::string::npos);
}

TEST(CliEd, BelowDefinitionDomain) {
    const auto r = invoke({"ed", "--d", "2", "--j", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("d >= 3"), std::string::npos);
    EXPECT_EQ(invoke({"ed", "--d", "3", "--j", "5"}).code, 2);
}

TEST(CliStrata, SummaryCarriesSingleTailTotal) {
    const auto r = invoke({"strata", "--d", "3", "--max-extra", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("phi_family=256"), std::string::npos) << r.out;
    const auto full = invoke({"strata", "--d", "3", "--max-extra", "1", "--full", "--format", "json"});
    ASSERT_EQ(full.code, 0);
    const auto doc = nlohmann::json::parse(full.out);
    EXPECT_EQ(doc["summary"]["phi_family"], "256");
    EXPECT_EQ(doc["mode"], "full");
}

TEST(CliStrata, SurvivorsOnly) {
    const auto r = invoke({"strata", "--d", "3", "--max-extra", "2", "--survivors-only", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_FALSE(doc["shapes"].empty());
    for (const auto& item : doc["shapes"]) {
        EXPECT_GE(item["bound"].get<int>(), 16);
        EXPECT_TRUE(item["survivor"].get<bool>());
    }
    EXPECT_EQ(doc["summary"]["phi_family"], "256");
}

TEST(CliStrata, GuardsAndErrors) {
    const auto r = invoke({"strata", "--d", "3", "--max-extra", "5"});
    EXPECT_EQ(r.code, 4);
    const auto capped = invoke({"strata", "--d", "3", "--max-extra", "1", "--full", "--ceiling", "10"});
    EXPECT_EQ(capped.code, 4);
    EXPECT_NE(capped.err.find("projected class count"), std::string::npos) << capped.err;
    EXPECT_EQ(invoke({"strata", "--d", "2"}).code, 2);
    EXPECT_EQ(invoke({"strata", "--d", "3", "--ceiling", "x"}).code, 2);
}

TEST(CliStrata, CsvHasHeaderAndQuotesCanonical) {
    const auto r = invoke({"strata", "--d", "3", "--max-extra", "0", "--full", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "kind,k,e,weights,legs,multiplicity,dim,bound,category,survivor,canonical");
    EXPECT_NE(r.out.find("\"(w3[1,2,3,4,5,6,7,8])\""), std::string::npos);
    EXPECT_NE(r.err.find("summary:"), std::string::npos);
}

TEST(CliStrata, Deterministic) {
    const std::vector<std::string> args{"strata", "--d", "4", "--max-extra", "2", "--format", "json"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST_F(TempDir, SeriesStaircase) {
    const std::string file = write(
        "s.json", R"({"degree":3,"basis":[["1","0","0","0"],["0","1","0","0"],["0","0","0","1"]]})");
    const auto r = invoke({"series", file, "--at-infinity"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "point: infinity\nvanishing sequence: (0, 2, 3)\nK: 0\ncriterion: true\n");
    const auto j = invoke({"series", file, "--format", "json"});
    EXPECT_EQ(j.out, "{\"point\":\"infinity\",\"sequence\":[0,2,3],\"K\":\"0\",\"degenerate\":false,\"criterion\":true}\n");
    const auto at = invoke({"series", file, "--at", "1", "--format", "csv"});
    EXPECT_EQ(at.out, "point,a0,a1,a2,K,degenerate,criterion\n1,0,1,2,0,false,true\n");
}

TEST_F(TempDir, SeriesErrors) {
    const std::string rank2 = write(
        "r.json", R"({"degree":2,"basis":[["1","0","0"],["0","1","0"],["1","1","0"]]})");
    EXPECT_EQ(invoke({"series", rank2}).code, 5);
    const std::string bad = write(
        "b.json", R"({"degree":2,"basis":[["1","0","0"],["0","1/0","0"],["0","0","1"]]})");
    const auto r = invoke({"series", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("basis[1][1]"), std::string::npos) << r.err;
    EXPECT_EQ(invoke({"series", (dir / "missing.json").string()}).code, 2);
    const std::string ok = write(
        "o.json", R"({"degree":2,"basis":[["1","0","0"],["0","1","0"],["0","0","1"]]})");
    EXPECT_EQ(invoke({"series", ok, "--at", "1/0"}).code, 2);
    EXPECT_EQ(invoke({"series", ok, "--at", "2", "--at-infinity"}).code, 2);
}

}  // namespace
}  // namespace gwcount::cli
