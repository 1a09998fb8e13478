#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hilbwc");
    std::ostringstream out, err;
    const int code = hilbwc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, HilbIntegralJson)
{
    const auto r = run({"hilb-integral", "--n", "3", "--ch", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, R"({"result":{"variable":"t","terms":[{"coeff":"-1/4","exp":-4}]},)"
                     R"("query":{"subcommand":"hilb-integral","n":3,"ch":[2]},)"
                     R"("schema":"hilbwc.result/1","version":"1.0.0"})"
                     "\n");
}

TEST(Cli, ZeroResultHasNoTerms)
{
    const auto r = run({"hilb-integral", "--n", "5", "--ch", "1", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto doc = hilbwc::cli::Json::parse(r.out);
    EXPECT_TRUE(doc["result"]["terms"].empty());
}

TEST(Cli, RepeatedInsertions)
{
    const auto a = run({"hilb-integral", "--n", "3", "--ch", "2", "--ch", "4"});
    const auto b = run({"hilb-integral", "--n", "3", "--k", "4", "--ch", "2"});
    EXPECT_EQ(run({"hilb-integral", "--n", "3", "--k", "4", "2"}).code, 2);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("<ch_2*ch_4>_3 = "), std::string::npos);
}

TEST(Cli, TableOutputs)
{
    EXPECT_EQ(run({"tn", "--n", "2", "--psi1", "1", "--psiinf", "0"}).out, "-1\n");
    const auto e = run({"euler", "--d", "2", "--c", "24", "--order", "3", "--check"});
    EXPECT_EQ(e.code, 0);
    EXPECT_NE(e.out.find("MATCH"), std::string::npos);
    EXPECT_EQ(e.out.find("MISMATCH"), std::string::npos);
    EXPECT_EQ(run({"ifunction", "--n", "2", "--ch", "4"}).out.rfind("I_2(z, ch_4)_+ = -1/16*u^2", 0), 0u);
    EXPECT_EQ(run({"dt-check", "--c", "-6", "--order", "6"}).code, 0);
}

TEST(Cli, SeriesJson)
{
    const auto r = run({"ch-series", "--k", "4", "--order", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = hilbwc::cli::Json::parse(r.out);
    EXPECT_EQ(doc["result"]["order"], 3);
    EXPECT_EQ(doc["result"]["coefficients"][2][0]["coeff"], "-1/16");
    EXPECT_EQ(doc["result"]["coefficients"][2][0]["exp"], 0);
}

TEST(Cli, PartitionsJson)
{
    const auto r = run({"partitions", "--n", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = hilbwc::cli::Json::parse(r.out);
    ASSERT_EQ(doc["result"].size(), 2u);
    EXPECT_EQ(doc["result"][0]["parts"], hilbwc::cli::Json::parse("[2]"));
    EXPECT_EQ(doc["result"][0]["tangent"], hilbwc::cli::Json::parse("[[2,0],[-1,1],[1,0],[0,1]]"));
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"hilb-integral"}).code, 2);
    EXPECT_EQ(run({"hilb-integral", "--n", "x"}).code, 2);
    EXPECT_EQ(run({"hilb-integral", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"hilb-integral", "--n", "2", "--ch", "-1"}).code, 2);
    EXPECT_EQ(run({"tn", "--n", "1", "--psi1", "0", "--psiinf", "0"}).code, 2);
    EXPECT_EQ(run({"euler", "--d", "3", "--c", "1", "--order", "3"}).code, 2);
    EXPECT_EQ(run({"ch-series", "--k", "4", "--order", "0"}).code, 2);
    EXPECT_EQ(run({"hilb-integral", "--n", "2", "--format", "xml"}).code, 2);
    const auto r = run({"bogus"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, WritesToFile)
{
    const auto path = std::filesystem::temp_directory_path() / "hilbwc_cli_test.json";
    const auto r = run({"tn", "--n", "4", "--psi1", "2", "--psiinf", "3", "--format", "json", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(hilbwc::cli::Json::parse(content.str())["result"]["value"], "-2");
    std::filesystem::remove(path);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args = {"ch-series", "--k", "5", "--order", "6", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
}
