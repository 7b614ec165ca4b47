#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ghk/binomial.hpp"
#include "ghk/bounds.hpp"
#include "ghk/cli.hpp"
#include "ghk/construct.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "ghk");
    std::ostringstream out, err;
    const int code = ghk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args)
{
    const Outcome o = invoke(std::move(args));
    EXPECT_EQ(o.code, 0) << o.err;
    return json::parse(o.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, BoundMatchesLibrary)
{
    const json j = invoke_json({"bound", "125", "--e", "8", "--i", "1"});
    EXPECT_EQ(j["command"], "bound");
    EXPECT_EQ(j["result"], 95);
    EXPECT_EQ(j["result"].get<long long>(), ghk::step_lower(125, 8, 1));
    EXPECT_EQ(j["inputs"]["h"], 125);
    EXPECT_TRUE(j["warnings"].is_array());
}

TEST(Cli, ConstructMatchesLibrary)
{
    const json j = invoke_json({"construct", "125", "--e", "8"});
    const auto cand = ghk::gorenstein_candidate(125, 8);
    ASSERT_EQ(j["hvector"].size(), cand.hvector.size());
    for (std::size_t k = 0; k < cand.hvector.size(); ++k)
        EXPECT_EQ(j["hvector"][k].get<long long>(), cand.hvector[k]);
    EXPECT_EQ(j["exact_case"], cand.exact_case);
    EXPECT_EQ(j["hvector"][2], 95);
}

TEST(Cli, ExpandZero)
{
    const json j = invoke_json({"expand", "0", "--base", "3"});
    EXPECT_TRUE(j["terms"].is_array());
    EXPECT_TRUE(j["terms"].empty());
    EXPECT_EQ(j["value"], 0);
}

TEST(Cli, GlobalOptionsAfterSubcommand)
{
    const Outcome a = invoke({"--format", "csv", "growth", "11", "--deg", "2"});
    const Outcome b = invoke({"growth", "11", "--deg", "2", "--format", "csv"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PreconditionExitCode)
{
    const Outcome o = invoke({"bound", "125", "--e", "3", "--i", "1"});
    EXPECT_EQ(o.code, ghk::cli::kUsageError);
    EXPECT_FALSE(o.err.empty());
    EXPECT_TRUE(o.out.empty());
}

TEST(Cli, MalformedTokenIsNamed)
{
    const Outcome o = invoke({"expand", "12x4", "--base", "3"});
    EXPECT_EQ(o.code, ghk::cli::kUsageError);
    EXPECT_NE(o.err.find("12x4"), std::string::npos) << o.err;
    const Outcome p = invoke({"bound", "125", "--e", "eight", "--i", "1"});
    EXPECT_EQ(p.code, ghk::cli::kUsageError);
    EXPECT_NE(p.err.find("eight"), std::string::npos) << p.err;
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({"no-such-command"}).code, ghk::cli::kUsageError);
    EXPECT_EQ(invoke({}).code, ghk::cli::kUsageError);
    EXPECT_EQ(invoke({"bound", "125"}).code, ghk::cli::kUsageError);
    EXPECT_EQ(invoke({"--format", "xml", "bound", "125", "--e", "8", "--i", "1"}).code, ghk::cli::kUsageError);
    EXPECT_EQ(invoke({"--help"}).code, ghk::cli::kOk);
}

TEST(Cli, HvectorFromFile)
{
    const auto path = temp_file("ghk_cli_hvec.txt", "1,4,10,20,35,56,84,120,165,220\n");
    const json j = invoke_json({"check-oseq", "@" + path.string()});
    EXPECT_EQ(j["result"], true);
    const json k = invoke_json({"check-si", "1,3,2,3,1"});
    EXPECT_EQ(k["result"], false);
    const json l = invoke_json({"check-si", "1,3,6,3,1"});
    EXPECT_EQ(l["result"], true);
    EXPECT_EQ(invoke({"check-oseq", "@/nonexistent/ghk"}).code, ghk::cli::kUsageError);
    std::filesystem::remove(path);
}

TEST(Cli, CsvOutput)
{
    const Outcome o = invoke({"--format", "csv", "envelope", "125", "--e", "8"});
    ASSERT_EQ(o.code, 0) << o.err;
    std::istringstream in(o.out);
    std::string header;
    std::getline(in, header);
    EXPECT_NE(header.find(','), std::string::npos);
    EXPECT_NE(o.out.find("95"), std::string::npos);
    EXPECT_NE(o.out.find("77"), std::string::npos);
}

TEST(Cli, TableCsvAndDeterminism)
{
    const std::vector<std::string> args{"--format", "csv", "table", "--e", "4", "--i", "2",
                                        "--rmax", "1000", "--per-decade", "2"};
    auto with_jobs = [&](const char* jobs) {
        auto a = args;
        a.push_back("--jobs");
        a.push_back(jobs);
        return invoke(a);
    };
    const Outcome one = with_jobs("1");
    const Outcome four = with_jobs("4");
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(one.out.substr(0, one.out.find('\n')), "r,i,g_value,h_value,g_ratio,h_ratio,limit,gap_g,gap_h");
}

TEST(Cli, BigIntegersAsStrings)
{
    const json j = invoke_json({"growth", "100000000000000000000", "--deg", "3"});
    ASSERT_TRUE(j["result"].is_string());
    EXPECT_EQ(j["result"].get<std::string>(), ghk::to_string(ghk::macaulay_growth(ghk::BigInt("100000000000000000000"), 3)));
    const json small = invoke_json({"growth", "11", "--deg", "2"});
    EXPECT_TRUE(small["result"].is_number_integer());
}

TEST(Cli, CatalecticantWithPrimeFromEnvironment)
{
    const auto path = temp_file("ghk_cli_form.json",
                                R"({"num_vars":4,"degree":4,"terms":[[[1,2,1,0],1],[[0,3,0,1],1]]})");
    const json j = invoke_json({"catalecticant", "--form", path.string()});
    EXPECT_EQ(j["inputs"]["prime"], 32003);
    ::setenv("GHK_PRIME", "101", 1);
    const json k = invoke_json({"catalecticant", "--form", path.string()});
    ::unsetenv("GHK_PRIME");
    EXPECT_EQ(k["inputs"]["prime"], 101);
    EXPECT_EQ(j["hvector"], k["hvector"]);
    EXPECT_EQ(invoke({"catalecticant", "--form", path.string(), "--prime", "100"}).code, ghk::cli::kUsageError);
    const auto bad = temp_file("ghk_cli_bad.json", "{not json");
    EXPECT_EQ(invoke({"catalecticant", "--form", bad.string()}).code, ghk::cli::kUsageError);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST(Cli, LimitAndKleinschmidt)
{
    const json j = invoke_json({"limit", "--e", "4", "--i", "2"});
    EXPECT_EQ(j["result"].get<std::string>().substr(0, 12), "3.3019272488");
    const json k = invoke_json({"kleinschmidt", "--emax", "200"});
    EXPECT_EQ(k["all_pass"], true);
}

TEST(Cli, RealizeIsSeeded)
{
    const Outcome a = invoke({"--seed", "7", "realize", "6", "--e", "5"});
    const Outcome b = invoke({"--seed", "7", "realize", "6", "--e", "5"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(json::parse(a.out)["matched"], true);
}

TEST(Cli, BinaryRoundTrip)
{
    const std::string cmd = std::string("\"") + GHK_CLI_PATH + "\" bound 125 --e 8 --i 1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string text;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe))
        text += buf;
    const int status = ::pclose(pipe);
    EXPECT_EQ(WEXITSTATUS(status), 0);
    EXPECT_EQ(json::parse(text)["result"], 95);

    const std::string bad = std::string("\"") + GHK_CLI_PATH + "\" bound 5 --e 3 --i 1 2>/dev/null";
    EXPECT_EQ(WEXITSTATUS(::system(bad.c_str())), 2);
}
