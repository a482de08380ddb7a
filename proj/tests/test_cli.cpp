#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = motreal::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

motreal::Json json_of(const Result& r) { return motreal::Json::parse(r.out); }

}  // namespace

TEST(Cli, James) {
    const auto r = run({"james", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r)["value"], "2880");
    EXPECT_NE(run({"james", "5", "--format", "text"}).out.find("2^6 * 3^2 * 5"), std::string::npos);
}

TEST(Cli, MalformedArgumentsExitTwoWithUsage) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"james"},
                                                                 {},
                                                                 {"james", "0"},
                                                                 {"james", "x"},
                                                                 {"split", "--n", "24"},
                                                                 {"split", "--n", "24", "--r", "3", "--bogus"},
                                                                 {"classify"},
                                                                 {"classify", "stable", "--s", "1"},
                                                                 {"chart", "--x", "8", "--y", "9", "--d0", "0", "--d1",
                                                                  "2", "--e0", "0", "--e1", "2", "--format", "png"},
                                                                 {"frobnicate"}}) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 2) << ::testing::PrintToString(args);
        EXPECT_NE(r.err.find("Usage"), std::string::npos) << ::testing::PrintToString(args);
        EXPECT_TRUE(r.out.empty());
    }
}

TEST(Cli, PreconditionErrorsExitTwo) {
    EXPECT_EQ(run({"split", "--n", "0", "--r", "1"}).code, 2);
    EXPECT_EQ(run({"classify", "stiefel-surj", "--n", "0", "--r", "1", "--d", "0", "--e", "0"}).code, 2);
    EXPECT_EQ(run({"group", "normalize", "--group", "{not json"}).code, 2);
    EXPECT_EQ(run({"group", "primary", "--group", "{}", "--p", "4"}).code, 2);
    EXPECT_EQ(run({"group", "fraction", "--num", "1", "--den", "10", "--primes", "2"}).code, 2);
    EXPECT_EQ(run({"group", "decompose", "--group", R"({"free_rank":1})", "--primes", "2"}).code, 2);
    EXPECT_EQ(run({"group", "hom", "--group", R"({"invariant_factors":[300]})", "--group2",
                   R"({"invariant_factors":[300]})"})
                  .code,
              2);
    EXPECT_EQ(run({"chart", "--x", "8", "--y", "9", "--d0", "0", "--d1", "2000", "--e0", "0", "--e1", "2000"}).code, 2);
}

TEST(Cli, Split) {
    const auto r = run({"split", "--n", "25", "--r", "3"});
    ASSERT_EQ(r.code, 0);
    const auto j = json_of(r);
    EXPECT_EQ(j["verdict"], "No");
    EXPECT_EQ(j["certificate"]["failing_prime"], 2);
    EXPECT_EQ(j["hypothesis"], "ring contains algebraic closure of Q");

    const auto v = json_of(run({"split", "--n", "24", "--r", "4", "--verify"}));
    EXPECT_EQ(v["proof_trace"]["passing"], true);
    EXPECT_TRUE(json_of(run({"split", "--n", "24", "--r", "2", "--verify"}))["proof_trace"].is_null());

    const auto text = run({"split", "--n", "24", "--r", "4", "--format", "text"}).out;
    EXPECT_NE(text.find("Thm5.1"), std::string::npos);
    EXPECT_NE(text.find("algebraic closure"), std::string::npos);
}

TEST(Cli, Summand) {
    const auto j = json_of(run({"summand", "--n", "24", "--rank", "3"}));
    EXPECT_EQ(j["verdict"], "Yes");
    EXPECT_EQ(j["r"], 4);
    EXPECT_EQ(j["citation"], "Cor5.2");
}

TEST(Cli, Classify) {
    EXPECT_EQ(json_of(run({"classify", "stable", "--s", "3", "--w", "-5", "--bs"}))["verdict"], "Isomorphism");
    EXPECT_EQ(json_of(run({"classify", "sphere", "--x", "8", "--y", "9", "--d", "10", "--e", "3"}))["kernel"],
              "H^4(Spec k; Z(6))");
    EXPECT_EQ(json_of(run({"classify", "stiefel-surj", "--n", "10", "--r", "2", "--d", "13", "--e", "15"}))["citation"],
              "Thm4.4");
    EXPECT_EQ(json_of(run({"classify", "stiefel-inj", "--n", "10", "--r", "2", "--d", "12", "--e", "11"}))["verdict"],
              "Injective");
    EXPECT_NE(run({"classify", "stable", "--s", "1", "--w", "0", "--format", "text"}).out.find("by Rmk3.5"),
              std::string::npos);
    // Negative option values parse as numbers.
    EXPECT_EQ(run({"classify", "stable", "--s", "-3", "--w", "-2"}).code, 0);
}

TEST(Cli, ChartFormats) {
    const std::vector<std::string> base{"chart", "--x", "8", "--y", "9", "--d0", "0", "--d1", "20", "--e0", "-2", "--e1", "20"};
    const auto tsv = run(base);
    ASSERT_EQ(tsv.code, 0);
    EXPECT_EQ(tsv.out, motreal::Chart(8, 9, {0, 20}, {-2, 20}).to_tsv());
    auto svg_args = base;
    svg_args.insert(svg_args.end(), {"--format", "svg"});
    EXPECT_EQ(run(svg_args).out.rfind("<svg", 0), 0u);
}

TEST(Cli, GroupOps) {
    EXPECT_EQ(json_of(run({"group", "normalize", "--group", R"({"invariant_factors":[6,4]})"}))["group"]["invariant_factors"],
              motreal::Json::array({2, 12}));
    const auto snf = json_of(run({"group", "snf", "--matrix", R"({"rows":2,"cols":2,"entries":[2,0,0,3]})"}));
    EXPECT_EQ(snf["diagonal"]["entries"], motreal::Json::array({1, 0, 0, 6}));
    EXPECT_EQ(json_of(run({"group", "cokernel", "--matrix", R"({"rows":1,"cols":1,"entries":[0]})"}))["group"]["free_rank"], 1);
    EXPECT_EQ(json_of(run({"group", "torsion", "--group", R"({"invariant_factors":[6]})", "--m", "4"}))["group"]["invariant_factors"],
              motreal::Json::array({2}));
    EXPECT_EQ(json_of(run({"group", "mod", "--group", R"({"free_rank":1})", "--m", "7"}))["group"]["invariant_factors"],
              motreal::Json::array({7}));
    EXPECT_EQ(json_of(run({"group", "primary", "--group", R"({"invariant_factors":[12]})", "--p", "2"}))["group"]["invariant_factors"],
              motreal::Json::array({4}));
    EXPECT_EQ(json_of(run({"group", "predicates", "--group", R"({"q_rank":1,"invariant_factors":[3]})", "--primes", "2"}))["uniquely_divisible"],
              true);
    EXPECT_EQ(json_of(run({"group", "complete", "--group", R"({"free_rank":1})"}))["completion"]["padic_rank"], 1);
    const auto dec = json_of(run({"group", "decompose", "--group", R"({"q_rank":1,"invariant_factors":[12]})", "--primes", "2"}));
    EXPECT_EQ(dec["kernel"]["invariant_factors"], motreal::Json::array({3}));
    EXPECT_EQ(dec["completion"], motreal::Json::array({4}));
    const auto hom = json_of(run({"group", "hom", "--group", R"({"invariant_factors":[4]})", "--group2", R"({"invariant_factors":[6]})"}));
    EXPECT_EQ(hom["closed_form"], 2);
    EXPECT_EQ(hom["agree"], true);
    const auto frac = json_of(run({"group", "fraction", "--num", "1", "--den", "12", "--primes", "2,3"}));
    EXPECT_EQ(frac["parts"]["2"]["numerator"], 3);
    EXPECT_EQ(frac["sum"]["denominator"], 12);
}

TEST(Cli, TextAnswersCiteTheirSource) {
    const std::vector<std::vector<std::string>> invocations{
        {"james", "4"},
        {"split", "--n", "24", "--r", "5"},
        {"split", "--n", "24", "--r", "1"},
        {"summand", "--n", "48", "--rank", "2"},
        {"classify", "sphere", "--x", "8", "--y", "9", "--d", "11", "--e", "11"},
        {"classify", "stiefel-inj", "--n", "10", "--r", "2", "--d", "12", "--e", "11"},
        {"group", "decompose", "--group", R"({"invariant_factors":[12]})", "--primes", "3"},
        {"group", "fraction", "--num", "5", "--den", "6"},
        {"group", "complete", "--group", R"({"invariant_factors":[12]})"},
    };
    for (auto args : invocations) {
        args.insert(args.end(), {"--format", "text"});
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << ::testing::PrintToString(args) << r.err;
        EXPECT_TRUE(r.out.find("Thm") != std::string::npos || r.out.find("Cor") != std::string::npos ||
                    r.out.find("Prop") != std::string::npos || r.out.find("Rmk") != std::string::npos ||
                    r.out.find("Raynaud") != std::string::npos || r.out.find("identity") != std::string::npos)
            << r.out;
    }
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"chart", "--x", "5", "--y", "7", "--d0", "-3", "--d1", "15", "--e0", "-4", "--e1", "12",
                                        "--format", "svg", "--bs"};
    EXPECT_EQ(run(args).out, run(args).out);
    EXPECT_EQ(run({"split", "--n", "2880", "--r", "6", "--verify"}).out, run({"split", "--n", "2880", "--r", "6", "--verify"}).out);
}

TEST(Cli, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("james"), std::string::npos);
}
