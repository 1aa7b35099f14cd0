#include "rootzeta/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace rootzeta;

namespace {

struct Result {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Result run_cli(std::vector<std::string> args, const std::string& input = {}) {
    args.insert(args.begin(), "rootzeta");
    std::ostringstream out, err;
    std::istringstream in(input);
    int code = cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, BernoulliNumberOutput) {
    auto r = run_cli({"bernoulli", "A2", "--k", "2,2,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"B\":\"1/3780\"}\n");
    auto p = run_cli({"bernoulli", "A1", "--k", "2", "--y", "1/3"});
    EXPECT_EQ(p.out, "{\"B\":\"-1/18\"}\n");
}

TEST(Cli, ZetaValueOutputs) {
    EXPECT_EQ(run_cli({"witten-w", "C2", "--k", "1"}).out, "{\"pi_power\":8,\"coeff\":\"1/8400\"}\n");
    EXPECT_EQ(run_cli({"witten", "A2", "--k", "1"}).out, "{\"pi_power\":6,\"coeff\":\"1/2835\"}\n");
    EXPECT_EQ(run_cli({"mixed", "C2", "--s", "2,4,2,4"}).json()["coeff"], "53/6810804000");
    EXPECT_EQ(run_cli({"--format", "latex", "witten", "A2", "--k", "1"}).out, "\\frac{1}{2835}\\pi^{6}\n");
    auto text = run_cli({"witten", "A3", "--k", "1", "--format", "text"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("23/2554051500"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"roots", "E8"}).code, 3);
    EXPECT_EQ(run_cli({"witten", "F4", "--k", "1"}).code, 3);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"nonsense"}).code, 1);
    EXPECT_EQ(run_cli({"bernoulli", "A2", "--k", "2,2"}).code, 1);
    EXPECT_EQ(run_cli({"bernoulli", "A2", "--k", "2,x,2"}).code, 1);
    EXPECT_EQ(run_cli({"mixed", "C2", "--s", "2,3,2,4"}).code, 1);
    EXPECT_EQ(run_cli({"verify", "no-such-suite"}).code, 1);
    EXPECT_EQ(run_cli({"--format", "yaml", "roots", "A2"}).code, 1);
    EXPECT_EQ(run_cli({"triangulate"}, "not json").code, 1);
    // a verification that cannot meet its tolerance
    EXPECT_EQ(run_cli({"--tol", "1e-30", "verify", "mordell", "--M", "50", "--s", "2"}).code, 2);
    EXPECT_FALSE(run_cli({"roots", "E8"}).err.empty());
}

TEST(Cli, Roots) {
    auto j = run_cli({"roots", "B3"}).json();
    EXPECT_EQ(j["weyl_order"], 48);
    EXPECT_EQ(j["roots"].size(), 9u);
}

TEST(Cli, WeylCosets) {
    auto j = run_cli({"weyl", "A3", "--I", "1,3"}).json();
    EXPECT_EQ(j["order"], 24);
    EXPECT_EQ(j["parabolic_order"], 4);
    EXPECT_EQ(j["coset_reps"].size(), 6u);
}

TEST(Cli, Chambers) {
    EXPECT_EQ(run_cli({"chamber", "A2", "--y", "7/10,3/10"}).out, "{\"nu\":1}\n");
    EXPECT_EQ(run_cli({"chamber", "A2", "--y", "0.3,0.7"}).out, "{\"nu\":2}\n");
    EXPECT_EQ(run_cli({"chamber", "A2", "--y", "1/2,1/2"}).out, "{\"wall\":true}\n");
    auto bp = run_cli({"bpoly", "A2", "--k", "2,2,2", "--chamber", "1"}).json();
    EXPECT_EQ(multipoly_from_json(bp["coefficient"]), reference::a2_chamber1_222());
    EXPECT_EQ(run_cli({"bpoly", "A3", "--k", "1,1,1,1,1,1", "--chamber", "1"}).code, 1);
}

TEST(Cli, TriangulateFromStandardInput) {
    auto cube = to_json(HPolytope::unit_cube(3)).dump();
    auto r = run_cli({"triangulate"}, cube);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.json();
    EXPECT_EQ(j["f_vector"], Json::parse("[8,12,6,1]"));
    EXPECT_EQ(j["simplex_volumes"].size(), 6u);
    for (const auto& v : j["simplex_volumes"]) EXPECT_EQ(v, "1/6");
    EXPECT_EQ(j["vertices"].size(), 8u);
    // explicit "-" also reads standard input
    EXPECT_EQ(run_cli({"triangulate", "-"}, cube).out, r.out);
}

TEST(Cli, BoxesAndGeneratingFunction) {
    auto b = run_cli({"boxes", "C2"}).json();
    EXPECT_EQ(b["total_volume"], "1");
    EXPECT_FALSE(b["boxes"].empty());
    auto g = run_cli({"genfunc", "A2", "--caps", "2"}).json();
    auto F = multipoly_from_json(g);
    for (const auto& c : reference::a2_series()) EXPECT_EQ(F.coefficient(c.exponents), c.value());
    EXPECT_EQ(F.coefficient({0, 0, 0}), 1);
}

TEST(Cli, NumericSums) {
    auto j = run_cli({"numeric", "A1", "--s", "2", "--y", "1/2", "--M", "2000"}).json();
    EXPECT_NEAR(j["re"].get<double>(), -std::numbers::pi * std::numbers::pi / 12, 1e-6);
    EXPECT_EQ(j["M"], 2000);
    auto S = run_cli({"numeric", "A2", "--s", "2,2,2", "--I", "", "--M", "200"}).json();
    EXPECT_NEAR(S["re"].get<double>(), 6 * std::pow(std::numbers::pi, 6) / 2835, 1e-5);
}

TEST(Cli, JsonRoundTrips) {
    auto g = run_cli({"genfunc", "C2", "--caps", "1", "--y", "1/5,3/7"}).json();
    auto F = multipoly_from_json(g);
    EXPECT_EQ(to_json(F)["terms"], g["terms"]);
    auto v = run_cli({"witten", "C2", "--k", "1,1"}).json();
    EXPECT_EQ(pivalue_from_json(v), PiValue(rat(1, 302400), 8));
}

TEST(Cli, OutputDoesNotDependOnThreads) {
    for (std::vector<std::string> args : {std::vector<std::string>{"genfunc", "B2", "--caps", "2", "--y", "1/3,1/5"},
                                          {"numeric", "C2", "--s", "2,3,2,2", "--y", "1/5,3/7", "--M", "120"},
                                          {"verify", "fr", "--M", "100"}}) {
        auto one = args, three = args;
        one.insert(one.begin(), {"--threads", "1"});
        three.insert(three.begin(), {"--threads", "3"});
        auto a = run_cli(one), b = run_cli(three);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out) << args[0];
    }
}

TEST(Cli, VerifyAllCoversEveryOperation) {
    auto r = run_cli({"verify", "all", "--M", "400", "--tol", "1e-4"});
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = r.json();
    EXPECT_TRUE(j["passed"].get<bool>());
    std::set<std::string> ops(j["operations"].begin(), j["operations"].end());
    for (const char* op :
         {"bernoulli_number", "bernoulli_polynomial", "series_t_over_expm1", "exp_linear_form", "build_root_system",
          "generate_weyl_group", "minimal_coset_reps", "act_on_exponents", "k_constant", "enumerate_vertices",
          "face_lattice", "triangulate_full_flags", "simplex_volume", "simplex_exp_series", "simplex_exp_numeric",
          "build_boxes", "generating_series", "bernoulli_number_of", "bernoulli_polynomial_of", "chamber_of", "P_value",
          "check_weyl_symmetry", "witten_special_value", "mixed_even_value", "witten_zeta_value", "zeta_numeric",
          "S_numeric", "check_FR", "check_mordell_relation", "check_parity_vanishing", "run", "suite_registry"})
        EXPECT_TRUE(ops.count(op)) << op;
    for (const auto& s : j["suites"])
        for (const auto& c : s["checks"]) EXPECT_EQ(c["status"], "pass") << c["name"];
}

TEST(Cli, TextVerifyReport) {
    auto r = run_cli({"--format", "text", "verify", "weyl-symmetry"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(r.out.size() - 5), "PASS\n");
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
