// Copyright 2026 The maxconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "maxconv/matrix.hpp"
#include "maxconv/oracle.hpp"
#include "maxconv/poly.hpp"

namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;
namespace cli = ::maxconv::cli;
namespace fx = ::maxconv::fixtures;
namespace mc = ::maxconv;
namespace oracle = ::maxconv::oracle;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string FirstLine(const std::string& s) { return s.substr(0, s.find('\n')); }

const char kSwap[] = "0 10\n10 0\n";
const char kDiag[] = "2 -inf\n-inf 0\n";

TEST(CliPolyTest, Goldens) {
  EXPECT_EQ(Invoke({"poly", "roots", "4, 4, 0"}).out, "(4, 0)\n");
  EXPECT_EQ(Invoke({"poly", "conv", "--k", "2", "2, 2, 0", "20, 0, 0"}).out,
            "20, 2, 0\n# monomial: x^2 (+) 2x (+) 20\n");
  EXPECT_EQ(Invoke({"poly", "fcf", "1, 0, 0"}).out, "false\n");
  EXPECT_EQ(Invoke({"poly", "concavify", "1, 0, 0"}).out,
            "1, 1/2, 0\n# monomial: x^2 (+) (1/2)x (+) 1\n# factored: (x (+) 1/2)^2\n");
  EXPECT_EQ(Invoke({"poly", "derive", "--k", "2", "0, 0, 0, 0"}).out,
            "0, 0\n# monomial: x (+) 0\n# factored: (x (+) 0)\n");
  EXPECT_EQ(Invoke({"poly", "eval", "--x", "3", "1, 0, 0"}).out, "6\n");
  EXPECT_EQ(Invoke({"poly", "eval", "--x", "-inf", "1, 0, 0"}).out, "1\n");
  EXPECT_EQ(Invoke({"poly", "add", "1, 0", "0, 0, 0"}).out,
            "1, 0, 0\n# monomial: x^2 (+) x (+) 1\n");
  EXPECT_EQ(Invoke({"poly", "mul", "1, 0", "1, 0"}).out,
            "2, 1, 0\n# monomial: x^2 (+) 1x (+) 2\n# factored: (x (+) 1)^2\n");
  EXPECT_EQ(Invoke({"poly", "hadamard", "2, 2, 0", "20, 10, 0"}).out,
            "22, 12, 0\n# monomial: x^2 (+) 12x (+) 22\n# factored: (x (+) 12) (x (+) 10)\n");
  EXPECT_EQ(Invoke({"poly", "roots", "-inf, -inf, 0, 0, 0"}).out, "(0, 0, -inf, -inf)\n");
}

TEST(CliPolyTest, ExitCodes) {
  const auto null_roots = Invoke({"poly", "roots", "-inf"});
  EXPECT_EQ(null_roots.code, cli::kDomainError);
  EXPECT_THAT(null_roots.err, StartsWith("domain error: "));
  EXPECT_EQ(Invoke({"poly", "roots", "1, x"}).code, cli::kParseError);
  EXPECT_EQ(Invoke({"poly", "hadamard", "1, 0", "1, 0, 0"}).code, cli::kDomainError);
  EXPECT_EQ(Invoke({"poly", "conv", "1, 0", "1, 0"}).code, cli::kParseError);
  EXPECT_EQ(Invoke({"poly", "nosuch", "1, 0"}).code, cli::kParseError);
  EXPECT_EQ(Invoke({}).code, cli::kParseError);
  EXPECT_EQ(Invoke({"--help"}).code, cli::kOk);
}

TEST(CliPolyTest, Json) {
  const auto r = Invoke({"poly", "mul", "--json", "1, 0", "-inf, 0"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result_coeffs"], nlohmann::json({"-inf", "1", "0"}));
  EXPECT_EQ(j["fcf"], true);
  EXPECT_EQ(j["roots"], nlohmann::json({"1", "-inf"}));
  EXPECT_EQ(j["inputs"].size(), 2u);
  const auto null = nlohmann::json::parse(Invoke({"poly", "add", "--json", "-inf", "-inf"}).out);
  EXPECT_TRUE(null["roots"].is_null());
}

TEST(CliPolyTest, ReadsStdinAndFiles) {
  EXPECT_EQ(Invoke({"poly", "roots", "-"}, "4, 4, 0\n").out, "(4, 0)\n");
  EXPECT_EQ(Invoke({"poly", "roots", "-"}, "# comment\n\n4, 4, 0\n").out, "(4, 0)\n");
}

TEST(CliPolyTest, OutputsRoundTrip) {
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle::gen_poly(8, oracle::instance_seed(80, 2 * t));
    const auto q = oracle::gen_poly(8, oracle::instance_seed(80, 2 * t + 1));
    const auto sp = mc::to_string(p), sq = mc::to_string(q);
    const auto prod = Invoke({"poly", "mul", sp, sq});
    ASSERT_EQ(prod.code, 0) << prod.err;
    EXPECT_EQ(mc::parse_poly(prod.out), mc::poly_mul(p, q));
    const auto cc = Invoke({"poly", "concavify", sp});
    EXPECT_EQ(mc::parse_poly(cc.out), mc::concavify(p));
    if (!p.is_null()) {
      const auto rs = Invoke({"poly", "roots", sp});
      EXPECT_EQ(mc::parse_roots(FirstLine(rs.out)), mc::roots(p));
    }
  }
}

TEST(CliMatrixTest, Goldens) {
  EXPECT_EQ(Invoke({"matrix", "fullcharpoly", "-"}, kSwap).out,
            "20, 10, 0\n# monomial: x^2 (+) 10x (+) 20\n# factored: (x (+) 10)^2\n");
  const auto pd = Invoke({"matrix", "pd-check", "-"}, kSwap);
  EXPECT_EQ(pd.code, 0);
  EXPECT_EQ(pd.out, "false\n# first failing order: 1\n");
  EXPECT_EQ(Invoke({"matrix", "pd-check", "-"}, kDiag).out, "true\n");
  EXPECT_EQ(Invoke({"matrix", "charpoly", "-"}, kSwap).out,
            "20, 0, 0\n# monomial: x^2 (+) x (+) 20\n");
  EXPECT_EQ(Invoke({"matrix", "permanent", "-"}, kSwap).out, "20\n");
  EXPECT_EQ(Invoke({"matrix", "nu", "-"}, kSwap).out, "10\n");
  EXPECT_EQ(Invoke({"matrix", "norm", "-"}, kSwap).out, "10\n");
  const std::string remark = mc::format_matrix(fx::dominant_sum());
  EXPECT_EQ(Invoke({"matrix", "eta", "--k", "3", "-"}, remark).out, "12\n");
  const std::string b = mc::format_matrix(fx::shared_b());
  EXPECT_EQ(Invoke({"matrix", "partitions", "-"}, b).out, "[[1], [2, 4], [3]]\n[[1, 3], [2, 4]]\n");
  EXPECT_EQ(Invoke({"matrix", "format", "-"}, kSwap).out, mc::format_matrix(fx::swap_ten()));
}

TEST(CliMatrixTest, ExitCodes) {
  EXPECT_EQ(Invoke({"matrix", "permanent", "-"}, "1 2\n3\n").code, cli::kParseError);
  EXPECT_EQ(Invoke({"matrix", "permanent", "-"}, "1 2 3\n4 5 6\n").code, cli::kDomainError);
  EXPECT_EQ(Invoke({"matrix", "eta", "--k", "3", "-"}, kSwap).code, cli::kDomainError);
  const auto big = mc::format_matrix(oracle::gen_matrix(9, oracle::default_pool(), 0.1, 1));
  EXPECT_EQ(Invoke({"matrix", "permanent", "--oracle", "-"}, big).code, cli::kCapExceeded);
  EXPECT_EQ(Invoke({"matrix", "nosuch", "-"}, kSwap).code, cli::kParseError);
}

TEST(CliMatrixTest, OracleOutputIsByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"charpoly"}, {"fullcharpoly"}, {"grampoly"},    {"permanent"},
      {"eta", "--k", "2"}, {"delta", "--k", "2"}, {"pd-check"}, {"partitions"},
      {"nu"}};
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 4;
    const auto m = mc::format_matrix(oracle::gen_matrix(
        n, oracle::EntryPool::integers(-1, 3), 0.2, oracle::instance_seed(81, t)));
    for (const auto& c : commands) {
      for (const bool json : {false, true}) {
        std::vector<std::string> args = {"matrix"};
        args.insert(args.end(), c.begin(), c.end());
        if (json) args.push_back("--json");
        args.push_back("-");
        const auto fast = Invoke(args, m);
        args.insert(args.end() - 1, "--oracle");
        const auto slow = Invoke(args, m);
        EXPECT_EQ(fast.code, 0) << c[0] << fast.err;
        EXPECT_EQ(fast.out, slow.out) << c[0] << "\n" << m;
      }
    }
  }
}

TEST(CliMatrixTest, OutputsRoundTrip) {
  for (int t = 0; t < 50; ++t) {
    const auto a = oracle::gen_matrix(1 + t % 4, oracle::default_pool(), 0.2,
                                      oracle::instance_seed(82, t));
    const auto doc = mc::format_matrix(a);
    EXPECT_EQ(mc::parse_matrix(Invoke({"matrix", "format", "-"}, doc).out), a);
    EXPECT_EQ(mc::parse_poly(Invoke({"matrix", "fullcharpoly", "-"}, doc).out),
              mc::full_char_poly(a));
    EXPECT_EQ(mc::parse_scalar(FirstLine(Invoke({"matrix", "permanent", "-"}, doc).out)),
              mc::permanent(a));
  }
}

class CliConvTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = ::testing::TempDir();
    a_ = Write("a.mat", mc::format_matrix(fx::shared_a()));
    b_ = Write("b.mat", mc::format_matrix(fx::shared_b()));
    diag_ = Write("diag.mat", kDiag);
    swap_ = Write("swap.mat", kSwap);
    ten_ = Write("ten.mat", "10 0\n0 10\n");
  }

  std::string Write(const std::string& name, const std::string& body) {
    const std::string path = dir_ + "/maxconv_cli_" + name;
    std::ofstream(path) << body;
    return path;
  }

  std::string dir_, a_, b_, diag_, swap_, ten_;
};

TEST_F(CliConvTest, Goldens) {
  EXPECT_EQ(FirstLine(Invoke({"conv", "additive", diag_, swap_}).out), "20, 10, 0");
  EXPECT_EQ(Invoke({"conv", "pd", diag_, ten_}).out,
            "20, 10, 0\n# monomial: x^2 (+) 10x (+) 20\n# factored: (x (+) 10)^2\n");
  EXPECT_EQ(FirstLine(Invoke({"conv", "maxrow", diag_, swap_}).out), "20, 10, 0");
  EXPECT_EQ(FirstLine(Invoke({"conv", "hadamard", diag_, swap_}).out), "22, 12, 0");
  EXPECT_EQ(Invoke({"conv", "mult", a_, b_}).out,
            "10, 10, 8, 5, 0\n# monomial: x^4 (+) 5x^3 (+) 8x^2 (+) 10x (+) 10\n"
            "# factored: (x (+) 5) (x (+) 3) (x (+) 2) (x (+) 0)\n");
  EXPECT_EQ(Invoke({"conv", "orient", a_, b_}).out,
            "P0 = [2, 3, 1, 4]\nQ0 = [3, 4, 2, 1]\npartition = [[1], [2, 4], [3]]\n");
  EXPECT_EQ(FirstLine(Invoke({"conv", "multi", diag_, swap_, ten_}).out), "20, 10, 0");
}

TEST_F(CliConvTest, Errors) {
  const auto pd = Invoke({"conv", "pd", diag_, swap_});
  EXPECT_EQ(pd.code, cli::kDomainError);
  EXPECT_THAT(pd.err, HasSubstr("order 1"));
  EXPECT_EQ(Invoke({"conv", "mult", swap_, a_}).code, cli::kDomainError);
  EXPECT_EQ(Invoke({"conv", "additive", "--cap", "1", diag_, swap_}).code, cli::kCapExceeded);
  EXPECT_EQ(Invoke({"conv", "additive", diag_, dir_ + "/missing.mat"}).code, cli::kParseError);
}

TEST_F(CliConvTest, Certificate) {
  const auto r = Invoke({"conv", "hadamard", "--certificate", "--json", diag_, swap_});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("certificate"));
  EXPECT_EQ(j["certificate"].size(), 3u);
  EXPECT_THAT(Invoke({"conv", "hadamard", "--certificate", diag_, swap_}).out,
              HasSubstr("# certificate x^0: P = ["));
}

TEST(CliVerifyTest, Examples) {
  const auto add = Invoke({"verify", "additive", "--n", "3", "--trials", "200", "--seed", "7"});
  EXPECT_EQ(add.code, 0);
  EXPECT_THAT(add.out, HasSubstr("passed: 200/200"));
  const auto fcf = Invoke({"verify", "fcf-concavity", "--n", "4", "--trials", "500"});
  EXPECT_EQ(fcf.code, 0);
  EXPECT_THAT(fcf.out, HasSubstr("passed: 500/500"));
  // The fixed symmetric pair actually satisfies the identity.
  const auto fixed = Invoke({"verify", "pd", "--n", "2", "--trials", "1", "--seed",
                          "fixed-counterexample-mode"});
  EXPECT_EQ(fixed.code, 0);
  EXPECT_THAT(fixed.out, HasSubstr("instance: fixed symmetric pair"));
  EXPECT_THAT(fixed.out, HasSubstr("violations: 0"));
}

TEST(CliVerifyTest, NegativeControlFindsViolations) {
  const auto r = Invoke({"verify", "mult", "--n", "3", "--trials", "20", "--seed", "3",
                      "--negative-control"});
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, HasSubstr("first violation: trial"));
  EXPECT_THAT(r.out, HasSubstr("A =\n"));
}

TEST(CliVerifyTest, Errors) {
  EXPECT_EQ(Invoke({"verify", "nosuch"}).code, cli::kParseError);
  EXPECT_EQ(Invoke({"verify", "additive", "--n", "6", "--trials", "1"}).code,
            cli::kCapExceeded);
  EXPECT_EQ(Invoke({"verify", "additive", "--seed", "abc"}).code, cli::kParseError);
}

}  // namespace
