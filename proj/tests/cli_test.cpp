// Copyright 2026 The hypercoeff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "hypercoeff/cli.hpp"
#include "hypercoeff/families.hpp"

namespace hypercoeff {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(Cli, CoeffsJsonRoundTripsByteForByte) {
  for (const std::vector<std::string>& args : {
           std::vector<std::string>{"coeffs", "--family", "arccos-M", "--a",
                                    "1/3", "--c", "7/4", "--p", "3/2+i",
                                    "--count", "8"},
           std::vector<std::string>{"coeffs", "--family", "binom-F", "--a",
                                    "1/3", "--b", "2", "--c", "7/4", "--p",
                                    "0.5", "--theta", "-2", "--backend",
                                    "f64"},
           std::vector<std::string>{"coeffs", "--family", "exp-K", "--p", "1",
                                    "--count", "3", "--normalized"}}) {
    const Outcome r = cli(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, SpotValuesThroughTheTool) {
  const Outcome r = cli({"coeffs", "--family", "exp-K", "--p", "1", "--count",
                     "3", "--normalized", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{
                              "n,re,im,pi_re,pi_im", "0,1,0,0,0", "1,5/4,0,0,0",
                              "2,57/64,0,0,0"}));
}

TEST(Cli, CsvAndJsonCarryTheSameNumbers) {
  const std::vector<std::string> base{"coeffs", "--family", "sin-M-combo",
                                      "--a", "2/3", "--c", "5", "--p",
                                      "1/2-3/4i", "--count", "12"};
  std::vector<std::string> csv = base, js = base;
  csv.insert(csv.end(), {"--format", "csv"});
  const Outcome c = cli(csv), j = cli(js);
  ASSERT_EQ(c.code, kExitOk);
  ASSERT_EQ(j.code, kExitOk);
  const auto rows = lines(c.out);
  const auto doc = nlohmann::json::parse(j.out);
  ASSERT_EQ(rows.size(), doc["coeffs"].size() + 1);
  EXPECT_EQ(rows[0], "n,re,im,pi_re,pi_im");
  for (std::size_t n = 0; n < doc["coeffs"].size(); ++n) {
    const auto& e = doc["coeffs"][n];
    EXPECT_EQ(rows[n + 1], std::to_string(n) + "," + e["re"].get<std::string>() +
                               "," + e["im"].get<std::string>() + "," +
                               e["pi_re"].get<std::string>() + "," +
                               e["pi_im"].get<std::string>());
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"coeffs", "--family", "exp-M", "--a", "1", "--c", "1",
                 "--p", "1"}).code,
            kExitOk);
  // validation
  EXPECT_EQ(cli({"coeffs", "--family", "nope-M"}).code, kExitValidation);
  EXPECT_EQ(cli({"coeffs", "--family", "exp-M", "--a", "1/0", "--c", "1",
                 "--p", "1"}).code,
            kExitValidation);
  EXPECT_EQ(cli({"coeffs", "--family", "exp-M", "--a", "1", "--c", "1",
                 "--p", "1", "--normalized"}).code,
            kExitValidation);
  const Outcome c2 = cli({"verify", "--family", "sin-M", "--a", "1/2", "--c", "2",
                      "--p", "1"});
  EXPECT_EQ(c2.code, kExitValidation);
  EXPECT_NE(c2.err.find("c-2"), std::string::npos) << c2.err;
  EXPECT_EQ(cli({"frobnicate"}).code, kExitValidation);
  // numeric
  EXPECT_EQ(cli({"coeffs", "--family", "exp-M", "--backend", "f64", "--a",
                 "1e200", "--c", "1e-200", "--p", "1e200", "--count", "40"})
                .code,
            kExitNumeric);
  // finding
  const Outcome f = cli({"verify", "--family", "arccos-M", "--a", "1/3", "--c",
                     "7/4", "--p", "3/2", "--count", "20"});
  EXPECT_EQ(f.code, kExitFinding);
  EXPECT_NE(f.out.find("\"first_mismatch\":12"), std::string::npos) << f.out;
  EXPECT_EQ(cli({"verify", "--family", "exp-M", "--a", "1/3", "--c", "7/4",
                 "--p", "3/2"}).code,
            kExitOk);
}

TEST(Cli, VerifySeedIsReproducible) {
  const std::vector<std::string> args{"verify", "--seed", "1", "--trials",
                                      "1", "--count", "16"};
  const Outcome a = cli(args), b = cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(lines(a.out).size(), list_families().size());
}

TEST(Cli, ListHasOneRowPerFamily) {
  const Outcome r = cli({"list"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).size(), list_families().size());
  EXPECT_NE(r.out.find("arcsin-M base=M h=arcsin form=single k=11 n0=11"),
            std::string::npos);
  EXPECT_NE(r.out.find("sinh-F base=F h=sinh form=single k=9 n0=9"),
            std::string::npos);
}

TEST(Cli, EvalNearClosedForms) {
  const Outcome e = cli({"eval", "--family", "exp-M", "--a", "1", "--c", "1",
                     "--p", "0", "--z", "1"});
  ASSERT_EQ(e.code, kExitOk);
  EXPECT_NEAR(std::stod(e.out), 2.718281828459045, 1e-12);
  const Outcome b = cli({"eval", "--family", "binom-F", "--a", "1", "--b", "1/3",
                     "--c", "1/3", "--p", "1", "--theta", "1", "--z", "1/2",
                     "--count", "60"});
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_NEAR(std::stod(b.out), 1.0, 1e-12);
}

}  // namespace
}  // namespace hypercoeff
