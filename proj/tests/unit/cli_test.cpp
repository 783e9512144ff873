#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cyclonorm/cli/run.hpp"

namespace cyclonorm::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(nlohmann::json::parse(line));
  return rows;
}

TEST(Cli, NormUnitQuadraticComposite) {
  const auto r = invoke({"norm", "--poly", "1-x+x^2", "--n", "35"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "norm n=35 poly=\"1 - x + x^2\" value=1 unit=true method=divisor_product\n");
}

TEST(Cli, NormAllRoots) {
  const auto r = invoke({"norm", "--poly", "1-x+x^2", "--n", "4", "--all-roots", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto rows = json_lines(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["value"], "3");
  EXPECT_EQ(rows[0]["unit"], false);
}

TEST(Cli, JsonKeySetIsFixed) {
  const std::vector<std::vector<std::string>> commands{
      {"norm", "--poly", "1-x", "--n", "7"},
      {"domino", "--n", "11"},
      {"lucas", "--m", "90"},
      {"verify", "theorem2", "--max-prime", "7"},
      {"verify", "relnorm", "--real", "--max-prime", "13"},
      {"sweep", "unit", "--poly", "1-x+x^2", "--min", "2", "--max", "8"},
  };
  const std::vector<std::string> keys{"command", "n", "poly", "value", "unit", "method", "ok"};
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = invoke(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    for (const auto& row : json_lines(r.out)) {
      ASSERT_EQ(row.size(), keys.size());
      for (const auto& k : keys) ASSERT_TRUE(row.contains(k)) << k;
    }
  }
}

TEST(Cli, BigValuesSerializeAsDecimalStrings) {
  const auto r = invoke({"lucas", "--m", "200", "--format", "json"});
  const auto rows = json_lines(r.out);
  ASSERT_TRUE(rows[0]["value"].is_string());
  EXPECT_EQ(rows[0]["value"], "627376215338105766356982006981782561278127");
}

TEST(Cli, FieldElementsSerializeAsComponents) {
  const auto r = invoke({"verify", "relnorm", "--real", "--max-prime", "5", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto rows = json_lines(r.out);
  ASSERT_GE(rows.size(), 1u);
  const auto& v = rows[0]["value"];
  EXPECT_EQ(v["a"], "5");
  EXPECT_EQ(v["b"], "-1");
  EXPECT_EQ(v["den"], "2");
  EXPECT_EQ(v["dstar"], "5");
}

TEST(Cli, DominoTables) {
  EXPECT_EQ(invoke({"domino", "--n", "11"}).out,
            "domino n=11 value=[1,11,44,77,55,11] method=closed_form total=199\n");
  const auto brute = invoke({"domino", "--n", "17", "--brute-force"});
  EXPECT_EQ(brute.code, kExitOk);
  EXPECT_NE(brute.out.find("[1,17,119,442,935,1122,714,204,17]"), std::string::npos);
  EXPECT_EQ(invoke({"domino", "--n", "31", "--brute-force"}).code, kExitUsage);
}

TEST(Cli, CsvOutput) {
  const auto r = invoke({"domino", "--n", "4", "--format", "csv"});
  EXPECT_EQ(r.out, "command,n,poly,value,unit,method,ok\ndomino,4,,[1;4;2],,closed_form,\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"verify", "theorem2", "--max-prime", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "theorem2", "--max-prime", "3"}).code, kExitOk);
  EXPECT_EQ(invoke({"norm", "--poly", "1 + * x", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"norm", "--poly", "1-x", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"norm", "--poly", "x-x", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "theorem1", "--min", "1", "--max", "50"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "theorem1", "--min", "60", "--max", "50"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "relnorm", "--max-prime", "13"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  const auto syntax = invoke({"norm", "--poly", "1 + * x", "--n", "5"});
  EXPECT_NE(syntax.err.find("syntax error at offset 4"), std::string::npos);
  EXPECT_TRUE(syntax.out.empty());
}

TEST(Cli, VerifySweepsSucceed) {
  EXPECT_EQ(invoke({"verify", "theorem1", "--min", "5", "--max", "200"}).code, kExitOk);
  EXPECT_EQ(invoke({"verify", "corollary", "--min", "5", "--max", "200"}).code, kExitOk);
  EXPECT_EQ(invoke({"verify", "relnorm", "--imag", "--max-prime", "31", "--all-k"}).code, kExitOk);
  const auto t2 = invoke({"verify", "theorem2", "--max-prime", "11", "--format", "json"});
  const auto rows = json_lines(t2.out);
  ASSERT_EQ(rows.size(), 5u);  // 3, 5, 7, 11 + summary
  EXPECT_EQ(rows[3]["value"], "199");
  EXPECT_TRUE(rows[4]["n"].is_null());
  EXPECT_EQ(rows[4]["ok"], true);
}

TEST(Cli, UnitSweepReportsWithoutFailing) {
  // 1 - x is a unit exactly when n is not a prime power.
  const auto r = invoke({"sweep", "unit", "--poly", "1-x", "--min", "2", "--max", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("sweep unit n=6 poly=\"1 - x\" value=1 unit=true"), std::string::npos);
  EXPECT_NE(r.out.find("sweep unit n=5 poly=\"1 - x\" value=5 unit=false"), std::string::npos);
}

TEST(Cli, OutputIsDeterministicAcrossJobs) {
  const auto one = invoke({"verify", "theorem1", "--min", "5", "--max", "400", "--jobs", "1"});
  const auto four = invoke({"verify", "theorem1", "--min", "5", "--max", "400", "--jobs", "4"});
  const auto again = invoke({"verify", "theorem1", "--min", "5", "--max", "400", "--jobs", "4"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(four.out, again.out);
  const auto s1 = invoke({"sweep", "unit", "--poly", "1+x-x^2", "--min", "2", "--max", "300",
                          "--format", "json", "--jobs", "3"});
  const auto s2 = invoke({"sweep", "unit", "--poly", "1+x-x^2", "--min", "2", "--max", "300",
                          "--format", "json"});
  EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

}  // namespace
}  // namespace cyclonorm::cli
