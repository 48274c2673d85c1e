#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "ostro/cli.hpp"
#include "ostro/report_json.hpp"
#include "../support/helpers.hpp"

using namespace ostro;
using namespace ostro::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::string usage_message(const std::vector<std::string>& args) {
  try {
    parse_args(args);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UsageError);
    return e.what();
  }
  FAIL("expected a usage error");
  return {};
}

}  // namespace

TEST_CASE("parse_args examples") {
  auto inv = parse_args({"enclose", "--f", "exp(t*s)", "--rect", "0", "1", "0", "1", "--subdivide", "4", "4",
                         "--bounds", "1", "5.43657", "--json"});
  CHECK(inv.subcommand == Subcommand::Enclose);
  CHECK(inv.output_mode == OutputMode::Json);
  CHECK(inv.f == "exp(t*s)");
  CHECK(inv.subdivide == std::array<int, 2>{4, 4});
  CHECK((*inv.bounds)[1] == 5.43657);
  CHECK_FALSE(inv.point);

  inv = parse_args({"verify", "--trials", "1000", "--seed", "42", "--rules", "t3,t4,t5,corrected"});
  CHECK(inv.subcommand == Subcommand::Verify);
  CHECK(inv.trials == 1000);
  CHECK(inv.seed == 42u);
  CHECK(inv.rules == std::vector<std::string>{"t3", "t4", "t5", "corrected"});
  CHECK(inv.lambdas == std::vector<double>{0, 0.25, 0.5, 1});
  CHECK(inv.output_mode == OutputMode::Text);

  inv = parse_args({"compare", "--f", "t", "--rect", "-2", "-1", "0", "1", "--bounds", "-1", "2"});
  CHECK((*inv.rect)[0] == -2.0);
  CHECK((*inv.bounds)[0] == -1.0);
  CHECK(inv.lambdas == std::vector<double>{0});
  CHECK_FALSE(parse_args({"enclose", "--f", "t", "--rect", "0", "1", "0", "1", "--bounds", "auto"}).bounds);
}

TEST_CASE("usage errors name the offending flag") {
  CHECK(usage_message({"enclose", "--rect", "1", "0", "0", "1", "--f", "t"}).find("--rect") != std::string::npos);
  CHECK(usage_message({"enclose", "--f", "t", "--rect", "0", "1", "0", "1", "--frob"}).find("--frob") !=
        std::string::npos);
  CHECK(usage_message({"enclose", "--f", "t"}).find("--rect") != std::string::npos);
  CHECK(usage_message({"enclose", "--f", "t", "--rect", "0", "1", "0", "1", "--point", "2", "0"}).find("--point") !=
        std::string::npos);
  CHECK(usage_message({"enclose", "--f", "t", "--rect", "0", "1", "0", "1", "--bounds", "2", "1"}).find("--bounds") !=
        std::string::npos);
  CHECK(usage_message({"enclose", "--f", "t", "--rect", "0", "1", "0", "x"}).find("--rect") != std::string::npos);
  CHECK(usage_message({"verify", "--rules", "t1,t7"}).find("--rules") != std::string::npos);
  CHECK(usage_message({"verify", "--rules", "t1", "--expect-hold", "t3"}).find("--expect-hold") != std::string::npos);
  CHECK(usage_message({"compare", "--f", "t", "--rect", "0", "1", "0", "1", "--lambda", "1.5"}).find("--lambda") !=
        std::string::npos);
  CHECK(usage_message({"verify", "--rect", "0", "1", "0", "1"}).find("--rect") != std::string::npos);
  CHECK(!usage_message({}).empty());
  CHECK(!usage_message({"frobnicate"}).empty());
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"enclose", "--f", "t*s", "--rect", "0", "1", "0", "1", "--bounds", "1", "1"}).code == 0);
  CHECK(run_cli({"enclose", "--rect", "1", "0", "0", "1", "--f", "t"}).code == 2);
  CHECK(run_cli({"enclose", "--f", "t+", "--rect", "0", "1", "0", "1"}).code == 2);
  CHECK(run_cli({"enclose", "--f", "log(t)", "--rect", "-1", "1", "0", "1", "--bounds", "0", "0"}).code == 1);
  CHECK(run_cli({"identity", "--f", "sqrt(t)", "--rect", "-1", "1", "0", "1"}).code == 1);
  CHECK(run_cli({"compare", "--f", "1", "--rect", "0", "1", "0", "1", "--point", "0.9", "0.9", "--bounds", "0",
                 "0", "--lambda", "0.5"})
            .code == 2);
  CHECK(run_cli({"verify", "--trials", "3", "--rules", "t5", "--expect-hold", "t5"}).code == 3);
  CHECK(run_cli({"verify", "--trials", "3", "--rules", "t3,t5", "--expect-hold", "t3"}).code == 0);
  const Run help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enclose") != std::string::npos);
  CHECK(run_cli({"--version"}).out == tool_version() + "\n");
}

TEST_CASE("enclose and identity documents") {
  Run r = run_cli({"enclose", "--f", "t*s", "--rect", "0", "1", "0", "1", "--bounds", "1", "1", "--subdivide", "1",
                   "1", "--point", "0.5", "0.5", "--json", "--no-timestamp"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(std::abs(doc["results"]["enclosure"]["lo"].get<double>() - 0.25) <= 1e-12);
  CHECK(std::abs(doc["results"]["enclosure"]["hi"].get<double>() - 0.25) <= 1e-12);
  CHECK(doc["flags"]["rigorous"] == true);
  CHECK(doc["runtime_ms"].is_null());

  r = run_cli({"identity", "--f", "t*s", "--rect", "0", "1", "0", "1", "--point", "0.5", "0.5", "--json"});
  REQUIRE(r.code == 0);
  doc = Json::parse(r.out);
  CHECK(std::abs(doc["results"]["oracle"].get<double>()) <= 1e-12);
  CHECK(std::abs(doc["results"]["derived"].get<double>()) <= 1e-12);
  CHECK(std::abs(doc["results"]["verbatim"].get<double>() + 0.09375) <= 1e-12);
  CHECK(doc["runtime_ms"].is_number());

  r = run_cli({"enclose", "--f", "t+", "--rect", "0", "1", "0", "1", "--json"});
  doc = Json::parse(r.out);
  CHECK(doc["error"]["code"] == "ParseError");
  CHECK(doc["error"]["position"] == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("verify reports violations of the main rule as stated with exit 0") {
  const Run r = run_cli({"verify", "--trials", "40", "--seed", "42", "--rules", "t5", "--json", "--no-timestamp"});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["flags"]["violations"].get<long>() > 0);
  CHECK(doc["results"]["rules"][0]["rule"] == "t5");
  CHECK(doc["results"]["tool_version"] == tool_version());
}

TEST_CASE("identical argv gives byte-identical JSON") {
  const std::vector<std::string> args = {"verify", "--trials", "30", "--seed", "9", "--json", "--no-timestamp"};
  auto with_threads = [&](const char* n) {
    auto a = args;
    a.push_back("--threads");
    a.push_back(n);
    return run_cli(a).out;
  };
  const std::string first = run_cli(args).out;
  CHECK(first == run_cli(args).out);
  // The thread count is not echoed, so documents match across it.
  CHECK(with_threads("1") == with_threads("4"));
  CHECK(first == with_threads("1"));
  const std::vector<std::string> enc = {"enclose", "--f", "exp(t*s)", "--rect", "0", "1", "0", "1", "--subdivide",
                                        "3", "2", "--json", "--no-timestamp"};
  CHECK(run_cli(enc).out == run_cli(enc).out);
}

TEST_CASE("text mode prints the same numbers as JSON mode") {
  for (const std::vector<std::string>& base :
       {std::vector<std::string>{"enclose", "--f", "exp(t*s)", "--rect", "0", "1", "0", "1", "--subdivide", "2", "2",
                                 "--bounds", "1", "5.43656365691809", "--no-timestamp"},
        std::vector<std::string>{"compare", "--f", "t^2*s", "--rect", "0", "2", "0", "1", "--lambda", "0.25",
                                 "--no-timestamp"},
        std::vector<std::string>{"verify", "--trials", "5", "--no-timestamp"}}) {
    const std::string text = run_cli(base).out;
    auto json_args = base;
    json_args.push_back("--json");
    const std::string json = run_cli(json_args).out;
    const std::regex number(R"(-?\d+(\.\d+)?([eE][-+]?\d+)?)");
    std::set<std::string> json_numbers;
    for (auto it = std::sregex_iterator(json.begin(), json.end(), number); it != std::sregex_iterator(); ++it)
      json_numbers.insert(it->str());
    std::istringstream lines(text);
    std::string line;
    int seen = 0;
    while (std::getline(lines, line)) {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos) continue;
      const std::string value = line.substr(eq + 3);
      if (value.empty() || value[0] == '"') continue;
      for (auto it = std::sregex_iterator(value.begin(), value.end(), number); it != std::sregex_iterator(); ++it) {
        CAPTURE(line);
        CHECK(json_numbers.count(it->str()) == 1);
        ++seen;
      }
    }
    CHECK(seen > 5);
  }
}

TEST_CASE("--out writes the same document") {
  const auto path = std::filesystem::temp_directory_path() / "ostro_cli_out_test.json";
  std::filesystem::remove(path);
  const Run r = run_cli({"identity", "--f", "t*s", "--rect", "0", "1", "0", "1", "--json", "--no-timestamp", "--out",
                         path.string()});
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.out);
  std::filesystem::remove(path);
}
