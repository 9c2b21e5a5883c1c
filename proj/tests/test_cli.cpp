#include <doctest.h>

#include "mcm/cli.hpp"
#include "mcm/engine.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mcm;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run mcm_run(std::vector<std::string> args) {
  args.insert(args.begin(), "mcm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mcm_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("weight grammar") {
  CHECK(std::get<WeightA>(parse_weight({Family::A, 2}, "2")) == WeightA{2, {0}});
  CHECK(std::get<WeightA>(parse_weight({Family::A, 3}, " 1 ; 1, 0 ")) == WeightA{1, {1, 0}});
  CHECK(std::get<WeightC>(parse_weight({Family::C, 3}, "1;2,1")) == WeightC{1, {2, 1}});
  const auto spin = std::get<WeightOrthogonal>(parse_weight({Family::B, 4}, "0;3/2,1/2"));
  CHECK(spin.spin);
  CHECK(spin.lambdas[0] == make_rational(3, 2));
  CHECK_FALSE(std::get<WeightOrthogonal>(parse_weight({Family::D, 4}, "1;1,-1")).spin);
  CHECK(std::get<WeightExceptional>(parse_weight({Family::E, 6}, "1,0,0,0,2")).coeffs ==
        std::vector<long>{1, 0, 0, 0, 2});

  CHECK_THROWS_AS(parse_weight({Family::A, 3}, "1;1"), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::A, 3}, "1;0,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::A, 3}, "x;0,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::A, 3}, "1/2;0,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::D, 4}, "1;1/2,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::D, 4}, "1;1,0", true), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::C, 2}, "2;0"), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::G, 2}, "1;0"), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::G, 2}, "-1"), InvalidArgument);
  CHECK_THROWS_AS(parse_weight({Family::G, 2}, ""), InvalidArgument);

  CHECK(parse_type("E6", 0) == SimpleType{Family::E, 6});
  CHECK(parse_type("g", 0) == SimpleType{Family::G, 2});
  CHECK_THROWS_AS(parse_type("A", 0), InvalidArgument);
  CHECK_THROWS_AS(parse_type("E6", 7), InvalidArgument);
  CHECK_THROWS_AS(parse_type("E", 5), InvalidArgument);
}

TEST_CASE("check") {
  auto r = mcm_run({"check", "--type", "A", "--rank", "2", "--weight", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "oracle: MCM"));
  CHECK(contains(r.out, "closed form: MCM (agrees)"));

  r = mcm_run({"check", "--type", "G", "--rank", "2", "--weight", "3"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "oracle: not MCM"));

  r = mcm_run({"check", "--type", "D", "--rank", "4", "--weight", "1;1,0"});
  CHECK((r.code == 0 || r.code == 1));
  CHECK(contains(r.out, "(agrees)"));

  r = mcm_run({"check", "-t", "C", "-r", "3", "-w", "1;2,1", "--trace", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["is_mcm"].get<bool>() == (r.code == 0));
  CHECK(j["agrees"].get<bool>());
  CHECK(j["trace"].size() > 2);
  CHECK(j["d"] == 6);

  for (const auto& bad : std::vector<std::vector<std::string>>{
           {"check", "-t", "D", "-r", "4", "-w", "1;1,-2"},
           {"check", "-t", "X", "-r", "4", "-w", "1"},
           {"check", "-t", "A", "-r", "3", "-w", "1;1"},
           {"check", "-t", "E", "-r", "5", "-w", "0"},
           {"check", "-t", "A", "-r", "2"},
           {"check", "-t", "A", "-r", "2", "-w", "1", "--format", "yaml"},
           {"frobnicate"},
           {}}) {
    CAPTURE(bad.empty() ? std::string("(none)") : bad[0]);
    const auto e = mcm_run(bad);
    CHECK(e.code == 2);
  }
  CHECK(contains(mcm_run({"check", "-t", "D", "-r", "4", "-w", "1;1,-2"}).err, "|lambda_{n-2}|"));
  CHECK(mcm_run({"--help"}).code == 0);
  CHECK(contains(mcm_run({"check", "--help"}).out, "lambda_0;lambda_1"));
}

TEST_CASE("enumerate") {
  auto r = mcm_run({"enumerate", "--type", "E", "--rank", "6"});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "count=97"));

  r = mcm_run({"enumerate", "--type", "E", "--rank", "7", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 99);

  r = mcm_run({"enumerate", "--type", "F", "--rank", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);

  r = mcm_run({"enumerate", "-t", "G", "-f", "text", "--exhaustive"});
  CHECK(contains(r.out, "a = 0\na = 1\na = 2\n"));

  const auto dir = scratch_dir("enumerate");
  std::filesystem::create_directories(dir);
  const auto file = (dir / "c3.json").string();
  r = mcm_run({"enumerate", "-t", "C", "-r", "3", "--box", "2", "-f", "json", "-o", file});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "count="));
  CHECK(nlohmann::json::parse(slurp(file))["box_relative"] == true);

  r = mcm_run({"enumerate", "--type", "A", "--rank", "3"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--box"));
  CHECK(mcm_run({"enumerate", "-t", "E", "-r", "6", "--box", "3"}).code == 2);
  CHECK(mcm_run({"enumerate", "-t", "E", "-r", "6", "--bound", "1", "--ceiling", "1"}).code == 2);
  CHECK(mcm_run({"enumerate", "-t", "E", "-r", "6", "-f", "xml"}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("crosscheck") {
  auto r = mcm_run({"crosscheck", "--type", "C", "--ranks", "2..4", "--box", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "C4 box=4: tested="));

  r = mcm_run({"crosscheck", "--type", "B", "--ranks", "3..4", "--box", "3", "--spin"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "disagreements=0"));

  r = mcm_run({"crosscheck", "--type", "A", "--ranks", "2..2", "--box", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "tested=1 "));

  CHECK(mcm_run({"crosscheck", "--type", "E", "--ranks", "6"}).code == 2);
  CHECK(mcm_run({"crosscheck", "--type", "C", "--ranks", "4..2"}).code == 2);
  CHECK(mcm_run({"crosscheck", "--type", "A", "--ranks", "1"}).code == 2);
  CHECK(mcm_run({"crosscheck", "--type", "C", "--ranks", "2", "--spin"}).code == 2);
}

TEST_CASE("rootinfo") {
  auto r = mcm_run({"rootinfo", "--type", "E", "--rank", "8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "theta = e7 + e8"));
  CHECK(contains(r.out, "Levi: E7"));
  CHECK(contains(r.out, "d = 58"));

  CHECK(contains(mcm_run({"rootinfo", "--type", "C", "--rank", "3"}).out, "rho = [3,2,1]"));

  r = mcm_run({"rootinfo", "--type", "G", "--rank", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["levi_type"] == "A1");
  CHECK(j["levi_fundamental_weights"][0] == nlohmann::json::array({"1/2", "-1/2", "0"}));
  CHECK(j["d"] == 6);

  CHECK(mcm_run({"rootinfo", "--type", "D", "--rank", "2"}).code == 2);
}

TEST_CASE("tables") {
  const auto a = scratch_dir("tables_a"), b = scratch_dir("tables_b");
  auto r = mcm_run({"tables", "--out", a.string(), "--jobs", "1"});
  REQUIRE(r.code == 0);
  CHECK(mcm_run({"tables", "--out", b.string(), "--jobs", "8"}).code == 0);

  const std::vector<std::pair<std::string, long>> counts{
      {"E6", 97}, {"E7", 99}, {"E8", 18}, {"F4", 10}, {"G2", 3}};
  for (const auto& [name, count] : counts) {
    CAPTURE(name);
    for (const char* ext : {"json", "csv", "txt"}) {
      const auto file = name + "." + ext;
      CHECK(slurp(a / file) == slurp(b / file));
    }
    const auto doc = slurp(a / (name + ".json"));
    CHECK(nlohmann::json::parse(doc)["count"] == count);
    CHECK(emit_table(parse_table(doc, TableFormat::Json), TableFormat::Json) == doc);
    const auto csv = slurp(a / (name + ".csv"));
    CHECK(emit_table(parse_table(csv, TableFormat::Csv), TableFormat::Csv) == csv);
  }
  // Rerun into the same directory: byte-identical.
  const auto before = slurp(a / "E8.txt");
  CHECK(mcm_run({"tables", "--out", a.string()}).code == 0);
  CHECK(slurp(a / "E8.txt") == before);

  // An existing regular file cannot serve as the output directory.
  const auto blocker = scratch_dir("tables_file");
  std::ofstream(blocker) << "x";
  CHECK(mcm_run({"tables", "--out", blocker.string()}).code == 2);
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
  std::filesystem::remove(blocker);
}
