#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

const std::string cli = ORIENT_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string out_file = "/tmp/orient_cli_out.txt";
  std::string cmd = cli + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream body;
  body << in.rdbuf();
  return {code, body.str()};
}

std::string tmp_path(const std::string& name) { return "/tmp/orient_cli_" + name; }

std::string last_line(const std::string& path) {
  std::ifstream in(path);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return last;
}

}  // namespace

TEST_CASE("gen-extremal then solve, chained") {
  auto gen = run("gen-extremal --n 9 --seed 1 --out " + tmp_path("g9.json") +
                 " --partition-out " + tmp_path("p9.json"));
  REQUIRE(gen.exit_code == 0);
  auto solve = run("solve --graph " + tmp_path("g9.json") + " --pattern +++++++++ --out " +
                   tmp_path("solve.json"));
  CHECK((solve.exit_code == 0 || solve.exit_code == 1));  // recorded either way
  json report = json::parse(last_line(tmp_path("solve.json")));
  CHECK(report["config"]["pattern"] == "+++++++++");
  CHECK(report.contains("timestamp"));
}

TEST_CASE("malformed graph JSON exits 3 and names the offending pair") {
  std::ofstream bad(tmp_path("bad.json"));
  bad << R"({"n": 3, "edges": [[0,1],[1,0]]})";
  bad.close();
  auto r = run("solve --graph " + tmp_path("bad.json") + " --pattern +++");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("(1,0)") != std::string::npos);
}

TEST_CASE("sweep on the directed triangle: directed found, transitive not") {
  std::ofstream tri(tmp_path("tri.json"));
  tri << R"({"n": 3, "edges": [[0,1],[1,2],[2,0]]})";
  tri.close();
  std::remove(tmp_path("sweep.json").c_str());
  auto r = run("sweep --graph " + tmp_path("tri.json") + " --tmin 3 --tmax 3 --out " +
               tmp_path("sweep.json"));
  REQUIRE(r.exit_code == 0);
  json report = json::parse(last_line(tmp_path("sweep.json")));
  bool directed_found = false, transitive_missing = false;
  for (const auto& cell : report["result"]["cells"]) {
    if (cell["pattern"] == "+++") directed_found = cell["status"] == "found";
    if (cell["pattern"] == "++-") transitive_missing = cell["status"] == "not-found";
  }
  CHECK(directed_found);
  CHECK(transitive_missing);
}

TEST_CASE("identical config and seed reproduce the report byte for byte, modulo timestamp") {
  std::string out = tmp_path("wind.json");
  std::remove(out.c_str());
  auto first = run("wind-sim --k 8 --paths 100x10 --eps 0.05 --trials 20 --seed 9 --out " + out);
  auto second = run("wind-sim --k 8 --paths 100x10 --eps 0.05 --trials 20 --seed 9 --out " + out);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  std::ifstream in(out);
  std::string line1, line2;
  std::getline(in, line1);
  std::getline(in, line2);
  json a = json::parse(line1), b = json::parse(line2);
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("randomized commands demand an explicit seed") {
  auto r = run("gen-random --n 8 --min-semidegree 2 --out " + tmp_path("r.json"));
  CHECK(r.exit_code > 2);
  auto sampled = run("check-expander --graph " + tmp_path("g9.json") +
                     " --nu 0.05 --tau 0.2 --mode sampled --budget 5");
  CHECK(sampled.exit_code == 3);
  CHECK(sampled.output.find("seed") != std::string::npos);
}

TEST_CASE("oracle subcommand agrees with solve on a small instance") {
  run("gen-random --n 6 --min-semidegree 1 --seed 4 --out " + tmp_path("g6.json"));
  auto solve = run("solve --graph " + tmp_path("g6.json") + " --pattern ++++++");
  auto oracle = run("oracle --graph " + tmp_path("g6.json") + " --pattern ++++++");
  CHECK(solve.exit_code == oracle.exit_code);
}

TEST_CASE("ORIENT_OUT_DIR prefixes relative outputs") {
  std::string dir = "/tmp/orient_out_dir_test";
  REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
  std::string cmd = "ORIENT_OUT_DIR=" + dir + " " + cli +
                    " gen-extremal --n 8 --seed 1 --out env_graph.json > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  std::ifstream produced(dir + "/env_graph.json");
  CHECK(produced.good());
}

TEST_CASE("check-expander and check-partition chain on the n=16 instance") {
  run("gen-extremal --n 16 --seed 2 --out " + tmp_path("g16.json") + " --partition-out " +
      tmp_path("p16.json"));
  auto expander = run("check-expander --graph " + tmp_path("g16.json") +
                      " --nu 0.1 --tau 0.2 --mode exhaustive --out " + tmp_path("exp.json"));
  CHECK(expander.exit_code == 1);  // definitive negative with witness
  json report = json::parse(last_line(tmp_path("exp.json")));
  CHECK_FALSE(report["result"]["witness"].is_null());
  auto partition = run("check-partition --graph " + tmp_path("g16.json") + " --partition " +
                       tmp_path("p16.json") + " --delta 0.1 --C 3");
  CHECK(partition.exit_code == 0);
}

TEST_CASE("proper-path and balanced-system on a prepared host") {
  // n=40 extremal instance with a planted special edge Y->W: 15 (first of Y)
  // -> 0 (first of W) given the builder's contiguous layout W X Y Z
  auto gen = run("gen-extremal --n 40 --seed 6 --out " + tmp_path("g40.json") +
                 " --partition-out " + tmp_path("p40.json"));
  REQUIRE(gen.exit_code == 0);
  json graph = json::parse(last_line(tmp_path("g40.json")));
  graph["edges"].push_back({20, 0});  // Y starts at 20 (|W| = |X| = 10)
  std::ofstream planted(tmp_path("g40p.json"));
  planted << graph.dump();
  planted.close();
  auto proper = run("proper-path --graph " + tmp_path("g40p.json") + " --partition " +
                    tmp_path("p40.json") + " --edge 20,0 --out " + tmp_path("path.json"));
  CHECK(proper.exit_code == 0);
  json report = json::parse(last_line(tmp_path("path.json")));
  CHECK(report["result"]["path"].size() == 13);

  auto balanced = run("balanced-system --graph " + tmp_path("g40.json") + " --partition " +
                      tmp_path("p40.json"));
  CHECK(balanced.exit_code == 0);  // |X| = |Z|: empty system suffices
}

TEST_CASE("gen-extremal emits the TSV size table") {
  auto r = run("gen-extremal --n 9 --seed 1 --table 3:20 --tsv " + tmp_path("table.tsv"));
  REQUIRE(r.exit_code == 0);
  std::ifstream tsv(tmp_path("table.tsv"));
  std::string header;
  std::getline(tsv, header);
  CHECK(header.find("min_semidegree") != std::string::npos);
  int rows = 0;
  std::string line;
  while (std::getline(tsv, line)) rows += !line.empty();
  CHECK(rows == 18);
}
