#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  if (const char* env = std::getenv("NETGAME_CLI")) return env;
  return "./tools/netgame";
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = (env.empty() ? "" : "env " + env + " ") + cli_path() + " " + args +
                    " 2>/dev/null";
  std::array<char, 4096> buffer;
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/netgame_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string kP7 = "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n";

}  // namespace

TEST_CASE("info reports the graph invariants") {
  auto path = write_temp("p7.txt", kP7);
  auto result = run("info --graph " + path);
  REQUIRE(result.exit_code == 0);
  json doc = json::parse(result.out);
  CHECK(doc["alpha"] == 4);
  CHECK(doc["omega"] == 2);
  CHECK(doc["unique_max_independent_set"] == true);
  CHECK(doc["eta"].get<double>() == doctest::Approx(0.6180339887));
  CHECK(doc["tree"]["kind"] == "line");
}

TEST_CASE("enumerate emits both the normalized and effort-unit views") {
  auto path = write_temp("p7.txt", kP7);
  auto result = run("enumerate --graph " + path + " --delta 0.8 --e-star 2.0");
  REQUIRE(result.exit_code == 0);
  json doc = json::parse(result.out);
  CHECK(doc["count"] == 5);
  REQUIRE(doc["lcp"]["solutions"].is_array());
  CHECK(doc["lcp"]["delta"] == 0.8);
  for (const auto& sol : doc["lcp"]["solutions"]) {
    CHECK(sol.contains("support"));
    CHECK(sol.contains("x"));
    CHECK(sol.contains("l1"));
  }
  // effort-units view scales by e*
  bool found_specialists = false;
  for (const auto& profile : doc["equilibria"]) {
    double total = 0;
    for (const auto& v : profile) total += v.get<double>();
    if (std::abs(total - 8.0) < 1e-9) found_specialists = true;
  }
  CHECK(found_specialists);
}

TEST_CASE("cli json output round-trips bit-exactly") {
  auto path = write_temp("p7.txt", kP7);
  auto result = run("enumerate --graph " + path + " --delta 0.8");
  REQUIRE(result.exit_code == 0);
  json doc = json::parse(result.out);
  std::string again = doc.dump(2);
  CHECK(again + "\n" == result.out);
  json reparsed = json::parse(again);
  for (std::size_t s = 0; s < doc["lcp"]["solutions"].size(); ++s) {
    const auto& a = doc["lcp"]["solutions"][s]["x"];
    const auto& b = reparsed["lcp"]["solutions"][s]["x"];
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(a[i].get<double>() == b[i].get<double>());  // bitwise equality
  }
}

TEST_CASE("verify accepts table equilibria inside their validity range only") {
  auto graph = write_temp("p7.txt", kP7);
  double d = 0.8, e = 1 + d - d * d, s = 1 / (1 + d);
  json profile = json::array({1 / e, (1 - d) / e, (1 - d) / e, 1 / e, 0.0, s, s});
  auto accepted = write_temp("col4.json", profile.dump());
  CHECK(run("verify --graph " + graph + " --delta 0.8 " + accepted).exit_code == 0);

  // the same pattern is invalid at delta = 0.6 < 1/sqrt(2)
  d = 0.6, e = 1 + d - d * d, s = 1 / (1 + d);
  json invalid = json::array({1 / e, (1 - d) / e, (1 - d) / e, 1 / e, 0.0, s, s});
  auto rejected = write_temp("col4_low.json", invalid.dump());
  auto result = run("verify --graph " + graph + " --delta 0.6 " + rejected);
  CHECK(result.exit_code == 1);
  json doc = json::parse(result.out);
  CHECK(doc["is_nash"] == false);
  CHECK(doc.contains("worst_violation"));

  auto zeros = write_temp("zeros.json", "[0, 0, 0, 0, 0, 0, 0]");
  CHECK(run("verify --graph " + graph + " --delta 0.8 " + zeros).exit_code == 1);

  auto short_profile = write_temp("short.json", "[1, 0, 1]");
  CHECK(run("verify --graph " + graph + " --delta 0.8 " + short_profile).exit_code == 2);
}

TEST_CASE("usage and parse failures exit with code 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("enumerate --graph /nonexistent.txt --delta 0.8").exit_code == 2);
  auto bad = write_temp("bad.txt", "3 1\n0 0\n");
  CHECK(run("enumerate --graph " + bad + " --delta 0.8").exit_code == 2);
  auto graph = write_temp("p7.txt", kP7);
  CHECK(run("enumerate --graph " + graph + " --delta 1.7").exit_code == 2);
  CHECK(run("enumerate --graph " + graph).exit_code == 2);  // --delta required
  CHECK(run("info --graph " + graph + " --format csv").exit_code == 2);
}

TEST_CASE("cap overruns exit with code 3") {
  std::string big = "24 0\n";
  auto path = write_temp("big.txt", big);
  CHECK(run("enumerate --graph " + path + " --delta 0.8").exit_code == 3);
  CHECK(run("enumerate --graph " + path + " --delta 0.8 --cap 25").exit_code == 0);
  // the environment variable raises the default cap the same way
  CHECK(run("enumerate --graph " + path + " --delta 0.8", "NETGAME_CAP=25").exit_code == 0);
  CHECK(run("enumerate --graph " + path + " --delta 0.8", "NETGAME_CAP=10").exit_code == 3);
  auto graph = write_temp("p7.txt", kP7);
  CHECK(run("sweep --graph " + graph +
            " --delta-min 0.4 --delta-max 1.0 --steps 50 --budget 10")
            .exit_code == 3);
}

TEST_CASE("sweep csv rows carry one interval each") {
  auto graph = write_temp("p7.txt", kP7);
  auto result =
      run("sweep --graph " + graph + " --delta-min 0.4 --delta-max 1.0 --steps 61 --format csv");
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.rfind("support,delta_lo,delta_hi,play_at_lo,play_at_hi\n", 0) == 0);
  CHECK(result.out.find("\"0 2 4 6\"") != std::string::npos);
}

TEST_CASE("bounds command emits the report battery") {
  auto graph = write_temp("p7.txt", kP7);
  auto result = run("bounds --graph " + graph + " --delta 0.8 --sigma-b 0.6");
  REQUIRE(result.exit_code == 0);
  json doc = json::parse(result.out);
  CHECK(doc["aggregate_play"]["lower"].get<double>() == doctest::Approx(4.0));
  CHECK(doc["aggregate_play"]["exact"].get<double>() == doctest::Approx(4.0));
  CHECK(doc["tree_aggregate_play"]["upper"].get<double>() == doctest::Approx(4.0));
  CHECK(doc["max_welfare"]["applicable"] == true);
  CHECK(doc["eta"].get<double>() == doctest::Approx(0.6180339887));
}

TEST_CASE("max-play and welfare commands report the oracle values") {
  auto graph = write_temp("p7.txt", kP7);
  auto play = run("max-play --graph " + graph + " --delta 0.8");
  REQUIRE(play.exit_code == 0);
  json play_doc = json::parse(play.out);
  CHECK(play_doc["value"].get<double>() == doctest::Approx(4.0));
  CHECK(play_doc["diagnostics"].empty());

  auto welfare = run("welfare --graph " + graph + " --delta 0.8 --sigma-b 0.7");
  REQUIRE(welfare.exit_code == 0);
  json welfare_doc = json::parse(welfare.out);
  CHECK(welfare_doc["equilibria"].size() == 5);
  for (const auto& row : welfare_doc["equilibria"]) {
    double w = row["welfare"].get<double>();
    CHECK(w >= row["bounds"]["lower"].get<double>() - 1e-9);
    CHECK(w <= row["bounds"]["upper"].get<double>() + 1e-9);
  }
}

TEST_CASE("bounds at delta = 1 reports the weighted results") {
  std::string weighted =
      R"({"n": 3, "edges": [[0,1],[1,2]], "weights": [1.0, 5.0, 1.0]})";
  auto graph = write_temp("p3w.json", weighted);
  auto result = run("bounds --graph " + graph + " --delta 1.0");
  REQUIRE(result.exit_code == 0);
  json doc = json::parse(result.out);
  REQUIRE(doc.contains("delta_one"));
  CHECK(doc["delta_one"]["max_weighted_effort"].get<double>() == doctest::Approx(5.0));
  CHECK(doc["delta_one"]["witness_support"] == json::array({1}));
  CHECK(doc["delta_one"]["propagated_weights"] == json::array({5.0, 2.0, 5.0}));
}

TEST_CASE("ice command reproduces the worked cliques") {
  std::string fig2 =
      "10 11\n0 1\n1 2\n2 3\n3 4\n3 5\n4 5\n5 6\n6 7\n7 8\n6 9\n0 2\n";
  auto graph = write_temp("fig2.txt", fig2);
  auto result = run("ice --graph " + graph + " --delta 0.9 --mis 0 --mis 5 --mis 8 --mis 9");
  REQUIRE(result.exit_code == 0);
  json doc = json::parse(result.out);
  REQUIRE(doc["found"] == true);
  CHECK(doc["cliques"].size() == 4);
  CHECK(doc["cliques"][0] == json::array({0, 1, 2}));
  CHECK(doc["profile"][9].get<double>() == doctest::Approx(1.0));
}
