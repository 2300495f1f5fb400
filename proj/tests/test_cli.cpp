#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into a file next to the binary.
Run run(const std::string& args, const std::string& stdin_text = "") {
  const std::string dir = TEST_WORKDIR;
  std::string cmd;
  if (!stdin_text.empty()) {
    std::ofstream(dir + "/cli_stdin.json") << stdin_text;
    cmd = std::string(INNERVOL_CLI) + " " + args + " < " + dir + "/cli_stdin.json";
  } else {
    cmd = std::string(INNERVOL_CLI) + " " + args;
  }
  cmd += " 2> " + dir + "/cli_stderr.txt";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_stderr() {
  std::ifstream in(std::string(TEST_WORKDIR) + "/cli_stderr.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("volume-fn on the cube") {
  const auto r = run("volume-fn --gen cube 1 1 1");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["g"].get<double>() == doctest::Approx(1.0));
  CHECK(j["measured_class"] == 2);
  CHECK(j["class_bound"] == 0);
  CHECK(j["V"]["breakpoints"].size() == 2);
  CHECK(j["V"]["right_tail"][0].get<double>() == doctest::Approx(8.0));
}

TEST_CASE("volume-fn CSV") {
  const std::string csv = std::string(TEST_WORKDIR) + "/rect123.csv";
  const auto r = run("volume-fn --gen rect 1 2 3 --emit-csv " + csv + " --samples 11");
  REQUIRE(r.code == 0);
  std::ifstream in(csv);
  std::string line, last;
  std::getline(in, line);
  CHECK(line == "r,V,W");
  int rows = 0;
  while (std::getline(in, line)) {
    last = line;
    ++rows;
  }
  CHECK(rows == 11);
  CHECK(last == "1,48,0");
}

TEST_CASE("input errors exit 2 with a JSON diagnostic") {
  const std::string bad = std::string(TEST_WORKDIR) + "/unbounded.json";
  std::ofstream(bad) << R"({"dim": 2, "halfspaces": [{"a": [1, 0], "b": 1, "sense": "<="}]})";
  const auto r = run("volume-fn " + bad);
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  const auto err = json::parse(last_stderr());
  CHECK(err["error"] == "UnboundedInput");

  CHECK(run("volume-fn --gen blob").code == 2);
  CHECK(run("volume-fn /nonexistent/file.json").code == 2);
  CHECK(run("volume-fn").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("rank, inradius through a pipe, equiangular") {
  const auto rank = run("rank --gen rect 1 2 3");
  REQUIRE(rank.code == 0);
  CHECK(json::parse(rank.out)["absolute_rank"] == 1);

  const auto roof = run("roof --gen square 1 1");
  REQUIRE(roof.code == 0);
  const auto g = run("inradius -", roof.out);
  REQUIRE(g.code == 0);
  CHECK(json::parse(g.out)["g"].get<double>() == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));

  const auto eq = run("equiangular --gen cut-dodecahedron");
  REQUIRE(eq.code == 0);
  const auto j = json::parse(eq.out);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(j["equiangular"] == true);
  CHECK(j["alphas"].back().get<double>() == doctest::Approx(std::atan(2.0)));
  CHECK(j["gammas"][0].get<double>() == doctest::Approx(std::sqrt(18 - 11 * phi)));
  CHECK(j["gammas"][1].get<double>() == doctest::Approx(phi - 1));
  CHECK(j["gammas"][2].get<double>() == 1.0);
}

TEST_CASE("gen output round-trips through every command") {
  const auto gen = run("gen theorem4 2 2 3");
  REQUIRE(gen.code == 0);
  for (const char* cmd : {"volume-fn -", "inradius -", "rank -", "equiangular -", "roof -"})
    CHECK(run(cmd, gen.out).code == 0);
  const auto direct = run("rank --gen theorem4 2 2 3");
  CHECK(json::parse(run("rank -", gen.out).out) == json::parse(direct.out));
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --gen pentagon --mc-samples 200000").code == 0);
  const std::string wrong = std::string(TEST_WORKDIR) + "/wrong_v.json";
  std::ofstream(wrong) << R"({"degree":2,"breakpoints":[0,1],"pieces":[[0,9,-4]],"left_tail":null,"right_tail":[5,0,0]})";
  CHECK(run("verify --gen square --function " + wrong + " --mc-samples 200000").code == 1);
  const auto out = run("volume-fn --gen square");
  const std::string right = std::string(TEST_WORKDIR) + "/right_v.json";
  std::ofstream(right) << out.out;
  CHECK(run("verify --gen square --function " + right + " --mc-samples 200000").code == 0);
}
