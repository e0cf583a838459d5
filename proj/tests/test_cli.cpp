#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SADIC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_config(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "sadic_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string kFib = "fib = \"1->12, 2->1\"\nsequence = periodic [fib]\nmodel = iid [fib: 1.0]\n";

}  // namespace

TEST_CASE("verify on Fibonacci") {
  const auto cfg = write_config("fib.cfg", kFib);
  const auto r = run("verify --config " + cfg + " --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "verify");
  CHECK(j["result"]["classification"] == "theorem-hypotheses-met-on-window+conclusion-verified");

  const auto text = run("verify --config " + cfg);
  CHECK(text.code == 0);
  CHECK(text.out.find("conclusion-verified") != std::string::npos);
}

TEST_CASE("every subcommand runs on Fibonacci") {
  const auto cfg = write_config("fib.cfg", kFib);
  for (const std::string sub : {"balance", "eigen", "coincide", "fractal --depth 1000", "rotate-check --steps 500",
                                "lyapunov --length 1000 --samples 4", "explore-config --n 2"}) {
    const auto r = run(sub + " --config " + cfg + " --json");
    CHECK_MESSAGE(r.code == 0, sub);
    CHECK_NOTHROW(nlohmann::json::parse(r.out));
  }
}

TEST_CASE("hypothesis failure is a normal exit") {
  const auto cfg = write_config("tm.cfg", "tm = \"1->12, 2->21\"\nsequence = periodic [tm]\n");
  const auto r = run("verify --config " + cfg + " --json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["result"]["classification"] == "hypothesis-failure(unimodular)");
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("verify --config " + write_config("bad.cfg", "x = 1\n")).code == 2);
  CHECK(run("verify --config /nonexistent.cfg").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("frobnicate").code == 2);
  const auto no_model = write_config("nomodel.cfg", "fib = \"1->12, 2->1\"\nsequence = periodic [fib]\n");
  CHECK(run("lyapunov --config " + no_model).code == 2);
  const auto window = write_config("window.cfg", "fib = \"1->12, 2->1\"\nsequence = window [fib, fib]\n");
  CHECK(run("coincide --cap 5 --config " + window).code == 3);
}

TEST_CASE("stochastic output is reproducible") {
  const auto cfg = write_config("fib.cfg", kFib);
  const auto a = run("lyapunov --config " + cfg + " --length 2000 --samples 8 --seed 3 --json --threads 1");
  const auto b = run("lyapunov --config " + cfg + " --length 2000 --samples 8 --seed 3 --json --threads 8");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("balance certificate fields") {
  const auto cfg = write_config("fib.cfg", kFib);
  const auto r = run("balance --config " + cfg + " --maxlen 50 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out)["result"];
  CHECK(j["C"] == 1);
  CHECK(j["L"] == 50);
  CHECK(j["status"] == "certified-up-to-L");
}
