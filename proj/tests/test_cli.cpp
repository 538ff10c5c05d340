#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; `env` is prepended verbatim, stderr goes to
// `err` when given.
Run cli(const std::string& args, const std::string& env = "", const std::string& err = "/dev/null") {
  const std::string cmd = env + " \"" APOLAR_CLI_PATH "\" " + args + " 2>" + err;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("hilbert of the two-summand form") {
  const auto r = cli("hilbert --xvars 2 --uvars 2 \"x0^2*u1^3 + x1^2*u2^3\" --json");
  CHECK(r.code == 0);
  CHECK(json_of(r)["h"] == nlohmann::json::parse("[1,4,6,6,4,1]"));
  const auto t = cli("hilbert --xvars 2 --uvars 2 \"x0^2*u1^3 + x1^2*u2^3\"");
  CHECK(t.code == 0);
  CHECK(t.out.find("h = (1,4,6,6,4,1)") != std::string::npos);
}

TEST_CASE("slp of a cube") {
  const auto r = cli("slp --xvars 1 --uvars 0 \"x0^3\" --json");
  CHECK(r.code == 0);
  CHECK(json_of(r)["verdict"] == "holds");
  CHECK(json_of(r)["witness"] == "X0");
}

TEST_CASE("exit codes") {
  CHECK(cli("hilbert --xvars 1 \"x0 + y0\"").code == 2);
  CHECK(cli("hilbert --xvars 1 \"0\"").code == 1);
  CHECK(cli("hilbert --xvars 1 --bogus \"x0\"").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("hessian --xvars 1 \"x0^2\" --order 3").code == 1);
  CHECK(cli("simplicial-verify \"{\\\"vertices\\\": 3}\" --order 1").code == 1);
  CHECK(cli("simplicial-verify \"{not json\" --order 1").code == 2);
  CHECK(cli("geometry --xvars 2 --uvars 1 \"x0*x1*u1\"").code == 1);
}

TEST_CASE("errors are reported as json on stderr") {
  const auto path = (std::filesystem::temp_directory_path() / "apolar_cli_err.txt").string();
  const auto r = cli("hilbert --xvars 1 \"x0 + y0\" --json", "", path);
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  const auto j = nlohmann::json::parse(line);
  CHECK(j.contains("error"));
  CHECK(j.contains("message"));
}

TEST_CASE("output is byte-identical across runs") {
  const std::string args = "wlp --xvars 2 --uvars 2 \"x0^2*u1^3 + x1^2*u2^3\" --seed 3 --json";
  const auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json_of(a)["seed"] == 3);
}

TEST_CASE("seed falls back to the environment") {
  const std::string args = "wlp --xvars 2 --uvars 2 \"x0^2*u1^3 + x1^2*u2^3\" --json";
  CHECK(json_of(cli(args, "APOLAR_SEED=11"))["seed"] == 11);
  CHECK(json_of(cli(args, "env -u APOLAR_SEED"))["seed"] == 0);
  CHECK(json_of(cli(args + " --seed 4", "APOLAR_SEED=11"))["seed"] == 4);
  CHECK(cli(args, "APOLAR_SEED=abc").code == 1);
}

TEST_CASE("input from a file") {
  const auto path = temp_file("apolar_cli_f.txt", "x0^2*u1^3 + x1^2*u2^3\n");
  const auto r = cli("hilbert --xvars 2 --uvars 2 " + path + " --json");
  CHECK(r.code == 0);
  CHECK(json_of(r)["h"] == nlohmann::json::parse("[1,4,6,6,4,1]"));
}

TEST_CASE("simplicial and nagata commands") {
  const auto c = temp_file("apolar_cli_octahedron.json",
                           R"({"vertices": 6, "facets": [[1,2,3],[1,2,4],[1,4,5],[1,3,5],[2,3,6],[2,4,6],[4,5,6],[3,5,6]]})");
  const auto p = cli("simplicial-predict " + c + " --order 2 --json");
  CHECK(p.code == 0);
  CHECK(json_of(p)["h"] == nlohmann::json::parse("[1,14,44,44,14,1]"));
  const auto v = cli("simplicial-verify " + c + " --order 2 --json");
  CHECK(v.code == 0);
  CHECK(json_of(v)["passed"] == true);

  const auto n = cli("nagata-build \"u1^2; u1*u2\" --uvars 2 --order 1 --json");
  CHECK(n.code == 0);
  CHECK(json_of(n)["f"] == "x0*u1^2 + x1*u1*u2");

  const auto g = cli("geometry --xvars 2 --uvars 2 \"x0^2*u1 + x1^2*u2\" --trials 5 --json");
  CHECK(g.code == 0);
  CHECK(json_of(g)["on_hypersurface"] == 5);
}

TEST_CASE("hessian command") {
  const auto r = cli("hessian --xvars 3 --uvars 2 \"x0*u1^2 + x1*u1*u2 + x2*u2^2\" --order 1 --json");
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["vanishes"] == true);
  CHECK(j["certainty"] == "certain");
}
