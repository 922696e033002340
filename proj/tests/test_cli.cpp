#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "process.hpp"

namespace {

const std::string kCli = "'" COBWEB_CLI "'";

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "cobweb_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("generate writes the digraph file and a vertex sidecar") {
  const auto out = scratch_dir() / "fib5.digraph";
  const auto r = testutil::run_command(kCli + " generate --seq fib --levels 5 --out '" +
                                       out.string() + "'");
  REQUIRE(r.exit_code == 0);

  const std::string text = testutil::slurp(out);
  CHECK(text.substr(0, text.find('\n')) == "13 25");

  const auto sidecar = nlohmann::json::parse(testutil::slurp(out.string() + ".json"));
  CHECK(sidecar["sequence"] == "fib");
  CHECK(sidecar["levels"] == 5);
  REQUIRE(sidecar["vertices"].size() == 13);
  CHECK(sidecar["vertices"][0] == nlohmann::json::array({1, 0}));
  CHECK(sidecar["vertices"][12] == nlohmann::json::array({5, 5}));
}

TEST_CASE("generate of a four-vertex column") {
  const auto out = scratch_dir() / "col3.digraph";
  const auto r = testutil::run_command(kCli + " generate --seq const:1 --levels 3 --out '" +
                                       out.string() + "'");
  REQUIRE(r.exit_code == 0);
  const std::string text = testutil::slurp(out);
  CHECK(text.substr(0, text.find('\n')) == "4 3");
}

TEST_CASE("generate rejects a non-positive sequence") {
  const auto out = scratch_dir() / "bad.digraph";
  const auto r = testutil::run_command(kCli + " generate --seq const:0 --levels 2 --out '" +
                                       out.string() + "'");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("InvalidSequence") != std::string::npos);
}

TEST_CASE("realizer prints the verified chains") {
  const auto r = testutil::run_command(kCli + " realizer --seq fib --levels 5");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  const nlohmann::json x_prefix = {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
  const nlohmann::json y_prefix = {{1, 0}, {1, 1}, {1, 2}, {2, 3}, {1, 3}};
  for (int i = 0; i < 5; ++i) {
    CHECK(j["x"][i] == x_prefix[i]);
    CHECK(j["y"][i] == y_prefix[i]);
  }
}

TEST_CASE("realizer of a single vertex") {
  const auto r = testutil::run_command(kCli + " realizer --seq const:1 --levels 0");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["x"] == nlohmann::json::array({nlohmann::json::array({1, 0})}));
  CHECK(j["y"] == j["x"]);
  CHECK(j["verified"] == true);
}

TEST_CASE("check classifies digraph files") {
  const auto dir = scratch_dir();

  const auto fib = dir / "check_fib.digraph";
  REQUIRE(testutil::run_command(kCli + " generate --seq fib --levels 5 --out '" + fib.string() +
                                "'").exit_code == 0);
  auto r = testutil::run_command(kCli + " check --graph '" + fib.string() + "'");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dag"] == true);
  CHECK(j["regular"] == true);
  CHECK(j["vertices"] == 13);
  CHECK(j["arcs"] == 25);

  const auto shortcut = dir / "shortcut.digraph";
  std::ofstream(shortcut) << "3 3\n0 1\n1 2\n0 2\n";
  r = testutil::run_command(kCli + " check --graph '" + shortcut.string() + "'");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["dag"] == true);
  CHECK(j["regular"] == false);

  const auto cycle = dir / "cycle.digraph";
  std::ofstream(cycle) << "3 3\n0 1\n1 2\n2 0\n";
  r = testutil::run_command(kCli + " check --graph '" + cycle.string() + "'");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["dag"] == false);
  CHECK(j["regular"] == false);

  r = testutil::run_command(kCli + " check --graph '" + (dir / "missing.digraph").string() + "'");
  CHECK(r.exit_code == 1);
}

TEST_CASE("odag reports witnesses and failure reasons") {
  const auto dir = scratch_dir();

  const auto antichain = dir / "antichain.digraph";
  std::ofstream(antichain) << "2 0\n";
  auto r = testutil::run_command(kCli + " odag --graph '" + antichain.string() + "'");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["representable"] == true);
  CHECK(j["witness_x"] == nlohmann::json::array({0, 1}));
  CHECK(j["witness_y"] == nlohmann::json::array({1, 0}));

  const auto shortcut = dir / "odag_shortcut.digraph";
  std::ofstream(shortcut) << "3 3\n0 1\n1 2\n0 2\n";
  r = testutil::run_command(kCli + " odag --graph '" + shortcut.string() + "'");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["representable"] == false);
  CHECK(j["failure_reason"] == "NotRegular");

  const auto fib3 = dir / "odag_fib3.digraph";
  REQUIRE(testutil::run_command(kCli + " generate --seq fib --levels 3 --out '" + fib3.string() +
                                "'").exit_code == 0);
  r = testutil::run_command(kCli + " odag --graph '" + fib3.string() + "'");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["representable"] == true);
}

TEST_CASE("odag refuses graphs beyond the bound and hints at --bound") {
  const auto dir = scratch_dir();
  const auto wide = dir / "wide.digraph";
  std::ofstream(wide) << "13 0\n";
  auto r = testutil::run_command(kCli + " odag --graph '" + wide.string() + "'");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("--bound") != std::string::npos);

  r = testutil::run_command(kCli + " odag --graph '" + wide.string() + "' --bound 13");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["representable"] == true);
}

TEST_CASE("verify-theorem1 reports a clean sweep") {
  const auto r = testutil::run_command(kCli + " verify-theorem1 --n 2");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["dags_checked"] == 3);
  CHECK(j["counterexamples"].empty());
}

TEST_CASE("export-dot writes the layered drawing") {
  const auto out = scratch_dir() / "fib2.dot";
  const auto r = testutil::run_command(kCli + " export-dot --seq fib --levels 2 --out '" +
                                       out.string() + "'");
  REQUIRE(r.exit_code == 0);
  const std::string dot = testutil::slurp(out);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("v0 -> v1") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  const auto first = testutil::run_command(kCli + " realizer --seq nat --levels 4");
  const auto second = testutil::run_command(kCli + " realizer --seq nat --levels 4");
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);

  const auto graph = scratch_dir() / "det.digraph";
  REQUIRE(testutil::run_command(kCli + " generate --seq nat --levels 3 --out '" + graph.string() +
                                "'").exit_code == 0);
  const auto check_a = testutil::run_command(kCli + " check --graph '" + graph.string() + "'");
  const auto check_b = testutil::run_command(kCli + " check --graph '" + graph.string() + "'");
  CHECK(check_a.out == check_b.out);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(testutil::run_command(kCli).exit_code == 2);
  CHECK(testutil::run_command(kCli + " generate --levels 2").exit_code == 2);
  CHECK(testutil::run_command(kCli + " frobnicate").exit_code == 2);
  CHECK(testutil::run_command(kCli + " --help").exit_code == 0);
}
