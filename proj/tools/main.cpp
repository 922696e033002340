#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "cobweb/digraph.hpp"
#include "cobweb/json_io.hpp"
#include "cobweb/oracle.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/text_io.hpp"

namespace {

using nlohmann::json;

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

int run_generate(const std::string& seq, int levels, const std::string& out_path) {
  const auto truncation = cobweb::build_truncation(cobweb::sequence_parse(seq), levels);
  const auto edges = cobweb::cobweb_edges(truncation);

  auto graph_out = open_output(out_path);
  cobweb::write_digraph_text(graph_out, edges);

  json sidecar;
  sidecar["sequence"] = truncation.sequence().spec();
  sidecar["levels"] = truncation.max_level();
  sidecar["vertices"] = cobweb::vertex_table_json(truncation);
  auto sidecar_out = open_output(out_path + ".json");
  sidecar_out << sidecar.dump(2) << '\n';
  return 0;
}

int run_realizer(const std::string& seq, int levels) {
  const auto truncation = cobweb::build_truncation(cobweb::sequence_parse(seq), levels);
  const auto r = cobweb::realizer(truncation);
  print_json(cobweb::realizer_json(r, truncation));
  return 0;
}

int run_check(const std::string& graph_path) {
  const auto g = cobweb::read_digraph_file(graph_path);
  const bool dag = cobweb::is_dag(g);
  json report;
  report["vertices"] = g.vertex_count();
  report["arcs"] = g.arc_count();
  report["dag"] = dag;
  report["regular"] = dag && cobweb::is_regular(g);
  print_json(report);
  return 0;
}

int run_odag(const std::string& graph_path, int bound) {
  const auto g = cobweb::read_digraph_file(graph_path);
  const auto result = cobweb::is_odag(g, bound);
  print_json(cobweb::odag_result_json(result));
  return 0;
}

int run_verify_theorem1(int n) {
  const auto report = cobweb::oracle::verify_theorem1(n);
  print_json(cobweb::theorem1_report_json(report));
  return report.counterexamples.empty() ? 0 : 1;
}

int run_export_dot(const std::string& seq, int levels, const std::string& out_path) {
  const auto truncation = cobweb::build_truncation(cobweb::sequence_parse(seq), levels);
  auto out = open_output(out_path);
  cobweb::write_dot(out, truncation);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cobweb poset generator and dim-2 realizer toolkit"};
  app.require_subcommand(1);

  std::string seq = "fib";
  int levels = 0;
  std::string out_path;
  std::string graph_path;
  int bound = cobweb::kDefaultSearchBound;
  int theorem_n = 0;

  auto* generate = app.add_subcommand(
      "generate", "Write a cobweb truncation's digraph file plus a vertex-table sidecar");
  generate->add_option("--seq", seq, "sequence spec: fib | const:<k> | nat | file:<path>")
      ->required();
  generate->add_option("--levels", levels, "highest level to include")
      ->required()
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--out", out_path, "output path for the digraph text file")->required();

  auto* realizer = app.add_subcommand(
      "realizer", "Print the chains X, Y and the verified realizer as JSON");
  realizer->add_option("--seq", seq, "sequence spec")->required();
  realizer->add_option("--levels", levels, "highest level to include")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* check = app.add_subcommand("check", "Report acyclicity and regularity of a digraph file");
  check->add_option("--graph", graph_path, "digraph text file")->required();

  auto* odag = app.add_subcommand(
      "odag", "Search for a dim-2 representation of a digraph file");
  odag->add_option("--graph", graph_path, "digraph text file")->required();
  odag->add_option("--bound", bound, "max vertex count for the exhaustive search")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand(
      "verify-theorem1",
      "Cross-check the dim-2 characterization against brute force on all labeled DAGs");
  verify->add_option("--n", theorem_n, "vertex count (0..4)")->required();

  auto* export_dot = app.add_subcommand("export-dot", "Write a layered DOT drawing");
  export_dot->add_option("--seq", seq, "sequence spec")->required();
  export_dot->add_option("--levels", levels, "highest level to include")
      ->required()
      ->check(CLI::NonNegativeNumber);
  export_dot->add_option("--out", out_path, "output path for the DOT file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return run_generate(seq, levels, out_path);
    if (realizer->parsed()) return run_realizer(seq, levels);
    if (check->parsed()) return run_check(graph_path);
    if (odag->parsed()) return run_odag(graph_path, bound);
    if (verify->parsed()) return run_verify_theorem1(theorem_n);
    if (export_dot->parsed()) return run_export_dot(seq, levels, out_path);
  } catch (const cobweb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == cobweb::Errc::SearchBoundExceeded)
      std::cerr << "hint: raise the limit with --bound <n>\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
