#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ado/cli.hpp"

int main(int argc, char** argv) {
  using namespace ado;
  CLI::App app{"Colored Alexander (ADO) invariants of braid closures"};
  app.require_subcommand(1);

  cli::JobSpec job;
  std::string pipeline = "both", var = "x";
  auto* compute = app.add_subcommand("compute", "Invariant of one braid closure");
  compute->add_option("word", job.braid, "Braid word, e.g. \"1 -2 1 -2\" (use -- before a word starting with '-')");
  compute->add_option("-b,--braid", job.braid, "Braid word (alternative to the positional form)");
  compute->add_option("-n", job.strands, "Number of strands")->required()->check(CLI::PositiveNumber);
  compute->add_option("-N", job.color, "Color N >= 2")->check(CLI::Range(2, 64));
  compute->add_option("--pipeline", pipeline, "direct | lawrence | both")
      ->check(CLI::IsMember({"direct", "lawrence", "both"}));
  compute->add_option("--var", var, "Display variable t | x (x = t^-2)")->check(CLI::IsMember({"t", "x"}));
  compute->add_flag("--json", job.json, "Emit JSON");
  compute->add_option("--lambda", job.lambdas, "Evaluate numerically at these lambda values")->delimiter(',');
  compute->add_option("--cap", job.cap, "Refuse runs with more than this many basis states N^n");

  std::string level = "fast";
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in consistency suites");
  selfcheck->add_option("--level", level, "fast | full")->check(CLI::IsMember({"fast", "full"}));

  std::string table_file;
  bool builtin = false;
  std::size_t table_cap = 4096;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* table = app.add_subcommand("table", "Batch rows `name; n; N; braid-word` with both pipelines");
  table->add_option("file", table_file, "Table file")->check(CLI::ExistingFile);
  table->add_flag("--builtin", builtin, "Use the built-in knot table");
  table->add_option("--cap", table_cap, "Per-row basis state cap");
  table->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::Ok : cli::Usage;
  }

  if (*compute) {
    job.pipeline = pipeline == "direct"     ? cli::PipelineChoice::Direct
                   : pipeline == "lawrence" ? cli::PipelineChoice::Lawrence
                                            : cli::PipelineChoice::Both;
    job.var = var == "t" ? Variable::T : Variable::X;
    return cli::cmd_compute(job, std::cout, std::cerr);
  }
  if (*selfcheck) return cli::cmd_selfcheck(level == "full" ? CheckLevel::Full : CheckLevel::Fast, std::cout);

  if (builtin == !table_file.empty()) {
    std::cerr << "table: give exactly one of FILE or --builtin\n";
    return cli::Usage;
  }
  std::string text = builtin_table_text();
  if (!builtin) {
    std::ifstream in(table_file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return cli::cmd_table(text, table_cap, jobs, std::cout);
}
