// Command-line driver. Exit codes: 0 analysis completed (Unknown and
// Undetermined verdicts are completed analyses), 1 input error, 2 internal
// invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkz/report.hpp"

namespace {

std::vector<std::string> split_commands(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::size_t end = comma == std::string::npos ? s.size() : comma;
    std::size_t a = start, b = end;
    while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t')) --b;
    if (b > a) out.push_back(s.substr(a, b - a));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Options {
  std::string file;
  std::string commands = "report";
  bool json_out = false;
  int parallel = 1;
};

int run(const Options& o) {
  std::ifstream in(o.file);
  if (!in) {
    std::cerr << "error: cannot read '" << o.file << "'\n";
    return 1;
  }
  std::ostringstream body;
  body << in.rdbuf();
  try {
    auto jobs = gkz::report::parse_jobs(body.str(), split_commands(o.commands));
    auto rep = gkz::report::run_jobs(jobs, o.parallel);
    std::cout << (o.json_out ? gkz::report::emit_json(rep)
                             : gkz::report::emit_text(rep));
    return 0;
  } catch (const gkz::report::ParseError& e) {
    if (e.line > 0)
      std::cerr << o.file << ":" << e.line << ":" << e.column << ": error: "
                << e.what() << "\n";
    else
      std::cerr << o.file << ": error: " << e.what() << "\n";
    return 1;
  } catch (const gkz::internal_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyzer for A-hypergeometric systems: toric data of an "
               "integer matrix, monodromy reducibility of rational "
               "parameters, holonomic-dual parameters"};
  app.set_version_flag("--version", std::string(gkz::report::kSchemaVersion));
  app.require_subcommand(1);

  Options o;
  auto wire = [&](CLI::App* sub, bool with_commands) {
    sub->add_option("file", o.file, "job description, text or json")->required();
    sub->add_flag("--json", o.json_out, "emit the json document instead of text");
    sub->add_option("--parallel", o.parallel, "run up to N jobs concurrently")
        ->check(CLI::PositiveNumber);
    if (with_commands)
      sub->add_option("--commands", o.commands,
                      "comma separated subset of: validate, volume, "
                      "toric-ideal, saturate, holes, exceptional, "
                      "reducibility, dualize, report");
  };
  wire(app.add_subcommand("analyze", "run the selected analyses on every job"),
       true);
  auto* dual = app.add_subcommand("dual", "holonomic-dual verdicts only");
  wire(dual, false);
  auto* reduce =
      app.add_subcommand("reduce", "monodromy reducibility verdicts only");
  wire(reduce, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (dual->parsed()) o.commands = "dualize";
  if (reduce->parsed()) o.commands = "reducibility";
  return run(o);
}
