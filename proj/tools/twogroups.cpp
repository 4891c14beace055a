#include <iostream>

#include "CLI11.hpp"
#include "twogroups/cli.hpp"
#include "twogroups/io.hpp"

int main(int argc, char** argv) {
  using namespace twogroups;
  CLI::App app{"Finite 2-groups, crossed modules, nerves and covering complexes"};
  app.require_subcommand(1);
  cli::Command cmd;
  std::map<std::string, std::string> inputs;

  for (const std::string& name : cli::subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    for (const std::string& kind : cli::input_kinds())
      sub->add_option("--" + kind, inputs[kind], kind + " JSON file");
    sub->add_option("--depth", cmd.depth, "truncation depth / largest horn dimension")->capture_default_str();
    sub->add_option("--kan-n", cmd.kan_n, "horns above this dimension need unique fillers")->capture_default_str();
    sub->add_option("--move-budget", cmd.move_budget, "2-cell moves per null-homotopy search")->capture_default_str();
    sub->add_option("--out", cmd.out, "write the produced structure here instead of embedding it");
    sub->add_option("--format", cmd.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    if (name == "pi1") sub->add_flag("--verify-boundary", cmd.verify_boundary, "certify the boundary isomorphism");
    sub->callback([&cmd, name] { cmd.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kStructural;
  }
  for (const auto& [kind, path] : inputs)
    if (!path.empty()) cmd.inputs[kind] = path;

  const cli::Outcome outcome = cli::run(cmd);
  std::cout << outcome.report;
  if (!outcome.diagnostic.empty()) std::cerr << "error: " << outcome.diagnostic << "\n";
  return outcome.exit_code;
}
