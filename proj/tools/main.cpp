#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "group_expr.hpp"

int main(int argc, char** argv) {
  using namespace agroup::cli;

  CLI::App app{"Finite solvable group toolkit: family construction, A/A' classification, "
               "two-prime decomposition"};
  app.require_subcommand(1);

  bool json = false;
  std::size_t cap = agroup::Limits{}.element_cap;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Emit the JSON report");
    sub->add_option("--out", out_path, "Write output to FILE instead of stdout");
  };

  std::string params;
  auto* verify = app.add_subcommand("verify", "Build a family group and check its properties");
  verify->add_option("params", params, "Family parameters \"p,q,r,a,b\"")->required();
  verify->add_option("--cap", cap, "Element cap for enumeration");
  add_common(verify);

  std::uint64_t max_order = 0;
  auto* search = app.add_subcommand("search", "List family parameters up to a group order");
  search->add_option("--max-order", max_order, "Largest group order to report")->required();
  add_common(search);

  std::string spec;
  auto* decompose = app.add_subcommand("decompose", "Split a two-prime A-group as K_p x K_q");
  decompose->add_option("spec", spec, "Group expression")->required();
  decompose->add_option("--cap", cap, "Element cap for enumeration");
  decompose->footer(grammar_help());
  add_common(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  CommandOptions options;
  options.json = json;
  options.limits.element_cap = cap;

  CommandResult result;
  if (*verify) {
    result = run_verify(params, options);
  } else if (*search) {
    result = run_search(max_order, options);
  } else {
    result = run_decompose(spec, options);
  }

  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << result.output;
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitInvalidInput;
      }
    }
  }
  return result.exit_code;
}
