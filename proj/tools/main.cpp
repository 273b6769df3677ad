#include <CLI11.hpp>

#include <braidthom/svg.hpp>
#include <braidthom/text.hpp>
#include <braidthom/verify.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "shell/shell.hpp"

namespace bt = braidthom;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

bt::Element literal(const std::string& text, bool reduce) {
  const bt::Element g = bt::parse_element(text);
  return reduce ? bt::normalize(g) : g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braided Thompson group calculator"};
  app.require_subcommand(1);

  app.add_subcommand("repl", "Interactive session");

  auto* eval = app.add_subcommand("eval", "Run a script file ('-' for stdin)");
  std::string script_path;
  std::string script_text;
  auto* path_opt = eval->add_option("script", script_path, "Script file");
  auto* text_opt = eval->add_option("-c,--command", script_text, "Script text");
  path_opt->excludes(text_opt);
  eval->require_option(1);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suite;
  std::uint64_t trials = 100;
  unsigned threads = 1;
  bool as_json = false;
  bt::GenConfig cfg;
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--trials", trials, "Number of trials");
  verify->add_option("--seed", cfg.seed, "Base seed");
  verify->add_option("--max-leaves", cfg.max_leaves, "Largest tree size");
  verify->add_option("--max-word-len", cfg.max_word_len, "Longest braid word");
  verify->add_option("--twist-bound", cfg.twist_bound, "Largest |twist|");
  verify->add_option("--threads", threads, "Worker threads, 0 for all cores");
  verify->add_flag("--json", as_json, "Print the report as JSON");

  auto* svg = app.add_subcommand("svg", "Draw an element literal as SVG");
  std::string svg_literal;
  std::string svg_path;
  bool svg_reduce = false;
  svg->add_option("element", svg_literal, "Element literal")->required();
  svg->add_option("-o,--output", svg_path, "Output file")->required();
  svg->add_flag("--reduce", svg_reduce, "Draw the normal form");

  auto* json = app.add_subcommand("json", "Print an element literal as JSON");
  std::string json_literal;
  bool json_reduce = false;
  json->add_option("element", json_literal, "Element literal")->required();
  json->add_flag("--reduce", json_reduce, "Serialize the normal form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("repl")) {
      bt::shell::repl(std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
    } else if (app.got_subcommand(eval)) {
      bt::shell::Shell sh;
      sh.run(text_opt->count() > 0 ? script_text : slurp(script_path), std::cout);
    } else if (app.got_subcommand(verify)) {
      const bt::SuiteReport r = bt::run_suite(suite, trials, cfg, threads);
      if (as_json) {
        std::cout << r.to_json(2) << '\n';
      } else {
        std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials
                  << " trials, seed " << cfg.seed << ", " << r.failures.size() << " failures, "
                  << r.elapsed_seconds << " s)\n";
        for (const auto& f : r.failures) std::cout << "  trial " << f.trial << ": " << f.message << '\n';
      }
      return r.passed() ? 0 : 1;
    } else if (app.got_subcommand(svg)) {
      bt::write_svg(literal(svg_literal, svg_reduce), svg_path);
    } else if (app.got_subcommand(json)) {
      std::cout << bt::element_to_json(literal(json_literal, json_reduce)) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bt::shell::exit_code(e);
  }
  return 0;
}
