#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvgamma/dsl.hpp"

namespace {

int emit(const mvg::dsl::RunReport& report, const std::string& json_out) {
  const std::string text = report.to_json().dump(2, ' ', false, mvg::Json::error_handler_t::replace) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_out, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "mvgamma: cannot write " << json_out << "\n";
      return mvg::dsl::ExitCode::semantic_error;
    }
    std::cerr << "mvgamma: " << report.to_json()["verdict"].get<std::string>() << ", report written to " << json_out << "\n";
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite MV-algebras, unital l-groups and the functors between them"};
  app.require_subcommand(1);

  std::string script_path;
  std::string json_out;
  std::optional<int> max_size;
  std::optional<mvg::Int> window;

  CLI::App* run = app.add_subcommand("run", "Execute a script");
  run->add_option("script", script_path, "Script file")->required();
  run->add_option("--max-size", max_size, "Largest carrier for check commands")->check(CLI::Range(2, 4096));
  run->add_option("--window", window, "Window bound B for check commands")->check(CLI::Range(0, 1'000'000));
  run->add_option("--json-out", json_out, "Write the report here instead of stdout");

  CLI::App* check_all = app.add_subcommand("check-all", "Run every suite over the generated family");
  check_all->add_option("--max-size", max_size, "Largest carrier")->check(CLI::Range(2, 4096));
  check_all->add_option("--json-out", json_out, "Write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  mvg::dsl::ExecConfig config;
  config.max_size = max_size;
  config.window = window;

  try {
    if (run->parsed()) {
      std::ifstream in(script_path, std::ios::binary);
      if (!in) {
        std::cerr << "mvgamma: cannot read " << script_path << "\n";
        return mvg::dsl::ExitCode::semantic_error;
      }
      std::ostringstream text;
      text << in.rdbuf();
      return emit(mvg::dsl::run_text(text.str(), config), json_out);
    }
    return emit(mvg::dsl::run_text("check all\n", config), json_out);
  } catch (const std::exception& e) {
    std::cerr << "mvgamma: internal error: " << e.what() << "\n";
    return mvg::dsl::ExitCode::internal_error;
  }
}
