#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "qrank/cli.hpp"

namespace {

bool read_all(const std::string& path, std::string& out) {
  if (path.empty() || path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qrank;
  CLI::App app{"Lascar ranks of companion-matrix group presentations"};
  std::string command, input_path, output_path;
  bool pretty = false, text = false;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(cli::commands()));
  app.add_option("--input,-i", input_path, "Task file (stdin when omitted)");
  app.add_option("--output,-o", output_path, "Report file (stdout when omitted)");
  app.add_flag("--pretty", pretty, "Indent the JSON report");
  app.add_flag("--text", text, "Render the report as plain text");
  app.set_version_flag("--version", std::string(cli::kEngineName) + " " + cli::kEngineVersion);

  cli::Outcome outcome;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_code(cli::Status::ParseError);
  }

  std::string input;
  if (!read_all(input_path, input)) {
    outcome = cli::failure(command, cli::Status::ParseError, "cannot read " + input_path);
  } else {
    try {
      outcome = cli::run_text(command, input, EngineConfig::from_env());
    } catch (const Error& e) {
      outcome = cli::failure(command, cli::Status::ParseError, e.what());
    }
  }

  const std::string rendered = text ? cli::render_text(outcome.report) : outcome.report.dump(pretty ? 2 : -1) + "\n";
  if (output_path.empty() || output_path == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << output_path << "\n";
      return cli::exit_code(cli::Status::ParseError);
    }
    out << rendered;
  }
  return outcome.exit_code;
}
