#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "dbrack/cli.hpp"

namespace {

std::string quote(const std::string& t) {
  return t.find_first_of(" \t") == std::string::npos && !t.empty() ? t : "\"" + t + "\"";
}

int emit(const dbrack::cli::RunResult& r) {
  (r.exit_code == 2 && r.output.rfind("error:", 0) == 0 ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dbrack::cli;
  CLI::App app{"Double brackets on free algebras: Poisson checks, representation spaces, CYBE"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"plain", "kv"}))
      ->capture_default_str();

  std::string file = "-";
  auto* run_cmd = app.add_subcommand("run", "run a session file ('-' reads stdin)");
  run_cmd->add_option("file", file)->capture_default_str();
  run_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "kv"}));

  // `dbrack ybe ...` and `dbrack gradient ...` run one session command
  std::vector<std::string> rest;
  for (const char* group : {"ybe", "gradient"}) {
    auto* sub = app.add_subcommand(group, std::string("one ") + group + " command, as in sessions");
    sub->prefix_command();
    sub->add_option("--format", format)->check(CLI::IsMember({"plain", "kv"}));
  }

  CLI11_PARSE(app, argc, argv);

  RunOptions opts;
  opts.format = format == "kv" ? Format::Kv : Format::Plain;
  if (run_cmd->parsed()) {
    std::string text;
    if (file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(file, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot open '" << file << "'\n";
        return 2;
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
      opts.base_dir = std::filesystem::path(file).parent_path().string();
    }
    return emit(run_text(text, opts));
  }
  for (auto* sub : app.get_subcommands()) {
    std::string line = sub->get_name();
    for (const auto& t : sub->remaining()) line += " " + quote(t);
    return emit(run_text(line + "\n", opts));
  }
  return 2;
}
