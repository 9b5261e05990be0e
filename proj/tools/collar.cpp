#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using collar::app::RunConfig;

struct Parsed {
  RunConfig cfg;
  std::string suite_dir;
};

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_input) {
  if (needs_input) {
    sub->add_option("--entry", cfg.entry, "catalog entry, family-name[:p=<int>]");
    sub->add_option("--config", cfg.config_path, "JSON triple description");
  }
  sub->add_option("--tol", cfg.tol, "relative rank tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--restarts", cfg.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  sub->add_option("--iters", cfg.iters, "iterations per restart")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "markdown"}));
  sub->add_option("--out", cfg.out, "write the report here instead of stdout");
}

/// Throws CLI::ParseError; `args` excludes the program name.
Parsed parse(std::vector<std::string> args) {
  Parsed p;
  CLI::App app{"Builds Lie algebra triples and certifies or refutes the collar condition"};
  app.require_subcommand(1);
  for (const char* name : {"decompose", "certify", "refute", "estimate"})
    add_common(app.add_subcommand(name, std::string(name) + " a triple"), p.cfg, true);
  auto* cat = app.add_subcommand("catalog", "list catalog entries");
  add_common(cat, p.cfg, false);
  cat->add_option("--filter", p.cfg.filters, "key=value (rank, realizable, expected)");
  auto* suite = app.add_subcommand("suite", "run the regression suite, one JSON report per command");
  suite->add_option("--out-dir", p.suite_dir, "directory for the reports")->required();
  suite->add_option("--seed", p.cfg.seed, "random seed");
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    throw;
  }
  p.cfg.command = app.get_subcommands().front()->get_name();
  return p;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

int emit(const RunConfig& cfg, const collar::app::Outcome& out) {
  const std::string text = collar::app::render(out.report, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write(cfg.out, text);
  }
  if (out.report.contains("error")) std::cerr << "collar: " << out.report["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}

std::string slug(const std::vector<std::string>& tokens) {
  std::string s;
  for (const std::string& t : tokens) {
    if (t.rfind("--", 0) == 0) continue;
    for (char c : t) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    s += '-';
  }
  if (!s.empty()) s.pop_back();
  return s;
}

int run_suite(const std::string& dir, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  int index = 0, failures = 0;
  for (const auto& tokens : collar::app::suite_commands()) {
    std::vector<std::string> args = tokens;
    args.push_back("--seed");
    args.push_back(std::to_string(seed));
    const Parsed p = parse(args);
    const collar::app::Outcome out = collar::app::run(p.cfg);
    const std::string prefix = (index < 10 ? "0" : "") + std::to_string(index) + "-";
    ++index;
    write((std::filesystem::path(dir) / (prefix + slug(tokens) + ".json")).string(),
          collar::app::render(out.report, "json"));
    std::cout << prefix << slug(tokens) << " exit " << out.exit_code << "\n";
    if (out.exit_code == 1 || out.exit_code == collar::app::kUsage) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Parsed p;
  try {
    p = parse(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? 0 : collar::app::kUsage;
  }
  try {
    if (p.cfg.command == "suite") return run_suite(p.suite_dir, p.cfg.seed);
    return emit(p.cfg, collar::app::run(p.cfg));
  } catch (const std::exception& e) {
    std::cerr << "collar: " << e.what() << "\n";
    return 1;
  }
}
