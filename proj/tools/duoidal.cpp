// duoidal: validate, construct, round-trip and classify structure files; emit the fixture catalog.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "duo/cli.hpp"

namespace {

using duo::CommandResult;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int emit(const CommandResult& r, const std::vector<std::string>& artifacts, const std::string& report_path) {
  const std::string text = r.to_json(artifacts).dump(2) + "\n";
  std::cout << text;
  if (!report_path.empty() && !write_file(report_path, text)) {
    std::cerr << "cannot write " << report_path << "\n";
    return duo::kExitParse;
  }
  return r.exit_code;
}

CommandResult unreadable(const std::string& path) {
  CommandResult r;
  r.status = "error";
  r.exit_code = duo::kExitParse;
  r.error = "cannot read " + path;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Duoidal structure checker"};
  app.require_subcommand(1);
  std::int64_t budget = 100000;
  app.add_option("--budget", budget, "cap on the size of any constructed hom value")
      ->envname(duo::kBudgetEnv)
      ->check(CLI::PositiveNumber);
  std::string report_path;
  app.add_option("--report", report_path, "also write the report here");

  std::string input, target, out_path;
  auto* validate = app.add_subcommand("validate", "check every axiom of the structure in FILE");
  validate->add_option("file", input)->required();

  auto* construct = app.add_subcommand("construct", "build a structure from FILE and write it out");
  construct->add_option("target", target)->required()->check(CLI::IsMember(duo::construct_targets()));
  construct->add_option("file", input)->required();
  construct->add_option("-o,--output", out_path, "output structure file");

  auto* roundtrip = app.add_subcommand("roundtrip", "file and Tannaka round trips");
  roundtrip->add_option("file", input)->required();

  auto* classify = app.add_subcommand("classify", "Hopf classification of a bimonoid");
  classify->add_option("--bimonoid,file", input)->required();

  std::string fixture_name, fixture_dir;
  bool list = false;
  auto* fixture = app.add_subcommand("fixture", "write a catalog fixture (stdout unless -o / --dir)");
  fixture->add_option("name", fixture_name);
  fixture->add_option("-o,--output", out_path);
  fixture->add_option("--dir", fixture_dir, "write the whole catalog into this directory");
  fixture->add_flag("--list", list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return duo::kExitParse;
  }
  duo::set_size_budget(budget);

  if (*fixture) {
    if (list) {
      for (const auto& n : duo::fixture_catalog()) std::cout << n << "\n";
      return 0;
    }
    try {
      if (!fixture_dir.empty()) {
        std::filesystem::create_directories(fixture_dir);
        for (const auto& n : duo::fixture_catalog()) {
          const auto path = (std::filesystem::path(fixture_dir) / (n + ".json")).string();
          if (!write_file(path, duo::serialize_spec(duo::emit_fixture(n)))) {
            std::cerr << "cannot write " << path << "\n";
            return duo::kExitParse;
          }
        }
        return 0;
      }
      const std::string text = duo::serialize_spec(duo::emit_fixture(fixture_name));
      if (out_path.empty()) {
        std::cout << text;
      } else if (!write_file(out_path, text)) {
        std::cerr << "cannot write " << out_path << "\n";
        return duo::kExitParse;
      }
      return 0;
    } catch (const duo::ParseError& e) {
      std::cerr << e.what() << "\n";
      return duo::kExitParse;
    }
  }

  std::string text;
  if (!read_file(input, text)) return emit(unreadable(input), {}, report_path);

  if (*validate) return emit(duo::run_validate(text), {}, report_path);
  if (*roundtrip) return emit(duo::run_roundtrip(text), {}, report_path);
  if (*classify) return emit(duo::run_classify(text), {}, report_path);

  CommandResult r = duo::run_construct(target, text);
  std::vector<std::string> artifacts;
  if (r.status != "error") {
    for (const auto& [stem, file] : r.outputs) {
      const std::string path = out_path.empty() ? stem + ".json" : out_path;
      if (!write_file(path, duo::serialize_spec(file))) {
        std::cerr << "cannot write " << path << "\n";
        return duo::kExitParse;
      }
      artifacts.push_back(path);
    }
  }
  return emit(r, artifacts, report_path);
}
