// hybridom: parameter sweeps, figure presets and invariant checks from the command line.
//
//   hybridom sweep <config.yaml> --out <path> [--format csv|json]
//   hybridom preset <id> --out <path> [--format csv|json]
//   hybridom preset --list
//   hybridom preset <id> --dump-config
//   hybridom check <config.yaml | preset id>
//
// Exit codes: 0 success, 1 fatal error (config, I/O), 2 usage error, 3 invariant violation.

#include <filesystem>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "hybridom/emit.hpp"
#include "hybridom/errors.hpp"
#include "hybridom/invariants.hpp"
#include "hybridom/presets.hpp"
#include "hybridom/sweep.hpp"

namespace {

hybridom::Format format_for(const std::string& name, const std::filesystem::path& out) {
  if (!name.empty()) return *hybridom::parse_format(name);
  return out.extension() == ".json" ? hybridom::Format::Json : hybridom::Format::Csv;
}

int run_and_emit(const hybridom::SweepConfig& cfg, const std::string& out, const std::string& format) {
  const hybridom::SweepResult r = hybridom::run_sweep(cfg);
  hybridom::emit(r, format_for(format, out), out);
  std::cerr << "wrote " << r.rows.size() << " rows x " << r.columns.size() << " columns to " << out << "\n";
  return 0;
}

int run_check(const hybridom::SweepConfig& cfg) {
  const hybridom::InvariantReport rep = hybridom::check_invariants(cfg);
  for (const auto& r : rep.results) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.checked << " checks, worst " << r.worst
              << " (tol " << r.tolerance << ")";
    if (!r.ok()) std::cout << ", " << r.failures << " failures, first: " << r.first_failure;
    std::cout << "\n";
  }
  std::cout << rep.points << " points, " << rep.skipped_unstable << " skipped as unstable\n";
  return rep.ok() ? 0 : 3;
}

hybridom::SweepConfig config_or_preset(const std::string& arg) {
  if (std::filesystem::exists(arg)) return hybridom::load_config(arg);
  for (const auto& id : hybridom::preset_ids())
    if (id == arg) return hybridom::load_preset(id);
  return hybridom::load_config(arg);  // raises the I/O error
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid optomechanical amplifier/squeezer sweeps"};
  app.require_subcommand(1);
  const std::set<std::string> formats{"csv", "json"};

  std::string config_path, out, format;
  auto* sweep = app.add_subcommand("sweep", "Run a sweep described by a YAML config");
  sweep->add_option("config", config_path, "Config file")->required();
  sweep->add_option("--out,-o", out, "Output path")->required();
  sweep->add_option("--format,-f", format, "csv or json (default: from extension, else csv)")
      ->check(CLI::IsMember(formats));

  std::string preset_id;
  bool list = false;
  bool dump = false;
  auto* preset = app.add_subcommand("preset", "Run a bundled figure preset");
  preset->add_option("id", preset_id, "Preset id (see --list)");
  preset->add_option("--out,-o", out, "Output path");
  preset->add_option("--format,-f", format, "csv or json")->check(CLI::IsMember(formats));
  preset->add_flag("--list", list, "List preset ids");
  preset->add_flag("--dump-config", dump, "Print the preset's YAML");

  std::string check_target;
  auto* check = app.add_subcommand("check", "Run the invariant suite over a config's points");
  check->add_option("config", check_target, "Config file or preset id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*sweep) return run_and_emit(hybridom::load_config(config_path), out, format);
    if (*preset) {
      if (list) {
        for (const auto& id : hybridom::preset_ids()) std::cout << id << "\n";
        return 0;
      }
      if (preset_id.empty()) {
        std::cerr << "preset: an id is required (see --list)\n";
        return 2;
      }
      if (dump) {
        std::cout << hybridom::preset_text(preset_id);
        return 0;
      }
      if (out.empty()) {
        std::cerr << "preset: --out is required\n";
        return 2;
      }
      return run_and_emit(hybridom::load_preset(preset_id), out, format);
    }
    if (*check) return run_check(config_or_preset(check_target));
  } catch (const hybridom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
