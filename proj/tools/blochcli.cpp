// Command-line surface: norm / essnorm / classify / audit / nevanlinna /
// sweep over symbol files (or the bundled corpus), CSV or JSON out.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "bloch/report.hpp"
#include "bloch/symbol_io.hpp"

namespace {

struct Options {
  bloch::RunConfig config;
  std::vector<std::string> pair_paths;
};

void attach_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--pair", opt.pair_paths, "symbol file (repeatable)");
  cmd->add_option("--radial", opt.config.radial, "radial quadrature nodes")
      ->capture_default_str();
  cmd->add_option("--angular", opt.config.angular, "angular quadrature nodes")
      ->capture_default_str();
  cmd->add_option("--sup-grid", opt.config.sup_grid, "a-grid radius levels")
      ->capture_default_str();
  cmd->add_option("--powers", opt.config.powers, "power-norm horizon")->capture_default_str();
  cmd->add_option("--levels", opt.config.levels, "boundary r levels")->delimiter(',');
  cmd->add_option("--tlevels", opt.config.tlevels, "level-set t levels")->delimiter(',');
  cmd->add_option("--seed", opt.config.seed, "random-candidate seed")->capture_default_str();
  cmd->add_option("--out", opt.config.out_path, "output path (default stdout)");
  cmd->add_option("--format", opt.config.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--tol", opt.config.tol, "reporting tolerance")->capture_default_str();
}

std::vector<bloch::SymbolPair> load_pairs(const Options& opt, bool required) {
  std::vector<bloch::SymbolPair> pairs;
  for (const std::string& path : opt.pair_paths) pairs.push_back(bloch::parse_symbol_file(path));
  if (required && pairs.empty()) throw bloch::InvalidParameter("no --pair files given");
  return pairs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"norm and essential-norm toolkit for weighted composition operators on the "
               "Bloch space"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* norm = app.add_subcommand("norm", "two-route operator-norm estimates");
  CLI::App* essnorm = app.add_subcommand("essnorm", "essential-norm variants");
  CLI::App* classify = app.add_subcommand("classify", "boundedness/compactness verdicts");
  CLI::App* audit = app.add_subcommand("audit", "inequality audit table");
  CLI::App* nevanlinna = app.add_subcommand("nevanlinna", "counting-function checks");
  CLI::App* sweep = app.add_subcommand("sweep", "full corpus sweep (bundled corpus when no "
                                                "--pair is given)");
  for (CLI::App* cmd : {norm, essnorm, classify, audit, nevanlinna, sweep})
    attach_common(cmd, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    bloch::ReportTable table;
    if (norm->parsed())
      table = bloch::run_norm(load_pairs(opt, true), opt.config);
    else if (essnorm->parsed())
      table = bloch::run_essnorm(load_pairs(opt, true), opt.config);
    else if (classify->parsed())
      table = bloch::run_classify(load_pairs(opt, true), opt.config);
    else if (audit->parsed())
      table = bloch::run_audit(load_pairs(opt, false), opt.config);
    else if (nevanlinna->parsed())
      table = bloch::run_nevanlinna(load_pairs(opt, true), opt.config);
    else
      table = bloch::run_sweep(load_pairs(opt, false), opt.config);
    bloch::write_report(table, opt.config);
  } catch (const bloch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
