#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hzb/errors.hpp"
#include "hzb/germ.hpp"
#include "hzb/report.hpp"
#include "hzb/sweep.hpp"

namespace {

int usage_error(const CLI::App& app, const std::string& message) {
  std::cerr << message << "\n\n" << app.help();
  return 64;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topology of the Milnor fiber boundary of z^m - x^k y^l"};

  hzb::Int m = 0, k = 0, l = 0;
  bool allow_unordered = false;
  hzb::Int sweep_limit = 0;
  std::string what = "all";
  std::string format = "text";
  std::string check = "all";
  std::string out_path;

  auto* opt_m = app.add_option("--m", m, "exponent of z");
  auto* opt_k = app.add_option("--k", k, "exponent of x");
  auto* opt_l = app.add_option("--l", l, "exponent of y");
  app.add_flag("--allow-unordered", allow_unordered, "permit k > l");
  app.add_option("--what", what, "which section to report")
      ->check(CLI::IsMember({"normalization", "seifert", "plumbing", "monodromy",
                             "compare", "all"}));
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  auto* opt_sweep = app.add_option(
      "--sweep", sweep_limit, "verify identities for all valid germs with m,k,l <= N");
  app.add_option("--check", check, "which sweep checks to run")
      ->check(CLI::IsMember({"identities", "definiteness", "all"}));
  app.add_option("--out", out_path, "write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 64;
  }

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 1;
    }
    out = &out_file;
  }

  if (*opt_sweep) {
    if (sweep_limit < 2) return usage_error(app, "--sweep needs a limit >= 2");
    const auto kind = hzb::sweep_check_from_string(check);
    if (!kind) return usage_error(app, "unknown --check value");
    const hzb::SweepResult result = hzb::run_sweep(sweep_limit, *kind);
    if (!result.ok) {
      *out << "sweep limit " << result.limit << " (check=" << check
           << "): FAILED at " << result.failure << "\n";
      return 1;
    }
    *out << "sweep limit " << result.limit << " (check=" << check << "): "
         << result.germs << " germs, " << result.checks << " checks, all passed\n";
    return 0;
  }

  if (!*opt_m || !*opt_k || !*opt_l)
    return usage_error(app, "--m, --k and --l are required unless --sweep is given");

  const auto section = hzb::section_from_string(what);
  if (!section) return usage_error(app, "unknown --what value");
  if (format == "dot" && *section != hzb::Section::normalization &&
      *section != hzb::Section::plumbing)
    return usage_error(app,
                       "--format dot is only valid for graph sections "
                       "(--what normalization or --what plumbing)");

  hzb::Germ germ;
  try {
    germ = hzb::make_germ(m, k, l, allow_unordered);
  } catch (const std::domain_error& e) {
    std::cerr << "invalid germ: " << e.what() << "\n";
    return 2;
  }

  try {
    const hzb::Report report = hzb::build_report(germ);
    if (format == "text")
      *out << hzb::render_text(report, *section);
    else if (format == "json")
      *out << hzb::render_json(report, *section) << "\n";
    else
      *out << hzb::render_dot(report, *section);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
