// dmod-curve: graded D-modules on monomial curves from the command line.
//
// Exit codes: 0 success, 1 a reported check failed, 2 malformed flags,
// 3 a mathematical precondition was violated, 4 internal error.

#include "dmod/parse.hpp"
#include "dmod/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Flags {
  std::string gens = "2,3";
  std::string window = "-12..12";
  int nMax = 60;
  std::string alphas = "1/2,1/3,2/3";
  std::string format = "text";
  std::uint64_t seed = 20240611;
};

void addCommon(CLI::App* cmd, Flags& f) {
  cmd->add_option("--gens", f.gens, "generators of the semigroup, comma separated")->capture_default_str();
  cmd->add_option("--window", f.window, "degree window lo..hi")->capture_default_str();
  cmd->add_option("--nmax", f.nMax, "largest filtration index for Hilbert functions")->capture_default_str();
  cmd->add_option("--alphas", f.alphas, "rational samples, comma separated")->capture_default_str();
  cmd->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed for randomized checks")->capture_default_str();
}

dmod::ReportConfig configFrom(const Flags& f) {
  dmod::ReportConfig c;
  c.generators = dmod::parseIntList(f.gens);
  c.window = dmod::parseWindow(f.window);
  if (f.nMax < 0) throw std::invalid_argument("--nmax must be nonnegative");
  c.nMax = f.nMax;
  c.alphas = dmod::parseRationalList(f.alphas);
  c.json = f.format == "json";
  c.seed = f.seed;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded D-modules on monomial curves"};
  app.require_subcommand(1);
  Flags flags;

  auto* semigroup = app.add_subcommand("semigroup", "gaps, Frobenius number, sigma and Gamma'");
  auto* operators = app.add_subcommand("operators", "generators of D; normal form of an operator");
  auto* grd = app.add_subcommand("grd", "compare the symbols of the generators of D with the Hilbert basis of Gamma'");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, dimension and multiplicity of D/I");
  auto* simples = app.add_subcommand("simples", "graded simple modules, simplicity and localization");
  auto* extTable = app.add_subcommand("ext-table", "Ext^1 between graded simple modules");
  auto* indecomp = app.add_subcommand("indecomp", "indecomposable modules over the Weyl algebra");
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  for (auto* cmd : {semigroup, operators, grd, hilbert, simples, extTable, indecomp, verify}) addCommon(cmd, flags);

  std::optional<std::string> op;
  operators->add_option("--op", op, "operator text, e.g. \"d*t - 1\" or \"P[-2]\"");
  std::string ideal;
  hilbert->add_option("--ideal", ideal, "generators separated by ';' (empty: I = 0)");
  dmod::IndecompRequest request;
  std::string alphaText = "1/2";
  indecomp->add_option("--kind", request.kind, "word or power")->check(CLI::IsMember({"word", "power"}))->capture_default_str();
  indecomp->add_option("--beta", request.beta, "0 or inf (word kind)")->capture_default_str();
  indecomp->add_option("--alpha", alphaText, "alpha in (0, 1) (power kind)")->capture_default_str();
  indecomp->add_option("--n", request.n, "length")->capture_default_str();
  std::vector<int> only;
  bool timings = false;
  verify->add_option("--criterion", only, "run only these criteria, comma separated")->delimiter(',');
  verify->add_flag("--timings", timings, "print wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto config = configFrom(flags);
    config.timings = timings;
    dmod::Report report;
    if (*semigroup) {
      report = dmod::semigroupReport(config);
    } else if (*operators) {
      report = dmod::operatorsReport(config, op);
    } else if (*grd) {
      report = dmod::grdReport(config);
    } else if (*hilbert) {
      report = dmod::hilbertReport(config, ideal);
    } else if (*simples) {
      report = dmod::simplesReport(config);
    } else if (*extTable) {
      report = dmod::extTableReport(config);
    } else if (*indecomp) {
      request.alpha = dmod::parseRational(alphaText);
      report = dmod::indecompReport(config, request);
    } else {
      report = dmod::verifyReport(config, only);
    }
    if (config.json)
      std::cout << report.json.dump(2) << "\n";
    else
      std::cout << report.text;
    return report.exitCode;
  } catch (const dmod::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
