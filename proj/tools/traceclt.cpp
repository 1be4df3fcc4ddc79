#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "traceclt/cli/commands.hpp"
#include "traceclt/ensembles/batch.hpp"

namespace {

using namespace traceclt;
using namespace traceclt::cli;

struct Flags {
  std::string group;
  int n = 0;
  std::string j;
  int j_max = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string config;
  bool export_raw = false;
  bool oracle_checks = false;
  bool matrix_power_check = false;
  std::vector<std::string> inputs;
};

struct Options {
  CLI::Option* group = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* j = nullptr;
  CLI::Option* j_max = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* config = nullptr;
};

Options add_common(CLI::App* app, Flags& f) {
  Options o;
  o.group = app->add_option("--group", f.group, "SO, USp or U")
                ->check(CLI::IsMember({"SO", "USp", "U"}, CLI::ignore_case));
  o.out = app->add_option("--out", f.out, "output path (stdout when omitted)");
  o.config = app->add_option("--config", f.config, "key = value config file")->check(CLI::ExistingFile);
  return o;
}

// Defaults, then the config file, then explicit flags.
ExperimentConfig resolve(const Flags& f, const Options& o) {
  ExperimentConfig c;
  if (o.config && o.config->count()) c = load_config(f.config, c);
  if (o.group && o.group->count()) c.group = parse_group(f.group);
  if (o.n && o.n->count()) c.n = f.n;
  if (o.j && o.j->count()) c.j = parse_int_list(f.j);
  if (o.j_max && o.j_max->count()) c.j_max = f.j_max;
  if (o.samples && o.samples->count()) c.samples = f.samples;
  if (o.seed && o.seed->count()) c.seed = f.seed;
  if (o.out && o.out->count()) c.out = f.out;
  if (f.export_raw) c.export_raw = true;
  if (f.oracle_checks) c.oracle_checks = true;
  if (f.matrix_power_check) c.matrix_power_check = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stein-bound verification and Monte Carlo checks for trace statistics of "
               "Haar-random SO(n), USp(2n) and U(n) matrices.\nWorker threads: " +
               std::string(ensembles::kThreadsEnv) + " (default: all cores)."};
  app.set_version_flag("--version", TRACECLT_VERSION);
  app.require_subcommand(1);

  Flags f;

  auto* verify = app.add_subcommand("verify", "run the symbolic lemma suite");
  Options ov = add_common(verify, f);
  ov.j_max = verify->add_option("--jmax", f.j_max, "largest j to expand");

  auto* bound = app.add_subcommand("bound", "print the closed-form Stein bound");
  Options ob = add_common(bound, f);
  ob.n = bound->add_option("--n", f.n, "group parameter");
  ob.j = bound->add_option("--j", f.j, "power j");

  auto* sample = app.add_subcommand("sample", "Monte Carlo KS and moment check");
  Options os = add_common(sample, f);
  os.n = sample->add_option("--n", f.n, "group parameter");
  os.j = sample->add_option("--j", f.j, "comma-separated powers, e.g. 1,2,4");
  os.samples = sample->add_option("--samples", f.samples, "number of Haar samples");
  os.seed = sample->add_option("--seed", f.seed, "RNG seed");
  sample->add_flag("--export-raw", f.export_raw, "also write <out>.samples.csv (index,seed,j,W)");
  sample->add_flag("--oracle-checks", f.oracle_checks, "compare all weight <= 6 moments to the oracle");
  sample->add_flag("--matrix-power-check", f.matrix_power_check,
                   "recompute traces by matrix powers (slow)");

  auto* merge = app.add_subcommand("report-merge", "merge sample reports");
  merge->add_option("inputs", f.inputs, "report files")->required()->check(CLI::ExistingFile);
  merge->add_option("--out", f.out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const ExperimentConfig c = resolve(f, ov);
      return cmd_verify(c.group, c.j_max, c.out, std::cerr, c.j_limit);
    }
    if (bound->parsed()) {
      const ExperimentConfig c = resolve(f, ob);
      if (c.j.size() != 1) {
        std::cerr << "bound takes a single --j\n";
        return kExitUsage;
      }
      const int code = cmd_bound(c.group, c.j.front(), c.n, std::cout);
      return code;
    }
    if (sample->parsed()) {
      const ExperimentConfig c = resolve(f, os);
      return cmd_sample(c, std::cerr);
    }
    if (merge->parsed()) return cmd_report_merge(f.inputs, f.out, std::cerr);
  } catch (const ensembles::IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << "\n";
    return kExitIntegrityFailure;
  } catch (const IoError& e) {
    std::cerr << "I/O failure: " << e.what() << "\n";
    return kExitIoFailure;
  } catch (const SchemaError& e) {
    std::cerr << "report schema error: " << e.what() << "\n";
    return kExitIoFailure;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
