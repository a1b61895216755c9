#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "skewlab/app.hpp"

namespace {

using skewlab::app::CommandResult;

int emit(const CommandResult& res, const std::string& out_path) {
  if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
  if (res.exit_code == skewlab::app::kUsage || res.exit_code == skewlab::app::kBudget) return res.exit_code;
  const std::string text = res.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return skewlab::app::kUsage;
    }
    out << text;
  }
  return res.exit_code;
}

void add_run_flags(CLI::App* cmd, std::string& mode, std::uint64_t& samples, std::optional<std::uint64_t>& seed,
                   std::optional<std::uint64_t>& budget, unsigned& jobs) {
  cmd->add_option("--mode", mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  cmd->add_option("--samples", samples, "number of sampled codewords");
  cmd->add_option("--seed", seed, "seed for sampled mode");
  cmd->add_option("--budget", budget, "maximum number of enumerated items");
  cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewlab: skew polynomial rings, MRD codes and semifields"};
  app.require_subcommand(1);

  std::string field, poly, spec, out, check, r_list, family = "D";
  std::string mode = "exhaustive";
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> seed, budget;
  unsigned jobs = 1;
  skewlab::NewnessInput nin;

  auto* bound = app.add_subcommand("bound", "bound, ell, m and the norm identity of a skew polynomial");
  bound->add_option("--field", field, "finite:p=..,e=..,n=.. or funcfield:r=..")->required();
  bound->add_option("--poly", poly, "skew polynomial literal")->required();
  bound->add_option("--out", out, "write the report to a file");

  auto* verify = app.add_subcommand("verify", "verify the MRD property and nuclear parameters of a code");
  verify->add_option("--spec", spec, "code spec JSON file")->required();
  add_run_flags(verify, mode, samples, seed, budget, jobs);
  verify->add_option("--out", out, "write the report to a file");

  auto* ffsuite = app.add_subcommand("ffsuite", "function-field example checks");
  ffsuite->add_option("--r", r_list, "comma-separated odd r values")->required();
  ffsuite->add_option("--check", check, "run a single named check");
  ffsuite->add_option("--out", out, "write the report to a file");

  auto* semifield = app.add_subcommand("semifield", "zero-divisor scan and nuclei of a finite semifield");
  semifield->add_option("--spec", spec, "semifield spec JSON file")->required();
  semifield->add_option("--budget", budget, "maximum number of ordered pairs");
  semifield->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  semifield->add_option("--out", out, "write the report to a file");

  auto* newness = app.add_subcommand("newness", "compare D-family parameters with known families");
  newness->add_option("--family", family, "S or D")->check(CLI::IsMember({"S", "D"}));
  newness->add_option("--p", nin.p, "characteristic");
  newness->add_option("--e", nin.e, "q = p^e");
  newness->add_option("--n", nin.n, "degree of L over K");
  newness->add_option("--s", nin.s, "degree of F");
  newness->add_option("--k", nin.k, "code dimension parameter");
  newness->add_option("--out", out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return skewlab::app::kUsage;
  }

  skewlab::app::RunOptions opt;
  opt.mode = mode;
  opt.samples = samples;
  opt.seed = seed;
  opt.budget = budget;
  opt.jobs = jobs;

  if (*bound) return emit(skewlab::app::cmd_bound(field, poly), out);
  if (*verify) return emit(skewlab::app::cmd_verify_file(spec, opt), out);
  if (*semifield) return emit(skewlab::app::cmd_semifield_file(spec, opt), out);
  if (*newness) {
    nin.family = family == "S" ? skewlab::Family::S : skewlab::Family::D;
    return emit(skewlab::app::cmd_newness(nin), out);
  }
  std::vector<unsigned> rs;
  try {
    rs = skewlab::app::parse_r_list(r_list);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return skewlab::app::kUsage;
  }
  return emit(skewlab::app::cmd_ffsuite(rs, check.empty() ? std::nullopt : std::optional<std::string>(check)), out);
}
