#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bound.hpp"
#include "codes.hpp"
#include "common.hpp"
#include "ffexamples.hpp"
#include "newness.hpp"
#include "parse.hpp"
#include "quotient.hpp"
#include "semifields.hpp"

// Command implementations shared by the command-line tool and the tests.
// Each command returns an exit code and an ordered JSON report.
namespace skewlab::app {

using report_t = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct CommandResult {
  int exit_code = kPass;
  report_t report;
  std::string error;
};

inline constexpr std::uint64_t kDefaultCodewordBudget = 10'000'000;

// SKEWLAB_BUDGET replaces the built-in default; an explicit flag wins over both.
inline std::uint64_t env_budget(std::uint64_t fallback) {
  const char* v = std::getenv("SKEWLAB_BUDGET");
  if (!v || !*v) return fallback;
  const std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("SKEWLAB_BUDGET must be a non-negative integer");
  return std::stoull(s);
}

struct RunOptions {
  std::string mode = "exhaustive";
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
};

inline void check_run_options(const RunOptions& o) {
  if (o.mode != "exhaustive" && o.mode != "sampled")
    throw std::invalid_argument("mode must be 'exhaustive' or 'sampled'");
  if (o.mode == "sampled" && !o.seed) throw std::invalid_argument("sampled mode requires --seed");
  if (o.mode == "sampled" && o.samples == 0) throw std::invalid_argument("sampled mode needs at least one sample");
  if (o.jobs == 0) throw std::invalid_argument("jobs must be positive");
}

// Maps exceptions onto the exit-code contract.
template <class Body>
CommandResult guarded(Body body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return {kBudget, report_t{{"error", e.what()}}, e.what()};
  } catch (const nlohmann::json::exception& e) {
    const std::string msg = std::string("malformed input: ") + e.what();
    return {kUsage, report_t{{"error", msg}}, msg};
  } catch (const std::invalid_argument& e) {
    return {kUsage, report_t{{"error", e.what()}}, e.what()};
  } catch (const std::out_of_range& e) {
    return {kUsage, report_t{{"error", e.what()}}, e.what()};
  } catch (const std::exception& e) {
    const std::string msg = std::string("internal error: ") + e.what();
    return {kCheckFailed, report_t{{"error", msg}}, msg};
  }
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return nlohmann::json::parse(buf.str());
}

namespace detail {

template <class Field>
report_t bound_report(const Field& L, const std::string& poly_text) {
  const auto f = parse_skew(L, poly_text);
  const auto rep = bound(f);
  report_t r;
  r["f"] = f.to_string();
  r["F"] = upoly::to_string(L, rep.F, "y");
  r["char_poly"] = upoly::to_string(L, rep.char_poly, "y");
  r["s"] = rep.s;
  r["ell"] = rep.ell ? report_t(*rep.ell) : report_t(nullptr);
  r["m"] = rep.m ? report_t(*rep.m) : report_t(nullptr);
  r["norm_identity"] = norm_identity_holds(f, rep);
  return r;
}

inline FiniteField::aut rho_from(const FiniteField& L, unsigned h) { return L.make_aut(h); }
inline FunctionField::aut rho_from(const FunctionField& L, unsigned h) { return L.sigma_aut(h); }

// Context from a spec object: an explicit f fixes F and ell; otherwise (finite
// case only) f is searched from F.
template <class Field>
QuotientContext<Field> context_from(const Field& L, const nlohmann::json& spec) {
  if (spec.contains("f")) {
    const auto f = parse_skew(L, spec.at("f").get<std::string>());
    auto ctx = QuotientContext<Field>::from_divisor(L, f);
    if (spec.contains("F") && !upoly::equal(L, central_from_json(L, spec.at("F")), ctx.F()))
      throw std::invalid_argument("the bound of f is " + upoly::to_string(L, ctx.F(), "y") + ", not the given F");
    return ctx;
  }
  if constexpr (std::is_same_v<Field, FiniteField>) {
    return QuotientContext<FiniteField>::finite(L, central_from_json(L, spec.at("F")));
  } else {
    throw std::invalid_argument("function-field specs must give the divisor f");
  }
}

inline Family family_from(const nlohmann::json& spec) {
  const auto name = spec.at("family").get<std::string>();
  if (name == "S") return Family::S;
  if (name == "D") return Family::D;
  throw std::invalid_argument("family must be 'S' or 'D'");
}

inline report_t newness_json(const std::vector<NewnessEntry>& entries) {
  report_t out = report_t::array();
  for (const auto& x : entries) out.push_back(report_t{{"family", x.family}, {"verdict", x.verdict}, {"reason", x.reason}});
  return out;
}

inline report_t sizes_json(const NuclearSizes& s) {
  return report_t{{"Il", s.Il}, {"Ir", s.Ir}, {"C", s.C}, {"Z", s.Z}};
}

template <class Field>
CommandResult verify_in(const Field& L, const FieldSpec& fs, const nlohmann::json& spec, const RunOptions& opt) {
  const Family family = family_from(spec);
  const auto ctx = context_from(L, spec);
  CodeSpec<Field> cs;
  cs.family = family;
  cs.ctx = &ctx;
  cs.k = spec.at("k").get<std::size_t>();
  if (family == Family::S) {
    cs.param = element_from_json(L, spec.at("eta"));
    cs.rho = rho_from(L, spec.value("rho_exp", 0u));
  } else {
    cs.param = element_from_json(L, spec.at("gamma"));
  }
  check_code_spec(cs);

  MrdOptions mo;
  mo.exhaustive = opt.mode == "exhaustive";
  mo.samples = opt.samples;
  mo.seed = opt.seed.value_or(0);
  mo.budget = opt.budget ? *opt.budget : env_budget(kDefaultCodewordBudget);
  mo.jobs = opt.jobs;

  report_t r;
  r["field"] = fs.describe();
  r["seed"] = opt.seed ? report_t(*opt.seed) : report_t(nullptr);
  r["family"] = family_name(family);
  r["f"] = ctx.f().to_string();
  r["F"] = upoly::to_string(L, ctx.F(), "y");
  r["params"] = report_t{{"n", ctx.n()}, {"s", ctx.s()}, {"ell", ctx.ell()}, {"m", ctx.m()}, {"k", cs.k}};
  const bool valid = validate(cs);
  r["valid"] = valid;

  const auto mrd = verify_mrd(cs, mo);
  report_t m{{"mode", mrd.mode},
             {"target_rank", ctx.m() - cs.k + 1},
             {"witnessed", mrd.witnessed},
             {"min_rank", mrd.min_rank},
             {"checked", mrd.checked}};
  if (mrd.counterexample) m["counterexample"] = *mrd.counterexample;
  r["mrd"] = m;

  bool nuclear_ok = true;
  if constexpr (std::is_same_v<Field, FiniteField>) {
    const auto nuc = nuclear_params(cs);
    report_t n = sizes_json(nuc.computed);
    n["expected"] = sizes_json(nuc.expected);
    n["in_closed_form_range"] = nuc.in_closed_form_range;
    n["normalized"] = nuc.normalized;
    r["nuclear"] = n;
    const auto& a = nuc.computed;
    const auto& b = nuc.expected;
    nuclear_ok = !nuc.in_closed_form_range || (a.Il == b.Il && a.Ir == b.Ir && a.C == b.C && a.Z == b.Z);

    NewnessInput in;
    in.family = family;
    in.p = L.p();
    in.e = L.e();
    in.n = L.n();
    in.s = static_cast<unsigned>(ctx.s());
    in.k = static_cast<unsigned>(cs.k);
    in.eta_zero = family == Family::S && L.is_zero(cs.param);
    const auto entries = newness_report(in);
    r["newness"] = newness_json(entries);
    r["verdict"] = overall_verdict(entries);
  } else {
    r["nuclear"] = nullptr;
    r["newness"] = report_t::array();
    r["verdict"] = nullptr;
  }

  // An invalid parameter choice makes no claim, so nothing can fail.
  const bool pass = !valid || (mrd.witnessed && nuclear_ok);
  r["pass"] = pass;
  return {pass ? kPass : kCheckFailed, r, ""};
}

}  // namespace detail

inline CommandResult cmd_bound(const std::string& field_text, const std::string& poly_text) {
  return guarded([&]() -> CommandResult {
    const auto fs = parse_field_spec(field_text);
    report_t r;
    r["field"] = fs.describe();
    report_t body;
    if (fs.kind == "finite") {
      const auto L = make_finite_field(fs);
      body = detail::bound_report(*L, poly_text);
    } else {
      const auto L = make_function_field(fs);
      body = detail::bound_report(*L, poly_text);
    }
    for (auto& [k, v] : body.items()) r[k] = v;
    return {kPass, r, ""};
  });
}

// The spec object carries "field" (string or object), "family", "k", "F" or
// "f", and "eta" with optional "rho_exp" (S) or "gamma" (D).
inline CommandResult cmd_verify(const nlohmann::json& spec, const RunOptions& opt) {
  return guarded([&]() -> CommandResult {
    check_run_options(opt);
    if (!spec.is_object()) throw std::invalid_argument("code spec must be a JSON object");
    const auto& fj = spec.at("field");
    const auto fs = fj.is_string() ? parse_field_spec(fj.get<std::string>()) : parse_field_spec(fj);
    if (fs.kind == "finite") {
      const auto L = make_finite_field(fs);
      return detail::verify_in(*L, fs, spec, opt);
    }
    const auto L = make_function_field(fs);
    return detail::verify_in(*L, fs, spec, opt);
  });
}

inline CommandResult cmd_verify_file(const std::string& path, const RunOptions& opt) {
  return guarded([&]() -> CommandResult { return cmd_verify(read_json_file(path), opt); });
}

inline std::vector<unsigned> parse_r_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("r list must be comma-separated positive integers");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (out.empty()) throw std::invalid_argument("r list is empty");
  return out;
}

inline CommandResult cmd_ffsuite(const std::vector<unsigned>& rs, const std::optional<std::string>& check,
                                 unsigned max_r = 9) {
  return guarded([&]() -> CommandResult {
    for (unsigned r : rs) {
      if (r % 2 == 0) throw std::invalid_argument("r must be odd, got " + std::to_string(r));
      if (r < 3 || r > max_r)
        throw std::invalid_argument("r must lie in [3, " + std::to_string(max_r) + "], got " + std::to_string(r));
    }
    if (check) {
      const auto names = ff::suite_check_names();
      if (std::find(names.begin(), names.end(), *check) == names.end())
        throw std::invalid_argument("unknown check '" + *check + "'");
    }
    report_t rows = report_t::array();
    bool all = true;
    for (unsigned r : rs) {
      for (const auto& row : ff::run_suite(r, check, max_r)) {
        rows.push_back(report_t{{"r", row.r}, {"check", row.check}, {"pass", row.pass}, {"detail", row.detail}});
        all = all && row.pass;
      }
    }
    report_t out;
    out["results"] = rows;
    out["all_pass"] = all;
    return {all ? kPass : kCheckFailed, out, ""};
  });
}

// Semifield spec: "field", "family" ("S", "S'" or "D"), "F" or "f", and
// "eta"/"rho_exp" or "gamma". Finite fields only.
inline CommandResult cmd_semifield(const nlohmann::json& spec, const RunOptions& opt) {
  return guarded([&]() -> CommandResult {
    if (opt.jobs == 0) throw std::invalid_argument("jobs must be positive");
    if (!spec.is_object()) throw std::invalid_argument("semifield spec must be a JSON object");
    const auto& fj = spec.at("field");
    const auto fs = fj.is_string() ? parse_field_spec(fj.get<std::string>()) : parse_field_spec(fj);
    if (fs.kind != "finite") throw std::invalid_argument("semifield scans need a finite field");
    const auto L = make_finite_field(fs);
    const auto ctx = detail::context_from(*L, spec);
    const std::string family = spec.at("family").get<std::string>();
    const std::uint64_t budget = opt.budget ? *opt.budget : env_budget(kDefaultPairBudget);
    const QuotientSpace space(*L, ctx.f().length() - 1);

    report_t r;
    r["field"] = fs.describe();
    r["family"] = family;
    r["f"] = ctx.f().to_string();
    r["F"] = upoly::to_string(*L, ctx.F(), "y");
    r["order"] = space.order();

    auto run = [&](const auto& alg, bool valid) {
      r["valid"] = valid;
      const auto zd = zero_divisor_scan(space, alg, opt.jobs, budget);
      report_t z{{"found", zd.found}, {"pairs", zd.pairs}};
      if (zd.witness) z["witness"] = report_t::array({zd.witness->first, zd.witness->second});
      r["zero_divisors"] = z;
      const auto nu = nuclei(space, alg);
      r["unital"] = nu.unital;
      r["unit"] = nu.unit ? report_t(*nu.unit) : report_t(nullptr);
      r["nuclei"] = report_t{{"Nl", nu.Nl}, {"Nm", nu.Nm}, {"Nr", nu.Nr}, {"Z", nu.Z}, {"normalized", nu.normalized}};
      return valid && zd.found;
    };

    bool failed = false;
    NewnessInput in;
    in.p = L->p();
    in.e = L->e();
    in.n = L->n();
    in.s = static_cast<unsigned>(ctx.s());
    in.k = 1;
    if (family == "S" || family == "S'") {
      const StarS<FiniteField> base(ctx, element_from_json(*L, spec.at("eta")), L->make_aut(spec.value("rho_exp", 0u)));
      in.family = Family::S;
      in.eta_zero = L->is_zero(base.eta());
      failed = family == "S" ? run(base, base.valid()) : run(StarSPrime<FiniteField>(base), base.valid());
    } else if (family == "D") {
      const StarD<FiniteField> alg(ctx, element_from_json(*L, spec.at("gamma")));
      in.family = Family::D;
      failed = run(alg, alg.valid());
    } else {
      throw std::invalid_argument("semifield family must be 'S', \"S'\" or 'D'");
    }
    const auto entries = newness_report(in);
    r["newness"] = detail::newness_json(entries);
    r["verdict"] = overall_verdict(entries);
    r["pass"] = !failed;
    return {failed ? kCheckFailed : kPass, r, ""};
  });
}

inline CommandResult cmd_semifield_file(const std::string& path, const RunOptions& opt) {
  return guarded([&]() -> CommandResult { return cmd_semifield(read_json_file(path), opt); });
}

inline CommandResult cmd_newness(const NewnessInput& in) {
  return guarded([&]() -> CommandResult {
    const auto entries = newness_report(in);
    report_t r;
    r["family"] = family_name(in.family);
    r["params"] = report_t{{"p", in.p}, {"e", in.e}, {"n", in.n}, {"s", in.s}, {"k", in.k}};
    r["entries"] = detail::newness_json(entries);
    r["verdict"] = overall_verdict(entries);
    return {kPass, r, ""};
  });
}

}  // namespace skewlab::app
