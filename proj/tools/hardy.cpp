// Command-line front end: certification, beta search, extremal probes,
// weight-condition checks, Carleman analysis, duality checks and the
// closed-constant catalog, emitted as text, CSV or JSON.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "hardy/certify.hpp"
#include "hardy/dual.hpp"
#include "hardy/operators.hpp"
#include "hardy/probe.hpp"
#include "hardy/report.hpp"
#include "hardy/weights.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 2;  // mathematically negative result (UNCERTIFIED/VIOLATED)
constexpr int kInvalid = 3;   // bad invocation or hypothesis violation

struct Common {
  std::string format = "text";
  std::optional<std::string> output;
  long seed = 12345;
  int threads = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "text, csv or json")->default_val("text");
  cmd->add_option("--output", c.output, "write the report to this path");
  cmd->add_option("--seed", c.seed, "seed for randomized checks")->default_val(12345);
  cmd->add_option("--threads", c.threads, "cap OpenMP worker count (0 = default)");
}

// Flat "key = value" configuration: each key becomes --key unless that flag
// is already on the command line, so explicit flags win.
std::vector<std::string> expand_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    std::string flag = "--" + key;
    bool present = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) {
        present = true;
        break;
      }
    if (present) continue;
    args.push_back(flag);
    std::istringstream words(value);  // multi-valued keys hold space-separated lists
    for (std::string w; words >> w;) args.push_back(w);
  }
  return args;
}

void apply_threads(const Common& c) {
#ifdef _OPENMP
  int t = c.threads;
  if (t <= 0) {
    if (const char* env = std::getenv("HARDY_THREADS")) t = std::atoi(env);
  }
  if (t > 0) omp_set_num_threads(t);
#else
  (void)c;
#endif
}

template <class T>
void emit_as(const T& value, const Common& c) {
  hardy::emit(hardy::render(value, hardy::format_from_string(c.format)), c.output);
}

struct FamilyOpts {
  std::string family = "powerdiff";
  double r = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  std::string file;
};

void add_family(CLI::App* cmd, FamilyOpts& f) {
  cmd->add_option("--family", f.family, "powerdiff, headpower, purepower or tabulated")
      ->default_val("powerdiff");
  cmd->add_option("--r", f.r, "r for the powerdiff family");
  cmd->add_option("--alpha", f.alpha, "alpha for the headpower/purepower families");
  cmd->add_option("--file", f.file, "two-column file for the tabulated family");
}

hardy::WeightFamily build_family(const FamilyOpts& f) {
  if (f.family == "powerdiff") {
    if (std::isnan(f.r)) throw CLI::ValidationError("--r is required for --family powerdiff");
    return hardy::WeightFamily::power_diff_remainder(f.r);
  }
  if (f.family == "headpower") {
    if (std::isnan(f.alpha)) throw CLI::ValidationError("--alpha is required for headpower");
    return hardy::WeightFamily::head_power_diff(f.alpha);
  }
  if (f.family == "purepower") {
    if (std::isnan(f.alpha)) throw CLI::ValidationError("--alpha is required for purepower");
    return hardy::WeightFamily::pure_power(f.alpha);
  }
  if (f.family == "tabulated") {
    if (f.file.empty()) throw CLI::ValidationError("--file is required for tabulated");
    return hardy::WeightFamily::tabulated_from_file(f.file);
  }
  throw CLI::ValidationError("unknown family: " + f.family);
}

hardy::StatementParams gather_params(double p, double r, double alpha, double beta) {
  hardy::StatementParams q;
  q.p = p;
  q.r = r;
  q.alpha = alpha;
  q.beta = beta;
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"best-constant certification and probing for weighted remainder/head mean "
               "inequalities"};
  app.name("hardy");
  app.require_subcommand(1);
  app.footer("Every subcommand accepts --config FILE with flat 'key = value' lines; "
             "command-line flags override file values.");
  const double nan = std::numeric_limits<double>::quiet_NaN();

  // constants
  auto* c_cmd = app.add_subcommand("constants", "closed-form constant catalog");
  Common c_common;
  std::string c_statement;
  double c_p = nan, c_r = nan, c_alpha = nan, c_beta = nan;
  c_cmd->add_option("--statement", c_statement, "statement id, e.g. THM4")->required();
  c_cmd->add_option("--p", c_p, "exponent p");
  c_cmd->add_option("--r", c_r, "parameter r");
  c_cmd->add_option("--alpha", c_alpha, "parameter alpha");
  c_cmd->add_option("--beta", c_beta, "parameter beta");
  add_common(c_cmd, c_common);

  // certify
  auto* ce_cmd = app.add_subcommand("certify", "auxiliary-sequence certificate engine");
  Common ce_common;
  double ce_p = nan, ce_r = nan, ce_beta = nan;
  long ce_kmax = hardy::kDefaultCertificateK;
  ce_cmd->add_option("--p", ce_p, "exponent p in (0,1)")->required();
  ce_cmd->add_option("--r", ce_r, "parameter r")->required();
  ce_cmd->add_option("--beta", ce_beta, "auxiliary power beta > 0")->required();
  ce_cmd->add_option("--kmax", ce_kmax, "explicit k range of the certificate");
  add_common(ce_cmd, ce_common);

  // search-beta
  auto* sb_cmd = app.add_subcommand("search-beta", "crossing of s_1 and the tail envelope");
  Common sb_common;
  double sb_p = nan, sb_r = nan;
  sb_cmd->add_option("--p", sb_p)->required();
  sb_cmd->add_option("--r", sb_r)->required();
  add_common(sb_cmd, sb_common);

  // probe
  auto* pr_cmd = app.add_subcommand("probe", "extremal-family sweep toward the best constant");
  Common pr_common;
  std::string pr_statement;
  double pr_p = nan, pr_r = nan, pr_alpha = nan;
  std::vector<double> pr_eps;
  pr_cmd->add_option("--statement", pr_statement)->required();
  pr_cmd->add_option("--p", pr_p);
  pr_cmd->add_option("--r", pr_r);
  pr_cmd->add_option("--alpha", pr_alpha);
  pr_cmd->add_option("--eps", pr_eps, "epsilon grid")->required()->expected(-1);
  add_common(pr_cmd, pr_common);

  // n-sweep
  auto* ns_cmd = app.add_subcommand("n-sweep", "truncated optimization across N");
  Common ns_common;
  std::string ns_statement = "INEQ_1";
  double ns_p = nan, ns_r = nan, ns_alpha = nan, ns_tol = 1e-10;
  std::vector<long> ns_N;
  std::optional<double> ns_ref;
  ns_cmd->add_option("--statement", ns_statement)->default_val("INEQ_1");
  ns_cmd->add_option("--p", ns_p)->required();
  ns_cmd->add_option("--r", ns_r);
  ns_cmd->add_option("--alpha", ns_alpha);
  ns_cmd->add_option("--N", ns_N, "strictly increasing truncations")->required()->expected(-1);
  ns_cmd->add_option("--tol", ns_tol)->default_val(1e-10);
  ns_cmd->add_option("--ref", ns_ref, "reference constant for the gap note");
  add_common(ns_cmd, ns_common);

  // check-weights
  auto* cw_cmd = app.add_subcommand("check-weights", "per-index L-condition slack");
  Common cw_common;
  FamilyOpts cw_family;
  std::string cw_condition = "EQ66";
  double cw_L = nan, cw_p = nan;
  long cw_nmax = 10000;
  add_family(cw_cmd, cw_family);
  cw_cmd->add_option("--condition", cw_condition, "EQ66, EQ66_REVERSED or EQ66_PRIME")
      ->default_val("EQ66");
  cw_cmd->add_option("--L", cw_L)->required();
  cw_cmd->add_option("--p", cw_p, "needed by EQ66_PRIME");
  cw_cmd->add_option("--nmax", cw_nmax)->default_val(10000);
  add_common(cw_cmd, cw_common);

  // carleman
  auto* ca_cmd = app.add_subcommand("carleman", "geometric-mean constants E = e^M");
  Common ca_common;
  FamilyOpts ca_family;
  std::string ca_variant = "M_DIFF";
  long ca_nmax = 10000, ca_inner = 100000;
  add_family(ca_cmd, ca_family);
  ca_cmd->add_option("--variant", ca_variant, "M_LOG, M_DIFF or M_AVG")->default_val("M_DIFF");
  ca_cmd->add_option("--nmax", ca_nmax)->default_val(10000);
  ca_cmd->add_option("--inner-cutoff", ca_inner)->default_val(100000);
  add_common(ca_cmd, ca_common);

  // dual-check
  auto* du_cmd = app.add_subcommand("dual-check", "duality pairings and transpose norms");
  Common du_common;
  std::string du_mode = "statement", du_statement, du_which = "COR0";
  double du_p = nan, du_r = nan, du_alpha = nan, du_beta = nan, du_tol = 1e-10;
  long du_N = 30, du_trials = 20, du_nmax = 1000;
  du_cmd->add_option("--mode", du_mode, "statement, norms or weights")->default_val("statement");
  du_cmd->add_option("--statement", du_statement);
  du_cmd->add_option("--which", du_which, "COR0 or COR7 (weights mode)");
  du_cmd->add_option("--p", du_p);
  du_cmd->add_option("--r", du_r);
  du_cmd->add_option("--alpha", du_alpha);
  du_cmd->add_option("--beta", du_beta);
  du_cmd->add_option("--N", du_N)->default_val(30);
  du_cmd->add_option("--trials", du_trials)->default_val(20);
  du_cmd->add_option("--tol", du_tol)->default_val(1e-10);
  du_cmd->add_option("--nmax", du_nmax)->default_val(1000);
  add_common(du_cmd, du_common);

  // aux-check
  auto* au_cmd = app.add_subcommand("aux-check", "auxiliary inequality slack scans");
  Common au_common;
  std::string au_which;
  double au_r = nan, au_p = nan, au_gamma = nan, au_alpha = nan, au_beta = nan;
  long au_n = 0, au_nmax = 0;
  au_cmd->add_option("--which", au_which, "BOUND1, LEMMA_42, BENNETT_501, HOLDER_36, INEQ_611, "
                                          "COR0_WEIGHT or COR7_WEIGHT")->required();
  au_cmd->add_option("--r", au_r);
  au_cmd->add_option("--p", au_p);
  au_cmd->add_option("--gamma", au_gamma);
  au_cmd->add_option("--alpha", au_alpha);
  au_cmd->add_option("--beta", au_beta);
  au_cmd->add_option("--n", au_n, "single index");
  au_cmd->add_option("--nmax", au_nmax, "scan 1..nmax and report the minimum slack");
  add_common(au_cmd, au_common);

  try {
    auto args = expand_config_args(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;  // help/version exit clean, bad usage exits 3
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*c_cmd) {
      apply_threads(c_common);
      auto id = hardy::statement_from_string(c_statement);
      auto params = gather_params(c_p, c_r, c_alpha, c_beta);
      auto valid = hardy::validity_region(id, params);
      if (!valid.valid) {
        std::cerr << "invalid: " << valid.reason << "\n";
        return kInvalid;
      }
      double value = hardy::closed_constant(id, params);
      hardy::Json j;
      j["kind"] = "constant";
      j["statement"] = c_statement;
      j["constant"] = value;
      auto fmt = hardy::format_from_string(c_common.format);
      if (fmt == hardy::OutputFormat::Json)
        hardy::emit(j.dump(2) + "\n", c_common.output);
      else if (fmt == hardy::OutputFormat::Csv)
        hardy::emit("statement,constant\n" + c_statement + "," + hardy::format_double(value) + "\n",
                    c_common.output);
      else
        hardy::emit(c_statement + " constant = " + hardy::format_double(value) + "\n",
                    c_common.output);
      return kOk;
    }
    if (*ce_cmd) {
      apply_threads(ce_common);
      auto cert = hardy::certify_constant(ce_p, ce_r, ce_beta, ce_kmax);
      emit_as(cert, ce_common);
      return cert.certified ? kOk : kNegative;
    }
    if (*sb_cmd) {
      apply_threads(sb_common);
      auto res = hardy::beta_search(sb_p, sb_r);
      emit_as(res, sb_common);
      return kOk;
    }
    if (*pr_cmd) {
      apply_threads(pr_common);
      auto id = hardy::statement_from_string(pr_statement);
      auto res = hardy::extremal_sweep(id, gather_params(pr_p, pr_r, pr_alpha, nan), pr_eps);
      emit_as(res, pr_common);
      return kOk;
    }
    if (*ns_cmd) {
      apply_threads(ns_common);
      auto id = hardy::statement_from_string(ns_statement);
      auto op = hardy::statement_operator(id, gather_params(ns_p, ns_r, ns_alpha, nan),
                                          ns_N.empty() ? 1 : ns_N.front());
      auto res = hardy::n_sweep(op, ns_p, ns_N, ns_tol, ns_ref);
      res.statement = ns_statement;
      emit_as(res, ns_common);
      return res.diagnostics.converged ? kOk : kNegative;
    }
    if (*cw_cmd) {
      apply_threads(cw_common);
      auto family = build_family(cw_family);
      hardy::LCondition cond;
      if (cw_condition == "EQ66") cond = hardy::LCondition::EQ66;
      else if (cw_condition == "EQ66_REVERSED") cond = hardy::LCondition::EQ66_REVERSED;
      else if (cw_condition == "EQ66_PRIME") cond = hardy::LCondition::EQ66_PRIME;
      else throw CLI::ValidationError("unknown condition: " + cw_condition);
      auto rep = hardy::check_l_condition(family, cond, cw_L, cw_p, cw_nmax);
      emit_as(rep, cw_common);
      return rep.holds ? kOk : kNegative;
    }
    if (*ca_cmd) {
      apply_threads(ca_common);
      auto family = build_family(ca_family);
      hardy::MVariant variant;
      if (ca_variant == "M_LOG") variant = hardy::MVariant::M_LOG;
      else if (ca_variant == "M_DIFF") variant = hardy::MVariant::M_DIFF;
      else if (ca_variant == "M_AVG") variant = hardy::MVariant::M_AVG;
      else throw CLI::ValidationError("unknown variant: " + ca_variant);
      auto rep = hardy::carleman_m(family, variant, ca_nmax, ca_inner);
      emit_as(rep, ca_common);
      return kOk;
    }
    if (*du_cmd) {
      apply_threads(du_common);
      if (du_mode == "statement") {
        if (du_statement.empty()) throw CLI::ValidationError("--statement required");
        auto id = hardy::statement_from_string(du_statement);
        auto d = hardy::dualize_statement(id, gather_params(du_p, du_r, du_alpha, du_beta));
        emit_as(d, du_common);
        return kOk;
      }
      if (du_mode == "norms") {
        if (std::isnan(du_p)) throw CLI::ValidationError("--p required");
        auto res = hardy::transpose_norm_check(du_N, du_p, du_trials, du_tol,
                                               static_cast<unsigned>(du_common.seed));
        auto fmt = hardy::format_from_string(du_common.format);
        if (fmt == hardy::OutputFormat::Text)
          hardy::emit("max relative gap = " + hardy::format_double(res.max_relative_gap) +
                          " over " + std::to_string(res.trials) + " trials, converged=" +
                          (res.all_converged ? "yes" : "no") + "\n",
                      du_common.output);
        else
          hardy::emit(hardy::to_json(res).dump(2) + "\n", du_common.output);
        return res.all_converged ? kOk : kNegative;
      }
      if (du_mode == "weights") {
        auto which = du_which == "COR7" ? hardy::ChangeOfVars::COR7 : hardy::ChangeOfVars::COR0;
        auto m = hardy::change_of_vars_check(which, gather_params(du_p, du_r, du_alpha, du_beta),
                                             du_nmax);
        hardy::Json j;
        j["kind"] = "change_of_vars";
        j["which"] = du_which;
        j["min_slack"] = m.value;
        j["at_n"] = m.index;
        auto fmt = hardy::format_from_string(du_common.format);
        if (fmt == hardy::OutputFormat::Text)
          hardy::emit("min slack = " + hardy::format_double(m.value) + " at n=" +
                          std::to_string(m.index) + "\n",
                      du_common.output);
        else
          hardy::emit(j.dump(2) + "\n", du_common.output);
        return m.value >= -1e-12 ? kOk : kNegative;
      }
      throw CLI::ValidationError("unknown mode: " + du_mode);
    }
    if (*au_cmd) {
      apply_threads(au_common);
      auto which = hardy::aux_from_string(au_which);
      hardy::AuxParams params;
      params.r = au_r;
      params.p = au_p;
      params.gamma = au_gamma;
      params.alpha = au_alpha;
      params.beta = au_beta;
      hardy::Json j;
      j["kind"] = "aux_check";
      j["which"] = au_which;
      int code = kOk;
      std::string text;
      if (au_nmax > 0) {
        auto m = hardy::auxiliary_scan(which, params, au_nmax);
        j["min_slack"] = m.value;
        j["at_n"] = m.index;
        j["n_max"] = au_nmax;
        text = "min slack = " + hardy::format_double(m.value) + " at n=" +
               std::to_string(m.index) + " (n <= " + std::to_string(au_nmax) + ")\n";
        if (m.value < -1e-12) code = kNegative;
      } else {
        if (au_n < 1) throw CLI::ValidationError("give --n or --nmax");
        double s = hardy::auxiliary_check(which, params, au_n);
        j["slack"] = s;
        j["n"] = au_n;
        text = "slack = " + hardy::format_double(s) + " at n=" + std::to_string(au_n) + "\n";
        if (s < -1e-12) code = kNegative;
      }
      auto fmt = hardy::format_from_string(au_common.format);
      hardy::emit(fmt == hardy::OutputFormat::Text ? text : j.dump(2) + "\n", au_common.output);
      return code;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
