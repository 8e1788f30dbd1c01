#include "hardy/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace hardy {

OutputFormat format_from_string(const std::string& s) {
  if (s == "text" || s == "TEXT") return OutputFormat::Text;
  if (s == "csv" || s == "CSV") return OutputFormat::Csv;
  if (s == "json" || s == "JSON") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + s);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string short_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json json_or_null(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

}  // namespace

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = "certificate";
  j["statement"] = to_string(c.statement);
  j["method"] = c.method;
  j["p"] = c.p;
  j["r"] = c.r;
  j["beta"] = c.beta;
  j["gamma"] = c.gamma;
  j["K"] = c.K;
  j["status"] = c.certified ? "CERTIFIED" : "UNCERTIFIED";
  if (!c.certified) j["reason"] = c.reason;
  j["constant"] = c.constant;
  j["min_s"] = c.min_s;
  j["min_s_at"] = c.min_s_at;
  j["tail_bound"] = json_or_null(c.tail_bound);
  j["tail_justification"] = to_string(c.tail_tag);
  Json rows = Json::array();
  for (const auto& e : c.s_values) rows.push_back(Json{{"k", e.n}, {"s", e.value}});
  j["per_k_values"] = std::move(rows);
  return j;
}

Json to_json(const WeightConditionReport& r) {
  Json j;
  j["kind"] = "weight_condition";
  j["condition"] = r.condition_id;
  j["parameter"] = r.parameter;
  j["n_max"] = r.n_max;
  j["verdict"] = r.holds ? "HOLDS_UP_TO_N_MAX" : ("VIOLATED_AT(" + std::to_string(r.violated_at) + ")");
  if (!std::isnan(r.e_value)) j["E"] = r.e_value;
  j["tail_note"] = r.tail_note;
  Json rows = Json::array();
  for (const auto& e : r.per_index) rows.push_back(Json{{"n", e.n}, {"value", e.value}});
  j["per_index"] = std::move(rows);
  return j;
}

Json to_json(const ProbeResult& r) {
  Json j;
  j["kind"] = "probe";
  j["statement"] = r.statement;
  j["mode"] = r.mode;
  j["best_bound"] = r.best_bound;
  j["monotone_trend"] = r.monotone_trend;
  j["iterations"] = r.diagnostics.iterations;
  j["final_residual"] = r.diagnostics.final_residual;
  j["converged"] = r.diagnostics.converged;
  j["notes"] = r.notes;
  Json rows = Json::array();
  for (const auto& s : r.samples)
    rows.push_back(Json{{"parameter", s.parameter}, {"N", s.N}, {"ratio", s.ratio}});
  j["samples"] = std::move(rows);
  return j;
}

Json to_json(const DualDescriptor& d) {
  auto params = [](const StatementParams& q) {
    Json p;
    if (q.has_p()) p["p"] = q.p;
    if (q.has_r()) p["r"] = q.r;
    if (q.has_alpha()) p["alpha"] = q.alpha;
    if (q.has_beta()) p["beta"] = q.beta;
    return p;
  };
  Json j;
  j["kind"] = "dual";
  j["source"] = to_string(d.source);
  j["target"] = to_string(d.target);
  j["source_params"] = params(d.source_params);
  j["target_params"] = params(d.target_params);
  j["source_constant"] = d.source_constant;
  j["target_constant"] = d.target_constant;
  j["exponent_map"] = d.exponent_map;
  j["parameter_map"] = d.parameter_map;
  j["operator_map"] = d.operator_map;
  return j;
}

Json to_json(const BetaSearchResult& b) {
  Json j;
  j["kind"] = "beta_search";
  j["beta_star"] = b.beta_star;
  j["value"] = b.value;
  j["iterations"] = b.iterations;
  j["bracket"] = Json::array({b.bracket_lo, b.bracket_hi});
  return j;
}

Json to_json(const TransposeNormResult& t) {
  Json j;
  j["kind"] = "transpose_norm";
  j["max_relative_gap"] = t.max_relative_gap;
  j["trials"] = t.trials;
  j["all_converged"] = t.all_converged;
  return j;
}

std::string to_csv(const Certificate& c) {
  std::ostringstream out;
  out << "k,s\n";
  for (const auto& e : c.s_values) out << e.n << "," << format_double(e.value) << "\n";
  return out.str();
}

std::string to_csv(const WeightConditionReport& r) {
  std::ostringstream out;
  out << "n,value\n";
  for (const auto& e : r.per_index) out << e.n << "," << format_double(e.value) << "\n";
  return out.str();
}

std::string to_csv(const ProbeResult& r) {
  std::ostringstream out;
  out << "parameter,N,ratio\n";
  for (const auto& s : r.samples)
    out << format_double(s.parameter) << "," << s.N << "," << format_double(s.ratio) << "\n";
  return out.str();
}

std::string to_text(const Certificate& c) {
  std::ostringstream out;
  out << "certificate (" << c.method << ", " << to_string(c.statement) << " form)  p="
      << short_double(c.p) << " r=" << short_double(c.r) << " beta=" << short_double(c.beta)
      << " K=" << c.K << "\n";
  out << "  status      : " << (c.certified ? "CERTIFIED" : "UNCERTIFIED") << "\n";
  if (!c.certified) out << "  reason      : " << c.reason << "\n";
  out << "  constant    : " << format_double(c.constant) << "\n";
  out << "  min s_k     : " << format_double(c.min_s) << " at k=" << c.min_s_at << "\n";
  out << "  tail bound  : "
      << (std::isnan(c.tail_bound) ? std::string("none") : format_double(c.tail_bound)) << " ["
      << to_string(c.tail_tag) << "]\n";
  long show = std::min<long>(10, static_cast<long>(c.s_values.size()));
  for (long i = 0; i < show; ++i)
    out << "    s_" << c.s_values[static_cast<size_t>(i)].n << " = "
        << short_double(c.s_values[static_cast<size_t>(i)].value) << "\n";
  if (show < static_cast<long>(c.s_values.size()))
    out << "    ... (" << c.s_values.size() - static_cast<size_t>(show) << " more)\n";
  return out.str();
}

std::string to_text(const WeightConditionReport& r) {
  std::ostringstream out;
  out << "condition " << r.condition_id << "  parameter=" << short_double(r.parameter)
      << "  n_max=" << r.n_max << "\n";
  out << "  verdict   : "
      << (r.holds ? "HOLDS_UP_TO_N_MAX" : "VIOLATED_AT(" + std::to_string(r.violated_at) + ")")
      << "\n";
  if (!std::isnan(r.e_value)) out << "  E = e^M   : " << format_double(r.e_value) << "\n";
  double min_v = std::numeric_limits<double>::infinity();
  long min_at = -1;
  for (const auto& e : r.per_index)
    if (e.value < min_v) {
      min_v = e.value;
      min_at = e.n;
    }
  out << "  min value : " << format_double(min_v) << " at n=" << min_at << "\n";
  out << "  note      : " << r.tail_note << "\n";
  return out.str();
}

std::string to_text(const ProbeResult& r) {
  std::ostringstream out;
  out << "probe " << r.mode << (r.statement.empty() ? "" : " [" + r.statement + "]") << "\n";
  out << "  best bound : " << format_double(r.best_bound) << "\n";
  out << "  monotone   : " << (r.monotone_trend ? "yes" : "no") << "\n";
  out << "  iterations : " << r.diagnostics.iterations
      << "  residual=" << short_double(r.diagnostics.final_residual)
      << "  converged=" << (r.diagnostics.converged ? "yes" : "no") << "\n";
  out << "  samples    :\n";
  for (const auto& s : r.samples)
    out << "    parameter=" << short_double(s.parameter) << "  N=" << s.N
        << "  ratio=" << format_double(s.ratio) << "\n";
  if (!r.notes.empty()) out << "  notes      : " << r.notes << "\n";
  return out.str();
}

std::string to_text(const DualDescriptor& d) {
  std::ostringstream out;
  auto params = [](const StatementParams& q) {
    std::string s;
    if (q.has_p()) s += " p=" + short_double(q.p);
    if (q.has_r()) s += " r=" + short_double(q.r);
    if (q.has_alpha()) s += " alpha=" + short_double(q.alpha);
    if (q.has_beta()) s += " beta=" + short_double(q.beta);
    return s;
  };
  out << "dual pairing " << to_string(d.source) << " -> " << to_string(d.target) << "\n";
  out << "  source     :" << params(d.source_params)
      << "  constant=" << format_double(d.source_constant) << "\n";
  out << "  target     :" << params(d.target_params)
      << "  constant=" << format_double(d.target_constant) << "\n";
  out << "  exponents  : " << d.exponent_map << "\n";
  out << "  parameters : " << d.parameter_map << "\n";
  out << "  operators  : " << d.operator_map << "\n";
  return out.str();
}

std::string to_text(const BetaSearchResult& b) {
  std::ostringstream out;
  out << "beta search\n";
  out << "  beta*      : " << format_double(b.beta_star) << "\n";
  out << "  value      : " << format_double(b.value) << "\n";
  out << "  iterations : " << b.iterations << "\n";
  return out.str();
}

void emit(const std::string& payload, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << payload;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw std::runtime_error("cannot write report to " + *path);
  out << payload;
}

}  // namespace hardy
