#include "bloch/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bloch/corpus.hpp"
#include "bloch/nevanlinna.hpp"
#include "bloch/norms.hpp"

namespace bloch {

EstimatorConfig RunConfig::estimator_config() const {
  EstimatorConfig cfg;
  cfg.radial = radial;
  cfg.angular = angular;
  cfg.agrid_levels = sup_grid;
  cfg.power_horizon = powers;
  cfg.boundary_levels = levels;
  cfg.gamma_t_levels = tlevels;
  cfg.tol = tol;
  cfg.seed = seed;
  return cfg;
}

std::string RunConfig::describe(const std::string& command) const {
  std::ostringstream s;
  s << "# blochcli " << command << " radial=" << radial << " angular=" << angular
    << " sup-grid=" << sup_grid << " powers=" << powers << " seed=" << seed << " tol=" << tol
    << " levels=";
  for (size_t i = 0; i < levels.size(); ++i) s << (i ? "," : "") << levels[i];
  s << " tlevels=";
  for (size_t i = 0; i < tlevels.size(); ++i) s << (i ? "," : "") << tlevels[i];
  return s.str();
}

std::string format_cell(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

constexpr const char* kEmpty = "";

struct RowBuilder {
  const std::vector<std::string>& columns;
  std::map<std::string, std::string> cells;

  explicit RowBuilder(const std::vector<std::string>& cols) : columns(cols) {}

  void set(const std::string& name, std::string value) { cells[name] = std::move(value); }
  void set(const std::string& name, double value) { cells[name] = format_cell(value); }

  void append_flag(const std::string& flag) {
    auto& f = cells["flags"];
    if (!f.empty()) f += ";";
    f += flag;
  }

  std::vector<std::string> finish() const {
    std::vector<std::string> row;
    row.reserve(columns.size());
    for (const auto& name : columns) {
      auto it = cells.find(name);
      row.push_back(it == cells.end() ? kEmpty : it->second);
    }
    return row;
  }
};

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return (n % 2) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void add_summary(ReportTable& table, const std::string& name, const std::vector<double>& vals) {
  if (vals.empty()) return;
  std::ostringstream s;
  s << "# summary " << name << " min=" << format_cell(*std::min_element(vals.begin(), vals.end()))
    << " median=" << format_cell(median(vals))
    << " max=" << format_cell(*std::max_element(vals.begin(), vals.end()))
    << " count=" << vals.size();
  table.summary.push_back(s.str());
}

const AuditRow* find_row(const std::vector<AuditRow>& rows, const std::string& name) {
  for (const auto& r : rows)
    if (r.inequality == name) return &r;
  return nullptr;
}

}  // namespace

ReportTable run_norm(const std::vector<SymbolPair>& pairs, const RunConfig& config) {
  const EstimatorConfig cfg = config.estimator_config();
  ReportTable table;
  table.header_comment = config.describe("norm");
  table.columns = {"label",     "status",    "flags",     "error",      "u0_term",
                   "sup_alpha", "sup_beta",  "power_sup", "est_functional",
                   "est_power", "est_ratio", "grid_meta"};
  for (const SymbolPair& pair : pairs) {
    RowBuilder row(table.columns);
    row.set("label", pair.label);
    try {
      const FunctionalProfile profile = compute_profile(
          pair, cfg.agrid(), cfg.rule(), {}, cfg.power_horizon, cfg.sup_grid());
      const EstimateReport est_f = norm_estimate(pair, NormMethod::Functional, cfg, profile);
      const EstimateReport est_p = norm_estimate(pair, NormMethod::PowerSup, cfg, profile);
      row.set("status", "ok");
      row.set("u0_term", est_f.part("u0_term"));
      row.set("sup_alpha", est_f.part("sup_alpha"));
      row.set("sup_beta", est_f.part("sup_beta"));
      row.set("power_sup", est_p.part("power_sup"));
      row.set("est_functional", est_f.value);
      row.set("est_power", est_p.value);
      row.set("est_ratio", est_p.value > 0 ? est_f.value / est_p.value : 0.0);
      row.set("grid_meta", est_f.grid_meta);
      if (est_f.diverged || est_p.diverged) row.append_flag("diverged");
    } catch (const Error& e) {
      row.set("status", "error");
      row.set("error", e.what());
    }
    table.rows.push_back(row.finish());
  }
  return table;
}

ReportTable run_essnorm(const std::vector<SymbolPair>& pairs, const RunConfig& config) {
  const EstimatorConfig cfg = config.estimator_config();
  ReportTable table;
  table.header_comment = config.describe("essnorm");
  table.columns = {"label",      "status",    "flags",     "error",     "power_tail",
                   "alpha_tail", "beta_tail", "g_tail",    "gamma_tail", "essnorm_v1",
                   "essnorm_v2", "essnorm_v3", "essnorm_v4", "variant_ratio", "bounded",
                   "compact"};
  for (const SymbolPair& pair : pairs) {
    RowBuilder row(table.columns);
    row.set("label", pair.label);
    try {
      const FunctionalProfile profile = compute_profile(
          pair, cfg.agrid(), cfg.rule(), cfg.gamma_t_levels, cfg.power_horizon, cfg.sup_grid());
      const EssNormReport ess = essnorm_estimate(pair, cfg, profile);
      const Verdict verdict = classify(pair, cfg, profile);
      row.set("status", "ok");
      row.set("power_tail", ess.power_tail);
      row.set("alpha_tail", ess.alpha_tail);
      row.set("beta_tail", ess.beta_tail);
      row.set("g_tail", ess.g_tail);
      row.set("gamma_tail", ess.gamma_tail);
      row.set("essnorm_v1", ess.v1);
      row.set("essnorm_v2", ess.v2);
      row.set("essnorm_v3", ess.v3);
      row.set("essnorm_v4", ess.v4);
      row.set("variant_ratio", ess.coherence_ratio);
      row.set("bounded", to_string(verdict.bounded));
      row.set("compact", to_string(verdict.compact));
      if (ess.boundary_vacuous) row.append_flag("boundary-vacuous");
    } catch (const Error& e) {
      row.set("status", "error");
      row.set("error", e.what());
    }
    table.rows.push_back(row.finish());
  }
  return table;
}

ReportTable run_classify(const std::vector<SymbolPair>& pairs, const RunConfig& config) {
  const EstimatorConfig cfg = config.estimator_config();
  ReportTable table;
  table.header_comment = config.describe("classify");
  table.columns = {"label", "status", "flags", "error", "bounded", "compact"};
  // Evidence columns are discovered from the first successful verdict.
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::vector<std::string> errors(pairs.size());
  for (const SymbolPair& pair : pairs) {
    try {
      verdicts.emplace_back(pair.label, classify(pair, cfg));
    } catch (const Error& e) {
      verdicts.emplace_back(pair.label, Verdict{});
      errors[verdicts.size() - 1] = e.what();
    }
  }
  std::vector<std::string> evidence_names;
  for (const auto& [label, verdict] : verdicts)
    for (const auto& part : verdict.evidence)
      if (std::find(evidence_names.begin(), evidence_names.end(), part.name) ==
          evidence_names.end())
        evidence_names.push_back(part.name);
  for (const auto& name : evidence_names) table.columns.push_back(name);

  for (size_t i = 0; i < verdicts.size(); ++i) {
    RowBuilder row(table.columns);
    row.set("label", verdicts[i].first);
    if (!errors[i].empty()) {
      row.set("status", "error");
      row.set("error", errors[i]);
    } else {
      row.set("status", "ok");
      row.set("bounded", to_string(verdicts[i].second.bounded));
      row.set("compact", to_string(verdicts[i].second.compact));
      for (const auto& part : verdicts[i].second.evidence) row.set(part.name, part.value);
    }
    table.rows.push_back(row.finish());
  }
  return table;
}

ReportTable run_audit(const std::vector<SymbolPair>& pairs, const RunConfig& config) {
  const EstimatorConfig cfg = config.estimator_config();
  const DiskRule rule = cfg.rule();
  ReportTable table;
  table.header_comment = config.describe("audit");
  table.columns = {"label", "inequality", "status", "flags", "error",
                   "lhs",   "rhs",        "ratio",  "constant", "margin"};

  AuditConfig audit_cfg;
  audit_cfg.boundary_levels = cfg.boundary_levels;
  audit_cfg.gamma_r_levels = cfg.gamma_r_levels;

  auto emit = [&](const std::string& label, const AuditRow& r) {
    RowBuilder row(table.columns);
    row.set("label", label);
    row.set("inequality", r.inequality);
    row.set("status", "ok");
    row.set("lhs", r.lhs);
    row.set("rhs", r.rhs);
    row.set("ratio", r.ratio);
    row.set("constant", r.constant);
    row.set("margin", r.margin);
    if (!r.flags.empty()) row.set("flags", r.flags);
    table.rows.push_back(row.finish());
  };

  std::vector<double> product_ratios;
  for (const ProductCase& pc : product_norm_library()) {
    const NormValue gphi = ap_norm(*Expr::compose(pc.g, pc.phi), 2.0, rule);
    const NormValue gn = ap_norm(*pc.g, 2.0, rule);
    const NormValue pn = ap_norm(*pc.phi, 2.0, rule);
    AuditRow r;
    r.inequality = "composition_product_library";
    r.lhs = gphi.value;
    r.rhs = gn.value * pn.value;
    r.constant = audit_cfg.product_norm_constant;
    r.margin = r.constant * r.rhs - r.lhs;
    r.ratio = r.rhs > 0 ? r.lhs / r.rhs : 0.0;
    emit("library:" + pc.label, r);
    if (r.rhs > 0) product_ratios.push_back(r.ratio);
  }
  add_summary(table, "composition_product_ratio", product_ratios);

  std::vector<double> garsia_ratios;
  for (const TestFunction& tf : bloch_test_functions()) {
    const double seminorm = bloch_seminorm(*tf.f, cfg.sup_grid()).value;
    const double garsia = garsia_bloch_norm(*tf.f, cfg.agrid(), rule).value;
    AuditRow r;
    r.inequality = "oscillation_vs_bloch_seminorm";
    r.lhs = garsia;
    r.rhs = seminorm;
    r.constant = audit_cfg.coherence_constant;
    r.margin = r.constant * r.rhs - r.lhs;
    r.ratio = r.rhs > 0 ? r.lhs / r.rhs : 0.0;
    r.flags = "measured";
    emit("testfn:" + tf.label, r);
    if (r.rhs > 0) garsia_ratios.push_back(r.ratio);
  }
  add_summary(table, "oscillation_vs_bloch_ratio", garsia_ratios);

  for (const SymbolPair& pair : pairs) {
    try {
      const FunctionalProfile profile = compute_profile(
          pair, cfg.agrid(), cfg.rule(), cfg.gamma_t_levels, cfg.power_horizon, cfg.sup_grid());
      const GridCache cache = GridCache::build(pair, cfg.sup_grid());
      for (const AuditRow& r :
           inequality_audit(pair, profile, cache, rule, cfg.sup_grid(), audit_cfg))
        emit(pair.label, r);
    } catch (const Error& e) {
      RowBuilder row(table.columns);
      row.set("label", pair.label);
      row.set("status", "error");
      row.set("error", e.what());
      table.rows.push_back(row.finish());
    }
  }
  return table;
}

ReportTable run_nevanlinna(const std::vector<SymbolPair>& pairs, const RunConfig& config) {
  const EstimatorConfig cfg = config.estimator_config();
  const DiskRule rule = cfg.rule();
  ReportTable table;
  table.header_comment = config.describe("nevanlinna");
  table.columns = {"label",
                   "status",
                   "flags",
                   "error",
                   "degree",
                   "phi0_re",
                   "phi0_im",
                   "littlewood_margin_g1_r25",
                   "littlewood_margin_g1_r50",
                   "littlewood_margin_g2_r25",
                   "littlewood_margin_g2_r50",
                   "sublog_margin",
                   "cov_ratio_id",
                   "cov_ratio_square"};
  for (const SymbolPair& pair : pairs) {
    RowBuilder row(table.columns);
    row.set("label", pair.label);
    try {
      const PolynomialMap poly = require_polynomial_map(*pair.phi);
      const Complex at0 = poly(Complex(0.0, 0.0));
      row.set("status", "ok");
      row.set("degree", static_cast<double>(poly.degree()));
      row.set("phi0_re", at0.real());
      row.set("phi0_im", at0.imag());
      if (std::abs(at0) > 1e-9) {
        row.set("littlewood_margin_g1_r25", littlewood_check(poly, 1.0, 0.25 * std::abs(at0), rule));
        row.set("littlewood_margin_g1_r50", littlewood_check(poly, 1.0, 0.5 * std::abs(at0), rule));
        row.set("littlewood_margin_g2_r25", littlewood_check(poly, 2.0, 0.25 * std::abs(at0), rule));
        row.set("littlewood_margin_g2_r50", littlewood_check(poly, 2.0, 0.5 * std::abs(at0), rule));
        row.append_flag("sublog-n/a");
      } else {
        row.set("sublog_margin", sublog_bound_check(poly));
        row.append_flag("littlewood-n/a");
      }
      row.set("cov_ratio_id", change_of_variable_ratio(*Expr::var(), poly, rule));
      row.set("cov_ratio_square", change_of_variable_ratio(*Expr::pow_int(Expr::var(), 2), poly, rule));
    } catch (const Error& e) {
      row.set("status", "error");
      row.set("error", e.what());
    }
    table.rows.push_back(row.finish());
  }
  return table;
}

ReportTable run_sweep(const std::vector<SymbolPair>& pairs_in, const RunConfig& config) {
  const std::vector<SymbolPair> pairs = pairs_in.empty() ? bundled_corpus() : pairs_in;
  const EstimatorConfig cfg = config.estimator_config();
  const DiskRule rule = cfg.rule();

  ReportTable table;
  table.header_comment = config.describe("sweep");
  table.columns = {
      "label",          "status",        "flags",        "error",
      "phi_sup",        "contact",       "u0_term",      "sup_alpha",
      "sup_beta",       "power_sup",     "est_functional", "est_power",
      "est_ratio",      "opnorm_lb",     "lb_ratio",     "power_tail",
      "alpha_tail",     "beta_tail",     "g_tail",       "gamma_tail",
      "essnorm_v1",     "essnorm_v2",    "essnorm_v3",   "essnorm_v4",
      "variant_ratio",  "bounded",       "compact",      "scaled_phi_tail",
      "weight_ratio_tail", "logderiv_tail", "growth_envelope_u", "holder_margin",
      "fa_power_ratio", "gamma_power_ratio", "littlewood_margin", "sublog_margin",
      "cov_ratio"};

  AuditConfig audit_cfg;
  audit_cfg.boundary_levels = cfg.boundary_levels;
  audit_cfg.gamma_r_levels = cfg.gamma_r_levels;

  std::vector<double> est_ratios, lb_ratios, variant_ratios, cov_ratios, fa_ratios;

  for (const SymbolPair& pair : pairs) {
    RowBuilder row(table.columns);
    row.set("label", pair.label);
    try {
      row.set("phi_sup", pair.phi_report.sup_modulus);
      row.set("contact", pair.phi_report.boundary_contact ? "1" : "0");

      const FunctionalProfile profile = compute_profile(
          pair, cfg.agrid(), cfg.rule(), cfg.gamma_t_levels, cfg.power_horizon, cfg.sup_grid());
      const EstimateReport est_f = norm_estimate(pair, NormMethod::Functional, cfg, profile);
      const EstimateReport est_p = norm_estimate(pair, NormMethod::PowerSup, cfg, profile);
      row.set("status", "ok");
      row.set("u0_term", est_f.part("u0_term"));
      row.set("sup_alpha", est_f.part("sup_alpha"));
      row.set("sup_beta", est_f.part("sup_beta"));
      row.set("power_sup", est_p.part("power_sup"));
      row.set("est_functional", est_f.value);
      row.set("est_power", est_p.value);
      if (est_p.value > 0) {
        const double ratio = est_f.value / est_p.value;
        row.set("est_ratio", ratio);
        est_ratios.push_back(ratio);
      }
      if (est_f.diverged || est_p.diverged) row.append_flag("diverged");

      const double lb = opnorm_lower_bound(pair, cfg.random_candidates, cfg);
      row.set("opnorm_lb", lb);
      if (lb > 0) {
        const double ratio = est_f.value / lb;
        row.set("lb_ratio", ratio);
        lb_ratios.push_back(ratio);
      }

      try {
        const EssNormReport ess = essnorm_estimate(pair, cfg, profile);
        row.set("power_tail", ess.power_tail);
        row.set("alpha_tail", ess.alpha_tail);
        row.set("beta_tail", ess.beta_tail);
        row.set("g_tail", ess.g_tail);
        row.set("gamma_tail", ess.gamma_tail);
        row.set("essnorm_v1", ess.v1);
        row.set("essnorm_v2", ess.v2);
        row.set("essnorm_v3", ess.v3);
        row.set("essnorm_v4", ess.v4);
        row.set("variant_ratio", ess.coherence_ratio);
        if (ess.boundary_vacuous)
          row.append_flag("boundary-vacuous");
        else
          variant_ratios.push_back(ess.coherence_ratio);
      } catch (const NotBounded&) {
        row.append_flag("essnorm-gate-failed");
      }

      const Verdict verdict = classify(pair, cfg, profile);
      row.set("bounded", to_string(verdict.bounded));
      row.set("compact", to_string(verdict.compact));

      const TailCrossChecks checks = tail_cross_checks(pair, cfg);
      row.set("scaled_phi_tail", checks.scaled_power_tail);
      row.set("weight_ratio_tail", checks.weight_ratio_tail);
      row.set("logderiv_tail", checks.log_deriv_tail);

      const GridCache cache = GridCache::build(pair, cfg.sup_grid());
      const std::vector<AuditRow> audit =
          inequality_audit(pair, profile, cache, rule, cfg.sup_grid(), audit_cfg);
      if (const AuditRow* r = find_row(audit, "growth_envelope_u"))
        row.set("growth_envelope_u", r->lhs);
      if (const AuditRow* r = find_row(audit, "oscillation_a2_le_a4"))
        row.set("holder_margin", r->margin);
      if (const AuditRow* r = find_row(audit, "fa_sweep_vs_power_sup")) {
        row.set("fa_power_ratio", r->ratio);
        if (std::isfinite(r->ratio) && r->ratio > 0) fa_ratios.push_back(r->ratio);
      }
      if (const AuditRow* r = find_row(audit, "level_moment_vs_power_tail"))
        row.set("gamma_power_ratio", r->ratio);
      if (const AuditRow* r = find_row(audit, "counting_submean"))
        row.set("littlewood_margin", r->rhs);
      if (const AuditRow* r = find_row(audit, "counting_sublog_envelope"))
        row.set("sublog_margin", r->rhs);
      if (const AuditRow* r = find_row(audit, "change_of_variable_id")) {
        row.set("cov_ratio", r->lhs);
        cov_ratios.push_back(r->lhs);
      } else {
        row.append_flag("counting-n/a");  // non-polynomial symbol
      }
    } catch (const Error& e) {
      row.set("status", "error");
      row.set("error", e.what());
    }
    table.rows.push_back(row.finish());
  }

  add_summary(table, "est_ratio", est_ratios);
  add_summary(table, "lb_ratio", lb_ratios);
  add_summary(table, "variant_ratio", variant_ratios);
  add_summary(table, "cov_ratio", cov_ratios);
  add_summary(table, "fa_power_ratio", fa_ratios);
  return table;
}

namespace {

std::string escape_csv(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const ReportTable& table) {
  std::ostringstream out;
  out << table.header_comment << "\n";
  for (size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << escape_csv(table.columns[i]);
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << escape_csv(row[i]);
    out << "\n";
  }
  for (const auto& line : table.summary) out << line << "\n";
  return out.str();
}

std::string to_json_text(const ReportTable& table) {
  nlohmann::json doc;
  doc["config"] = table.header_comment;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj;
    for (size_t i = 0; i < table.columns.size() && i < row.size(); ++i)
      obj[table.columns[i]] = row[i];
    doc["rows"].push_back(obj);
  }
  doc["summary"] = table.summary;
  return doc.dump(2) + "\n";
}

void write_report(const ReportTable& table, const RunConfig& config) {
  const std::string body = (config.format == "json") ? to_json_text(table) : to_csv(table);
  if (config.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + config.out_path);
  out << body;
}

}  // namespace bloch
