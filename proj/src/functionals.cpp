#include "bloch/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bloch/mobius.hpp"
#include "bloch/nevanlinna.hpp"

namespace bloch {

namespace {

Complex cpow(Complex base, int n) {
  Complex acc(1.0, 0.0);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

double log_factor(Complex phi_a) { return std::log(2.0 / (1.0 - std::norm(phi_a))); }

}  // namespace

SymbolPair make_symbol_pair(ExprPtr u, ExprPtr phi, std::string label) {
  if (!u || !phi) throw InvalidParameter("make_symbol_pair: null expression");
  SymbolPair pair;
  pair.phi_report = validate_self_map(*phi);
  // The weight must be evaluable on the probe region; errors propagate.
  for (double r : {0.0, 0.5, 0.9, 1.0 - 1e-6})
    for (int k = 0; k < 16; ++k)
      (void)eval(*u, std::polar(r, 2.0 * std::numbers::pi * k / 16.0));
  pair.u = std::move(u);
  pair.phi = std::move(phi);
  pair.label = std::move(label);
  return pair;
}

Complex test_f_value(Complex c, Complex w) { return mobius_value(c, w) - c; }
Complex test_f_deriv(Complex c, Complex w) { return mobius_derivative(c, w); }

Complex test_h_value(Complex c, Complex w) {
  return std::log(2.0 / (Complex(1.0, 0.0) - std::conj(c) * w));
}

Complex test_h_deriv(Complex c, Complex w) {
  return std::conj(c) / (Complex(1.0, 0.0) - std::conj(c) * w);
}

Complex test_g_value(Complex c, Complex w) {
  const Complex h = test_h_value(c, w);
  return h * h / log_factor(c);
}

Complex test_g_deriv(Complex c, Complex w) {
  return 2.0 * test_h_value(c, w) * test_h_deriv(c, w) / log_factor(c);
}

ExprPtr test_family(const Expr& phi, Complex a, TestFunctionKind kind) {
  if (std::abs(a) >= 1.0) throw InvalidParameter("test_family: a must lie inside the disk");
  const Complex c = eval(phi, a);
  if (std::abs(c) >= 1.0) throw PreconditionViolated("test_family: |phi(a)| must be < 1");

  switch (kind) {
    case TestFunctionKind::F:
      return Expr::sub(Expr::mobius(c), Expr::constant(c));
    case TestFunctionKind::H:
      return Expr::log(Expr::div(
          Expr::constant(2.0),
          Expr::sub(Expr::constant(1.0), Expr::mul(Expr::constant(std::conj(c)), Expr::var()))));
    case TestFunctionKind::G: {
      ExprPtr h = test_family(phi, a, TestFunctionKind::H);
      return Expr::div(Expr::pow_int(std::move(h), 2), Expr::constant(log_factor(c)));
    }
  }
  throw Error("test_family: unknown kind");
}

GridCache GridCache::build(const SymbolPair& pair, const SupGrid& grid) {
  GridCache cache;
  const ExprPtr du = derivative(pair.u);
  const ExprPtr dphi = derivative(pair.phi);
  cache.z = grid.points();
  const size_t m = cache.z.size();
  cache.one_minus.resize(m);
  cache.u.resize(m);
  cache.du.resize(m);
  cache.phi.resize(m);
  cache.dphi.resize(m);
  for (size_t i = 0; i < m; ++i) {
    const Complex z = cache.z[i];
    cache.one_minus[i] = 1.0 - std::norm(z);
    cache.u[i] = eval(pair.u, z);
    cache.du[i] = eval(du, z);
    cache.phi[i] = eval(pair.phi, z);
    cache.dphi[i] = eval(dphi, z);
  }
  cache.u0 = eval(pair.u, Complex(0.0, 0.0));
  cache.phi0 = eval(pair.phi, Complex(0.0, 0.0));
  return cache;
}

std::vector<double> power_bloch_norms(const SymbolPair& pair, int max_power,
                                      const SupGrid& grid) {
  if (max_power < 0 || max_power > 512)
    throw InvalidParameter("power_bloch_norms: horizon must lie in [0, 512]");

  const GridCache cache = GridCache::build(pair, grid);
  const size_t m = cache.z.size();
  std::vector<Complex> pow_cur(m, Complex(1.0, 0.0));  // phi^n
  std::vector<Complex> pow_prev(m, Complex(0.0, 0.0));

  const ExprPtr du = derivative(pair.u);
  const ExprPtr dphi = derivative(pair.phi);

  std::vector<double> norms;
  norms.reserve(static_cast<size_t>(max_power) + 1);
  for (int n = 0; n <= max_power; ++n) {
    double best = -std::numeric_limits<double>::infinity();
    size_t best_i = 0;
    for (size_t i = 0; i < m; ++i) {
      Complex d = cache.du[i] * pow_cur[i];
      if (n > 0) d += static_cast<double>(n) * cache.u[i] * pow_prev[i] * cache.dphi[i];
      const double v = cache.one_minus[i] * std::abs(d);
      if (v > best) {
        best = v;
        best_i = i;
      }
    }
    auto integrand = [&](Complex z) {
      const Complex pv = eval(pair.phi, z);
      Complex d = eval(du, z) * cpow(pv, n);
      if (n > 0) d += static_cast<double>(n) * eval(pair.u, z) * cpow(pv, n - 1) * eval(dphi, z);
      return (1.0 - std::norm(z)) * std::abs(d);
    };
    const SupResult refined = refine_sup(integrand, best, cache.z[best_i], grid.max_radius,
                                         grid.angular);
    norms.push_back(std::abs(cache.u0 * cpow(cache.phi0, n)) + refined.value);

    pow_prev = pow_cur;
    for (size_t i = 0; i < m; ++i) pow_cur[i] *= cache.phi[i];
  }
  return norms;
}

double level_set_moment(const SymbolPair& pair, Complex a, double t, const DiskRule& rule) {
  if (!(t > 0.0 && t < 1.0)) throw InvalidParameter("level_set_moment: t must lie in (0,1)");
  if (std::abs(a) >= 1.0) throw InvalidParameter("level_set_moment: a must lie inside the disk");
  const Complex pa = eval(pair.phi, a);
  auto integrand = [&](Complex z) {
    const Complex za = mobius_value(a, z);
    const Complex conj_symbol = mobius_value(pa, eval(pair.phi, za));
    if (std::abs(conj_symbol) <= t) return 0.0;
    const double mod2 = std::norm(eval(pair.u, za));
    return mod2 * mod2;
  };
  return std::pow(disk_integrate(integrand, rule), 0.25);
}

double alpha(const SymbolPair& pair, Complex a, const DiskRule& rule) {
  const Complex pa = eval(pair.phi, a);
  if (std::abs(pa) >= 1.0) throw PreconditionViolated("alpha: |phi(a)| must be < 1");
  auto integrand = [&](Complex z) {
    return std::norm(mobius_value(pa, eval(pair.phi, mobius_value(a, z))));
  };
  return std::abs(eval(pair.u, a)) * std::sqrt(disk_integrate(integrand, rule));
}

double beta(const SymbolPair& pair, Complex a, const DiskRule& rule) {
  const Complex pa = eval(pair.phi, a);
  if (std::abs(pa) >= 1.0) throw PreconditionViolated("beta: |phi(a)| must be < 1");
  const Complex ua = eval(pair.u, a);
  auto integrand = [&](Complex z) {
    return std::norm(eval(pair.u, mobius_value(a, z)) - ua);
  };
  return log_factor(pa) * std::sqrt(disk_integrate(integrand, rule));
}

FunctionalProfile compute_profile(const SymbolPair& pair, const AGrid& agrid,
                                  const DiskRule& rule, const std::vector<double>& t_levels,
                                  int max_power, const SupGrid& sup_grid) {
  FunctionalProfile profile;
  profile.t_levels = t_levels;
  profile.meta = rule.describe() + ", a-grid " + std::to_string(agrid.radii.size()) + "x" +
                 std::to_string(agrid.angular);

  const double two_pi = 2.0 * std::numbers::pi;
  const size_t nt = t_levels.size();

  for (const Complex& a : agrid.points()) {
    ProfileSample s;
    s.a = a;
    s.phi_a = eval(pair.phi, a);
    s.phi_a_mod = std::abs(s.phi_a);
    s.log_factor = log_factor(s.phi_a);
    const Complex ua = eval(pair.u, a);
    const Complex pa = s.phi_a;
    const double lf = s.log_factor;

    CompensatedSum i_phi, i_osc2, i_osc4, i_fa, i_ga, i_cross_ga, i_ucf, i_cross_z;
    std::vector<CompensatedSum> i_m(nt);

    for (const auto& node : rule.radial) {
      CompensatedSum r_phi, r_osc2, r_osc4, r_fa, r_ga, r_cross_ga, r_ucf, r_cross_z;
      std::vector<CompensatedSum> r_m(nt);
      for (int k = 0; k < rule.angular; ++k) {
        const Complex z = std::polar(node.r, two_pi * k / rule.angular);
        const Complex za = mobius_value(a, z);
        const Complex uv = eval(pair.u, za);
        const Complex pv = eval(pair.phi, za);
        const Complex conj_symbol = mobius_value(pa, pv);

        const Complex osc = uv - ua;
        const double osc2 = std::norm(osc);
        r_phi.add(std::norm(conj_symbol));
        r_osc2.add(osc2);
        r_osc4.add(osc2 * osc2);

        const Complex fa_pv = conj_symbol - pa;  // f_a(phi(sigma_a(z)))
        r_fa.add(std::norm(uv * fa_pv + ua * pa));

        const Complex ga_pv = test_g_value(pa, pv);
        r_ga.add(std::norm(uv * ga_pv - ua * lf));
        r_cross_ga.add(std::norm((ga_pv - lf) * osc));

        r_ucf.add(std::norm(uv * pv - ua * pa));
        r_cross_z.add(std::norm(osc * (pv - pa)));

        const double mod_symbol = std::abs(conj_symbol);
        const double u4 = std::norm(uv) * std::norm(uv);
        for (size_t ti = 0; ti < nt; ++ti)
          if (mod_symbol > t_levels[ti]) r_m[ti].add(u4);
      }
      const double w = node.weight / rule.angular;
      i_phi.add(w * r_phi.value());
      i_osc2.add(w * r_osc2.value());
      i_osc4.add(w * r_osc4.value());
      i_fa.add(w * r_fa.value());
      i_ga.add(w * r_ga.value());
      i_cross_ga.add(w * r_cross_ga.value());
      i_ucf.add(w * r_ucf.value());
      i_cross_z.add(w * r_cross_z.value());
      for (size_t ti = 0; ti < nt; ++ti) i_m[ti].add(w * r_m[ti].value());
    }

    s.alpha = std::abs(ua) * std::sqrt(std::max(0.0, i_phi.value()));
    s.osc_a2 = std::sqrt(std::max(0.0, i_osc2.value()));
    s.beta = lf * s.osc_a2;
    s.osc_a4 = std::pow(std::max(0.0, i_osc4.value()), 0.25);
    s.osc_fa = std::sqrt(std::max(0.0, i_fa.value()));
    s.osc_ga = std::sqrt(std::max(0.0, i_ga.value()));
    s.cross_ga = std::sqrt(std::max(0.0, i_cross_ga.value()));
    s.ucf_z = std::sqrt(std::max(0.0, i_ucf.value()));
    s.cross_z = std::sqrt(std::max(0.0, i_cross_z.value()));
    s.moments.resize(nt);
    for (size_t ti = 0; ti < nt; ++ti)
      s.moments[ti] = std::pow(std::max(0.0, i_m[ti].value()), 0.25);
    profile.a_samples.push_back(std::move(s));
  }

  if (max_power >= 0) profile.power_norms = power_bloch_norms(pair, max_power, sup_grid);
  return profile;
}

BoundaryLimsup boundary_limsup(const std::vector<Complex>& a_points,
                               const std::vector<double>& moduli,
                               const std::function<double(size_t)>& quantity,
                               const std::vector<double>& levels) {
  if (a_points.size() != moduli.size())
    throw InvalidParameter("boundary_limsup: mismatched sample arrays");
  BoundaryLimsup out;
  for (double r : levels) {
    LevelSup level;
    level.level = r;
    level.sup = 0.0;
    for (size_t i = 0; i < a_points.size(); ++i) {
      if (moduli[i] < r) continue;
      const double v = quantity(i);
      if (level.vacuous || v > level.sup) {
        level.sup = v;
        level.arg_a = a_points[i];
      }
      level.vacuous = false;
    }
    out.levels.push_back(level);
  }
  for (const LevelSup& level : out.levels) {
    if (!level.vacuous) {
      out.approximant = level.sup;  // ends at the largest non-vacuous level
      out.all_vacuous = false;
    }
  }
  return out;
}

GammaTilde gamma_tilde(const FunctionalProfile& profile, const std::vector<double>& r_levels) {
  GammaTilde out;
  for (double r : r_levels) {
    for (size_t ti = 0; ti < profile.t_levels.size(); ++ti) {
      GammaTildeCell cell;
      cell.r = r;
      cell.t = profile.t_levels[ti];
      for (const ProfileSample& s : profile.a_samples) {
        if (s.phi_a_mod > r) continue;
        cell.sup = cell.vacuous ? s.moments[ti] : std::max(cell.sup, s.moments[ti]);
        cell.vacuous = false;
      }
      out.table.push_back(cell);
    }
  }
  // Largest r, then largest t, among usable cells.
  for (const GammaTildeCell& cell : out.table)
    if (!cell.vacuous) out.approximant = cell.sup;
  return out;
}

double weighted_compose_bloch_norm(const SymbolPair& pair, const GridCache& cache,
                                   const std::function<Complex(Complex)>& f_value,
                                   const std::function<Complex(Complex)>& f_deriv,
                                   const SupGrid& grid) {
  double best = -std::numeric_limits<double>::infinity();
  size_t best_i = 0;
  const size_t m = cache.z.size();
  for (size_t i = 0; i < m; ++i) {
    const Complex d = cache.du[i] * f_value(cache.phi[i]) +
                      cache.u[i] * f_deriv(cache.phi[i]) * cache.dphi[i];
    const double v = cache.one_minus[i] * std::abs(d);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const ExprPtr du = derivative(pair.u);
  const ExprPtr dphi = derivative(pair.phi);
  auto integrand = [&](Complex z) {
    const Complex pv = eval(pair.phi, z);
    const Complex d = eval(du, z) * f_value(pv) + eval(pair.u, z) * f_deriv(pv) * eval(dphi, z);
    return (1.0 - std::norm(z)) * std::abs(d);
  };
  const SupResult refined = refine_sup(integrand, best, cache.z[best_i], grid.max_radius,
                                       grid.angular);
  return std::abs(cache.u0 * f_value(cache.phi0)) + refined.value;
}

namespace {

constexpr double kTiny = 1e-14;

AuditRow make_row(std::string name, double lhs, double rhs, double constant,
                  std::string flags = "") {
  AuditRow row;
  row.inequality = std::move(name);
  row.lhs = lhs;
  row.rhs = rhs;
  row.constant = constant;
  row.margin = constant * rhs - lhs;
  if (rhs > kTiny)
    row.ratio = lhs / rhs;
  else if (lhs <= kTiny)
    row.ratio = 0.0;
  else
    row.ratio = std::numeric_limits<double>::infinity();
  row.flags = std::move(flags);
  return row;
}

}  // namespace

std::vector<AuditRow> inequality_audit(const SymbolPair& pair, const FunctionalProfile& profile,
                                       const GridCache& cache, const DiskRule& rule,
                                       const SupGrid& sup_grid, const AuditConfig& config) {
  std::vector<AuditRow> rows;
  const auto& samples = profile.a_samples;

  // Pointwise growth envelope |u(z)| <= C log(2/(1-|z|^2)) ||u||_B.
  rows.push_back(make_row("growth_envelope_u", growth_bound_check(*pair.u, sup_grid), 1.0,
                          config.growth_envelope));

  // Oscillation norms: A^2 side never exceeds the A^4 side, and the reverse
  // ratio stays within one measured corpus constant.
  double sup_osc2 = 0.0, sup_osc4 = 0.0;
  for (const auto& s : samples) {
    sup_osc2 = std::max(sup_osc2, s.osc_a2);
    sup_osc4 = std::max(sup_osc4, s.osc_a4);
  }
  rows.push_back(make_row("oscillation_a2_le_a4", sup_osc2, sup_osc4, 1.0));
  rows.push_back(make_row("oscillation_a4_vs_a2", sup_osc4, sup_osc2,
                          config.coherence_constant, "measured"));

  // A^2 norm against the derivative-weighted form, for the weight u.
  {
    const ExprPtr du = derivative(pair.u);
    auto sq = [&](Complex z) { return std::norm(eval(pair.u, z)); };
    auto dsq = [&](Complex z) {
      const double w2 = 1.0 - std::norm(z);
      return std::norm(eval(du, z)) * w2 * w2;
    };
    const double lhs = disk_integrate(sq, rule);
    const double rhs = std::norm(cache.u0) + disk_integrate(dsq, rule);
    rows.push_back(make_row("a2_derivative_equiv_u", lhs, rhs, config.coherence_constant,
                            "measured"));
  }

  // Composition product bound, conjugated form with f = id:
  // ||phi o sigma_a - phi(a)|| <= C ||phi_a|| ||sigma_a - a||.
  {
    double worst_ratio = 0.0, worst_lhs = 0.0, worst_rhs = 0.0;
    bool degenerate = true;
    AGrid sub;
    sub.radii = {0.0, 0.6, 0.9};
    sub.angular = 8;
    for (const Complex& a : sub.points()) {
      const Complex pa = eval(pair.phi, a);
      CompensatedSum i_num, i_phi_a, i_sigma;
      const double two_pi = 2.0 * std::numbers::pi;
      for (const auto& node : rule.radial) {
        CompensatedSum rn, rp, rs;
        for (int k = 0; k < rule.angular; ++k) {
          const Complex z = std::polar(node.r, two_pi * k / rule.angular);
          const Complex za = mobius_value(a, z);
          const Complex pv = eval(pair.phi, za);
          rn.add(std::norm(pv - pa));
          rp.add(std::norm(mobius_value(pa, pv)));
          rs.add(std::norm(za - a));
        }
        const double w = node.weight / rule.angular;
        i_num.add(w * rn.value());
        i_phi_a.add(w * rp.value());
        i_sigma.add(w * rs.value());
      }
      const double lhs = std::sqrt(std::max(0.0, i_num.value()));
      const double rhs = std::sqrt(std::max(0.0, i_phi_a.value())) *
                         std::sqrt(std::max(0.0, i_sigma.value()));
      if (rhs <= kTiny && lhs <= kTiny) continue;
      degenerate = false;
      const double ratio = rhs > kTiny ? lhs / rhs : std::numeric_limits<double>::infinity();
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst_lhs = lhs;
        worst_rhs = rhs;
      }
    }
    rows.push_back(make_row("composition_product_conjugated", worst_lhs, worst_rhs,
                            config.product_norm_constant, degenerate ? "degenerate" : ""));
  }

  // alpha against the beta remainder plus the f_a oscillation.
  {
    double worst = 0.0, wl = 0.0, wr = 0.0;
    for (const auto& s : samples) {
      const double rhs = s.beta / s.log_factor + s.osc_fa;
      if (rhs <= kTiny && s.alpha <= kTiny) continue;
      const double ratio = rhs > kTiny ? s.alpha / rhs : std::numeric_limits<double>::infinity();
      if (ratio > worst) {
        worst = ratio;
        wl = s.alpha;
        wr = rhs;
      }
    }
    rows.push_back(make_row("alpha_vs_fa_oscillation", wl, wr, config.coherence_constant,
                            "measured"));
  }

  // beta against alpha plus the g_a oscillation pieces.
  {
    double worst = 0.0, wl = 0.0, wr = 0.0;
    for (const auto& s : samples) {
      const double rhs = s.alpha + s.cross_ga + s.osc_ga;
      if (rhs <= kTiny && s.beta <= kTiny) continue;
      const double ratio = rhs > kTiny ? s.beta / rhs : std::numeric_limits<double>::infinity();
      if (ratio > worst) {
        worst = ratio;
        wl = s.beta;
        wr = rhs;
      }
    }
    rows.push_back(make_row("beta_vs_ga_oscillation", wl, wr, config.coherence_constant,
                            "measured"));
  }

  // Oscillation of uC_phi applied to the identity against the split form.
  {
    double worst = 0.0, wl = 0.0, wr = 0.0;
    for (const auto& s : samples) {
      const double rhs = s.cross_z + s.alpha + s.beta;  // ||id||_B = 1
      if (rhs <= kTiny && s.ucf_z <= kTiny) continue;
      const double ratio = rhs > kTiny ? s.ucf_z / rhs : std::numeric_limits<double>::infinity();
      if (ratio > worst) {
        worst = ratio;
        wl = s.ucf_z;
        wr = rhs;
      }
    }
    rows.push_back(make_row("split_oscillation_id", wl, wr, config.coherence_constant,
                            "measured"));
  }

  // Cross term against the min-form bound, with the norm estimate as proxy.
  {
    double sup_alpha = 0.0, sup_beta = 0.0;
    for (const auto& s : samples) {
      sup_alpha = std::max(sup_alpha, s.alpha);
      sup_beta = std::max(sup_beta, s.beta);
    }
    const double proxy = std::abs(cache.u0) * log_factor(cache.phi0) + sup_alpha + sup_beta;
    double worst = 0.0, wl = 0.0, wr = 0.0;
    for (const auto& s : samples) {
      const double rhs = std::min(sup_beta, proxy / std::sqrt(s.log_factor));
      if (rhs <= kTiny && s.cross_z <= kTiny) continue;
      const double ratio = rhs > kTiny ? s.cross_z / rhs : std::numeric_limits<double>::infinity();
      if (ratio > worst) {
        worst = ratio;
        wl = s.cross_z;
        wr = rhs;
      }
    }
    rows.push_back(make_row("cross_term_min_bound", wl, wr, config.coherence_constant,
                            "estimate-proxy"));
  }

  // The f_a sweep of the operator against the power-norm ladder, both the
  // global sup and the boundary tail.
  if (!profile.power_norms.empty()) {
    std::vector<double> fa_norms(samples.size());
    std::vector<Complex> a_points(samples.size());
    std::vector<double> moduli(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
      const Complex pa = samples[i].phi_a;
      fa_norms[i] = weighted_compose_bloch_norm(
          pair, cache, [pa](Complex w) { return test_f_value(pa, w); },
          [pa](Complex w) { return test_f_deriv(pa, w); }, sup_grid);
      a_points[i] = samples[i].a;
      moduli[i] = samples[i].phi_a_mod;
    }
    const double sup_fa = *std::max_element(fa_norms.begin(), fa_norms.end());
    const double sup_power =
        *std::max_element(profile.power_norms.begin(), profile.power_norms.end());
    rows.push_back(make_row("fa_sweep_vs_power_sup", sup_fa, sup_power,
                            config.coherence_constant, "measured"));

    const int window = std::min<int>(50, static_cast<int>(profile.power_norms.size()));
    double tail = 0.0;
    for (size_t i = profile.power_norms.size() - window; i < profile.power_norms.size(); ++i)
      tail = std::max(tail, profile.power_norms[i]);
    const BoundaryLimsup fa_tail = boundary_limsup(
        a_points, moduli, [&](size_t i) { return fa_norms[i]; }, config.boundary_levels);
    rows.push_back(make_row("fa_tail_vs_power_tail", fa_tail.approximant, tail,
                            config.coherence_constant,
                            fa_tail.all_vacuous ? "vacuous" : "measured"));

    const GammaTilde gt = gamma_tilde(profile, config.gamma_r_levels);
    rows.push_back(make_row("level_moment_vs_power_tail", gt.approximant, tail,
                            config.coherence_constant, "measured"));
  }

  // Counting-function rows for polynomial symbols.
  if (auto coeffs = as_polynomial(*pair.phi); coeffs && coeffs->size() >= 2) {
    const PolynomialMap poly = make_polynomial_map(*coeffs);
    const Complex at0 = poly(Complex(0.0, 0.0));
    if (std::abs(at0) > 1e-9) {
      double min_margin = std::numeric_limits<double>::infinity();
      for (double frac : {0.25, 0.5})
        for (double gamma : {1.0, 2.0})
          min_margin = std::min(min_margin,
                                littlewood_check(poly, gamma, frac * std::abs(at0), rule));
      rows.push_back(make_row("counting_submean", 0.0, min_margin, 1.0,
                              "margin-in-rhs"));
    } else {
      rows.push_back(make_row("counting_sublog_envelope", 0.0, sublog_bound_check(poly), 1.0,
                              "margin-in-rhs"));
    }
    const double cov = change_of_variable_ratio(*Expr::var(), poly, rule);
    rows.push_back(make_row("change_of_variable_id", cov, 1.0, config.coherence_constant,
                            "corpus-interval"));
  }

  return rows;
}

}  // namespace bloch
