#include "kstruve/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "kstruve/errors.hpp"
#include "kstruve/identities.hpp"
#include "kstruve/inequalities.hpp"
#include "kstruve/numerics.hpp"
#include "kstruve/special_functions.hpp"
#include "kstruve/struve.hpp"

namespace kstruve {

namespace {

using json = nlohmann::ordered_json;
using CheckList = std::vector<VerificationReport>;

// ---------------------------------------------------------------------------
// Default grids
// ---------------------------------------------------------------------------

namespace grid {
const std::vector<double> identity_k{0.5, 1.0, 2.0};
// nu values are these multiples of k.
const std::vector<double> identity_nu_multiples{-0.4, 0.0, 0.5, 1.0, 2.0};
const std::vector<double> identity_c{-1.0, 1.0};
const std::vector<double> identity_x{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
const std::vector<double> integral_alpha{0.5, 1.0, 2.0};
const std::vector<int> kbeta_r{0, 1, 2, 3, 5, 10, 20, 30};
const std::vector<double> closed_k{0.5, 1.0, 2.0, 4.0};
const std::vector<double> closed_alpha{0.5, 1.0, 2.0};
const std::vector<double> closed_x{0.1, 1.0, 2.0, 5.0};
const std::vector<double> inequality_k{0.5, 1.0, 2.0};
const std::vector<double> inequality_nu_multiples{-0.4, 0.0, 0.5, 1.0, 2.0, 4.0};
const std::vector<double> turan_a_multiples{0.0, 0.25, 0.5, 1.0};
const std::vector<double> inequality_x{0.1, 1.0, 5.0, 10.0};
const std::vector<double> convexity_alpha{0.25, 0.5, 0.75};
const std::vector<double> ratio_x{0.1, 0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 7.5, 10.0};
const std::vector<double> parameter_x{-10.0, -5.0, -1.0, -0.1, 0.0, 0.1, 1.0, 5.0, 10.0};
const std::vector<double> gamma_k{0.5, 1.0, 2.0, 3.0};
const std::vector<double> classical_nu{0.0, 0.5, 1.0, 2.5};
const std::vector<double> classical_x{0.1, 0.5, 1.0, 2.0, 3.0, 5.0, 7.5, 10.0, 12.5, 15.0, 17.5, 20.0};
const std::vector<double> half_order_x{0.5, 1.0, 2.0};
constexpr int gamma_points = 100;
constexpr double gamma_x_min = 0.1;
constexpr double gamma_x_max = 50.0;
constexpr int oracle_draws = 500;
constexpr int truncation_draws = 200;
constexpr std::uint64_t oracle_seed = 20240611;
constexpr std::uint64_t truncation_seed = 7793;
}  // namespace grid

std::vector<double> scaled(const std::vector<double>& multiples, double k) {
  std::vector<double> out;
  out.reserve(multiples.size());
  for (const double m : multiples) out.push_back(m * k);
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? hi : lo * std::exp(step * i));
  return out;
}

struct IdentityPoint {
  StruveParams params;
  double x;
};

std::vector<IdentityPoint> identity_points() {
  std::vector<IdentityPoint> out;
  for (const double k : grid::identity_k) {
    for (const double nu : scaled(grid::identity_nu_multiples, k)) {
      for (const double c : grid::identity_c) {
        for (const double x : grid::identity_x) out.push_back({{nu, k, c}, x});
      }
    }
  }
  return out;
}

Coordinates coords(const StruveParams& p, double x) { return {{"nu", p.nu}, {"k", p.k}, {"c", p.c}, {"x", x}}; }

// ---------------------------------------------------------------------------
// Sweep helpers
// ---------------------------------------------------------------------------

struct Outcome {
  Coordinates point;
  double margin = 0.0;
  std::string error;
  bool failed = false;
};

template <class Task, class PointOf, class Margin>
VerificationReport sweep(const std::string& name, double tolerance, const std::vector<Task>& tasks,
                         PointOf point_of, Margin margin, const SuiteOptions& options) {
  const auto outcomes = map_indices(
      tasks.size(),
      [&](std::size_t i) {
        Outcome out;
        out.point = point_of(tasks[i]);
        try {
          out.margin = margin(tasks[i]);
        } catch (const std::exception& e) {
          out.failed = true;
          out.error = e.what();
        }
        return out;
      },
      options.execution);
  ReportBuilder builder(name, options.tol_override.value_or(tolerance));
  for (const Outcome& o : outcomes) {
    if (o.failed) {
      builder.record_error(o.point, o.error);
    } else {
      builder.record(o.point, o.margin);
    }
  }
  return std::move(builder).finish();
}

VerificationReport merge(const std::string& name, double tolerance, const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.check_name = name;
  out.tolerance = tolerance;
  bool any = false;
  for (const VerificationReport& part : parts) {
    out.points_tested += part.points_tested;
    out.violations.insert(out.violations.end(), part.violations.begin(), part.violations.end());
    out.errors.insert(out.errors.end(), part.errors.begin(), part.errors.end());
    out.passed = out.passed && part.passed;
    if (part.points_tested > 0 && (!any || part.worst_margin > out.worst_margin)) {
      out.worst_margin = part.worst_margin;
      out.witness = part.witness;
      any = true;
    }
  }
  return out;
}

// Runs chain-style checks (each producing its own report) in parallel and
// merges them in task order. Exceptions become failed single-point reports.
template <class Task, class PointOf, class Run>
VerificationReport sweep_chains(const std::string& name, double tolerance, const std::vector<Task>& tasks,
                                PointOf point_of, Run run, const SuiteOptions& options) {
  const double tol = options.tol_override.value_or(tolerance);
  const auto parts = map_indices(
      tasks.size(),
      [&](std::size_t i) {
        try {
          return run(tasks[i], tol);
        } catch (const std::exception& e) {
          ReportBuilder failed(name, tol);
          failed.record_error(point_of(tasks[i]), e.what());
          return std::move(failed).finish();
        }
      },
      options.execution);
  return merge(name, tol, parts);
}

double relative_difference(double value, double reference) {
  const double scale = std::abs(reference);
  return scale == 0.0 ? std::abs(value) : std::abs(value - reference) / scale;
}

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

CheckList gamma_suite(const SuiteOptions& options) {
  CheckList checks;
  struct GammaPoint {
    double k;
    double x;
  };
  std::vector<GammaPoint> points;
  for (const double k : grid::gamma_k) {
    for (const double x : log_spaced(grid::gamma_x_min, grid::gamma_x_max, grid::gamma_points)) {
      points.push_back({k, x});
    }
  }
  auto gamma_coords = [](const GammaPoint& p) { return Coordinates{{"k", p.k}, {"x", p.x}}; };

  checks.push_back(sweep(
      "functional_equation", 1e-12, points, gamma_coords,
      [](const GammaPoint& p) {
        const double expected = p.x * k_gamma(p.x, p.k);
        return std::abs(k_gamma(p.x + p.k, p.k) - expected) / std::abs(expected);
      },
      options));

  // The classical side uses the C library gamma, not the kernel behind k_gamma.
  checks.push_back(sweep(
      "scaling_identity", 1e-12, points, gamma_coords,
      [](const GammaPoint& p) {
        return relative_difference(k_gamma(p.k * p.x, p.k), std::pow(p.k, p.x - 1.0) * std::tgamma(p.x));
      },
      options));

  std::vector<GammaPoint> digamma_points;
  for (const double k : grid::gamma_k) {
    for (const double s : {0.05, 0.7, 3.0, 25.0, 100.0}) digamma_points.push_back({k, s * k});
  }
  auto digamma_coords = [](const GammaPoint& p) { return Coordinates{{"k", p.k}, {"t", p.x}}; };
  checks.push_back(sweep(
      "digamma_series", 1e-8, digamma_points, digamma_coords,
      [](const GammaPoint& p) { return std::abs(k_digamma(p.x, p.k) - k_digamma_literal_series(p.x, p.k)); },
      options));

  std::vector<GammaPoint> trigamma_points;
  for (const double k : grid::gamma_k) {
    for (const double s : {0.1, 0.5, 1.0, 2.0, 7.0, 30.0}) trigamma_points.push_back({k, s * k});
  }
  checks.push_back(sweep(
      "trigamma_derivative", 1e-6, trigamma_points, digamma_coords,
      [](const GammaPoint& p) {
        const double h = 1e-5 * std::max(1.0, p.x);
        const double fd = (k_digamma(p.x + h, p.k) - k_digamma(p.x - h, p.k)) / (2.0 * h);
        return relative_difference(fd, k_trigamma(p.x, p.k));
      },
      options));

  const std::vector<GammaPoint> trigamma_values{{1.0, 1.0}, {2.0, 2.0}};
  checks.push_back(sweep(
      "trigamma_values", 1e-10, trigamma_values, digamma_coords,
      [](const GammaPoint& p) {
        const double pi_sq = std::numbers::pi * std::numbers::pi;
        return relative_difference(k_trigamma(p.x, p.k), pi_sq / (6.0 * p.k * p.k));
      },
      options));

  struct BetaPoint {
    double k;
    double x;
    double y;
  };
  std::vector<BetaPoint> beta_points;
  for (const double k : grid::gamma_k) {
    for (const double sx : {0.6, 1.0, 1.7, 3.0, 5.0}) {
      for (const double sy : {0.6, 1.0, 1.7, 3.0, 5.0}) beta_points.push_back({k, sx * k, sy * k});
    }
  }
  checks.push_back(sweep(
      "beta_integral", 1e-9, beta_points,
      [](const BetaPoint& p) { return Coordinates{{"k", p.k}, {"x", p.x}, {"y", p.y}}; },
      [](const BetaPoint& p) {
        const double a = p.x / p.k - 1.0;
        const double b = p.y / p.k - 1.0;
        const QuadratureResult q = integrate_unit_interval(
            UnitIntegrand([&](double t, double tc) { return std::pow(t, a) * std::pow(tc, b); }));
        return relative_difference(q.value / p.k, k_beta(p.x, p.y, p.k));
      },
      options));

  const std::vector<double> duplication_z = log_spaced(0.1, 40.0, 50);
  checks.push_back(sweep(
      "legendre_duplication", 1e-12, duplication_z, [](double z) { return Coordinates{{"z", z}}; },
      [](double z) { return legendre_duplication_residual(z).relative_residual; }, options));
  return checks;
}

// ---------------------------------------------------------------------------
// struve
// ---------------------------------------------------------------------------

struct RandomPoint {
  StruveParams params;
  double x;
};

std::vector<RandomPoint> random_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_k(std::log(0.25), std::log(4.0));
  std::uniform_real_distribution<double> order(-1.45, 6.0);
  std::uniform_real_distribution<double> scale(-2.0, 2.0);
  std::uniform_real_distribution<double> argument(0.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<RandomPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double k = std::exp(log_k(rng));
    const double m = order(rng);
    const double c = scale(rng);
    double x = argument(rng);
    if (unit(rng) < 0.02 && m > -1.0) x = 0.0;
    out.push_back({{m * k, k, c}, x});
  }
  return out;
}

int oracle_terms_for(int production_terms) { return std::min(200, std::max(40, 2 * production_terms + 10)); }

CheckList struve_suite(const SuiteOptions& options) {
  CheckList checks;
  auto random_coords = [](const RandomPoint& p) { return coords(p.params, p.x); };

  const std::vector<IdentityPoint> h0{{{0.0, 1.0, 1.0}, 1.0}};
  checks.push_back(sweep(
      "classical_h0_at_1", 1e-6, h0, [](const IdentityPoint& p) { return coords(p.params, p.x); },
      [](const IdentityPoint& p) {
        return std::abs(struve(p.params, p.x).value - oracle_struve_sum(p.params, p.x, 60).value.to_double());
      },
      options));

  checks.push_back(sweep(
      "half_order_closed_form", 1e-12, grid::half_order_x,
      [](double x) { return coords({0.5, 1.0, 1.0}, x); },
      [](double x) {
        const double closed = std::sqrt(2.0 / std::numbers::pi) * 2.0 * std::pow(std::sin(0.5 * x), 2) / std::sqrt(x);
        return relative_difference(struve({0.5, 1.0, 1.0}, x).value, closed);
      },
      options));

  std::vector<IdentityPoint> classical;
  for (const double nu : grid::classical_nu) {
    for (const double x : grid::classical_x) classical.push_back({{nu, 1.0, 1.0}, x});
  }
  checks.push_back(sweep(
      "classical_reduction", 1e-12, classical, [](const IdentityPoint& p) { return coords(p.params, p.x); },
      [](const IdentityPoint& p) {
        return relative_difference(struve(p.params, p.x).value,
                                   oracle_struve_sum(p.params, p.x, 200).value.to_double());
      },
      options));

  // Margin is |production - oracle| in units of the allowed error, so the
  // threshold is 1.
  checks.push_back(sweep(
      "oracle_agreement", 1.0, random_points(grid::oracle_seed, grid::oracle_draws), random_coords,
      [](const RandomPoint& p) {
        const EvalResult e = struve(p.params, p.x);
        const OracleResult o = oracle_struve_sum(p.params, p.x, oracle_terms_for(e.terms_used));
        const double reference = o.value.to_double();
        const double allowed = e.abs_error_estimate + 1e-13 * std::abs(reference) + o.tail_bound;
        const double diff = std::abs((DoubleDouble(e.value) - o.value).to_double());
        return allowed == 0.0 ? (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity()) : diff / allowed;
      },
      options));

  // True tail (oracle terms from the truncation index on) against the
  // reported bound, and the bound against 2 |first omitted term|. For
  // same-sign terms at small x the bound is tight, hence the rounding allowance.
  checks.push_back(sweep(
      "truncation_bound", 1.0 + 1e-9, random_points(grid::truncation_seed, grid::truncation_draws), random_coords,
      [](const RandomPoint& p) {
        const EvalResult e = struve(p.params, p.x);
        if (p.x == 0.0) return 0.0;
        const int used = e.terms_used;
        const int last = std::max(used + 40, 3 * used);
        DoubleDouble tail;
        for (int r = last; r >= used; --r) tail += oracle_struve_term(p.params, p.x, r);
        const double omitted = std::abs(oracle_struve_term(p.params, p.x, used).to_double());
        const double bound = e.abs_error_estimate;
        const double tail_ratio = tail.to_double() == 0.0 ? 0.0 : std::abs(tail.to_double()) / bound;
        const double bound_ratio = bound == 0.0 ? 0.0 : bound / (2.0 * omitted);
        return std::max(tail_ratio, bound_ratio);
      },
      options));

  std::vector<IdentityPoint> scaling_points;
  for (const double k : grid::identity_k) {
    for (const double nu : scaled(grid::identity_nu_multiples, k)) {
      for (const double x : grid::identity_x) scaling_points.push_back({{nu, k, -1.0}, x});
    }
  }
  auto ip_coords = [](const IdentityPoint& p) { return coords(p.params, p.x); };
  checks.push_back(sweep(
      "normalized_scaling", 1e-13, scaling_points, ip_coords,
      [](const IdentityPoint& p) {
        const double nu = p.params.nu;
        const double k = p.params.k;
        const double rescaled = std::pow(2.0 / p.x, nu / k) * k_gamma(nu + 1.5 * k, k) * modified_struve(nu, k, p.x).value;
        return relative_difference(rescaled, normalized_struve(nu, k, p.x).value);
      },
      options));

  checks.push_back(sweep(
      "normalized_oddness", 0.0, scaling_points, ip_coords,
      [](const IdentityPoint& p) {
        const double plus = normalized_struve(p.params.nu, p.params.k, p.x).value;
        const double minus = normalized_struve(p.params.nu, p.params.k, -p.x).value;
        return minus == -plus ? 0.0 : std::numeric_limits<double>::infinity();
      },
      options));

  checks.push_back(sweep(
      "derivative_finite_difference", 1e-6, identity_points(), ip_coords,
      [](const IdentityPoint& p) {
        const double exact = struve_derivative(p.params, p.x).value;
        const double fd = central_difference([&](double t) { return struve(p.params, t).value; }, p.x, 1);
        const double scale = std::max(std::abs(exact), std::abs(struve(p.params, p.x).value) / p.x);
        return std::abs(exact - fd) / scale;
      },
      options));

  struct CoefficientPoint {
    StruveParams params;
    int r;
  };
  std::vector<CoefficientPoint> coefficient_points;
  for (const double k : grid::identity_k) {
    for (const double nu : scaled(grid::identity_nu_multiples, k)) {
      for (const double c : {-2.0, -1.0, 0.5, 1.0}) {
        for (int r = 0; r < 50; ++r) coefficient_points.push_back({{nu, k, c}, r});
      }
    }
  }
  auto coefficient_coords = [](const CoefficientPoint& p) {
    return Coordinates{{"nu", p.params.nu}, {"k", p.params.k}, {"c", p.params.c}, {"r", static_cast<double>(p.r)}};
  };
  checks.push_back(sweep(
      "coefficient_recurrence", 1e-14, coefficient_points, coefficient_coords,
      [](const CoefficientPoint& p) {
        const auto [nu, k, c] = p.params;
        const double r = p.r;
        const double ratio = struve_coefficient(p.r + 1, nu, k, c) / struve_coefficient(p.r, nu, k, c);
        return relative_difference(ratio, -c / ((r * k + nu + 1.5 * k) * (r + 1.5)));
      },
      options));

  checks.push_back(sweep(
      "normalized_coefficient_recurrence", 1e-14, coefficient_points, coefficient_coords,
      [](const CoefficientPoint& p) {
        const auto [nu, k, c] = p.params;
        const double r = p.r;
        const double ratio = struve_coefficient_normalized(p.r + 1, nu, k) / struve_coefficient_normalized(p.r, nu, k);
        return relative_difference(ratio, 1.0 / (4.0 * (r * k + nu + 1.5 * k) * (r + 1.5)));
      },
      options));
  return checks;
}

// ---------------------------------------------------------------------------
// recurrence / ode
// ---------------------------------------------------------------------------

using ResidualFn = ResidualReport (*)(const StruveParams&, double);

VerificationReport residual_check(const std::string& name, double tolerance, ResidualFn fn,
                                  const std::vector<IdentityPoint>& points, const SuiteOptions& options) {
  return sweep(
      name, tolerance, points, [](const IdentityPoint& p) { return coords(p.params, p.x); },
      [fn](const IdentityPoint& p) { return fn(p.params, p.x).relative_residual; }, options);
}

CheckList recurrence_suite(const SuiteOptions& options) {
  const std::vector<IdentityPoint> points = identity_points();
  CheckList checks;
  checks.push_back(residual_check("rec1", 1e-9, rec1_residual, points, options));
  checks.push_back(residual_check("rec2", 1e-9, rec2_residual, points, options));
  checks.push_back(residual_check("rec3", 1e-9, rec3_residual, points, options));
  checks.push_back(residual_check("rec4", 1e-9, rec4_residual, points, options));
  checks.push_back(residual_check("rec1_expanded", 1e-9, rec1_expanded_residual, points, options));
  checks.push_back(residual_check("rec3_plus_rec4_consistency", 1e-12, recurrence_sum_consistency, points, options));
  const std::vector<IdentityPoint> near_zero{{{1.0, 1.0, 1.0}, 1e-3}, {{0.5, 2.0, -1.0}, 1e-3}};
  checks.push_back(residual_check("rec1_near_zero", 1e-8, rec1_residual, near_zero, options));
  return checks;
}

CheckList ode_suite(const SuiteOptions& options) {
  return {residual_check("ode", 1e-9, ode_residual, identity_points(), options)};
}

// ---------------------------------------------------------------------------
// integral / closedform
// ---------------------------------------------------------------------------

ConstantSet constants_of(const SuiteOptions& options) {
  return options.paper_literal ? ConstantSet::PrintedLiteral : ConstantSet::Corrected;
}

CheckList integral_suite(const SuiteOptions& options) {
  struct IntegralPoint {
    StruveParams params;
    double alpha;
    double x;
  };
  std::vector<IntegralPoint> points;
  for (const double k : grid::identity_k) {
    for (const double nu : scaled(grid::identity_nu_multiples, k)) {
      for (const double alpha : grid::integral_alpha) {
        for (const double sign : {1.0, -1.0}) {
          for (const double x : grid::identity_x) points.push_back({{nu, k, sign * alpha * alpha}, alpha, x});
        }
      }
    }
  }
  const ConstantSet constants = constants_of(options);
  CheckList checks;
  checks.push_back(sweep(
      "integral_representation", 1e-9, points,
      [](const IntegralPoint& p) {
        Coordinates c = coords(p.params, p.x);
        c.emplace_back("alpha", p.alpha);
        return c;
      },
      [constants](const IntegralPoint& p) {
        return integral_rep(p.params, p.alpha, p.x, QuadratureConfig{}, constants).relative_residual;
      },
      options));

  struct BetaPoint {
    int r;
    double nu;
    double k;
  };
  std::vector<BetaPoint> beta_points;
  for (const double k : grid::identity_k) {
    for (const double nu : scaled(grid::identity_nu_multiples, k)) {
      for (const int r : grid::kbeta_r) beta_points.push_back({r, nu, k});
    }
  }
  checks.push_back(sweep(
      "kbeta_decomposition", 1e-9, beta_points,
      [](const BetaPoint& p) { return Coordinates{{"r", static_cast<double>(p.r)}, {"nu", p.nu}, {"k", p.k}}; },
      [constants](const BetaPoint& p) {
        return kbeta_decomposition_check(p.r, p.nu, p.k, QuadratureConfig{}, constants).relative_residual;
      },
      options));
  return checks;
}

CheckList closedform_suite(const SuiteOptions& options) {
  struct ClosedPoint {
    double k;
    double alpha;
    double x;
    HalfOrderBranch branch;
  };
  std::vector<ClosedPoint> points;
  for (const auto branch : {HalfOrderBranch::Cosine, HalfOrderBranch::Hyperbolic}) {
    for (const double k : grid::closed_k) {
      for (const double alpha : grid::closed_alpha) {
        for (const double x : grid::closed_x) points.push_back({k, alpha, x, branch});
      }
    }
  }
  const ConstantSet constants = constants_of(options);
  // Margin |LHS - RHS| / max(1, |LHS|).
  return {sweep(
      "half_order_closed_forms", 1e-12, points,
      [](const ClosedPoint& p) {
        return Coordinates{{"k", p.k},
                           {"alpha", p.alpha},
                           {"x", p.x},
                           {"branch", p.branch == HalfOrderBranch::Cosine ? 1.0 : -1.0}};
      },
      [constants](const ClosedPoint& p) {
        const ResidualReport r = closed_form_half_order(p.k, p.alpha, p.x, p.branch, constants);
        const double half = 0.5 * p.alpha * p.x / std::sqrt(p.k);
        const double lhs = p.branch == HalfOrderBranch::Cosine ? 2.0 * std::pow(std::sin(half), 2)
                                                               : 2.0 * std::pow(std::sinh(half), 2);
        return std::abs(r.residual) / std::max(1.0, std::abs(lhs));
      },
      options)};
}

// ---------------------------------------------------------------------------
// inequalities
// ---------------------------------------------------------------------------

GridSpec inequality_grid(double k) {
  GridSpec g;
  g.nu_values = scaled(grid::inequality_nu_multiples, k);
  g.k_values = {k};
  g.x_values = grid::inequality_x;
  g.a_values = scaled(grid::turan_a_multiples, k);
  g.alpha_convexity = grid::convexity_alpha;
  return g;
}

auto k_coords = [](double k) { return Coordinates{{"k", k}}; };

CheckList turan_suite(const SuiteOptions& options) {
  CheckList checks;
  checks.push_back(sweep_chains(
      "turan", kDefaultSlack, grid::inequality_k, k_coords,
      [](double k, double tol) { return turan_grid_check(inequality_grid(k), tol); }, options));

  return checks;
}

CheckList logconvexity_suite(const SuiteOptions& options) {
  return {sweep_chains(
      "log_convexity", kDefaultSlack, grid::inequality_k, k_coords,
      [](double k, double tol) { return log_convexity_check(inequality_grid(k), tol); }, options)};
}

CheckList monotonicity_suite(const SuiteOptions& options) {
  struct Pair {
    double k;
    double mu;
    double nu;
  };
  std::vector<Pair> pairs;
  for (const double k : grid::inequality_k) {
    const std::vector<double> nus = scaled(grid::inequality_nu_multiples, k);
    for (std::size_t i = 0; i < nus.size(); ++i) {
      for (std::size_t j = i; j < nus.size(); ++j) pairs.push_back({k, nus[i], nus[j]});
    }
  }
  auto pair_coords = [](const Pair& p) { return Coordinates{{"k", p.k}, {"mu", p.mu}, {"nu", p.nu}}; };

  CheckList checks;
  checks.push_back(sweep_chains(
      "ratio_monotonicity", kDefaultSlack, pairs, pair_coords,
      [](const Pair& p, double tol) { return ratio_monotonicity_check(p.mu, p.nu, p.k, grid::ratio_x, tol); },
      options));

  checks.push_back(sweep_chains(
      "parameter_monotonicity", kDefaultSlack, grid::inequality_k, k_coords,
      [](double k, double tol) {
        GridSpec g = inequality_grid(k);
        g.x_values = grid::parameter_x;
        return parameter_monotonicity_check(g, tol);
      },
      options));

  struct ChainPoint {
    double k;
    double x;
  };
  std::vector<ChainPoint> chains;
  for (const double k : grid::inequality_k) {
    for (const double x : grid::inequality_x) chains.push_back({k, x});
  }
  checks.push_back(sweep_chains(
      "nu_ratio_decreasing", kDefaultSlack, chains,
      [](const ChainPoint& p) { return Coordinates{{"k", p.k}, {"x", p.x}}; },
      [](const ChainPoint& p, double tol) {
        return nu_ratio_decreasing_check(p.k, scaled(grid::inequality_nu_multiples, p.k), p.x, tol);
      },
      options));

  checks.push_back(sweep_chains(
      "derivative_positivity", 1e-10, pairs, pair_coords,
      [](const Pair& p, double tol) { return derivative_positivity_check(p.mu, p.nu, p.k, grid::ratio_x, tol); },
      options));

  checks.push_back(sweep_chains(
      "digamma_difference", kDefaultSlack, grid::inequality_k, k_coords,
      [](double k, double tol) {
        return digamma_difference_check(k, scaled(grid::inequality_nu_multiples, k), 10, tol);
      },
      options));

  // Coefficient-ratio lemma: for nu > mu, f_r(nu)/f_r(mu) must decrease in r.
  // Margin is 0 when the classification matches and 1 otherwise.
  std::vector<Pair> strict_pairs;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(strict_pairs),
               [](const Pair& p) { return p.nu > p.mu; });
  checks.push_back(sweep(
      "coefficient_ratio_lemma", 0.5, strict_pairs, pair_coords,
      [](const Pair& p) {
        std::vector<double> a;
        std::vector<double> b;
        for (int r = 0; r <= 20; ++r) {
          a.push_back(struve_coefficient_normalized(r, p.nu, p.k));
          b.push_back(struve_coefficient_normalized(r, p.mu, p.k));
        }
        return coefficient_ratio_direction(RatioSequence(a, b)) == Direction::Decreasing ? 0.0 : 1.0;
      },
      options));
  return checks;
}

using SuiteFn = CheckList (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"gamma", gamma_suite},         {"struve", struve_suite},         {"recurrence", recurrence_suite},
      {"ode", ode_suite},             {"integral", integral_suite},     {"closedform", closedform_suite},
      {"turan", turan_suite},         {"monotonicity", monotonicity_suite}, {"logconvexity", logconvexity_suite},
  };
  return table;
}

json coordinates_json(const Coordinates& point) {
  json out = json::object();
  for (const auto& [name, value] : point) out[name] = value;
  return out;
}

json vector_json(const std::vector<double>& values) { return json(values); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : suite_table()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

bool is_known_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (!is_known_suite(name)) throw DomainError("unknown verification suite '" + name + "'");
  if (options.tol_override && !(*options.tol_override > 0.0)) {
    throw DomainError("tolerance override must be positive");
  }
  SuiteReport report;
  report.suite = name;
  for (const auto& [suite, fn] : suite_table()) {
    if (name != "all" && name != suite) continue;
    for (VerificationReport& check : fn(options)) {
      check.check_name = name == "all" ? suite + "." + check.check_name : check.check_name;
      report.passed = report.passed && check.passed;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const VerificationReport& check : report.checks) {
    json entry;
    entry["name"] = check.check_name;
    entry["points"] = check.points_tested;
    entry["worst_margin"] = check.worst_margin;
    entry["witness"] = coordinates_json(check.witness);
    entry["passed"] = check.passed;
    checks.push_back(std::move(entry));
  }
  json out;
  out["suite"] = report.suite;
  out["checks"] = std::move(checks);
  out["passed"] = report.passed;
  return out;
}

nlohmann::ordered_json default_grids_json() {
  json out;
  out["identity"] = {{"k", vector_json(grid::identity_k)},
                     {"nu_over_k", vector_json(grid::identity_nu_multiples)},
                     {"c", vector_json(grid::identity_c)},
                     {"x", vector_json(grid::identity_x)}};
  out["integral"] = {{"alpha", vector_json(grid::integral_alpha)},
                     {"c", "+alpha^2 and -alpha^2"},
                     {"kbeta_r", grid::kbeta_r}};
  out["closedform"] = {{"k", vector_json(grid::closed_k)},
                       {"alpha", vector_json(grid::closed_alpha)},
                       {"x", vector_json(grid::closed_x)}};
  out["inequalities"] = {{"k", vector_json(grid::inequality_k)},
                         {"nu_over_k", vector_json(grid::inequality_nu_multiples)},
                         {"a_over_k", vector_json(grid::turan_a_multiples)},
                         {"x", vector_json(grid::inequality_x)},
                         {"convexity_alpha", vector_json(grid::convexity_alpha)},
                         {"ratio_x", vector_json(grid::ratio_x)},
                         {"parameter_x", vector_json(grid::parameter_x)}};
  out["gamma"] = {{"k", vector_json(grid::gamma_k)},
                  {"x_log_spaced", {grid::gamma_x_min, grid::gamma_x_max, grid::gamma_points}}};
  out["struve"] = {{"classical_nu", vector_json(grid::classical_nu)},
                   {"classical_x", vector_json(grid::classical_x)},
                   {"oracle_draws", grid::oracle_draws},
                   {"oracle_seed", grid::oracle_seed},
                   {"truncation_draws", grid::truncation_draws},
                   {"truncation_seed", grid::truncation_seed}};
  json order = json::array();
  for (const std::string& name : suite_names()) order.push_back(name);
  out["suite_order"] = std::move(order);
  return out;
}

double k_digamma_literal_series(double t, double k, long long terms) {
  require_positive_k(k);
  if (!(t > 0.0)) throw DomainError("k_digamma_literal_series requires t > 0");
  CompensatedAccumulator acc;
  acc.add((std::log(k) - MathConstants::euler_gamma) / k);
  acc.add(-1.0 / t);
  // Smallest terms first.
  for (long long n = terms; n >= 1; --n) {
    const double nk = static_cast<double>(n) * k;
    acc.add(t / (nk * (nk + t)));
  }
  // sum_{n>N} (1/k)(1/n - 1/(n+s)) ~ (1/k) int_{N+1/2}^inf (1/u - 1/(u+s)) du.
  const double s = t / k;
  acc.add(std::log1p(s / (static_cast<double>(terms) + 0.5)) / k);
  return acc.total();
}

}  // namespace kstruve
