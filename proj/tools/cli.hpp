#pragma once

// Command-line front end: self-energy, field-integrals, hydrogen, threshold,
// sweep and verify subcommands over the pf library.

#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pf/field_kernels.hpp"
#include "pf/hydrogen_dipole.hpp"
#include "pf/self_energy.hpp"
#include "pf/threshold.hpp"
#include "pf/verify.hpp"
#include "report_format.hpp"

namespace pf::cli {

inline constexpr const char* kEnergyUnit = "2mc^2";
inline constexpr const char* kMomentumUnit = "2mc";
inline constexpr const char* kDimensionless = "1";
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConstraint = 3;
inline constexpr int kExitVerifyFailed = 1;

/// Default beta, overridable through the PF_BETA environment variable.
inline double default_beta() {
  const char* env = std::getenv("PF_BETA");
  if (env == nullptr || *env == '\0') return kPhysicalBeta;
  char* end = nullptr;
  const double beta = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(beta) || !(beta > 0.0))
    throw ArgumentError(std::string("PF_BETA is not a positive number: ") + env);
  return beta;
}

inline const char* branch_name(ThresholdBranch b) {
  return b == ThresholdBranch::ErrorVsCorrection ? "error_vs_correction" : "apriori_constraint";
}

inline Value optional_value(const std::optional<double>& v) {
  return v ? Value(*v) : Value(std::monostate{});
}

inline Value optional_value(const std::optional<int>& v) {
  return v ? Value(static_cast<long long>(*v)) : Value(std::monostate{});
}

inline std::vector<Table> self_energy_tables(const FieldParams& params) {
  const SelfEnergyReport rep = self_energy_report(params);
  Table t{"self_energy",
          {{"alpha", kDimensionless},
           {"lambda", kMomentumUnit},
           {"a", kDimensionless},
           {"leading", kEnergyUnit},
           {"upper_bound", kEnergyUnit},
           {"err_envelope", kEnergyUnit},
           {"secular_value", kEnergyUnit},
           {"kinetic_apriori", kEnergyUnit},
           {"field_apriori", kEnergyUnit},
           {"alpha_admissible_max", kDimensionless}},
          {{params.alpha, params.lambda, params.a, rep.leading, rep.upper_bound, rep.err_envelope,
            rep.secular_value, rep.kinetic_apriori, rep.field_apriori,
            admissible_alpha_bound(params)}},
          true};
  return {t};
}

inline std::vector<Table> field_integral_tables(double lambda) {
  double gh_max = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) gh_max = std::max(gh_max, std::abs(gh_cross_integral(lambda, i, j)));
  const double e_closed = e_field_integral(lambda);
  const double d_closed = dd_commutator(lambda);
  Table t{"field_integrals",
          {{"lambda", kMomentumUnit},
           {"e_field_integral", kEnergyUnit},
           {"e_field_quadrature", kEnergyUnit},
           {"dd_commutator", kEnergyUnit},
           {"dd_quadrature", kEnergyUnit},
           {"dd_minus_e_field", kEnergyUnit},
           {"gh_cross_max_abs", kEnergyUnit},
           {"d_bound", kDimensionless},
           {"e_bound", kDimensionless}},
          {{lambda, e_closed, e_field_integral_quadrature(lambda).value, d_closed,
            dd_commutator_quadrature(lambda).value, d_closed - e_closed, gh_max,
            operator_inequality_bound(InequalityKind::DstarD, lambda),
            operator_inequality_bound(InequalityKind::EstarE, lambda)}},
          true};
  return {t};
}

inline std::vector<Table> hydrogen_tables(const HydrogenModel& model, const FieldParams& params,
                                          int n_max) {
  const DipoleSpectrum spectrum = sum_rule_partial(model, n_max);
  std::vector<SpectralTerm> terms;
  for (const auto& [n, c] : spectrum.coefficients)
    terms.push_back({c * c, model.e0() - level_energy(model, n)});
  const double rc_spectral = radiative_correction_from_terms(model.e0(), params, terms);

  Table summary{"hydrogen",
                {{"Z", kDimensionless},
                 {"beta", kDimensionless},
                 {"alpha", kDimensionless},
                 {"lambda", kMomentumUnit},
                 {"e0", kEnergyUnit},
                 {"p_phi_sq", kEnergyUnit},
                 {"n_max", kDimensionless},
                 {"sum_rule_partial", kDimensionless},
                 {"sum_rule_target", kDimensionless},
                 {"radiative_correction_approx", kEnergyUnit},
                 {"radiative_correction_spectral", kEnergyUnit},
                 {"binding_gain_upper", kEnergyUnit}},
                {{static_cast<long long>(model.z()), model.beta(), params.alpha, params.lambda,
                  model.e0(), model.p_phi_sq(), static_cast<long long>(n_max),
                  spectrum.partial_sum, spectrum.target,
                  radiative_correction(model, params, RadiativeMode::approx()), rc_spectral,
                  binding_gain_upper(model, params)}},
                true};

  Table dipole{"dipole",
               {{"n", kDimensionless},
                {"level_energy", kEnergyUnit},
                {"gap", kEnergyUnit},
                {"c_n", kDimensionless},
                {"c_n_sq", kDimensionless},
                {"cumulative", kDimensionless},
                {"excitation_integral", kDimensionless}},
               {},
               false};
  double cumulative = 0.0;
  for (const auto& [n, c] : spectrum.coefficients) {
    cumulative += c * c;
    const double gap = model.e0() - level_energy(model, n);
    dipole.rows.push_back({static_cast<long long>(n), level_energy(model, n), gap, c, c * c,
                           cumulative, excitation_integral(params.lambda, gap)});
  }
  return {summary, dipole};
}

inline std::vector<Table> threshold_tables(const HydrogenModel& model, const FieldParams& params,
                                           bool scan_a, double a_step) {
  const ThresholdReport rep = alpha_max(model, params.lambda, params.a);
  std::optional<int> zmin;
  if (rep.coefficient && params.alpha > 0.0) zmin = z_min(model.beta(), params.alpha, *rep.coefficient);

  Value enhanced = std::monostate{};
  Value margin = std::monostate{};
  if (params.alpha <= admissible_alpha_bound(params)) {
    const EnhancementCertificate cert = enhancement_certificate(model, params);
    enhanced = cert.enhanced;
    margin = cert.margin;
  }

  std::vector<Table> tables;
  tables.push_back({"threshold",
                    {{"Z", kDimensionless},
                     {"beta", kDimensionless},
                     {"alpha", kDimensionless},
                     {"lambda", kMomentumUnit},
                     {"a", kDimensionless},
                     {"alpha_max", kDimensionless},
                     {"branch", ""},
                     {"coefficient", kDimensionless},
                     {"z_min", kDimensionless},
                     {"enhanced", ""},
                     {"margin", kEnergyUnit}},
                    {{static_cast<long long>(model.z()), model.beta(), params.alpha, params.lambda,
                      rep.a_used, rep.alpha_max, std::string(branch_name(rep.branch)),
                      optional_value(rep.coefficient), optional_value(zmin), enhanced, margin}},
                    true});

  if (scan_a) {
    const std::vector<double> grid = uniform_grid(a_step, 1.0 - 0.5 * a_step, a_step);
    const CoefficientScan scan = coefficient_scan(model, params.lambda, grid);
    Table t{"a_scan",
            {{"a", kDimensionless},
             {"alpha_max", kDimensionless},
             {"coefficient", kDimensionless},
             {"branch", ""},
             {"best", ""}},
            {},
            false};
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
      const auto& row = scan.rows[i];
      t.rows.push_back({row.a, row.alpha_max, optional_value(row.coefficient),
                        std::string(branch_name(row.branch)), i == scan.best});
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

struct SweepPoint {
  FieldParams params;
  int z;
};

inline std::vector<Table> sweep_tables(const std::vector<SweepPoint>& points, double beta) {
  Table t{"sweep",
          {{"alpha", kDimensionless},
           {"lambda", kMomentumUnit},
           {"a", kDimensionless},
           {"Z", kDimensionless},
           {"sigma_leading", kEnergyUnit},
           {"sigma_upper_bound", kEnergyUnit},
           {"err_envelope", kEnergyUnit},
           {"radiative_correction", kEnergyUnit},
           {"admissible", ""},
           {"enhanced", ""},
           {"margin", kEnergyUnit},
           {"alpha_max", kDimensionless},
           {"coefficient", kDimensionless}},
          {},
          false};
  for (const auto& [params, z] : points) {
    const HydrogenModel model(z, beta);
    const bool admissible = params.alpha <= admissible_alpha_bound(params);
    Value enhanced = std::monostate{};
    Value margin = std::monostate{};
    if (admissible) {
      const auto cert = enhancement_certificate(model, params);
      enhanced = cert.enhanced;
      margin = cert.margin;
    }
    const ThresholdReport rep = alpha_max(model, params.lambda, params.a);
    t.rows.push_back({params.alpha, params.lambda, params.a, static_cast<long long>(z),
                      sigma_leading(params), sigma_upper_bound(params), err_envelope(params),
                      radiative_correction(model, params, RadiativeMode::approx()), admissible,
                      enhanced, margin, rep.alpha_max, optional_value(rep.coefficient)});
  }
  return {t};
}

inline std::vector<Table> verify_tables(bool& all_passed) {
  Table t{"verify",
          {{"check", ""}, {"status", ""}, {"worst", ""}, {"threshold", ""}},
          {},
          false};
  all_passed = true;
  for (const auto& r : run_verification()) {
    all_passed = all_passed && r.passed;
    t.rows.push_back({r.name, std::string(r.passed ? "PASS" : "FAIL"), r.worst, r.threshold});
  }
  return {t};
}

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ground-state energetics of an electron coupled to a cutoff photon field"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  const std::map<std::string, Format> format_map{
      {"table", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  std::optional<double> beta_flag;
  double alpha = kPhysicalBeta;
  double lambda = 0.25;
  double a = 0.5;
  int z = 13;
  int n_max = 20;
  bool scan_a = false;
  double a_step = 0.01;

  auto add_field_options = [&](CLI::App* sub, bool with_alpha) {
    if (with_alpha)
      sub->add_option("--alpha", alpha, "Coupling constant alpha")->capture_default_str();
    sub->add_option("--lambda", lambda, "Ultraviolet cutoff (units of 2mc)")->capture_default_str();
    sub->add_option("--a", a, "Splitting parameter a in (0, 1)")->capture_default_str();
  };
  auto add_model_options = [&](CLI::App* sub) {
    sub->add_option("--Z", z, "Nuclear charge")->capture_default_str();
    sub->add_option("--beta", beta_flag, "Fine-structure constant of the Coulomb field (default 1/137 or $PF_BETA)");
  };

  auto* self_energy = app.add_subcommand("self-energy", "Self-energy leading order, bounds and secular value");
  add_field_options(self_energy, true);

  auto* field = app.add_subcommand("field-integrals", "Closed-form field integrals with quadrature oracles");
  field->add_option("--lambda", lambda, "Ultraviolet cutoff (units of 2mc)")->capture_default_str();

  auto* hydrogen = app.add_subcommand("hydrogen", "Hydrogenic dipole data and radiative correction");
  add_field_options(hydrogen, true);
  add_model_options(hydrogen);
  hydrogen->add_option("--n-max", n_max, "Largest principal quantum number in the dipole sum")
      ->capture_default_str();

  auto* threshold = app.add_subcommand("threshold", "Coupling threshold for enhanced binding");
  add_field_options(threshold, true);
  add_model_options(threshold);
  threshold->add_flag("--scan-a", scan_a, "Tabulate alpha_max over a in (0, 1)");
  threshold->add_option("--a-step", a_step, "Grid step of the a scan")->capture_default_str();

  std::string sweep_var;
  std::vector<double> sweep_values;
  std::optional<double> sweep_from, sweep_to;
  std::optional<int> sweep_steps;
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and tabulate key quantities");
  sweep->add_option("--var", sweep_var, "Swept variable")
      ->required()
      ->check(CLI::IsMember({"alpha", "lambda", "Z", "a"}));
  sweep->add_option("--values", sweep_values, "Comma-separated values")->delimiter(',');
  sweep->add_option("--from", sweep_from, "First value of a uniform sweep");
  sweep->add_option("--to", sweep_to, "Last value of a uniform sweep");
  sweep->add_option("--steps", sweep_steps, "Number of points of a uniform sweep (>= 2)");
  add_field_options(sweep, true);
  add_model_options(sweep);

  auto* verify = app.add_subcommand("verify", "Run every oracle-equivalence check");

  std::vector<std::string> argv_storage{"pfqed"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const Format format = format_map.at(format_name);
    const double beta = beta_flag ? *beta_flag : default_beta();
    const FieldParams params{alpha, lambda, a};
    std::vector<Table> tables;
    int status = 0;

    if (*self_energy) {
      tables = self_energy_tables(params);
    } else if (*field) {
      tables = field_integral_tables(lambda);
    } else if (*hydrogen) {
      params.validate();
      tables = hydrogen_tables(HydrogenModel(z, beta), params, n_max);
    } else if (*threshold) {
      params.validate();
      if (!(a_step > 0.0 && a_step < 1.0)) throw ArgumentError("--a-step must lie in (0, 1)");
      tables = threshold_tables(HydrogenModel(z, beta), params, scan_a, a_step);
    } else if (*sweep) {
      std::vector<double> values = sweep_values;
      if (values.empty()) {
        if (!sweep_from || !sweep_to || !sweep_steps)
          throw ArgumentError("sweep needs --values or all of --from, --to, --steps");
        if (*sweep_steps < 2) throw ArgumentError("--steps must be >= 2");
        for (int i = 0; i < *sweep_steps; ++i)
          values.push_back(*sweep_from + (*sweep_to - *sweep_from) * i / (*sweep_steps - 1));
      }
      if (values.empty()) throw ArgumentError("sweep values must be nonempty");
      for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
          throw ArgumentError("sweep values must be strictly increasing");

      std::vector<SweepPoint> points;
      for (double v : values) {
        SweepPoint p{params, z};
        if (sweep_var == "alpha") p.params.alpha = v;
        else if (sweep_var == "lambda") p.params.lambda = v;
        else if (sweep_var == "a") p.params.a = v;
        else {
          if (v != std::floor(v) || v < 1.0 || v > kMaxPhysicalCharge)
            throw ArgumentError("Z sweep values must be integers in 1..137");
          p.z = static_cast<int>(v);
        }
        p.params.validate();
        points.push_back(p);
      }
      tables = sweep_tables(points, beta);
    } else if (*verify) {
      bool all_passed = false;
      tables = verify_tables(all_passed);
      status = all_passed ? 0 : kExitVerifyFailed;
    }

    render(tables, format, out);
    return status;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConstraint;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pf::cli
