#include "qanyon/run.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qanyon/bialgebra.hpp"
#include "qanyon/generators.hpp"

namespace qanyon {

using nlohmann::ordered_json;

void RunConfig::validate() const {
  if (n_sorts < 2) throw ConfigError("--sorts must be at least 2, got " + std::to_string(n_sorts));
  if (lattice_width < 1 || lattice_height < 1) throw ConfigError("lattice dimensions must be at least 1x1");
  if (rho.size() != n_sorts - 1) {
    throw ConfigError("--rho needs exactly " + std::to_string(n_sorts - 1) + " values for " +
                      std::to_string(n_sorts) + " sorts, got " + std::to_string(rho.size()));
  }
  if (!(tolerance > 0.0)) throw ConfigError("--tol must be positive");
  if (dimension_cap < 2) throw ConfigError("--cap must be at least 2");
  if (suites.empty()) throw ConfigError("no suites selected");
  for (const auto& s : suites) {
    if (s != "all" && std::find(kSuiteOrder.begin(), kSuiteOrder.end(), s) == kSuiteOrder.end()) {
      throw ConfigError("unknown suite '" + s + "'");
    }
  }
  try {
    checked_dimension(n_sorts * lattice_width * lattice_height, dimension_cap,
                      std::to_string(n_sorts) + " sorts on a " + std::to_string(lattice_width) + "x" +
                          std::to_string(lattice_height) + " lattice");
  } catch (const DimensionCapError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<std::string> RunConfig::ordered_suites() const {
  const bool all = std::find(suites.begin(), suites.end(), "all") != suites.end();
  std::vector<std::string> out;
  for (const auto& s : kSuiteOrder)
    if (all || std::find(suites.begin(), suites.end(), s) != suites.end()) out.push_back(s);
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> parse_lattice(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) throw std::invalid_argument("missing x");
    std::size_t used_w = 0, used_h = 0;
    const long w = std::stol(text.substr(0, x), &used_w);
    const long h = std::stol(text.substr(x + 1), &used_h);
    if (used_w != x || used_h != text.size() - x - 1 || w < 1 || h < 1) throw std::invalid_argument("bad size");
    return {static_cast<std::size_t>(w), static_cast<std::size_t>(h)};
  } catch (const std::exception&) {
    throw ConfigError("--lattice expects WxH with positive integers, got '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ConfigError("--rho expects comma-separated reals, got '" + text + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

RunConfig load_config_file(const std::string& path, RunConfig c) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n_sorts") c.n_sorts = value.get<std::size_t>();
      else if (key == "lattice") std::tie(c.lattice_width, c.lattice_height) = parse_lattice(value.get<std::string>());
      else if (key == "lattice_width") c.lattice_width = value.get<std::size_t>();
      else if (key == "lattice_height") c.lattice_height = value.get<std::size_t>();
      else if (key == "nu") c.nu = value.get<double>();
      else if (key == "rho") c.rho = value.get<std::vector<double>>();
      else if (key == "tolerance") c.tolerance = value.get<double>();
      else if (key == "suites") c.suites = value.get<std::vector<std::string>>();
      else if (key == "report_path") c.report_path = value.get<std::string>();
      else if (key == "mutation_mode") c.mutation_mode = value.get<bool>();
      else if (key == "timestamp") c.timestamp = value.get<bool>();
      else if (key == "dimension_cap") c.dimension_cap = value.get<std::size_t>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  return c;
}

RunConfig parse_arguments(const std::vector<std::string>& args, std::ostream& out, bool* help) {
  CLI::App app{"Verify the quasi-anyonic realization of the multiparameter deformed gl_n", "qanyon_verify"};
  std::string config_path, lattice, rho, suites;
  std::size_t sorts = 0, cap = 0;
  double nu = 0.0, tol = 0.0;
  std::string report;
  bool mutate = false, no_timestamp = false;

  app.add_option("--config", config_path, "JSON config file; flags override its values");
  auto* o_sorts = app.add_option("--sorts", sorts, "number of fermion sorts n (>= 2)");
  auto* o_lattice = app.add_option("--lattice", lattice, "lattice size WxH");
  auto* o_nu = app.add_option("--nu", nu, "statistics parameter nu, q = exp(i pi nu)");
  auto* o_rho = app.add_option("--rho", rho, "comma-separated rho_1..rho_{n-1}, s_j = exp(i pi rho_j)");
  auto* o_tol = app.add_option("--tol", tol, "relative tolerance (default 1e-10)");
  auto* o_suite = app.add_option("--suite", suites, "comma-separated suites or 'all'");
  auto* o_report = app.add_option("--report", report, "JSON report path");
  app.add_flag("--mutate", mutate, "also plant wrong-parameter mutations that must be detected");
  app.add_flag("--no-timestamp", no_timestamp, "omit timestamp and timings from the report");
  auto* o_cap = app.add_option("--cap", cap, "maximum operator dimension (default 65536)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    if (help) *help = true;
    return {};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  if (help) *help = false;

  RunConfig c;
  if (!config_path.empty()) c = load_config_file(config_path, c);
  if (*o_sorts) {
    c.n_sorts = sorts;
    // Keep the generic defaults consistent with a changed sort count unless rho is given too.
    if (!*o_rho && config_path.empty()) c.rho = DeformationParams::generic(sorts).rho;
  }
  if (*o_lattice) std::tie(c.lattice_width, c.lattice_height) = parse_lattice(lattice);
  if (*o_nu) c.nu = nu;
  if (*o_rho) c.rho = parse_doubles(rho);
  if (*o_tol) c.tolerance = tol;
  if (*o_suite) c.suites = split(suites, ',');
  if (*o_report) c.report_path = report;
  if (mutate) c.mutation_mode = true;
  if (no_timestamp) c.timestamp = false;
  if (*o_cap) c.dimension_cap = cap;
  c.validate();
  return c;
}

std::vector<RelationReport> run_suites(const RunConfig& config) {
  config.validate();
  const Lattice lattice(config.lattice_width, config.lattice_height);
  const FockSpace space(config.n_sorts, lattice, config.dimension_cap);
  const DeformationParams params{config.nu, config.rho};
  const VerifyOptions options{config.tolerance, config.mutation_mode};
  const CoefficientModel model = CoefficientModel::multiparameter(params);

  std::vector<RelationReport> reports;
  std::optional<GeneratorSet> gens;
  auto generators = [&]() -> const GeneratorSet& {
    if (!gens) gens = build_generators(space, params);
    return *gens;
  };

  for (const auto& suite : config.ordered_suites()) {
    const auto start = std::chrono::steady_clock::now();
    RelationReport r;
    if (suite == "fermion") r = verify_fermion_suite(space, options);
    else if (suite == "anyon") r = verify_anyon_suite(space, DeformationParams::uniform(config.n_sorts, config.nu, 0.0), options);
    else if (suite == "quasi") r = verify_quasi_anyon_suite(space, params, options);
    else if (suite == "algebra") r = verify_algebra_suite(generators(), model, options);
    else if (suite == "serre") r = verify_serre_suite(generators(), model, options);
    else if (suite == "reduction") r = verify_reduction_suite(space, config.nu, 0.21, options);
    else if (suite == "coproduct") r = verify_coproduct_homomorphism(generators(), params, options, config.dimension_cap);
    else if (suite == "coassoc") r = verify_coassociativity(generators(), params, options, config.dimension_cap);
    else if (suite == "counit") r = verify_counit(generators(), params, options);
    r.suite = suite;
    r.lattice = lattice.to_string();
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(r));
  }
  return reports;
}

namespace {

ordered_json params_json(const DeformationParams& p) {
  ordered_json j;
  j["nu"] = p.nu;
  j["rho"] = p.rho;
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

}  // namespace

ordered_json report_json(const RunConfig& config, const std::vector<RelationReport>& reports) {
  ordered_json root;
  root["schema"] = "qanyon-report/1";
  if (config.timestamp) root["timestamp"] = utc_timestamp();

  ordered_json cfg;
  cfg["n_sorts"] = config.n_sorts;
  cfg["lattice"] = {{"width", config.lattice_width}, {"height", config.lattice_height}};
  cfg["site_order"] = Lattice::order_name;
  cfg["nu"] = config.nu;
  cfg["rho"] = config.rho;
  cfg["tolerance"] = config.tolerance;
  cfg["suites"] = config.ordered_suites();
  cfg["mutation_mode"] = config.mutation_mode;
  cfg["dimension_cap"] = config.dimension_cap;
  cfg["coproduct_extension"] = "Delta(exp(t I_kk)) = exp(t I_kk) (x) exp(t I_kk), eps(exp(t I_kk)) = 1";
  root["config"] = cfg;

  SuiteSummary total;
  ordered_json suites = ordered_json::array();
  ordered_json instances = ordered_json::array();
  for (const auto& r : reports) {
    const SuiteSummary s = r.summary();
    ordered_json js;
    js["name"] = r.suite;
    js["params"] = params_json(r.params);
    js["lattice"] = r.lattice;
    js["dimension"] = r.dimension;
    js["instances"] = s.total;
    js["passed"] = s.passed;
    js["failed"] = s.failed;
    js["skipped"] = s.skipped;
    js["not_applicable"] = s.not_applicable;
    js["informational"] = s.informational;
    js["mutations"] = s.mutations;
    js["mutations_detected"] = s.mutations_detected;
    js["max_residual"] = s.max_residual;
    if (config.timestamp) js["wall_seconds"] = r.wall_seconds;
    suites.push_back(js);

    for (const auto& inst : r.instances) {
      ordered_json ji;
      ji["suite"] = inst.suite;
      ji["relation_id"] = inst.relation_id;
      ji["variant"] = inst.variant;
      ji["conjugate"] = inst.conjugate;
      ji["mutation"] = inst.mutation;
      ordered_json idx = ordered_json::object();
      for (const auto& [k, v] : inst.indices) idx[k] = v;
      ji["index_binding"] = idx;
      ordered_json sites = ordered_json::object();
      for (const auto& [k, v] : inst.sites) sites[k] = v;
      ji["site_binding"] = sites;
      ji["lhs_residual"] = inst.residual;
      ji["scale"] = inst.scale;
      ji["threshold"] = inst.threshold;
      ji["status"] = to_string(inst.status);
      ji["passed"] = inst.status == Status::passed;
      if (!inst.note.empty()) ji["note"] = inst.note;
      instances.push_back(std::move(ji));
    }
    total.total += s.total;
    total.passed += s.passed;
    total.failed += s.failed;
    total.skipped += s.skipped;
    total.not_applicable += s.not_applicable;
    total.informational += s.informational;
    total.mutations += s.mutations;
    total.mutations_detected += s.mutations_detected;
    total.max_residual = std::max(total.max_residual, s.max_residual);
  }
  root["suites"] = suites;
  root["instances"] = instances;
  root["summary"] = {{"instances", total.total},
                     {"passed", total.passed},
                     {"failed", total.failed},
                     {"skipped", total.skipped},
                     {"not_applicable", total.not_applicable},
                     {"informational", total.informational},
                     {"mutations", total.mutations},
                     {"mutations_detected", total.mutations_detected},
                     {"max_residual", total.max_residual}};
  return root;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<RelationReport> reports;
  try {
    reports = run_suites(config);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionCapError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  }

  bool ok = true;
  for (const auto& r : reports) {
    const SuiteSummary s = r.summary();
    ok = ok && s.failed == 0;
    out << std::left << std::setw(10) << r.suite << (s.failed == 0 ? " PASS" : " FAIL") << "  passed "
        << s.passed << "/" << (s.passed + s.failed) << "  skipped " << s.skipped << "  n/a " << s.not_applicable
        << "  info " << s.informational;
    if (s.mutations) out << "  mutations detected " << s.mutations_detected << "/" << s.mutations;
    out << "  max residual " << std::scientific << std::setprecision(2) << s.max_residual << std::defaultfloat;
    if (config.timestamp) out << "  " << std::fixed << std::setprecision(3) << r.wall_seconds << "s" << std::defaultfloat;
    out << '\n';
  }

  if (!config.report_path.empty()) {
    std::ofstream file(config.report_path);
    if (!file) {
      err << "cannot write report to '" << config.report_path << "'\n";
      return 2;
    }
    file << report_json(config, reports).dump(2) << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace qanyon
