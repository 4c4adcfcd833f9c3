// gfss — Gnedin-Fisher species sampling model toolkit.
//
// Subcommands: eppf, dist, sample, convert, verify. JSON (default) or CSV on
// stdout, NDJSON for sample streams. Exit codes: 0 success, 1 verification
// failure, 2 invalid input. Output schema: docs/output-schema.md.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfss/allocation.hpp"
#include "gfss/block_laws.hpp"
#include "gfss/eppf.hpp"
#include "gfss/models.hpp"
#include "gfss/structural.hpp"

using json = nlohmann::ordered_json;
using namespace gfss;

namespace {

constexpr int kSchemaVersion = 1;

std::string format_real(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

json rational_record(const Rational& r) {
  return json{{"rational", format_rational(r)}, {"real", to_double(r)}};
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += csv_quote(fields[i]);
  }
  row += "\r\n";
  return row;
}

// ---------------------------------------------------------------------------

struct ModelOptions {
  std::string gamma_text;
  std::string psi_text;
  std::string zeta_text;

  bool has_psi() const { return !psi_text.empty(); }
  bool has_zeta() const { return !zeta_text.empty(); }

  void require_one() const {
    if (has_psi() == has_zeta())
      throw CLI::ValidationError("model", "exactly one of --psi / --zeta must be supplied");
  }

  GnedinFisherPsi psi_model() const {
    if (!has_psi())
      throw std::domain_error("this command needs the (gamma, psi) parametrization; "
                              "convert the (gamma, zeta) model first");
    return GnedinFisherPsi(parse_rational(gamma_text), parse_rational(psi_text));
  }

  json echo() const {
    json j;
    j["parametrization"] = has_psi() ? "psi" : "zeta";
    j["gamma"] = rational_record(parse_rational(gamma_text));
    if (has_psi()) j["psi"] = rational_record(parse_rational(psi_text));
    if (has_zeta()) j["zeta"] = rational_record(parse_rational(zeta_text));
    return j;
  }
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
  cmd->add_option("--gamma", opts.gamma_text, "gamma parameter (fraction or decimal)")
      ->required();
  cmd->add_option("--psi", opts.psi_text, "psi parameter of the (gamma, psi) form");
  cmd->add_option("--zeta", opts.zeta_text, "zeta parameter of the (gamma, zeta) form");
}

struct OutputOptions {
  std::string format = "json";
  std::string out_file;

  void emit(const std::string& text) const {
    if (out_file.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream stream(out_file, std::ios::binary);
    if (!stream) throw std::runtime_error("cannot open output file: " + out_file);
    stream << text;
  }
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--output", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out_file, "write output to FILE instead of stdout");
}

double env_tolerance(double fallback) {
  if (const char* v = std::getenv("GFSS_TOLERANCE")) return std::atof(v);
  return fallback;
}

int env_threads(int fallback) {
  if (const char* v = std::getenv("GFSS_THREADS")) return std::max(1, std::atoi(v));
  return fallback;
}

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> counts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const int v = std::stoi(token);
    counts.push_back(v);
  }
  if (counts.empty()) throw std::domain_error("--counts must list at least one block size");
  return counts;
}

// dispatch a weight/eppf computation over whichever parametrization was given
template <class F>
auto with_model(const ModelOptions& opts, F&& f) {
  if (opts.has_psi())
    return f(GnedinFisherPsi(parse_rational(opts.gamma_text), parse_rational(opts.psi_text)));
  return f(GnedinFisherZeta(parse_rational(opts.gamma_text), parse_rational(opts.zeta_text)));
}

// ---------------------------------------------------------------------------
// eppf

struct EppfConfig {
  ModelOptions model;
  OutputOptions output;
  std::string counts_text;
  std::string backend = "exact";
};

int run_eppf(const EppfConfig& config) {
  config.model.require_one();
  const OccupancyCounts counts(parse_counts(config.counts_text));
  json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = "eppf";
  record["model"] = config.model.echo();
  record["counts"] = counts.counts();
  record["n"] = counts.n();
  record["k"] = counts.k();
  record["backend"] = config.backend;

  if (config.backend == "exact") {
    const Rational value = with_model(config.model, [&](const auto& m) { return eppf(m, counts); });
    record["value"] = rational_record(value);
  } else {
    const double log_weight =
        with_model(config.model, [&](const auto& m) { return m.log_weight_fp(counts.n(), counts.k()); });
    double log_value = log_weight;
    for (int c : counts.counts()) log_value += log_factorial(c);
    record["value"] = json{{"real", std::exp(log_value)}};
  }

  if (config.output.format == "csv") {
    std::string text = csv_row({"field", "value"});
    text += csv_row({"n", std::to_string(counts.n())});
    text += csv_row({"k", std::to_string(counts.k())});
    if (record["value"].contains("rational"))
      text += csv_row({"eppf", record["value"]["rational"].get<std::string>()});
    else
      text += csv_row({"eppf", format_real(record["value"]["real"].get<double>())});
    config.output.emit(text);
  } else {
    config.output.emit(record.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// dist

struct DistConfig {
  std::string law;
  ModelOptions model;
  OutputOptions output;
  int n = 0;
  int k = 0;
  int m = 0;
  long max_xi = 0;
  int grid = 9;
  double tolerance = 1e-9;
};

json dist_rows_to_json(const DistConfig& config, json rows, json normalization) {
  json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = "dist";
  record["law"] = config.law;
  record["model"] = config.model.echo();
  record["rows"] = std::move(rows);
  record["normalization"] = std::move(normalization);
  return record;
}

int run_dist(DistConfig& config) {
  config.model.require_one();
  config.tolerance = env_tolerance(config.tolerance);
  json rows = json::array();
  json normalization;
  std::vector<std::vector<std::string>> csv;

  if (config.law == "blocks") {
    if (config.n < 1) throw std::domain_error("dist blocks: --n must be >= 1");
    const std::vector<Rational> pmf =
        with_model(config.model, [&](const auto& m) { return blocks_pmf(m, config.n); });
    Rational total = 0;
    csv.push_back({"k", "probability", "probability_real"});
    for (int k = 1; k <= config.n; ++k) {
      const Rational& q = pmf[static_cast<std::size_t>(k - 1)];
      total += q;
      rows.push_back(json{{"k", k}, {"probability", rational_record(q)}});
      csv.push_back({std::to_string(k), format_rational(q), format_real(to_double(q))});
    }
    normalization = json{{"sum", rational_record(total)}, {"exact", total == 1}};
    csv.push_back({"sum", format_rational(total), format_real(to_double(total))});
  } else if (config.law == "xi-prior") {
    if (config.max_xi < 1) throw std::domain_error("dist xi-prior: --max-xi must be >= 1");
    const GnedinFisherPsi model = config.model.psi_model();
    double sum = 0.0;
    csv.push_back({"xi", "probability"});
    for (long xi = 1; xi <= config.max_xi; ++xi) {
      const double q = xi_prior_pmf(model, xi);
      sum += q;
      rows.push_back(json{{"xi", xi}, {"probability", q}});
      csv.push_back({std::to_string(xi), format_real(q)});
    }
    const double c = xi_prior_tail_constant(model);
    const double tail =
        (c / model.gamma_fp()) * std::pow(static_cast<double>(config.max_xi), -model.gamma_fp());
    normalization = json{{"partial_sum", sum}, {"tail_bound", tail}};
    csv.push_back({"partial_sum", format_real(sum)});
    csv.push_back({"tail_bound", format_real(tail)});
  } else if (config.law == "xi-posterior") {
    if (config.n < 1 || config.k < 1 || config.k > config.n)
      throw std::domain_error("dist xi-posterior: requires 1 <= k <= n");
    if (config.max_xi < config.k) throw std::domain_error("dist xi-posterior: --max-xi below k");
    const GnedinFisherPsi model = config.model.psi_model();
    double sum = 0.0;
    csv.push_back({"xi", "probability"});
    for (long xi = config.k; xi <= config.max_xi; ++xi) {
      const double q = xi_posterior_pmf(model, config.n, config.k, xi);
      sum += q;
      rows.push_back(json{{"xi", xi}, {"probability", q}});
      csv.push_back({std::to_string(xi), format_real(q)});
    }
    normalization = json{{"partial_sum", sum}, {"tail_bound", 1.0 - sum < 0 ? 0.0 : 1.0 - sum}};
    csv.push_back({"partial_sum", format_real(sum)});
  } else if (config.law == "new-blocks") {
    if (config.n < 1 || config.k < 1 || config.k > config.n || config.m < 0)
      throw std::domain_error("dist new-blocks: requires 1 <= k <= n and m >= 0");
    const GnedinFisherPsi model = config.model.psi_model();
    Rational total = 0;
    csv.push_back({"k_star", "probability", "probability_real"});
    for (int k_star = 0; k_star <= config.m; ++k_star) {
      const Rational q = new_blocks_posterior(model, config.n, config.k, config.m, k_star);
      total += q;
      rows.push_back(json{{"k_star", k_star}, {"probability", rational_record(q)}});
      csv.push_back({std::to_string(k_star), format_rational(q), format_real(to_double(q))});
    }
    normalization = json{{"sum", rational_record(total)}, {"exact", total == 1}};
    csv.push_back({"sum", format_rational(total), format_real(to_double(total))});
  } else if (config.law == "structural") {
    if (config.grid < 1) throw std::domain_error("dist structural: --grid must be >= 1");
    const GnedinFisherPsi model = config.model.psi_model();
    const double atom = structural_atom(model);
    csv.push_back({"y", "density"});
    for (int i = 1; i <= config.grid; ++i) {
      const double y = static_cast<double>(i) / static_cast<double>(config.grid + 1);
      const double density = structural_density(model, y);
      rows.push_back(json{{"y", y}, {"density", density}});
      csv.push_back({format_real(y), format_real(density)});
    }
    const double mass = structural_total_mass(model, std::min(config.tolerance, 1e-8));
    normalization =
        json{{"atom", atom}, {"atom_plus_integral", mass}, {"defect", std::fabs(mass - 1.0)}};
    csv.push_back({"atom", format_real(atom)});
    csv.push_back({"atom_plus_integral", format_real(mass)});
  } else {
    throw std::domain_error("unknown law: " + config.law);
  }

  if (config.output.format == "csv") {
    std::string text;
    for (const auto& row : csv) text += csv_row(row);
    config.output.emit(text);
  } else {
    config.output.emit(dist_rows_to_json(config, std::move(rows), std::move(normalization)).dump(2) +
                       "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sample

struct SampleConfig {
  std::string mode;
  ModelOptions model;
  OutputOptions output;
  int n = 0;
  long replicates = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 1;
};

json partition_record(const SetPartition& partition, long replicate) {
  json record;
  record["replicate"] = replicate;
  record["blocks"] = partition.size_multiset();
  record["k"] = partition.k();
  return record;
}

int run_sample(SampleConfig& config) {
  config.model.require_one();
  if (!config.seed_given) throw std::domain_error("sampling requires --seed");
  if (config.replicates < 1) throw std::domain_error("--replicates must be >= 1");
  config.threads = env_threads(config.threads);

  const GnedinFisherPsi model = config.model.psi_model();
  std::optional<XiSampler> xi_sampler;
  if (config.mode == "two-stage" || config.mode == "structural") xi_sampler.emplace(model);
  if (config.mode == "grow" || config.mode == "two-stage") {
    if (config.n < 1) throw std::domain_error("sample: --n must be >= 1");
  }

  std::vector<std::string> lines(static_cast<std::size_t>(config.replicates));
  auto worker = [&](long begin, long end) {
    for (long r = begin; r < end; ++r) {
      RandomStream stream(RandomStream::derive_seed(config.seed, static_cast<std::uint64_t>(r)));
      json record;
      if (config.mode == "grow") {
        record = partition_record(sample_sequential(model, config.n, stream), r);
      } else if (config.mode == "two-stage") {
        record = partition_record(sample_two_stage(config.n, *xi_sampler, stream), r);
      } else {
        record["replicate"] = r;
        record["y"] = structural_sample(*xi_sampler, stream);
      }
      lines[static_cast<std::size_t>(r)] = record.dump();
    }
  };

  if (config.threads <= 1) {
    worker(0, config.replicates);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (config.replicates + config.threads - 1) / config.threads;
    for (int t = 0; t < config.threads; ++t) {
      const long begin = t * chunk;
      const long end = std::min<long>(config.replicates, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& thread : pool) thread.join();
  }

  std::string text;
  for (const auto& line : lines) {
    text += line;
    text += '\n';
  }
  config.output.emit(text);
  return 0;
}

// ---------------------------------------------------------------------------
// convert

int run_convert(const ModelOptions& opts, const OutputOptions& output) {
  opts.require_one();
  json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = "convert";
  record["input"] = opts.echo();

  if (opts.has_psi()) {
    const GnedinFisherPsi model(parse_rational(opts.gamma_text), parse_rational(opts.psi_text));
    const auto zeta_model = psi_to_zeta(model);
    record["psi"] = rational_record(model.psi());
    record["zeta"] = rational_record(zeta_model.zeta());
    record["representable"] = true;
    record["exact"] = true;
    record["case"] = zeta_model.finite_species() ? "finite-species" : "strictly-positive";
  } else {
    const GnedinFisherZeta model(parse_rational(opts.gamma_text), parse_rational(opts.zeta_text));
    record["zeta"] = rational_record(model.zeta());
    record["case"] = model.finite_species() ? "finite-species" : "strictly-positive";
    if (model.finite_species()) record["i0"] = *model.finite_species();
    const auto conv = zeta_to_psi(model);
    record["discriminant"] = rational_record(conv.discriminant);
    record["representable"] = conv.representable;
    if (conv.representable) {
      record["psi"] = rational_record(conv.model->psi());
      record["exact"] = conv.exact;
    }
  }
  output.emit(record.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
  std::string suite;
  ModelOptions model;
  OutputOptions output;
  int n = 0;
  int k = 0;
  int m = 0;
  long xi = 0;
  long xi_max = 100000;
  int grid = 5;
  std::string counts_text;
  double tolerance = 1e-9;
};

int run_verify(VerifyConfig& config) {
  config.model.require_one();
  config.tolerance = env_tolerance(config.tolerance);
  json checks = json::array();
  bool all_ok = true;
  auto push = [&](json check, bool ok) {
    check["ok"] = ok;
    all_ok = all_ok && ok;
    checks.push_back(std::move(check));
  };

  if (config.suite == "normalization") {
    if (config.n < 1) throw std::domain_error("verify normalization: --n must be >= 1");
    for (int n = 1; n <= config.n; ++n) {
      const auto report =
          with_model(config.model, [&](const auto& m) { return verify_normalization(m, n); });
      push(json{{"name", "normalization"},
                {"n", n},
                {"total", format_rational(report.total)},
                {"residual", format_rational(report.total - 1)}},
           report.ok);
    }
  } else if (config.suite == "addition") {
    if (config.counts_text.empty()) throw std::domain_error("verify addition: --counts required");
    const OccupancyCounts counts(parse_counts(config.counts_text));
    const auto report = with_model(
        config.model, [&](const auto& m) { return verify_addition_rule(m, counts); });
    push(json{{"name", "addition"},
              {"lhs", format_rational(report.lhs)},
              {"rhs", format_rational(report.rhs)},
              {"residual", format_rational(report.lhs - report.rhs)}},
         report.ok);
  } else if (config.suite == "mixture") {
    if (config.n < 1 || config.k < 1 || config.k > config.n)
      throw std::domain_error("verify mixture: requires 1 <= k <= n");
    const GnedinFisherPsi model = config.model.psi_model();
    const auto report = verify_mixture(model, config.n, config.k, config.xi_max);
    push(json{{"name", "mixture"},
              {"n", config.n},
              {"k", config.k},
              {"xi_max", config.xi_max},
              {"partial_sum", report.partial_sum},
              {"target", report.target},
              {"tail_bound", report.tail_bound},
              {"residual", std::fabs(report.partial_sum - report.target)}},
         report.ok);
  } else if (config.suite == "bayes") {
    if (config.n < 1 || config.k < 1 || config.k > config.n || config.xi < 1)
      throw std::domain_error("verify bayes: requires 1 <= k <= n and --xi >= 1");
    const GnedinFisherPsi model = config.model.psi_model();
    const auto report = verify_bayes_identity(model, config.n, config.k, config.xi, config.tolerance);
    push(json{{"name", "bayes"},
              {"n", config.n},
              {"k", config.k},
              {"xi", config.xi},
              {"lhs", report.lhs},
              {"rhs", report.rhs},
              {"relative_difference", report.rel_diff}},
         report.ok);
  } else if (config.suite == "multistep") {
    if (config.counts_text.empty() || config.m < 1)
      throw std::domain_error("verify multistep: --counts and --m required");
    const GnedinFisherPsi model = config.model.psi_model();
    const OccupancyCounts counts(parse_counts(config.counts_text));
    const auto report = verify_multistep_total(model, counts, config.m);
    push(json{{"name", "multistep-total"},
              {"m", config.m},
              {"configurations", report.configurations},
              {"total", format_rational(report.total)},
              {"residual", format_rational(report.total - 1)}},
         report.ok);
  } else if (config.suite == "structural") {
    const GnedinFisherPsi model = config.model.psi_model();
    const double atom = structural_atom(model);
    const double prior1 = xi_prior_pmf(model, 1);
    push(json{{"name", "atom-equals-prior-mass"},
              {"atom", atom},
              {"prior_at_1", prior1},
              {"residual", std::fabs(atom - prior1)}},
         std::fabs(atom - prior1) <= 1e-12);
    const double mass = structural_total_mass(model, 1e-9);
    push(json{{"name", "total-mass"}, {"atom_plus_integral", mass}, {"residual", std::fabs(mass - 1.0)}},
         std::fabs(mass - 1.0) <= std::max(config.tolerance, 1e-6));
    for (int i = 1; i <= config.grid; ++i) {
      const double y = static_cast<double>(i) / static_cast<double>(config.grid + 1);
      const auto report = structural_mixture_pdf_check(model, y, config.xi_max);
      push(json{{"name", "mixture-density"},
                {"y", y},
                {"direct", report.direct},
                {"mixture_sum", report.mixture_sum},
                {"tail_bound", report.tail_bound}},
           report.ok);
    }
  } else {
    throw std::domain_error("unknown verify suite: " + config.suite);
  }

  json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = "verify";
  record["suite"] = config.suite;
  record["model"] = config.model.echo();
  record["checks"] = std::move(checks);
  record["ok"] = all_ok;
  config.output.emit(record.dump(2) + "\n");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gnedin-Fisher species sampling model toolkit"};
  app.require_subcommand(1);

  EppfConfig eppf_config;
  auto* eppf_cmd = app.add_subcommand("eppf", "evaluate the partition probability function");
  add_model_options(eppf_cmd, eppf_config.model);
  add_output_options(eppf_cmd, eppf_config.output);
  eppf_cmd->add_option("--counts", eppf_config.counts_text, "comma-separated block sizes")
      ->required();
  eppf_cmd->add_option("--backend", eppf_config.backend, "numeric backend")
      ->check(CLI::IsMember({"exact", "float"}));

  DistConfig dist_config;
  auto* dist_cmd = app.add_subcommand("dist", "print a distribution table");
  dist_cmd->add_option("law", dist_config.law, "which law")
      ->required()
      ->check(CLI::IsMember({"blocks", "xi-prior", "xi-posterior", "new-blocks", "structural"}));
  add_model_options(dist_cmd, dist_config.model);
  add_output_options(dist_cmd, dist_config.output);
  dist_cmd->add_option("--n", dist_config.n, "sample size");
  dist_cmd->add_option("--k", dist_config.k, "observed number of blocks");
  dist_cmd->add_option("--m", dist_config.m, "additional sample size");
  dist_cmd->add_option("--max-xi", dist_config.max_xi, "largest xi row");
  dist_cmd->add_option("--grid", dist_config.grid, "number of interior y grid points");
  dist_cmd->add_option("--tolerance", dist_config.tolerance, "numeric tolerance");

  SampleConfig sample_config;
  auto* sample_cmd = app.add_subcommand("sample", "draw replicates (NDJSON, one per line)");
  sample_cmd->add_option("mode", sample_config.mode, "sampler")
      ->required()
      ->check(CLI::IsMember({"grow", "two-stage", "structural"}));
  add_model_options(sample_cmd, sample_config.model);
  add_output_options(sample_cmd, sample_config.output);
  sample_cmd->add_option("--n", sample_config.n, "partition size");
  sample_cmd->add_option("--replicates", sample_config.replicates, "number of draws");
  sample_cmd->add_option("--seed", sample_config.seed, "random seed (required)")
      ->each([&](const std::string&) { sample_config.seed_given = true; });
  sample_cmd->add_option("--threads", sample_config.threads, "worker threads");

  ModelOptions convert_model;
  OutputOptions convert_output;
  auto* convert_cmd = app.add_subcommand("convert", "convert between parametrizations");
  add_model_options(convert_cmd, convert_model);
  add_output_options(convert_cmd, convert_output);

  VerifyConfig verify_config;
  auto* verify_cmd = app.add_subcommand("verify", "run an identity-verification suite");
  verify_cmd->add_option("suite", verify_config.suite, "which suite")
      ->required()
      ->check(CLI::IsMember(
          {"normalization", "addition", "mixture", "bayes", "multistep", "structural"}));
  add_model_options(verify_cmd, verify_config.model);
  add_output_options(verify_cmd, verify_config.output);
  verify_cmd->add_option("--n", verify_config.n, "sample size (or cap for normalization)");
  verify_cmd->add_option("--k", verify_config.k, "number of blocks");
  verify_cmd->add_option("--m", verify_config.m, "additional sample size");
  verify_cmd->add_option("--xi", verify_config.xi, "species count");
  verify_cmd->add_option("--xi-max", verify_config.xi_max, "series truncation point");
  verify_cmd->add_option("--grid", verify_config.grid, "y grid points for structural checks");
  verify_cmd->add_option("--counts", verify_config.counts_text, "comma-separated block sizes");
  verify_cmd->add_option("--tolerance", verify_config.tolerance, "comparison tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eppf_cmd->parsed()) return run_eppf(eppf_config);
    if (dist_cmd->parsed()) return run_dist(dist_config);
    if (sample_cmd->parsed()) return run_sample(sample_config);
    if (convert_cmd->parsed()) return run_convert(convert_model, convert_output);
    if (verify_cmd->parsed()) return run_verify(verify_config);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
